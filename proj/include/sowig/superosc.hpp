// Copyright 2026 The sowig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "sowig/types.hpp"

namespace sowig {

/// Parameters of f(x) = (cos x + i*alpha*sin x)^N.
struct SuperoscParams {
    int n = 2;           ///< even exponent, >= 2
    double alpha = 1.0;  ///< superoscillation strength, >= 1
};

void validate(const SuperoscParams &params);

namespace detail {
struct ExactCoefficients;
}

/// Fourier coefficients C_0..C_N of f together with the paired sequences
/// D_0..D_{N/2} and the weights K_j = sqrt(|D_j| / sum_l D_l).
///
/// The doubles are correctly rounded values. The coefficients alternate in sign
/// and sum_j |C_j| = alpha^N, so identities such as sum_j C_j = 1 only hold at a
/// working precision of about N*log2(alpha) bits; the table therefore also
/// carries the coefficients at that precision, and `sum_c`, `sum_d` and
/// eval_f_fourier() are computed from them.
struct CoeffTable {
    SuperoscParams params;
    std::vector<double> c;  ///< N+1 entries
    std::vector<double> d;  ///< N/2+1 entries
    std::vector<double> k;  ///< N/2+1 entries
    double sum_c = 0.0;
    double sum_d = 0.0;
    long precision_bits = 0;
    std::shared_ptr<const detail::ExactCoefficients> exact;
};

/// Working precision (bits) used for the coefficient arithmetic of `params`.
long working_precision_bits(const SuperoscParams &params);

CoeffTable fourier_coeffs(const SuperoscParams &params);

/// (cos x + i alpha sin x)^N by exponentiation by squaring.
Complex eval_f_direct(const SuperoscParams &params, double x);

/// sum_j C_j e^{i(N-2j)x}, evaluated at the table's working precision.
Complex eval_f_fourier(const CoeffTable &table, const SuperoscParams &params, double x);

enum class EnvelopeForm {
    printed,       ///< e^{i N alpha x} e^{N alpha^2 x^2 / 2}
    second_order,  ///< e^{i N alpha x} e^{N (alpha^2 - 1) x^2 / 2}
};

/// Local plane-wave approximation of f near the origin. Only meaningful for
/// |x| of order 1/(alpha*sqrt(N)) or smaller.
Complex local_expansion(const SuperoscParams &params, double x,
                        EnvelopeForm form = EnvelopeForm::printed);

/// d/dx arg f(x) by a central difference of the phase.
double local_phase_gradient(const SuperoscParams &params, double x, double step = 1e-6);

}  // namespace sowig
