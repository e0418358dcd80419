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

#include "sowig/superosc.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bigfloat.hpp"
#include "sowig/error.hpp"

namespace sowig {

namespace detail {
struct ExactCoefficients {
    std::vector<BigFloat> c;
    std::vector<BigFloat> d;
};
}  // namespace detail

using detail::BigFloat;

void validate(const SuperoscParams &params) {
    if (params.n < 2 || params.n % 2 != 0) {
        throw InvalidArgument("N must be an even integer >= 2 (got " + std::to_string(params.n) + ")");
    }
    if (!std::isfinite(params.alpha) || params.alpha < 1.0) {
        std::ostringstream os;
        os << "alpha must be finite and >= 1 (got " << params.alpha << ")";
        throw InvalidArgument(os.str());
    }
}

long working_precision_bits(const SuperoscParams &params) {
    const double growth = params.n * std::log2(std::max(params.alpha, 1.0));
    return 128 + static_cast<long>(std::ceil(growth));
}

namespace {

// Largest ln|C_j| over j, from the closed form in the log domain.
double max_log_coefficient(const SuperoscParams &params) {
    const int n = params.n;
    const double log_plus = std::log(params.alpha + 1.0);
    const double log_minus = params.alpha > 1.0 ? std::log(params.alpha - 1.0) : -INFINITY;
    double best = -INFINITY;
    for (int j = 0; j <= n; ++j) {
        if (j > 0 && params.alpha == 1.0) break;
        const double log_binom = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
        const double term = log_binom + (n - j) * log_plus + (j > 0 ? j * log_minus : 0.0) - n * std::log(2.0);
        best = std::max(best, term);
    }
    return best;
}

}  // namespace

CoeffTable fourier_coeffs(const SuperoscParams &params) {
    validate(params);
    const int n = params.n;
    const int half = n / 2;

    // D_j adds two coefficients, so leave one bit of headroom.
    const double log_max = max_log_coefficient(params);
    if (log_max + std::log(2.0) > std::log(DBL_MAX)) {
        std::ostringstream os;
        os << "coefficient magnitude exp(" << log_max << ") for N=" << n << ", alpha=" << params.alpha
           << " exceeds the double-precision range";
        throw InvalidArgument(os.str());
    }

    const mpfr_prec_t prec = working_precision_bits(params);
    auto exact = std::make_shared<detail::ExactCoefficients>();

    BigFloat plus(params.alpha, prec), minus(params.alpha, prec);
    mpfr_add_ui(plus.get(), plus.get(), 1, MPFR_RNDN);
    mpfr_sub_ui(minus.get(), minus.get(), 1, MPFR_RNDN);

    BigFloat binom(1.0, prec), term(prec), factor(prec);
    exact->c.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            mpfr_mul_ui(binom.get(), binom.get(), static_cast<unsigned long>(n - j + 1), MPFR_RNDN);
            mpfr_div_ui(binom.get(), binom.get(), static_cast<unsigned long>(j), MPFR_RNDN);
        }
        mpfr_pow_ui(term.get(), plus.get(), static_cast<unsigned long>(n - j), MPFR_RNDN);
        mpfr_pow_ui(factor.get(), minus.get(), static_cast<unsigned long>(j), MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), factor.get(), MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), binom.get(), MPFR_RNDN);
        mpfr_div_2ui(term.get(), term.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        if (j % 2 == 1) mpfr_neg(term.get(), term.get(), MPFR_RNDN);
        exact->c.push_back(term);
    }

    exact->d.reserve(half + 1);
    exact->d.push_back(exact->c[half]);
    for (int j = 1; j <= half; ++j) {
        BigFloat dj(prec);
        mpfr_add(dj.get(), exact->c[half + j].get(), exact->c[half - j].get(), MPFR_RNDN);
        exact->d.push_back(std::move(dj));
    }

    BigFloat sum_c(prec), sum_d(prec);
    for (const auto &cj : exact->c) mpfr_add(sum_c.get(), sum_c.get(), cj.get(), MPFR_RNDN);
    for (const auto &dj : exact->d) mpfr_add(sum_d.get(), sum_d.get(), dj.get(), MPFR_RNDN);

    CoeffTable table;
    table.params = params;
    table.precision_bits = prec;
    table.sum_c = sum_c.to_double();
    table.sum_d = sum_d.to_double();
    if (std::abs(table.sum_d - 1.0) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "sum of D_l is " << table.sum_d << ", expected 1";
        throw std::logic_error(os.str());
    }

    for (const auto &cj : exact->c) table.c.push_back(cj.to_double());
    for (const auto &dj : exact->d) {
        table.d.push_back(dj.to_double());
        BigFloat kj(prec);
        mpfr_abs(kj.get(), dj.get(), MPFR_RNDN);
        mpfr_div(kj.get(), kj.get(), sum_d.get(), MPFR_RNDN);
        mpfr_sqrt(kj.get(), kj.get(), MPFR_RNDN);
        table.k.push_back(kj.to_double());
    }
    table.exact = std::move(exact);
    return table;
}

Complex eval_f_direct(const SuperoscParams &params, double x) {
    validate(params);
    Complex base(std::cos(x), params.alpha * std::sin(x));
    Complex result(1.0, 0.0);
    for (unsigned e = static_cast<unsigned>(params.n); e != 0; e >>= 1) {
        if (e & 1u) result *= base;
        base *= base;
    }
    return result;
}

Complex eval_f_fourier(const CoeffTable &table, const SuperoscParams &params, double x) {
    validate(params);
    if (table.params.n != params.n || table.params.alpha != params.alpha ||
        table.c.size() != static_cast<std::size_t>(params.n) + 1 || !table.exact ||
        table.exact->c.size() != table.c.size()) {
        throw InvalidArgument("coefficient table does not match the requested parameters");
    }
    const mpfr_prec_t prec = table.precision_bits;
    BigFloat re(prec), im(prec), angle(prec), s(prec), c(prec), xv(x, prec);
    for (int j = 0; j <= params.n; ++j) {
        mpfr_mul_si(angle.get(), xv.get(), params.n - 2 * j, MPFR_RNDN);
        mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
        const auto &cj = table.exact->c[j];
        mpfr_fma(re.get(), cj.get(), c.get(), re.get(), MPFR_RNDN);
        mpfr_fma(im.get(), cj.get(), s.get(), im.get(), MPFR_RNDN);
    }
    return {re.to_double(), im.to_double()};
}

Complex local_expansion(const SuperoscParams &params, double x, EnvelopeForm form) {
    validate(params);
    const double n = params.n;
    const double a2 = params.alpha * params.alpha;
    const double exponent = form == EnvelopeForm::printed ? n * a2 * x * x / 2.0 : n * (a2 - 1.0) * x * x / 2.0;
    return std::polar(std::exp(exponent), n * params.alpha * x);
}

double local_phase_gradient(const SuperoscParams &params, double x, double step) {
    const Complex forward = eval_f_direct(params, x + step);
    const Complex backward = eval_f_direct(params, x - step);
    return std::arg(forward * std::conj(backward)) / (2.0 * step);
}

}  // namespace sowig
