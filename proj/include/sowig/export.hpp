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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sowig/analysis.hpp"
#include "sowig/wigner.hpp"

namespace sowig {

enum class ValueMap {
    linear,            ///< [min, max] -> [0, 1]
    signed_symmetric,  ///< [-max|v|, max|v|] -> [0, 1], zero at mid-gray
    log_magnitude,     ///< ln max(|v|, kLogFloor), then linear
};

/// Floor applied to |W| before taking the logarithm.
inline constexpr double kLogFloor = 1e-300;

ValueMap parse_value_map(std::string_view name);  ///< linear | signed | logabs
std::string value_map_name(ValueMap map);

/// Comment lines ("# ...") followed by the header row
/// x_min,x_max,p_min,p_max,nx,np, its values, and then nx rows of np values
/// (row-major, 17 significant digits).
std::string grid_to_csv(const PhaseSpaceGrid &grid, const std::vector<std::string> &comments = {});
PhaseSpaceGrid grid_from_csv(std::string_view text);

/// Binary PGM (P5), 8 or 16 bit. Image columns follow x, rows follow p with
/// p_max on top. The mapping, its range and the log floor are recorded in a
/// header comment.
std::string grid_to_pgm(const PhaseSpaceGrid &grid, ValueMap map, int bits,
                        const std::vector<std::string> &comments = {});

/// Columns: coordinate, W, mapped value.
std::string cut_to_csv(const CutProfile &profile, CutAxis axis, ValueMap map,
                       const std::vector<std::string> &comments = {});

/// Writes through a temporary file in the same directory and renames it into
/// place, so a failed write never leaves a partial file.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

}  // namespace sowig
