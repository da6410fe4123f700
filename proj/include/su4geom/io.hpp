// Copyright 2026 The su4geom Authors
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

#ifndef SU4GEOM_IO_HPP
#define SU4GEOM_IO_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "su4geom/invariants.hpp"
#include "su4geom/matrix.hpp"

namespace su4geom {

/// Parses {"matrix": [[[re, im] x4] x4]}, row-major. A bare number is read as a
/// real entry. Throws ValidationError for any other shape.
ComplexMatrix4 parse_matrix_json(std::string_view text);

/// Reads and parses a matrix file. Throws IoError if the file cannot be read.
ComplexMatrix4 load_matrix_file(const std::string &path);

/// Inverse of parse_matrix_json (compact, one line).
std::string matrix_to_json(const ComplexMatrix4 &m);

/// Decimal radians, or a rational multiple of pi written as "pi", "-pi/2",
/// "3pi/8" or "3*pi/8". Throws ValidationError otherwise.
double parse_angle(std::string_view text);

/// Three comma-separated numbers, each accepted by parse_angle.
std::array<double, 3> parse_triple(std::string_view text);

/// printf("%.12g").
std::string format_number(double x);

inline constexpr std::string_view kSampleCsvHeader = "c1,c2,c3,g1,g2,g3,is_pe";

void write_sample_csv_row(std::ostream &out, const CanonicalCoords &c, const LocalInvariants &g, bool is_pe);

/// One JSON object per line: index, c, g, is_pe and the full matrix.
void write_sample_jsonl_row(std::ostream &out, std::uint64_t index, const CanonicalCoords &c,
                            const LocalInvariants &g, bool is_pe, const ComplexMatrix4 &m);

}  // namespace su4geom

#endif
