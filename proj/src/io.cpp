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

#include "su4geom/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "su4geom/error.hpp"

namespace su4geom {

namespace {

using nlohmann::json;

Complex parse_entry(const json &e, int r, int c) {
    const std::string where = "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
    if (e.is_number()) {
        return {e.get<double>(), 0.0};
    }
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ValidationError(where + " must be a number or a [re, im] pair");
    }
    return {e[0].get<double>(), e[1].get<double>()};
}

json matrix_json(const ComplexMatrix4 &m) {
    json rows = json::array();
    for (int r = 0; r < 4; r++) {
        json row = json::array();
        for (int c = 0; c < 4; c++) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_decimal(std::string_view s, std::string_view whole) {
    const std::string buf(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(buf, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (buf.empty() || used != buf.size() || !std::isfinite(v)) {
        throw ValidationError("cannot parse angle '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

double parse_angle(std::string_view text) {
    const std::string_view s = trim(text);
    const auto at = s.find("pi");
    if (at == std::string_view::npos) {
        return parse_decimal(s, text);
    }
    std::string_view coef = trim(s.substr(0, at));
    if (!coef.empty() && coef.back() == '*') {
        coef = trim(coef.substr(0, coef.size() - 1));
    }
    double k = 1.0;
    if (coef == "-") {
        k = -1.0;
    } else if (coef == "+") {
        k = 1.0;
    } else if (!coef.empty()) {
        k = parse_decimal(coef, text);
    }
    std::string_view rest = trim(s.substr(at + 2));
    double den = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw ValidationError("cannot parse angle '" + std::string(text) + "'");
        }
        den = parse_decimal(trim(rest.substr(1)), text);
        if (den == 0.0) {
            throw ValidationError("zero denominator in angle '" + std::string(text) + "'");
        }
    }
    return k * 3.14159265358979323846 / den;
}

std::array<double, 3> parse_triple(std::string_view text) {
    std::array<double, 3> out{};
    std::size_t start = 0;
    for (int i = 0; i < 3; i++) {
        const auto comma = text.find(',', start);
        if ((i < 2) == (comma == std::string_view::npos)) {
            throw ValidationError("expected three comma-separated values, got '" + std::string(text) + "'");
        }
        out[i] = parse_angle(text.substr(start, i < 2 ? comma - start : std::string_view::npos));
        start = comma + 1;
    }
    return out;
}

ComplexMatrix4 parse_matrix_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("matrix")) {
        throw ValidationError("expected an object with a \"matrix\" field");
    }
    const json &rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != 4) {
        throw ValidationError("matrix must have 4 rows");
    }
    ComplexMatrix4 m;
    for (int r = 0; r < 4; r++) {
        if (!rows[r].is_array() || rows[r].size() != 4) {
            throw ValidationError("matrix row " + std::to_string(r) + " must have 4 entries");
        }
        for (int c = 0; c < 4; c++) {
            m(r, c) = parse_entry(rows[r][c], r, c);
        }
    }
    if (!m.all_finite()) {
        throw ValidationError("matrix has non-finite entries");
    }
    return m;
}

ComplexMatrix4 load_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read '" + path + "'");
    }
    return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const ComplexMatrix4 &m) {
    return json{{"matrix", matrix_json(m)}}.dump();
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

void write_sample_csv_row(std::ostream &out, const CanonicalCoords &c, const LocalInvariants &g, bool is_pe) {
    out << format_number(c.c1) << ',' << format_number(c.c2) << ',' << format_number(c.c3) << ','
        << format_number(g.g1) << ',' << format_number(g.g2) << ',' << format_number(g.g3) << ','
        << (is_pe ? 1 : 0) << '\n';
}

void write_sample_jsonl_row(std::ostream &out, std::uint64_t index, const CanonicalCoords &c,
                            const LocalInvariants &g, bool is_pe, const ComplexMatrix4 &m) {
    json row{{"index", index},
             {"c", {c.c1, c.c2, c.c3}},
             {"g", {g.g1, g.g2, g.g3}},
             {"is_pe", is_pe},
             {"matrix", matrix_json(m)}};
    out << row.dump() << '\n';
}

}  // namespace su4geom
