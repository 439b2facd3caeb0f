// Copyright 2026 The wqe Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON matrix files and JSON renderings of reports.
 *
 * A matrix file is an object {"dim": n, "re": [[...], ...], "im": [[...]]}
 * where "im" is optional and defaults to zeros.
 */

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wqe/channel.hpp"
#include "wqe/error.hpp"
#include "wqe/inequality.hpp"
#include "wqe/linalg.hpp"

namespace wqe::io {

using nlohmann::json;

/// printf-style %.*g rendering.
inline std::string format_number(double x, int significant_digits) {
    if (x == 0.0) {
        x = 0.0; // drop the sign of negative zero
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
    return buf;
}

namespace detail {

inline std::vector<std::vector<double>>
parse_block(const json &doc, const char *key, std::size_t dim) {
    const json &block = doc.at(key);
    if (!block.is_array() || block.size() != dim) {
        fail(ErrorKind::Parse, std::string(key) + ": expected " +
                                   std::to_string(dim) + " rows");
    }
    std::vector<std::vector<double>> rows(dim, std::vector<double>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        const json &row = block[r];
        if (!row.is_array() || row.size() != dim) {
            fail(ErrorKind::Parse, std::string(key) + "[" + std::to_string(r) +
                                       "]: expected " + std::to_string(dim) +
                                       " columns");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            if (!row[c].is_number()) {
                fail(ErrorKind::Parse, std::string(key) + "[" +
                                           std::to_string(r) + "][" +
                                           std::to_string(c) +
                                           "]: expected a number");
            }
            rows[r][c] = row[c].get<double>();
        }
    }
    return rows;
}

} // namespace detail

inline Matrix matrix_from_json(const json &doc) {
    if (!doc.is_object()) {
        fail(ErrorKind::Parse, "matrix file: top level must be an object");
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() ||
        doc["dim"].get<long long>() < 1) {
        fail(ErrorKind::Parse, "dim: expected a positive integer");
    }
    if (!doc.contains("re")) {
        fail(ErrorKind::Parse, "re: missing");
    }
    const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
    const auto re = detail::parse_block(doc, "re", dim);
    Matrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = re[r][c];
        }
    }
    if (doc.contains("im")) {
        const auto im = detail::parse_block(doc, "im", dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                m(r, c) = Complex(re[r][c], im[r][c]);
            }
        }
    }
    return m;
}

inline Matrix parse_matrix(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(ErrorKind::Parse, "matrix file: invalid JSON at byte " +
                                   std::to_string(e.byte));
    }
    return matrix_from_json(doc);
}

inline Matrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::Parse, "cannot open " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_matrix(text.str());
    } catch (const Error &e) {
        fail(e.kind(), path + ": " + e.what());
    }
}

inline json matrix_to_json(const Matrix &m) {
    json re = json::array();
    json im = json::array();
    bool complex = false;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
            complex = complex || m(r, c).imag() != 0.0;
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json out = {{"dim", m.dim()}, {"re", std::move(re)}};
    if (complex) {
        out["im"] = std::move(im);
    }
    return out;
}

inline json report_to_json(const SubadditivityReport &r) {
    const auto unsigned_zero = [](double x) { return x == 0.0 ? 0.0 : x; };
    return {
        {"s_ab", unsigned_zero(r.s_ab)},
        {"s_a", unsigned_zero(r.s_a)},
        {"s_b", unsigned_zero(r.s_b)},
        {"gap", unsigned_zero(r.gap)},
        {"condition_lhs", r.condition_lhs},
        {"condition_rhs", r.condition_rhs},
        {"condition_gap", unsigned_zero(r.condition_gap)},
        {"condition_holds", r.condition_holds},
        {"subadditivity_holds", r.subadditivity_holds},
        {"tolerance", r.tolerance},
        {"condition_tolerance", r.condition_tolerance},
    };
}

inline json audit_to_json(const AuditSummary &s) {
    json violations = json::array();
    for (const auto &v : s.violations) {
        violations.push_back({{"index", v.index},
                              {"rho", matrix_to_json(v.rho)},
                              {"phi_a", matrix_to_json(v.phi_a)},
                              {"phi_b", matrix_to_json(v.phi_b)},
                              {"report", report_to_json(v.report)}});
    }
    return {
        {"samples", s.samples},
        {"seed", s.seed},
        {"regime", std::string(to_string(s.regime))},
        {"dims", std::to_string(s.dim_a) + "x" + std::to_string(s.dim_b)},
        {"tolerance", s.tolerance},
        {"min_gap", s.min_gap},
        {"condition_failures", s.condition_failures},
        {"violations", std::move(violations)},
    };
}

} // namespace wqe::io
