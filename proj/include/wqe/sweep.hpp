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
 * Two-parameter grids of the closed-form qutrit mutual information, written
 * as CSV for external plotting.
 */

#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "wqe/entropy.hpp"
#include "wqe/error.hpp"
#include "wqe/io.hpp"

namespace wqe {

/// Values are stored row-major with the x axis slow.
struct SweepGrid {
    std::array<std::string, 2> axis_names;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> values;
    std::vector<bool> masked;

    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
        return i * y.size() + j;
    }
    [[nodiscard]] std::size_t unmasked_count() const {
        std::size_t n = 0;
        for (bool m : masked) {
            n += m ? 0 : 1;
        }
        return n;
    }
};

inline constexpr QutritWeights kPaperWeights{0.75, 0.25, 1.0 / 3.0,
                                             2.0 / 3.0};

/**
 * I(p1, p2) at cell centres p = (k + 1/2) / n. Cells with p1 + p2 >= 1 are
 * masked.
 */
inline SweepGrid sweep_probabilities(std::size_t n,
                                     const QutritWeights &w = kPaperWeights) {
    if (n < 1) {
        fail(ErrorKind::Validation, "sweep grid needs n >= 1");
    }
    SweepGrid g{{"p1", "p2"}, {}, {}, {}, {}};
    for (std::size_t k = 0; k < n; ++k) {
        const double p = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
        g.x.push_back(p);
        g.y.push_back(p);
    }
    g.values.assign(n * n, 0.0);
    g.masked.assign(n * n, true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // (i + 1/2 + j + 1/2) / n < 1, decided in integers.
            if (i + j + 1 >= n) {
                continue;
            }
            g.masked[g.index(i, j)] = false;
            g.values[g.index(i, j)] =
                qutrit_mutual_information_closed_form(g.x[i], g.y[j], w);
        }
    }
    return g;
}

enum class WeightRegion {
    /// phi1 in [1/2, 1], chi1 in [0, 1/2]
    A,
    /// phi1 in [0, 1/2], chi1 in [1/2, 1]
    B,
};

/**
 * I(phi1, chi1) with phi2 = 1 - phi1 and chi2 = 1 - chi1 over a region of
 * the unit square, n equispaced points per axis including both endpoints.
 */
inline SweepGrid sweep_weights(WeightRegion region, double p1, double p2,
                               std::size_t n) {
    if (n < 2) {
        fail(ErrorKind::Validation, "weight sweep needs n >= 2");
    }
    QutritDiagonal::from_pair(p1, p2);
    const double phi_lo = region == WeightRegion::A ? 0.5 : 0.0;
    const double chi_lo = region == WeightRegion::A ? 0.0 : 0.5;
    SweepGrid g{{"phi1", "chi1"}, {}, {}, {}, {}};
    for (std::size_t k = 0; k < n; ++k) {
        const double t =
            0.5 * static_cast<double>(k) / static_cast<double>(n - 1);
        g.x.push_back(phi_lo + t);
        g.y.push_back(chi_lo + t);
    }
    g.values.assign(n * n, 0.0);
    g.masked.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double phi1 = g.x[i];
            const double chi1 = g.y[j];
            g.values[g.index(i, j)] = qutrit_mutual_information_closed_form(
                p1, p2, {phi1, 1.0 - phi1, chi1, 1.0 - chi1});
        }
    }
    return g;
}

/// `#` comment lines, a header row, then unmasked cells in row-major order
/// with 17 significant digits.
inline void write_csv(std::ostream &out, const SweepGrid &g,
                      const std::vector<std::string> &comments) {
    for (const auto &line : comments) {
        out << "# " << line << '\n';
    }
    out << g.axis_names[0] << ',' << g.axis_names[1] << ",I\n";
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        for (std::size_t j = 0; j < g.y.size(); ++j) {
            if (g.masked[g.index(i, j)]) {
                continue;
            }
            out << io::format_number(g.x[i], 17) << ','
                << io::format_number(g.y[j], 17) << ','
                << io::format_number(g.values[g.index(i, j)], 17) << '\n';
        }
    }
}

} // namespace wqe
