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
 * Nonlinear projective channel rho -> P rho P / tr(P rho P).
 */

#pragma once

#include <string>
#include <utility>

#include "wqe/error.hpp"
#include "wqe/inequality.hpp"
#include "wqe/linalg.hpp"
#include "wqe/states.hpp"

namespace wqe {

inline constexpr double kProjectorTol = 1e-10;
inline constexpr double kOverlapTol = 1e-12;

class Projector {
  public:
    explicit Projector(Matrix m) : m_(std::move(m)) {
        const double dev = hermitian_deviation(m_);
        if (dev > kProjectorTol) {
            fail(ErrorKind::Validation, "projector not Hermitian (deviation " +
                                            std::to_string(dev) + ")");
        }
        const double idem = max_abs(matmul(m_, m_) - m_);
        if (idem > kProjectorTol) {
            fail(ErrorKind::Validation,
                 "projector not idempotent (|P^2 - P| = " +
                     std::to_string(idem) + ")");
        }
        for (double lambda : hermitian_eig(m_).values) {
            if (std::abs(lambda - 1.0) <= kProjectorTol) {
                ++rank_;
            }
        }
    }

    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }

  private:
    Matrix m_;
    std::size_t rank_ = 0;
};

/// diag(1, 0, 1, 0): keeps the |00> and |10> levels of the ququart.
inline Projector paper_projector() {
    return Projector(Matrix::diagonal({1.0, 0.0, 1.0, 0.0}));
}

inline DensityMatrix apply_projective_channel(const Projector &p,
                                              const DensityMatrix &rho) {
    require_dim(p.matrix(), rho.matrix(), "projective channel");
    Matrix out = matmul(matmul(p.matrix(), rho.matrix()), p.matrix());
    const double overlap = trace(out).real();
    if (!(overlap > kOverlapTol)) {
        fail(ErrorKind::ChannelUndefined,
             "channel undefined: vanishing overlap tr(P rho P) = " +
                 std::to_string(overlap));
    }
    out /= overlap;
    return DensityMatrix(std::move(out));
}

struct ChannelCheck {
    DensityMatrix transformed;
    SubadditivityReport report;
};

inline ChannelCheck channel_then_check(const Projector &p,
                                       const WeightMatrix &phi_a,
                                       const WeightMatrix &phi_b,
                                       const BipartiteState &s,
                                       double tolerance = kEntropyGapTol) {
    DensityMatrix out = apply_projective_channel(p, s.rho());
    const BipartiteState transformed(out, s.dim_a(), s.dim_b());
    return {std::move(out),
            check_subadditivity(phi_a, phi_b, transformed, tolerance)};
}

} // namespace wqe
