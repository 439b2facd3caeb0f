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
 * Weighted von Neumann entropy S_phi(rho) = -tr(phi rho ln rho) and the
 * subsystem quantities built from tr_other(phi_AB rho_AB).
 *
 * All entropies are in nats.
 */

#pragma once

#include <cmath>
#include <string>

#include "wqe/error.hpp"
#include "wqe/linalg.hpp"
#include "wqe/states.hpp"

namespace wqe {

inline constexpr double kImaginaryTol = 1e-10;
inline constexpr double kOffSupportTol = 1e-10;

inline double weighted_entropy(const WeightMatrix &phi,
                               const DensityMatrix &rho) {
    require_dim(phi.matrix(), rho.matrix(), "weighted entropy");
    const Complex t = trace_of_product(phi.matrix(), xlogx_matrix(rho.matrix()));
    if (std::abs(t.imag()) > kImaginaryTol) {
        fail(ErrorKind::Validation,
             "weighted entropy: imaginary trace " + std::to_string(t.imag()));
    }
    return -t.real();
}

/**
 * tr_other(phi_AB rho_AB), i.e. the product psi_X rho_X. The reduced weight
 * psi_X itself is never formed since rho_X may be singular.
 */
inline Matrix reduced_weighted_state(const WeightMatrix &phi_ab,
                                     const BipartiteState &s, Subsystem keep) {
    require_dim(phi_ab.matrix(), s.rho().matrix(), "reduced weighted state");
    return partial_trace(matmul(phi_ab.matrix(), s.rho().matrix()), s.dim_a(),
                         s.dim_b(), keep);
}

/**
 * -tr( tr_other(phi_AB rho_AB) ln rho_X ), with ln taken on the support of
 * rho_X. Throws if the weighted reduction has mass on the kernel of rho_X.
 * For non-diagonal weights the trace can be complex; the real part is
 * returned.
 */
inline double subsystem_weighted_entropy(const WeightMatrix &phi_ab,
                                         const BipartiteState &s,
                                         Subsystem keep) {
    const Matrix weighted = reduced_weighted_state(phi_ab, s, keep);
    const DensityMatrix rho_x = reduce_state(s, keep);

    const Matrix off_support = matmul(weighted, kernel_projector(rho_x.matrix()));
    const double leak = max_abs(off_support);
    if (leak > kOffSupportTol * std::max(1.0, max_abs(weighted))) {
        fail(ErrorKind::Validation,
             "subsystem entropy: weighted reduction has mass " +
                 std::to_string(leak) + " off the support of the reduced state");
    }
    return -trace_of_product(weighted, log_on_support(rho_x.matrix())).real();
}

/// S_psiA(rho_A) + S_psiB(rho_B) - S_phiAB(rho_AB) with phi_AB = phiA (x) phiB.
inline double weighted_mutual_information(const WeightMatrix &phi_a,
                                          const WeightMatrix &phi_b,
                                          const BipartiteState &s) {
    if (phi_a.dim() != s.dim_a() || phi_b.dim() != s.dim_b()) {
        fail(ErrorKind::Dimension,
             "mutual information: weight dims do not match the state factors");
    }
    const WeightMatrix phi_ab = product_weight(phi_a, phi_b);
    return subsystem_weighted_entropy(phi_ab, s, Subsystem::A) +
           subsystem_weighted_entropy(phi_ab, s, Subsystem::B) -
           weighted_entropy(phi_ab, s.rho());
}

/// Diagonal qutrit weights: phi_A = diag(phi1, phi2), phi_B = diag(chi1, chi2).
struct QutritWeights {
    double phi1;
    double phi2;
    double chi1;
    double chi2;
};

/**
 * Closed form of the weighted mutual information for the embedded diagonal
 * qutrit (p1, p2, 1 - p1 - p2) under diagonal weights:
 *
 *   -( phi1 chi1 p1 ln[(p1+p2)(p1+p3)/p1]
 *      + phi1 chi2 p2 ln(p1+p2) + phi2 chi1 p3 ln(p1+p3) )
 *
 * A term whose probability factor is 0 contributes 0. Weights must be
 * nonnegative; zero weights arise on the edges of the weight sweeps.
 */
inline double qutrit_mutual_information_closed_form(double p1, double p2,
                                                    const QutritWeights &w) {
    const QutritDiagonal q = QutritDiagonal::from_pair(p1, p2);
    for (double x : {w.phi1, w.phi2, w.chi1, w.chi2}) {
        if (!(x >= 0.0)) {
            fail(ErrorKind::Validation,
                 "qutrit weight " + std::to_string(x) + " is negative");
        }
    }
    const double p3 = q.p3();
    double sum = 0.0;
    if (p1 > 0.0) {
        sum += w.phi1 * w.chi1 * p1 * std::log((p1 + p2) * (p1 + p3) / p1);
    }
    if (p2 > 0.0) {
        sum += w.phi1 * w.chi2 * p2 * std::log(p1 + p2);
    }
    if (p3 > 0.0) {
        sum += w.phi2 * w.chi1 * p3 * std::log(p1 + p3);
    }
    return -sum;
}

} // namespace wqe
