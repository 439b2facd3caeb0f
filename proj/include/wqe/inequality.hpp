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
 * Subadditivity of the weighted entropy for bipartite states together with
 * its sufficient trace condition
 *
 *   tr(phi_AB rho_AB) >= tr(phi_A rho_A) tr(phi_B rho_B),
 *
 * the diagonal-qutrit specialisations and a seeded random auditor.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wqe/entropy.hpp"
#include "wqe/error.hpp"
#include "wqe/linalg.hpp"
#include "wqe/states.hpp"

namespace wqe {

inline constexpr double kEntropyGapTol = 1e-10;
inline constexpr double kTraceConditionTol = 1e-12;

struct TraceCondition {
    double lhs;
    double rhs;
    bool holds;
};

struct SubadditivityReport {
    double s_ab;
    double s_a;
    double s_b;
    /// s_a + s_b - s_ab
    double gap;
    double condition_lhs;
    double condition_rhs;
    double condition_gap;
    bool condition_holds;
    bool subadditivity_holds;
    /// Slack for the entropy gap.
    double tolerance;
    /// Slack for the trace condition (pure arithmetic, tighter budget).
    double condition_tolerance;
};

namespace detail {

inline void require_factor_dims(const WeightMatrix &phi_a,
                                const WeightMatrix &phi_b,
                                const BipartiteState &s, const char *what) {
    if (phi_a.dim() != s.dim_a() || phi_b.dim() != s.dim_b()) {
        fail(ErrorKind::Dimension,
             std::string(what) + ": weights " + std::to_string(phi_a.dim()) +
                 "x" + std::to_string(phi_b.dim()) + " vs state " +
                 std::to_string(s.dim_a()) + "x" + std::to_string(s.dim_b()));
    }
}

} // namespace detail

inline TraceCondition trace_condition(const WeightMatrix &phi_a,
                                      const WeightMatrix &phi_b,
                                      const BipartiteState &s) {
    detail::require_factor_dims(phi_a, phi_b, s, "trace condition");
    const Matrix &rho = s.rho().matrix();
    const double lhs =
        trace_of_product(kron(phi_a.matrix(), phi_b.matrix()), rho).real();
    const Matrix rho_a = partial_trace(rho, s.dim_a(), s.dim_b(), Subsystem::A);
    const Matrix rho_b = partial_trace(rho, s.dim_a(), s.dim_b(), Subsystem::B);
    const double rhs = trace_of_product(phi_a.matrix(), rho_a).real() *
                       trace_of_product(phi_b.matrix(), rho_b).real();
    return {lhs, rhs, lhs >= rhs - kTraceConditionTol};
}

struct QutritWeightCondition {
    double value;
    bool holds;
};

/// (phi1 - phi2)(chi2 - chi1) >= 0.
inline QutritWeightCondition qutrit_weight_condition(const QutritWeights &w) {
    const double value = (w.phi1 - w.phi2) * (w.chi2 - w.chi1);
    return {value, value >= 0.0};
}

/// p2 (1 - p1 - p2)(phi1 - phi2)(chi2 - chi1); equals lhs - rhs of the trace
/// condition for the embedded qutrit with diagonal weights.
inline double qutrit_condition_gap(double p1, double p2,
                                   const QutritWeights &w) {
    const QutritDiagonal q = QutritDiagonal::from_pair(p1, p2);
    return q.p2() * q.p3() * qutrit_weight_condition(w).value;
}

inline SubadditivityReport check_subadditivity(const WeightMatrix &phi_a,
                                               const WeightMatrix &phi_b,
                                               const BipartiteState &s,
                                               double tolerance = kEntropyGapTol) {
    if (!(tolerance > 0.0)) {
        fail(ErrorKind::Validation, "tolerance must be positive");
    }
    detail::require_factor_dims(phi_a, phi_b, s, "subadditivity");
    const WeightMatrix phi_ab = product_weight(phi_a, phi_b);

    SubadditivityReport r{};
    r.s_ab = weighted_entropy(phi_ab, s.rho());
    r.s_a = subsystem_weighted_entropy(phi_ab, s, Subsystem::A);
    r.s_b = subsystem_weighted_entropy(phi_ab, s, Subsystem::B);
    r.gap = r.s_a + r.s_b - r.s_ab;

    const TraceCondition cond = trace_condition(phi_a, phi_b, s);
    r.condition_lhs = cond.lhs;
    r.condition_rhs = cond.rhs;
    r.condition_gap = cond.lhs - cond.rhs;
    r.condition_tolerance = kTraceConditionTol;
    r.condition_holds = r.condition_gap >= -r.condition_tolerance;
    r.tolerance = tolerance;
    r.subadditivity_holds = r.gap >= -tolerance;
    return r;
}

// --- Random audit -----------------------------------------------------------

enum class AuditRegime {
    /// Diagonal weights resampled until the trace condition is met. For 2x2
    /// the state is an embedded qutrit and the qutrit weight condition is
    /// used.
    DiagonalConditionSatisfying,
    DiagonalUnconstrained,
    GeneralUnconstrained,
};

inline std::string_view to_string(AuditRegime regime) {
    switch (regime) {
    case AuditRegime::DiagonalConditionSatisfying:
        return "diagonal-condition-satisfying";
    case AuditRegime::DiagonalUnconstrained:
        return "diagonal-unconstrained";
    case AuditRegime::GeneralUnconstrained:
        return "general-unconstrained";
    }
    return "unknown";
}

inline std::optional<AuditRegime> parse_regime(std::string_view name) {
    for (auto r : {AuditRegime::DiagonalConditionSatisfying,
                   AuditRegime::DiagonalUnconstrained,
                   AuditRegime::GeneralUnconstrained}) {
        if (name == to_string(r)) {
            return r;
        }
    }
    return std::nullopt;
}

struct AuditRecord {
    std::size_t index;
    Matrix rho;
    Matrix phi_a;
    Matrix phi_b;
    SubadditivityReport report;
};

struct AuditSummary {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    AuditRegime regime = AuditRegime::DiagonalConditionSatisfying;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    double tolerance = kEntropyGapTol;
    std::vector<AuditRecord> violations;
    double min_gap = std::numeric_limits<double>::infinity();
    /// Samples whose trace condition failed (always 0 in the
    /// condition-satisfying regime).
    std::size_t condition_failures = 0;
};

inline constexpr int kMaxConditionAttempts = 10000;

struct AuditSample {
    BipartiteState state;
    WeightMatrix phi_a;
    WeightMatrix phi_b;
};

namespace detail {

inline Matrix uniform_diagonal(std::size_t dim, std::mt19937_64 &rng) {
    const ScaleRange range;
    std::uniform_real_distribution<double> u(range.lo, range.hi);
    std::vector<double> d(dim);
    for (auto &x : d) {
        x = u(rng);
    }
    return Matrix::diagonal(d);
}

} // namespace detail

/// Sample `index` of an audit; a pure function of (seed, index).
inline AuditSample draw_audit_sample(AuditRegime regime, std::size_t dim_a,
                                     std::size_t dim_b, std::uint64_t seed,
                                     std::size_t index) {
    const std::uint64_t sample_seed = seed ^ static_cast<std::uint64_t>(index);
    const std::size_t dim = dim_a * dim_b;

    if (regime == AuditRegime::GeneralUnconstrained) {
        return {BipartiteState(random_density(dim, derive_seed(sample_seed, 0)),
                               dim_a, dim_b),
                random_weight(dim_a, derive_seed(sample_seed, 1)),
                random_weight(dim_b, derive_seed(sample_seed, 2))};
    }

    std::mt19937_64 rng(derive_seed(sample_seed, 1));
    const bool qutrit = regime == AuditRegime::DiagonalConditionSatisfying &&
                        dim_a == 2 && dim_b == 2;
    BipartiteState state = [&] {
        if (qutrit) {
            const Matrix q =
                random_diagonal_state(3, derive_seed(sample_seed, 0)).matrix();
            return embed_qutrit(QutritDiagonal::from_pair(q(0, 0).real(),
                                                          q(1, 1).real()));
        }
        return BipartiteState(
            random_diagonal_state(dim, derive_seed(sample_seed, 0)), dim_a,
            dim_b);
    }();

    for (int attempt = 0; attempt < kMaxConditionAttempts; ++attempt) {
        WeightMatrix phi_a(detail::uniform_diagonal(dim_a, rng));
        WeightMatrix phi_b(detail::uniform_diagonal(dim_b, rng));
        if (regime == AuditRegime::DiagonalUnconstrained) {
            return {std::move(state), std::move(phi_a), std::move(phi_b)};
        }
        bool accepted = false;
        if (qutrit) {
            accepted = qutrit_weight_condition(
                           {phi_a.matrix()(0, 0).real(),
                            phi_a.matrix()(1, 1).real(),
                            phi_b.matrix()(0, 0).real(),
                            phi_b.matrix()(1, 1).real()})
                           .holds;
        } else {
            accepted = trace_condition(phi_a, phi_b, state).holds;
        }
        if (accepted) {
            return {std::move(state), std::move(phi_a), std::move(phi_b)};
        }
    }
    fail(ErrorKind::Convergence,
         "audit: no condition-satisfying weights found for sample " +
             std::to_string(index));
}

/**
 * Draws `n` (state, weight) pairs and checks subadditivity on each. Records
 * findings only; never asserts.
 */
inline AuditSummary audit_random(std::size_t n, std::size_t dim_a,
                                 std::size_t dim_b, std::uint64_t seed,
                                 AuditRegime regime,
                                 double tolerance = kEntropyGapTol) {
    if (n == 0) {
        fail(ErrorKind::Validation, "audit needs at least one sample");
    }
    AuditSummary summary;
    summary.samples = n;
    summary.seed = seed;
    summary.regime = regime;
    summary.dim_a = dim_a;
    summary.dim_b = dim_b;
    summary.tolerance = tolerance;
    for (std::size_t i = 0; i < n; ++i) {
        const AuditSample sample =
            draw_audit_sample(regime, dim_a, dim_b, seed, i);
        const SubadditivityReport report = check_subadditivity(
            sample.phi_a, sample.phi_b, sample.state, tolerance);
        summary.min_gap = std::min(summary.min_gap, report.gap);
        if (!report.condition_holds) {
            ++summary.condition_failures;
        }
        if (!report.subadditivity_holds) {
            summary.violations.push_back({i, sample.state.rho().matrix(),
                                          sample.phi_a.matrix(),
                                          sample.phi_b.matrix(), report});
        }
    }
    return summary;
}

} // namespace wqe
