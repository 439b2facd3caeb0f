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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "wqe/entropy.hpp"

using namespace wqe;
using Catch::Approx;

namespace {

// Worked example: phi_A = diag(3/4, 1/4), phi_B = diag(1/3, 2/3),
// rho = diag(1/10, 1/10, 8/10, 0). Reference values from a 30-digit
// evaluation of the diagonal formulas.
const QutritWeights kPaper{0.75, 0.25, 1.0 / 3.0, 2.0 / 3.0};
constexpr double kSab = 0.187570118728834076;
constexpr double kSa = 0.135584080186838178;
constexpr double kSb = 0.124787301918336362;
constexpr double kI = 0.0728012633763404636;

WeightMatrix paper_phi_ab() {
    return product_weight(WeightMatrix::diagonal({kPaper.phi1, kPaper.phi2}),
                          WeightMatrix::diagonal({kPaper.chi1, kPaper.chi2}));
}

BipartiteState paper_state() { return embed_qutrit({0.1, 0.1, 0.8}); }

} // namespace

TEST_CASE("weighted entropy reference values", "[entropy]") {
    CHECK(weighted_entropy(WeightMatrix::diagonal({2.0, 3.0}),
                           DensityMatrix(Matrix::diagonal({1.0, 0.0}))) == 0.0);
    CHECK(weighted_entropy(WeightMatrix(Matrix::identity(2)),
                           DensityMatrix(Matrix::diagonal({0.5, 0.5}))) ==
          Approx(std::log(2.0)).margin(1e-15));
    const double s = weighted_entropy(paper_phi_ab(), paper_state().rho());
    CHECK(s == Approx(kSab).margin(1e-14));
    CHECK(s == Approx(test::diagonal_weighted_entropy(
                          {0.25, 0.5, 1.0 / 12.0, 1.0 / 6.0}, {0.1, 0.1, 0.8, 0.0}))
                   .margin(1e-15));
}

TEST_CASE("weighted entropy rejects dimension mismatch", "[entropy]") {
    try {
        weighted_entropy(WeightMatrix(Matrix::identity(3)),
                         DensityMatrix(Matrix::diagonal({0.5, 0.5})));
        FAIL("expected dimension error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Dimension);
    }
}

TEST_CASE("reduced weighted states", "[entropy]") {
    const auto phi = paper_phi_ab();
    const auto s = paper_state();
    const Matrix ra = reduced_weighted_state(phi, s, Subsystem::A);
    const Matrix rb = reduced_weighted_state(phi, s, Subsystem::B);
    // diag(phi1 chi1 p1 + phi1 chi2 p2, phi2 chi1 p3)
    CHECK(ra(0, 0).real() == Approx(0.075).margin(1e-15));
    CHECK(ra(1, 1).real() == Approx(0.8 / 12.0).margin(1e-15));
    // diag(phi1 chi1 p1 + phi2 chi1 p3, phi1 chi2 p2)
    CHECK(rb(0, 0).real() == Approx(0.025 + 0.8 / 12.0).margin(1e-15));
    CHECK(rb(1, 1).real() == Approx(0.05).margin(1e-15));

    const WeightMatrix unit(Matrix::identity(4));
    CHECK(reduced_weighted_state(unit, s, Subsystem::A) ==
          reduce_state(s, Subsystem::A).matrix());
}

TEST_CASE("subsystem weighted entropies", "[entropy]") {
    const auto phi = paper_phi_ab();
    const auto s = paper_state();
    CHECK(subsystem_weighted_entropy(phi, s, Subsystem::A) == Approx(kSa).margin(1e-14));
    CHECK(subsystem_weighted_entropy(phi, s, Subsystem::B) == Approx(kSb).margin(1e-14));

    const WeightMatrix unit(Matrix::identity(4));
    CHECK(subsystem_weighted_entropy(unit, s, Subsystem::A) ==
          Approx(test::shannon({0.2, 0.8})).margin(1e-14));
    CHECK(subsystem_weighted_entropy(unit, s, Subsystem::B) ==
          Approx(test::shannon({0.9, 0.1})).margin(1e-14));
}

TEST_CASE("weighted mutual information", "[entropy]") {
    const auto wa = WeightMatrix::diagonal({kPaper.phi1, kPaper.phi2});
    const auto wb = WeightMatrix::diagonal({kPaper.chi1, kPaper.chi2});
    CHECK(weighted_mutual_information(wa, wb, paper_state()) == Approx(kI).margin(1e-14));

    SECTION("product states give zero") {
        const Matrix ra{{0.7, Complex(0.1, 0.2)}, {Complex(0.1, -0.2), 0.3}};
        const BipartiteState p(DensityMatrix(kron(ra, Matrix::diagonal({0.4, 0.6}))), 2, 2);
        CHECK(std::abs(weighted_mutual_information(wa, wb, p)) < 1e-12);
    }
    SECTION("unit weights give the ordinary mutual information") {
        const WeightMatrix unit(Matrix::identity(2));
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const BipartiteState st(random_density(4, seed), 2, 2);
            REQUIRE(weighted_mutual_information(unit, unit, st) >= -1e-12);
        }
        const std::vector<double> joint{0.1, 0.2, 0.3, 0.4};
        const BipartiteState d(DensityMatrix(Matrix::diagonal({0.1, 0.2, 0.3, 0.4})), 2, 2);
        CHECK(weighted_mutual_information(unit, unit, d) ==
              Approx(test::classical_mutual_information(joint, 2, 2)).margin(1e-14));
    }
}

TEST_CASE("closed-form qutrit mutual information", "[entropy]") {
    CHECK(qutrit_mutual_information_closed_form(0.1, 0.1, kPaper) == Approx(kI).margin(1e-15));
    CHECK(std::abs(qutrit_mutual_information_closed_form(0.1, 0.1, kPaper) - 0.0728) <= 5e-4);

    SECTION("channel output state") {
        for (const QutritWeights w : {kPaper, QutritWeights{0.2, 1.7, 0.9, 0.4}}) {
            CHECK(std::abs(qutrit_mutual_information_closed_form(1.0 / 9.0, 0.0, w)) < 1e-15);
        }
    }
    SECTION("unit weights reduce to the classical mutual information") {
        std::mt19937_64 rng(8);
        for (int i = 0; i < 200; ++i) {
            const auto p = test::random_simplex(3, rng);
            const double expected = test::classical_mutual_information(
                {p[0], p[1], p[2], 0.0}, 2, 2);
            REQUIRE(qutrit_mutual_information_closed_form(p[0], p[1], {1, 1, 1, 1}) ==
                    Approx(expected).margin(1e-14));
        }
    }
    SECTION("zero-probability terms vanish") {
        CHECK(qutrit_mutual_information_closed_form(0.0, 0.0, kPaper) == 0.0);
        CHECK(qutrit_mutual_information_closed_form(0.0, 1.0, kPaper) == 0.0);
        CHECK(std::isfinite(qutrit_mutual_information_closed_form(0.0, 0.5, kPaper)));
    }
    SECTION("simplex violations") {
        CHECK_THROWS_AS(qutrit_mutual_information_closed_form(0.7, 0.4, kPaper), Error);
        CHECK_THROWS_AS(qutrit_mutual_information_closed_form(-0.1, 0.4, kPaper), Error);
        CHECK_THROWS_AS(qutrit_mutual_information_closed_form(0.1, 0.4, {-1, 1, 1, 1}), Error);
    }
}

TEST_CASE("entropy properties", "[entropy][property]") {
    SECTION("unitary covariance") {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t dim = 2 + trial % 3;
            const auto phi = random_weight(dim, 100 + trial);
            const auto rho = random_density(dim, 900 + trial);
            const Matrix u = random_unitary(dim, 7000 + trial);
            const WeightMatrix phi_u(test::conjugate(u, phi.matrix()));
            const DensityMatrix rho_u(test::conjugate(u, rho.matrix()));
            REQUIRE(std::abs(weighted_entropy(phi_u, rho_u) - weighted_entropy(phi, rho)) <= 1e-10);
        }
    }
    SECTION("diagonal oracle") {
        std::mt19937_64 rng(12);
        std::uniform_real_distribution<double> u(0.05, 2.0);
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t dim = 2 + trial % 5;
            const auto p = test::random_simplex(dim, rng);
            std::vector<double> w(dim);
            for (auto &x : w) x = u(rng);
            const double s = weighted_entropy(WeightMatrix(Matrix::diagonal(w)),
                                              DensityMatrix(Matrix::diagonal(p)));
            REQUIRE(std::abs(s - test::diagonal_weighted_entropy(w, p)) <= 1e-12);
        }
    }
    SECTION("nonnegativity") {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t dim = 2 + trial % 4;
            REQUIRE(weighted_entropy(random_weight(dim, trial), random_density(dim, trial + 1)) >= -1e-10);
        }
    }
    SECTION("trace identity for the weighted reductions") {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t da = 2 + trial % 2;
            const std::size_t db = 2 + (trial / 2) % 2;
            const BipartiteState s(random_density(da * db, trial), da, db);
            const auto phi = product_weight(random_weight(da, 40 + trial), random_weight(db, 80 + trial));
            const Complex full = trace_of_product(phi.matrix(), s.rho().matrix());
            REQUIRE(std::abs(trace(reduced_weighted_state(phi, s, Subsystem::A)) - full) <= 1e-12);
            REQUIRE(std::abs(trace(reduced_weighted_state(phi, s, Subsystem::B)) - full) <= 1e-12);
        }
    }
    SECTION("identity weight is the von Neumann entropy of a known spectrum") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t dim = 2 + trial % 5;
            const auto spectrum = test::random_simplex(dim, rng);
            const Matrix u = random_unitary(dim, 300 + trial);
            const DensityMatrix rho(test::conjugate_diagonal(u, spectrum));
            REQUIRE(std::abs(weighted_entropy(WeightMatrix(Matrix::identity(dim)), rho) -
                             test::shannon(spectrum)) <= 1e-10);
        }
    }
    SECTION("closed form agrees with the general matrix path") {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> u(0.05, 2.0);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto p = test::random_simplex(3, rng);
            const QutritWeights w{u(rng), u(rng), u(rng), u(rng)};
            const double closed = qutrit_mutual_information_closed_form(p[0], p[1], w);
            const double general = weighted_mutual_information(
                WeightMatrix::diagonal({w.phi1, w.phi2}), WeightMatrix::diagonal({w.chi1, w.chi2}),
                embed_qutrit(QutritDiagonal::from_pair(p[0], p[1])));
            REQUIRE(std::abs(closed - general) <= 1e-10);
        }
    }
}
