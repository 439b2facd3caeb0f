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
#include "wqe/linalg.hpp"
#include "wqe/states.hpp"

using namespace wqe;
using Catch::Approx;

TEST_CASE("kron matches the composite index formula", "[linalg]") {
    SECTION("identity") {
        CHECK(kron(Matrix::identity(2), Matrix::identity(2)) ==
              Matrix::identity(4));
    }
    SECTION("diagonal weights") {
        const Matrix k = kron(Matrix::diagonal({0.75, 0.25}),
                              Matrix::diagonal({1.0 / 3.0, 2.0 / 3.0}));
        const double expected[] = {0.25, 0.5, 1.0 / 12.0, 1.0 / 6.0};
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(k(i, i).real() == Approx(expected[i]).margin(1e-15));
            for (std::size_t j = 0; j < 4; ++j) {
                if (i != j) {
                    CHECK(k(i, j) == Complex{});
                }
            }
        }
    }
    SECTION("general entries") {
        std::mt19937_64 rng(7);
        const Matrix a = test::random_general(2, rng);
        const Matrix b = test::random_general(3, rng);
        const Matrix k = kron(a, b);
        REQUIRE(k.dim() == 6);
        for (std::size_t a1 = 0; a1 < 2; ++a1)
            for (std::size_t a2 = 0; a2 < 2; ++a2)
                for (std::size_t b1 = 0; b1 < 3; ++b1)
                    for (std::size_t b2 = 0; b2 < 3; ++b2)
                        CHECK(k(a1 * 3 + b1, a2 * 3 + b2) == a(a1, a2) * b(b1, b2));
    }
}

TEST_CASE("partial trace of the embedded qutrit", "[linalg]") {
    const Matrix rho = Matrix::diagonal({0.1, 0.1, 0.8, 0.0});
    const Matrix ra = partial_trace(rho, 2, 2, Subsystem::A);
    const Matrix rb = partial_trace(rho, 2, 2, Subsystem::B);
    CHECK(ra == Matrix::diagonal({0.1 + 0.1, 0.8}));
    CHECK(rb == Matrix::diagonal({0.1 + 0.8, 0.1}));
}

TEST_CASE("partial trace rejects a bad factorization", "[linalg]") {
    const Matrix rho = Matrix::identity(6);
    CHECK_THROWS_AS(partial_trace(rho, 2, 2, Subsystem::A), Error);
    try {
        partial_trace(rho, 4, 2, Subsystem::B);
        FAIL("expected a dimension error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Dimension);
    }
}

TEST_CASE("eigensolver small cases", "[linalg]") {
    SECTION("identity") {
        const auto eig = hermitian_eig(Matrix::identity(3));
        for (double v : eig.values) {
            CHECK(v == 1.0);
        }
    }
    SECTION("diagonal is sorted ascending") {
        const auto eig = hermitian_eig(Matrix::diagonal({0.8, 0.1, 0.1}));
        CHECK(eig.values == std::vector<double>{0.1, 0.1, 0.8});
    }
    SECTION("pauli x") {
        const auto eig = hermitian_eig(Matrix{{0, 1}, {1, 0}});
        CHECK(eig.values[0] == Approx(-1.0).margin(1e-15));
        CHECK(eig.values[1] == Approx(1.0).margin(1e-15));
    }
    SECTION("pauli y has complex eigenvectors") {
        const Matrix y{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
        const auto eig = hermitian_eig(y);
        CHECK(eig.values[0] == Approx(-1.0).margin(1e-15));
        CHECK(eig.values[1] == Approx(1.0).margin(1e-15));
        CHECK(test::max_abs_diff(reconstruct(eig.vectors, eig.values), y) < 1e-14);
    }
    SECTION("not hermitian") {
        const Matrix m{{1, 2}, {0, 1}};
        try {
            hermitian_eig(m);
            FAIL("expected a validation error");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::Validation);
        }
    }
    SECTION("zero matrix") {
        const auto eig = hermitian_eig(Matrix(3));
        CHECK(eig.values == std::vector<double>{0.0, 0.0, 0.0});
    }
}

TEST_CASE("eigensolver reconstruction and orthonormality", "[linalg][property]") {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t dim = 2 + trial % 5;
        const Matrix m = test::random_hermitian(dim, rng, trial % 3 == 0 ? 10.0 : 1.0);
        const auto eig = hermitian_eig(m);

        const Matrix gram = matmul(eig.vectors.adjoint(), eig.vectors);
        REQUIRE(test::max_abs_diff(gram, Matrix::identity(dim)) <= 1e-12);

        const Matrix rebuilt = test::conjugate_diagonal(eig.vectors, eig.values);
        REQUIRE(test::max_abs_diff(rebuilt, m) <=
                1e-10 * std::max(1.0, max_abs(m)));

        REQUIRE(std::is_sorted(eig.values.begin(), eig.values.end()));
        for (std::size_t k = 0; k < dim; ++k) {
            std::size_t pivot = 0;
            for (std::size_t r = 1; r < dim; ++r) {
                if (std::abs(eig.vectors(r, k)) > std::abs(eig.vectors(pivot, k))) {
                    pivot = r;
                }
            }
            REQUIRE(eig.vectors(pivot, k).imag() == 0.0);
            REQUIRE(eig.vectors(pivot, k).real() > 0.0);
        }
    }
}

TEST_CASE("eigensolver is deterministic", "[linalg]") {
    std::mt19937_64 rng(3);
    const Matrix m = test::random_hermitian(5, rng);
    const auto first = hermitian_eig(m);
    const auto second = hermitian_eig(m);
    CHECK(first.values == second.values);
    CHECK(first.vectors == second.vectors);
}

TEST_CASE("degenerate spectra", "[linalg]") {
    // U diag(1, 1, 2, 2) U^H with a Haar U.
    const Matrix u = random_unitary(4, 99);
    const Matrix m = test::conjugate_diagonal(u, {1.0, 1.0, 2.0, 2.0});
    const auto eig = hermitian_eig(m);
    CHECK(eig.values[0] == Approx(1.0).margin(1e-12));
    CHECK(eig.values[1] == Approx(1.0).margin(1e-12));
    CHECK(eig.values[2] == Approx(2.0).margin(1e-12));
    CHECK(eig.values[3] == Approx(2.0).margin(1e-12));
    CHECK(test::max_abs_diff(matmul(eig.vectors.adjoint(), eig.vectors),
                             Matrix::identity(4)) <= 1e-12);
}

TEST_CASE("x ln x on spectra", "[linalg]") {
    SECTION("pure diagonal state") {
        CHECK(xlogx_matrix(Matrix::diagonal({1.0, 0.0})) == Matrix(2));
    }
    SECTION("maximally mixed qubit") {
        const Matrix x = xlogx_matrix(Matrix::diagonal({0.5, 0.5}));
        CHECK(x(0, 0).real() == Approx(-std::log(2.0) / 2).margin(1e-15));
        CHECK(x(1, 1).real() == Approx(-std::log(2.0) / 2).margin(1e-15));
        CHECK(std::abs(x(0, 1)) == 0.0);
    }
    SECTION("rank-one projector gives zero") {
        const Matrix plus{{0.5, 0.5}, {0.5, 0.5}};
        CHECK(max_abs(xlogx_matrix(plus)) < 1e-15);
    }
    SECTION("noise below the clip is zeroed, larger negatives fail") {
        CHECK(max_abs(xlogx_matrix(Matrix::diagonal({1.0, -5e-11}))) == 0.0);
        try {
            xlogx_matrix(Matrix::diagonal({1.0, -1e-9}));
            FAIL("expected a validation error");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::Validation);
        }
    }
}

TEST_CASE("x ln x is basis independent", "[linalg][property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + trial % 4;
        const Matrix rho = random_density(dim, 1000 + trial).matrix();
        const Matrix u = random_unitary(dim, 5000 + trial);
        const Matrix lhs = xlogx_matrix(test::conjugate(u, rho));
        const Matrix rhs = test::conjugate(u, xlogx_matrix(rho));
        REQUIRE(test::max_abs_diff(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("trace, matmul and psd helpers", "[linalg]") {
    const Matrix rho = Matrix::diagonal({0.1, 0.1, 0.8, 0.0});
    CHECK(trace(rho).real() == Approx(1.0).margin(1e-15));
    CHECK(is_psd(rho));
    CHECK_FALSE(is_psd(Matrix::diagonal({1.0, -0.5})));
    CHECK(is_hermitian(Matrix{{1, Complex(0, 1)}, {Complex(0, -1), 1}}));
    CHECK_FALSE(is_hermitian(Matrix{{1, Complex(0, 1)}, {Complex(0, 1), 1}}));

    const Matrix w = Matrix::diagonal({0.25, 0.5, 1.0 / 12.0, 1.0 / 6.0});
    // 0.25*0.1 + 0.5*0.1 + 0.8/12
    CHECK(trace(matmul(w, rho)).real() == Approx(0.14166666666666666).margin(1e-15));
    CHECK(trace_of_product(w, rho) == trace(matmul(w, rho)));
    CHECK_THROWS_AS(matmul(Matrix(2), Matrix(3)), Error);
    CHECK_THROWS_AS(Matrix(2, std::vector<Complex>(3)), Error);
}

TEST_CASE("kron, trace and partial trace identities", "[linalg][property]") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t da = 2 + trial % 3;
        const std::size_t db = 2 + (trial / 3) % 3;
        const Matrix a = test::random_general(da, rng);
        const Matrix b = test::random_general(db, rng);
        const Matrix k = kron(a, b);
        REQUIRE(std::abs(trace(k) - trace(a) * trace(b)) <= 1e-12 * std::max(1.0, std::abs(trace(k))));

        const Matrix m = test::random_general(da * db, rng);
        REQUIRE(std::abs(trace(partial_trace(m, da, db, Subsystem::A)) - trace(m)) <= 1e-12);
        REQUIRE(std::abs(trace(partial_trace(m, da, db, Subsystem::B)) - trace(m)) <= 1e-12);

        REQUIRE(test::max_abs_diff(partial_trace(k, da, db, Subsystem::A), a * trace(b)) <= 1e-12);
        REQUIRE(test::max_abs_diff(partial_trace(k, da, db, Subsystem::B), b * trace(a)) <= 1e-12);
    }
}
