#include <doctest.h>

#include <map>
#include <string>

#include "helpers.hpp"

using namespace msr;
using msr::test::gaussian_binomial_formula;
using msr::test::random_invertible;
using msr::test::random_matrix;
using msr::test::span_rank;

namespace {
const std::vector<std::pair<int, int>> kFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}};
}

TEST_CASE("matmul reproduces the transmitted vector") {
    auto gf3 = Field::make(3);
    // B1 * A2 from the (4,2) walkthrough
    auto b1 = FieldMatrix::from_rows(gf3, {{1, 0}});
    auto a2 = FieldMatrix::from_rows(gf3, {{0, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(b1 * a2 == FieldMatrix::from_rows(gf3, {{0, 1, 0, 0}}));

    std::mt19937 rng(1);
    auto m = random_matrix(gf3, 3, 5, rng);
    CHECK(FieldMatrix::identity(gf3, 3) * m == m);

    auto sel = FieldMatrix::from_rows(gf3, {{0, 1}});
    auto a = FieldMatrix::from_rows(gf3, {{1, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 1, 1}});
    CHECK(sel * a == FieldMatrix::from_rows(gf3, {{1, 0, 0, 0, 1, 1}}));

    CHECK_THROWS_AS(b1 * b1, DimensionMismatchError);
    CHECK_THROWS_AS(b1 * FieldMatrix::identity(Field::make(5), 2), FieldMismatchError);
}

TEST_CASE("determinant basics") {
    auto gf3 = Field::make(3);
    CHECK(det(FieldMatrix::identity(gf3, 4)).value() == 1);

    auto stacked = FieldMatrix::from_rows(gf3, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK_FALSE(det(stacked).is_zero());

    auto repeated = FieldMatrix::from_rows(gf3, {{1, 2, 0}, {0, 1, 1}, {1, 2, 0}});
    CHECK(det(repeated).is_zero());

    CHECK_THROWS_AS(det(FieldMatrix(gf3, 2, 3)), NotSquareError);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(20240811);
    for (const auto& [p, m] : kFields) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            auto a = random_matrix(f, n, n, rng);
            auto b = random_matrix(f, n, n, rng);
            REQUIRE(det(a * b) == det(a) * det(b));
        }
    }
}

TEST_CASE("rank and rref") {
    auto gf3 = Field::make(3);
    CHECK(rank(FieldMatrix::from_rows(gf3, {{1, 0, 0, 0}, {0, 1, 1, 0}})) == 2);

    auto swapped = rref(FieldMatrix::from_rows(gf3, {{0, 1, 1, 0}, {1, 0, 0, 0}}));
    CHECK(swapped.matrix == FieldMatrix::from_rows(gf3, {{1, 0, 0, 0}, {0, 1, 1, 0}}));
    CHECK(swapped.pivots == std::vector<int>{0, 1});

    // Node-1 repair stack of the GF(3) appendix code; rank checked against
    // the span-counting oracle.
    auto stack = FieldMatrix::from_rows(
        gf3, {{0, 0, 2, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {1, 2, 1, 2, 1, 0}, {1, 0, 2, 1, 1, 0}});
    CHECK(span_rank(stack) == 4);
    CHECK(rank(stack) == 4);
}

TEST_CASE("rref properties: idempotent, rank-preserving, row-basis invariant") {
    std::mt19937 rng(7);
    for (const auto& [p, m] : kFields) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 1000; ++trial) {
            const int rows = 1 + static_cast<int>(rng() % 4);
            const int cols = 1 + static_cast<int>(rng() % 5);
            auto a = random_matrix(f, rows, cols, rng);
            auto r = rref(a);
            REQUIRE(rank(r.matrix) == rank(a));
            REQUIRE(rref(r.matrix).matrix == r.matrix);
            auto t = random_invertible(f, rows, rng);
            REQUIRE(rref(t * a).matrix == r.matrix);
        }
    }
}

TEST_CASE("inverse matches the systematic transform") {
    auto gf3 = Field::make(3);
    auto stacked = FieldMatrix::from_rows(gf3, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
    // printed T with -1 entries reduced into GF(3)
    auto expected = FieldMatrix::from_rows(gf3, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, -1, 0}, {0, -1, 1, 1}});
    CHECK(invert(stacked) == expected);
    CHECK(stacked * expected == FieldMatrix::identity(gf3, 4));

    auto gf7 = Field::make(7);
    auto stacked7 = FieldMatrix::from_rows(gf7, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(invert(stacked7) ==
          FieldMatrix::from_rows(gf7, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, -1, 0}, {0, -1, 1, 1}}));

    CHECK(invert(FieldMatrix::identity(gf3, 3)) == FieldMatrix::identity(gf3, 3));
    CHECK_THROWS_AS(invert(FieldMatrix(gf3, 2, 2)), SingularError);
    CHECK_THROWS_AS(invert(FieldMatrix(gf3, 2, 3)), NotSquareError);

    std::mt19937 rng(11);
    for (const auto& [p, m] : kFields) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 50; ++trial) {
            auto a = random_invertible(f, 1 + static_cast<int>(rng() % 4), rng);
            REQUIRE(a * invert(a) == FieldMatrix::identity(f, a.rows()));
        }
    }
}

TEST_CASE("nullspace basics and rank-nullity") {
    auto gf3 = Field::make(3);
    auto a1 = FieldMatrix::from_rows(gf3, {{1, 0, 0, 0}, {0, 1, 1, 0}});
    auto ns = nullspace(a1);
    CHECK(ns.rows() == 2);
    CHECK((a1 * transpose(ns)).is_zero());
    // (0,0,0,1) annihilates A1 and must lie in the computed nullspace.
    auto y = FieldMatrix::from_rows(gf3, {{0, 0, 0, 1}});
    CHECK((a1 * transpose(y)).is_zero());
    CHECK(solve_left(y, ns).has_value());

    CHECK(nullspace(FieldMatrix::identity(gf3, 4)).rows() == 0);
    CHECK(nullspace(FieldMatrix::from_rows(gf3, {{0, 1}})) == FieldMatrix::from_rows(gf3, {{1, 0}}));

    std::mt19937 rng(13);
    for (const auto& [p, m] : kFields) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 1000; ++trial) {
            const int rows = 1 + static_cast<int>(rng() % 4);
            const int cols = 1 + static_cast<int>(rng() % 5);
            auto a = random_matrix(f, rows, cols, rng);
            auto basis = nullspace(a);
            REQUIRE(rank(a) + basis.rows() == cols);
            if (basis.rows() > 0) REQUIRE((a * transpose(basis)).is_zero());
        }
    }
}

TEST_CASE("solve_left reproduces the rebuild matrix") {
    auto gf3 = Field::make(3);
    auto target = FieldMatrix::from_rows(gf3, {{1, 0, 0, 0}, {0, 1, 1, 0}});
    auto gens = FieldMatrix::from_rows(gf3, {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}});
    auto c = solve_left(target, gens);
    REQUIRE(c.has_value());
    CHECK(*c * gens == target);
    // the printed rebuild matrix is also a valid solution
    auto printed = FieldMatrix::from_rows(gf3, {{-1, 0, 1}, {1, 1, 0}});
    CHECK(printed * gens == target);

    auto sq = FieldMatrix::from_rows(gf3, {{1, 2, 0}, {0, 1, 1}, {2, 0, 1}});
    auto c_id = solve_left(sq, sq);
    REQUIRE(c_id.has_value());
    CHECK(*c_id == FieldMatrix::identity(gf3, 3));

    auto outside = FieldMatrix::from_rows(gf3, {{0, 0, 0, 1}});
    CHECK_FALSE(solve_left(outside, gens).has_value());
    CHECK_THROWS_AS(solve_left(target, FieldMatrix(gf3, 2, 3)), DimensionMismatchError);

    std::mt19937 rng(17);
    for (const auto& [p, m] : kFields) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 1000; ++trial) {
            const int g = 1 + static_cast<int>(rng() % 4);
            const int cols = 1 + static_cast<int>(rng() % 5);
            const int t = 1 + static_cast<int>(rng() % 3);
            auto gens_r = random_matrix(f, g, cols, rng);
            auto c0 = random_matrix(f, t, g, rng);
            auto target_r = c0 * gens_r;
            auto solved = solve_left(target_r, gens_r);
            REQUIRE(solved.has_value());
            REQUIRE(*solved * gens_r == target_r);
        }
    }
}

TEST_CASE("rref enumeration matches the brute-force subspace census") {
    auto gf2 = Field::make(2);
    // Oracle: reduce all 2^8 matrices, keep the full-rank ones, dedupe.
    std::set<std::string> expected;
    for (int code = 0; code < 256; ++code) {
        FieldMatrix m(gf2, 2, 4);
        for (int bit = 0; bit < 8; ++bit)
            m(bit / 4, bit % 4) = static_cast<std::uint8_t>((code >> bit) & 1);
        if (rank(m) != 2) continue;
        expected.insert(to_string(rref(m).matrix));
    }
    CHECK(expected.size() == 35);

    RrefEnumerator en(gf2, 2, 4);
    REQUIRE(en.size() == 35);
    std::set<std::string> produced;
    for (unsigned long long i = 0; i < en.size(); ++i) {
        auto m = en.at(i);
        REQUIRE(rank(m) == 2);
        produced.insert(to_string(m));
    }
    CHECK(produced == expected);
}

TEST_CASE("rref enumeration is exhaustive and duplicate-free at (3, 2x5)") {
    auto gf3 = Field::make(3);
    RrefEnumerator en(gf3, 2, 5);
    REQUIRE(en.size() == gaussian_binomial_formula(3, 5, 2));
    std::set<std::string> seen;
    for (unsigned long long i = 0; i < en.size(); ++i) {
        auto m = en.at(i);
        REQUIRE(rank(m) == 2);
        REQUIRE(rref(m).matrix == m);
        seen.insert(to_string(m));
    }
    CHECK(seen.size() == en.size());
}

TEST_CASE("rref enumeration count equals the Gaussian binomial") {
    auto gf3 = Field::make(3);
    CHECK(RrefEnumerator(gf3, 1, 1).size() == 1);
    CHECK(RrefEnumerator(gf3, 1, 1).at(0) == FieldMatrix::from_rows(gf3, {{1}}));
    CHECK(RrefEnumerator(gf3, 2, 6).size() == 11011);
    CHECK(gaussian_binomial_formula(3, 6, 2) == 11011);

    for (int q : {2, 3, 4, 5}) {
        auto f = q == 4 ? Field::make(2, 2) : Field::make(q);
        for (int cols = 1; cols <= 6; ++cols)
            for (int rows = 1; rows <= cols; ++rows) {
                CAPTURE(q);
                CAPTURE(rows);
                CAPTURE(cols);
                REQUIRE(RrefEnumerator(f, rows, cols).size() ==
                        gaussian_binomial_formula(static_cast<unsigned long long>(q), cols, rows));
            }
    }
}
