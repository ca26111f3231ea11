#include <doctest.h>

#include <random>

#include "leonard/densemat.hpp"
#include "support/generators.hpp"

using namespace leonard;
using leonard::testing::random_nonzero;
using leonard::testing::random_scalar;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F13 = FieldSpec::prime(13);

Scalar q(const char* text) { return Scalar::parse(Q, text); }

const Matrix kraw = Matrix::from_ints(Q, {{0, 2, 0}, {1, 0, 1}, {0, 2, 0}});

Matrix random_matrix(std::mt19937& rng, const FieldSpec& f, std::size_t n) {
    return Matrix::generate(f, n, [&](std::size_t, std::size_t) { return random_scalar(rng, f); });
}

}  // namespace

TEST_CASE("shape examples") {
    const ShapeReport k = shape(kraw);
    CHECK(k.tridiagonal);
    CHECK(k.irreducible_tridiagonal);
    CHECK_FALSE(k.diagonal);
    CHECK_FALSE(k.lower_bidiagonal);
    CHECK_FALSE(k.upper_bidiagonal);

    const ShapeReport id = shape(Matrix::identity(Q, 3));
    CHECK(id.diagonal);
    CHECK(id.lower_bidiagonal);
    CHECK(id.upper_bidiagonal);
    CHECK(id.tridiagonal);
    CHECK_FALSE(id.irreducible_tridiagonal);

    const Matrix lower = Matrix::from_ints(Q, {{1, 0}, {0, 2}}).with_entry(0, 1, q("0")).with_entry(1, 0, q("5"));
    const ShapeReport l = shape(lower);
    CHECK(l.lower_bidiagonal);
    CHECK_FALSE(l.upper_bidiagonal);
    CHECK_FALSE(l.diagonal);

    const ShapeReport one = shape(Matrix::from_ints(Q, {{4}}));
    CHECK(one.diagonal);
    CHECK_FALSE(one.irreducible_tridiagonal);

    CHECK_FALSE(shape(Matrix::from_ints(Q, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})).tridiagonal);
}

TEST_CASE("constant row sum") {
    REQUIRE(constant_row_sum(kraw).has_value());
    CHECK(*constant_row_sum(kraw) == q("2"));
    CHECK(*constant_row_sum(Matrix::identity(Q, 2)) == q("1"));
    CHECK_FALSE(constant_row_sum(Matrix::from_ints(Q, {{1, 0}, {0, 2}})).has_value());
}

TEST_CASE("primitive idempotents examples") {
    const std::vector<Scalar> eigs{q("2"), q("0"), q("-2")};
    const auto units = primitive_idempotents(Matrix::diagonal(eigs), eigs);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(units[i] == Matrix::identity(Q, 3).with_entry(0, 0, q(i == 0 ? "1" : "0"))
                              .with_entry(1, 1, q(i == 1 ? "1" : "0"))
                              .with_entry(2, 2, q(i == 2 ? "1" : "0")));
    }

    const Matrix swap = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
    const auto e = primitive_idempotents(swap, std::vector<Scalar>{q("1"), q("-1")});
    CHECK(e[0] == Matrix::from_rows(Q, {{q("1/2"), q("1/2")}, {q("1/2"), q("1/2")}}));
    CHECK(e[1] == Matrix::from_rows(Q, {{q("1/2"), q("-1/2")}, {q("-1/2"), q("1/2")}}));

    const Matrix nil = Matrix::from_ints(Q, {{0, 1}, {0, 0}});
    try {
        (void)primitive_idempotents(nil, std::vector<Scalar>{q("0"), q("1")});
        FAIL("expected NotMultiplicityFree");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::NotMultiplicityFree);
    }
    CHECK_THROWS_AS(primitive_idempotents(swap, std::vector<Scalar>{q("1"), q("1")}), Error);
    CHECK_THROWS_AS(primitive_idempotents(kraw, std::vector<Scalar>{q("2"), q("0"), q("-1")}), Error);
}

TEST_CASE("matrix operations") {
    CHECK(Matrix::identity(Q, 3) * kraw == kraw);
    CHECK(kraw * Matrix::identity(Q, 3) == kraw);
    CHECK(kraw + kraw == kraw.scaled(q("2")));
    CHECK((kraw - kraw).is_zero());
    const std::vector<Scalar> ones(3, q("1"));
    CHECK(diag_conjugate(kraw, ones) == kraw);
    const std::vector<Scalar> s{q("1"), q("2")};
    CHECK(diag_conjugate(Matrix::from_ints(Q, {{0, 2}, {1, 0}}), s) == Matrix::from_ints(Q, {{0, 1}, {2, 0}}));
    try {
        (void)(kraw * Matrix::identity(Q, 2));
        FAIL("expected SizeMismatch");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::SizeMismatch);
    }
    CHECK_THROWS_AS(kraw + Matrix::identity(F13, 3), Error);
    try {
        (void)diag_conjugate(kraw, std::vector<Scalar>{q("1"), q("0"), q("1")});
        FAIL("expected ZeroScale");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::ZeroScale);
    }
    CHECK_THROWS_AS(Matrix::from_entries(Q, 2, std::vector<Scalar>(3, q("1"))), Error);
    CHECK_THROWS_AS(Matrix(Q, 0), Error);
    CHECK(kraw.diameter() == 2);
}

TEST_CASE("idempotent identities on random diagonalizable matrices") {
    std::mt19937 rng(4242);
    for (const FieldSpec& f : {Q, F13}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + trial % 5;
            // S diag(eigs) S^-1 with S unit upper triangular, so S^-1 is exact.
            std::vector<Scalar> eigs;
            while (eigs.size() < n) {
                const Scalar c = random_scalar(rng, f);
                if (std::find(eigs.begin(), eigs.end(), c) == eigs.end()) eigs.push_back(c);
            }
            Matrix s = Matrix::generate(f, n, [&](std::size_t i, std::size_t j) {
                if (i == j) return Scalar::one(f);
                return i < j ? random_scalar(rng, f) : Scalar::zero(f);
            });
            Matrix s_inv = Matrix::identity(f, n);
            Matrix nilp = Matrix::identity(f, n) - s;
            Matrix power = Matrix::identity(f, n);
            for (std::size_t k = 1; k < n; ++k) {
                power = power * nilp;
                s_inv = s_inv + power;
            }
            REQUIRE(s * s_inv == Matrix::identity(f, n));
            const Matrix a = s * Matrix::diagonal(eigs) * s_inv;
            const auto e = primitive_idempotents(a, eigs);
            Matrix total(f, n);
            Matrix recon(f, n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(a * e[i] == e[i].scaled(eigs[i]));
                for (std::size_t j = 0; j < n; ++j) CHECK(e[i] * e[j] == (i == j ? e[i] : Matrix(f, n)));
                total = total + e[i];
                recon = recon + e[i].scaled(eigs[i]);
            }
            CHECK(total == Matrix::identity(f, n));
            CHECK(recon == a);
        }
    }
}

TEST_CASE("diag_conjugate invariants") {
    std::mt19937 rng(31337);
    for (const FieldSpec& f : {Q, F13}) {
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 1 + trial % 6;
            const Matrix a = random_matrix(rng, f, n);
            std::vector<Scalar> scales;
            for (std::size_t i = 0; i < n; ++i) scales.push_back(random_nonzero(rng, f));
            const Matrix c = diag_conjugate(a, scales);
            const Matrix d = Matrix::diagonal(scales);
            std::vector<Scalar> inv;
            for (const Scalar& x : scales) inv.push_back(x.inverse());
            CHECK(c == d * a * Matrix::diagonal(inv));
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(c(i, i) == a(i, i));
                if (i > 0) CHECK(c(i, i - 1) * c(i - 1, i) == a(i, i - 1) * a(i - 1, i));
            }
        }
    }
}

TEST_CASE("shape flags are consistent") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const Matrix a = Matrix::generate(F13, n, [&](std::size_t i, std::size_t j) {
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap > 1 && rng() % 4 != 0) return Scalar::zero(F13);
            return rng() % 3 == 0 ? Scalar::zero(F13) : random_nonzero(rng, F13);
        });
        const ShapeReport s = shape(a);
        if (s.diagonal) CHECK((s.lower_bidiagonal && s.upper_bidiagonal));
        if (s.lower_bidiagonal || s.upper_bidiagonal) CHECK(s.tridiagonal);
        if (s.irreducible_tridiagonal) CHECK(s.tridiagonal);
    }
}
