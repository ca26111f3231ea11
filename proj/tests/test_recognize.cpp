#include <doctest.h>

#include <random>

#include "leonard/canon.hpp"
#include "leonard/recognize.hpp"
#include "support/brute_oracle.hpp"
#include "support/generators.hpp"

using namespace leonard;
using leonard::testing::brute_is_leonard_pair;
using leonard::testing::family_arrays;
using leonard::testing::random_nonzero;
using leonard::testing::random_valid_array;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F13 = FieldSpec::prime(13);

Scalar q(const char* text) { return Scalar::parse(Q, text); }

const Matrix kraw_a = Matrix::from_ints(Q, {{0, 2, 0}, {1, 0, 1}, {0, 2, 0}});
const Matrix kraw_as = Matrix::from_ints(Q, {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});

bool same_set(const std::vector<ParameterArray>& got, const std::vector<ParameterArray>& want) {
    if (got.size() != want.size()) return false;
    return std::all_of(want.begin(), want.end(),
                       [&](const ParameterArray& p) { return std::find(got.begin(), got.end(), p) != got.end(); });
}

std::vector<ParameterArray> expected_pair(const ParameterArray& p) {
    if (p.d() == 0) return {p};
    return {p, apply_generator(p, D4Gen::DDown)};
}

}  // namespace

TEST_CASE("recognize_lbub examples") {
    const Matrix a = Matrix::from_ints(Q, {{2, 0, 0}, {-1, 0, 0}, {0, -2, -2}});
    const Matrix as = Matrix::from_ints(Q, {{2, 4, 0}, {0, 0, 2}, {0, 0, -2}});
    const RecognitionReport r = recognize_lbub(a, as);
    REQUIRE(r.accepted);
    REQUIRE(r.arrays.size() == 1);
    CHECK(r.arrays[0] == krawtchouk_array(2, Q));
    CHECK_FALSE(r.reject_reason.has_value());

    const RecognitionReport z = recognize_lbub(Matrix::from_ints(Q, {{5}}), Matrix::from_ints(Q, {{7}}));
    REQUIRE(z.accepted);
    CHECK(z.arrays[0] == ParameterArray(Q, {q("5")}, {q("7")}, {}, {}));

    const RecognitionReport zero_off =
        recognize_lbub(Matrix::from_ints(Q, {{1, 0}, {0, -1}}), Matrix::from_ints(Q, {{1, -2}, {0, -1}}));
    CHECK_FALSE(zero_off.accepted);
    CHECK(zero_off.reject_reason == RejectReason::ZeroOffdiagonal);

    const RecognitionReport shape_bad = recognize_lbub(kraw_a, kraw_as);
    CHECK(shape_bad.reject_reason == RejectReason::BadShape);
    CHECK(recognize_lbub(kraw_as, Matrix::identity(Q, 2)).reject_reason == RejectReason::BadShape);

    // Bidiagonal but the assembled array fails (ii).
    const RecognitionReport invalid =
        recognize_lbub(Matrix::from_ints(Q, {{1, 0}, {1, 1}}), Matrix::from_ints(Q, {{1, 1}, {0, -1}}));
    CHECK(invalid.reject_reason == RejectReason::ValidationFailed);
}

TEST_CASE("compute_eps_alpha examples") {
    const RecognitionWork w = compute_eps_alpha(kraw_a, {q("2"), q("0"), q("-2")});
    CHECK(w.epsilon == q("1/2"));
    CHECK(w.alpha == q("0"));
    CHECK(w.vartheta == std::vector<Scalar>{q("0"), q("1"), q("1")});

    const RecognitionWork w1 = compute_eps_alpha(Matrix::from_ints(Q, {{0, 1}, {1, 0}}), {q("1"), q("-1")});
    CHECK(w1.epsilon == q("1"));
    CHECK(w1.alpha == q("0"));
    const RecognitionWork w1b = compute_eps_alpha(Matrix::from_ints(Q, {{0, 1}, {1, 7}}), {q("1"), q("-1")});
    CHECK(w1b.alpha == q("7"));

    try {
        (void)compute_eps_alpha(Matrix::from_ints(Q, {{3}}), {q("1")});
        FAIL("expected InvalidInput");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidInput);
    }
    try {
        (void)compute_eps_alpha(kraw_a, {q("2"), q("0"), q("2")});
        FAIL("expected RepeatedDualEigenvalue");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RepeatedDualEigenvalue);
    }
}

TEST_CASE("recognize_tdd examples") {
    const RecognitionReport r = recognize_tdd(kraw_a, kraw_as);
    REQUIRE(r.accepted);
    CHECK(same_set(r.arrays, expected_pair(krawtchouk_array(2, Q))));

    const RecognitionReport r1 =
        recognize_tdd(Matrix::from_ints(Q, {{0, 1}, {1, 0}}), Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
    REQUIRE(r1.accepted);
    CHECK(same_set(r1.arrays, expected_pair(krawtchouk_array(1, Q))));

    const RecognitionReport z = recognize_tdd(Matrix::from_ints(Q, {{5}}), Matrix::from_ints(Q, {{7}}));
    REQUIRE(z.accepted);
    CHECK(z.arrays.size() == 1);

    const RecognitionReport no_roots = recognize_tdd(kraw_a.with_entry(0, 1, q("3")), kraw_as);
    CHECK_FALSE(no_roots.accepted);
    CHECK(no_roots.reject_reason == RejectReason::QuadraticNoRootsInField);
}

TEST_CASE("recognize_tdd reject reasons") {
    CHECK(recognize_tdd(kraw_as, kraw_as.with_entry(0, 2, q("1"))).reject_reason == RejectReason::BadShape);
    CHECK(recognize_tdd(kraw_a.with_entry(0, 2, q("1")), kraw_as).reject_reason == RejectReason::BadShape);
    CHECK(recognize_tdd(kraw_a, Matrix::identity(Q, 3)).reject_reason == RejectReason::RepeatedDualEigenvalue);
    CHECK(recognize_tdd(kraw_a, Matrix::identity(Q, 2)).reject_reason == RejectReason::BadShape);

    // (A00 - A11)^2 + 4 A10 A01 = 0 at d = 1.
    const RecognitionReport dbl =
        recognize_tdd(Matrix::from_ints(Q, {{0, 1}, {-1, 2}}), Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
    CHECK(dbl.reject_reason == RejectReason::QuadraticDoubleRoot);

    // A zero off-diagonal entry where the array demands a nonzero product.
    const Matrix reducible = Matrix::from_ints(Q, {{1, 0}, {0, -1}});
    const RecognitionReport red = recognize_tdd(reducible, Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
    CHECK_FALSE(red.accepted);
}

TEST_CASE("verify_leonard_oracle examples") {
    CHECK(verify_leonard_oracle(kraw_a, kraw_as, {q("2"), q("0"), q("-2")}, {q("2"), q("0"), q("-2")}));
    CHECK(verify_leonard_oracle(Matrix::from_ints(Q, {{5}}), Matrix::from_ints(Q, {{7}}), {q("5")}, {q("7")}));
    CHECK_FALSE(verify_leonard_oracle(Matrix::from_ints(Q, {{1, 0}, {0, 2}}), Matrix::from_ints(Q, {{3, 0}, {0, 4}}),
                                      {q("1"), q("2")}, {q("3"), q("4")}));
    // A valid spectrum in an order that is not a path ordering.
    CHECK_FALSE(verify_leonard_oracle(kraw_a, kraw_as, {q("0"), q("2"), q("-2")}, {q("2"), q("0"), q("-2")}));
    CHECK_THROWS_AS(verify_leonard_oracle(kraw_a, kraw_as, {q("1"), q("0"), q("-2")}, {q("2"), q("0"), q("-2")}),
                    Error);
}

TEST_CASE("roundtrips and invariants on random arrays") {
    std::mt19937 rng(2718);
    for (const FieldSpec& f : {Q, F13}) {
        const auto pool = family_arrays(f);
        for (int trial = 0; trial < 60; ++trial) {
            const ParameterArray p = random_valid_array(rng, f, pool);
            CAPTURE(p.d());
            const CanonicalPair l = lb_ub(p);
            const RecognitionReport rl = recognize_lbub(l.a, l.a_star);
            REQUIRE(rl.accepted);
            CHECK(rl.arrays == std::vector<ParameterArray>{p});

            const CanonicalPair t = td_d(p);
            const RecognitionReport rt = recognize_tdd(t.a, t.a_star);
            REQUIRE(rt.accepted);
            CHECK(same_set(rt.arrays, expected_pair(p)));
            for (const ParameterArray& got : rt.arrays) {
                CHECK(verify_leonard_oracle(t.a, t.a_star, got.theta(), got.theta_star()));
            }

            const Scalar rs = *constant_row_sum(t.a);
            if (p.d() >= 1) {
                CHECK(((rt.arrays[0].theta(0) == rs && rt.arrays[1].theta(p.d()) == rs) ||
                       (rt.arrays[1].theta(0) == rs && rt.arrays[0].theta(p.d()) == rs)));
                const RecognitionWork w = compute_eps_alpha(t.a, p.theta_star());
                const Scalar ratio = w.alpha / w.epsilon;
                const Scalar a00 = t.a(0, 0);
                CHECK(p.theta(0) + p.theta(p.d()) == a00 + ratio);
                CHECK(p.theta(0) * p.theta(p.d()) == a00 * ratio - t.a(1, 0) * t.a(0, 1) / w.epsilon);
            }

            std::vector<Scalar> scales;
            for (std::size_t i = 0; i <= p.d(); ++i) scales.push_back(random_nonzero(rng, f));
            const Matrix conj = diag_conjugate(t.a, scales);
            const RecognitionReport rc = recognize_tdd(conj, t.a_star);
            REQUIRE(rc.accepted);
            CHECK(same_set(rc.arrays, rt.arrays));
        }
    }
}

TEST_CASE("recognition agrees with the brute-force oracle on perturbations") {
    std::mt19937 rng(161803);
    for (const FieldSpec& f : {Q, F5, F13}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t d = 2 + trial % 3;
            if (!f.is_rational() && f.modulus() <= d) continue;
            const CanonicalPair t = td_d(krawtchouk_array(d, f));
            std::uniform_int_distribution<std::size_t> row(0, d);
            const std::size_t i = row(rng);
            const std::size_t j = std::min(d, i + (rng() % 2));
            Scalar delta = f.is_rational() ? Scalar(f, static_cast<long>(rng() % 7) - 3) : random_nonzero(rng, f);
            if (delta.is_zero()) delta = Scalar::one(f);
            const Matrix a = rng() % 2 ? t.a.with_entry(i, j, t.a(i, j) + delta) : t.a.with_entry(j, i, t.a(j, i) + delta);
            const RecognitionReport r = recognize_tdd(a, t.a_star);
            CAPTURE(trial);
            CHECK(r.accepted == brute_is_leonard_pair(a, t.a_star));
            for (const ParameterArray& got : r.arrays) {
                CHECK(verify_leonard_oracle(a, t.a_star, got.theta(), got.theta_star()));
            }
        }
    }
}

TEST_CASE("brute-force oracle sanity") {
    CHECK(brute_is_leonard_pair(kraw_a, kraw_as));
    CHECK_FALSE(brute_is_leonard_pair(kraw_a.with_entry(0, 1, q("3")), kraw_as));
    CHECK_FALSE(brute_is_leonard_pair(Matrix::from_ints(Q, {{1, 0}, {0, 2}}), Matrix::from_ints(Q, {{3, 0}, {0, 4}})));
    const Matrix a5 = Matrix::from_ints(F5, {{0, 3, 0}, {1, 0, 1}, {0, 2, 0}});
    const Matrix as5 = Matrix::from_ints(F5, {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});
    // Characteristic polynomial lambda (lambda^2 - 5) = lambda^3 over GF(5).
    CHECK(testing::brute_spectrum(a5).size() == 1);
    CHECK_FALSE(brute_is_leonard_pair(a5, as5));
}
