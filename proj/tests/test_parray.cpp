#include <doctest.h>

#include <random>

#include "leonard/parray.hpp"
#include "support/generators.hpp"

using namespace leonard;
using leonard::testing::family_arrays;
using leonard::testing::random_nonzero;
using leonard::testing::random_scalar;
using leonard::testing::random_valid_array;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F13 = FieldSpec::prime(13);

std::vector<Scalar> ints(const FieldSpec& f, std::initializer_list<long> values) {
    std::vector<Scalar> out;
    for (long v : values) out.emplace_back(f, v);
    return out;
}

ParameterArray array(const FieldSpec& f, std::initializer_list<long> th, std::initializer_list<long> ths,
                     std::initializer_list<long> vp, std::initializer_list<long> ph) {
    return ParameterArray(f, ints(f, th), ints(f, ths), ints(f, vp), ints(f, ph));
}

bool has_violation(const ValidationReport& r, Condition c, std::optional<std::size_t> index = std::nullopt) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) {
        return v.condition == c && (!index || v.index == index);
    });
}

}  // namespace

TEST_CASE("validate examples") {
    const ParameterArray k2 = array(Q, {2, 0, -2}, {2, 0, -2}, {-4, -4}, {4, 4});
    CHECK(validate(k2).valid);
    CHECK(validate(array(Q, {5}, {7}, {}, {})).valid);

    const ParameterArray broken = array(Q, {2, 0, -2}, {2, 0, -2}, {0, -4}, {4, 4});
    const ValidationReport r = validate(broken);
    CHECK_FALSE(r.valid);
    CHECK(has_violation(r, Condition::I, 1));
}

TEST_CASE("validate reports unevaluated conditions when theta_0 = theta_d") {
    const ParameterArray p = array(Q, {1, 0, 1}, {2, 0, -2}, {-4, -4}, {4, 4});
    const ValidationReport r = validate(p);
    CHECK_FALSE(r.valid);
    CHECK(has_violation(r, Condition::II));
    CHECK_FALSE(has_violation(r, Condition::V));
    for (Condition c : {Condition::III, Condition::IV}) {
        const bool unevaluated = std::any_of(r.violations.begin(), r.violations.end(),
                                             [&](const Violation& v) { return v.condition == c && v.unevaluated; });
        CHECK(unevaluated);
    }
    const ValidationReport r3 = validate(array(Q, {1, 0, 2, 1}, {3, 1, -1, -3}, {1, 1, 1}, {1, 1, 1}));
    CHECK(std::any_of(r3.violations.begin(), r3.violations.end(),
                      [](const Violation& v) { return v.condition == Condition::V && v.unevaluated; }));
}

TEST_CASE("validate flags each condition") {
    // Repeated interior theta.
    CHECK(has_violation(validate(array(Q, {2, 0, 0, -2}, {3, 1, -1, -3}, {-6, -8, -6}, {6, 8, 6})), Condition::II));
    // varphi_2 off by one breaks (iii) at 2.
    ParameterArray k3 = krawtchouk_array(3, Q);
    std::vector<Scalar> vp = k3.varphi();
    vp[1] += Scalar::one(Q);
    const ValidationReport r3 = validate(ParameterArray(Q, k3.theta(), k3.theta_star(), vp, k3.phi()));
    CHECK(has_violation(r3, Condition::III, 2));
    // phi_1 off by one breaks (iv).
    std::vector<Scalar> ph = k3.phi();
    ph[0] += Scalar::one(Q);
    CHECK(has_violation(validate(ParameterArray(Q, k3.theta(), k3.theta_star(), k3.varphi(), ph)), Condition::IV, 1));
}

TEST_CASE("condition (v) at d = 3 and d = 4") {
    // theta arithmetic, theta* geometric: ratios 3 versus (2+4+... ) differ.
    const std::vector<Scalar> th = ints(Q, {0, 1, 2, 3});
    const std::vector<Scalar> ths = ints(Q, {1, 2, 4, 8});
    // Choose varphi, phi from (iii), (iv) so only (v) can fail.
    const Scalar phi1(Q, 5);
    const Scalar varphi1 = phi1 + (ths[1] - ths[0]) * (th[0] - th[3]);
    std::vector<Scalar> vp;
    std::vector<Scalar> ph;
    Scalar sum = Scalar::zero(Q);
    for (std::size_t i = 1; i <= 3; ++i) {
        sum += (th[i - 1] - th[3 - (i - 1)]) / (th[0] - th[3]);
        vp.push_back(phi1 * sum + (ths[i] - ths[0]) * (th[i - 1] - th[3]));
        ph.push_back(varphi1 * sum + (ths[i] - ths[0]) * (th[3 - i + 1] - th[0]));
    }
    REQUIRE(vp[0] == varphi1);
    const ValidationReport r = validate(ParameterArray(Q, th, ths, vp, ph));
    CHECK(has_violation(r, Condition::V));
    CHECK_FALSE(has_violation(r, Condition::III));
    CHECK_FALSE(has_violation(r, Condition::IV));

    // Krawtchouk passes at every diameter, including the ranges where (v) has one or more indices.
    for (std::size_t d = 0; d <= 8; ++d) CHECK(validate(krawtchouk_array(d, Q)).valid);
}

TEST_CASE("D4 examples") {
    const ParameterArray k2 = krawtchouk_array(2, Q);
    CHECK(d4_act(k2, {D4Gen::DDown}) == array(Q, {-2, 0, 2}, {2, 0, -2}, {4, 4}, {-4, -4}));
    CHECK(d4_act(k2, {D4Gen::Down, D4Gen::Down}) == k2);
    CHECK(d4_act(k2, {D4Gen::Star}) == k2);
    CHECK(d4_act(k2, {D4Gen::Down}) == array(Q, {2, 0, -2}, {-2, 0, 2}, {4, 4}, {-4, -4}));
    try {
        (void)d4_act(array(Q, {2, 0, -2}, {2, 0, -2}, {0, -4}, {4, 4}), {D4Gen::Star});
        FAIL("expected InvalidInput");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidInput);
    }
    CHECK(pair_arrays(array(Q, {5}, {7}, {}, {})).size() == 1);
    CHECK(pair_arrays(k2).size() == 4);
    CHECK(d4_orbit(k2).size() == 8);
}

TEST_CASE("affine examples") {
    const ParameterArray k2 = krawtchouk_array(2, Q);
    const Scalar one = Scalar::one(Q);
    const Scalar zero = Scalar::zero(Q);
    CHECK(affine(k2, one, zero, one, zero) == k2);
    CHECK(affine(krawtchouk_array(1, Q), Scalar(Q, 2), one, one, zero) == array(Q, {3, -1}, {1, -1}, {-4}, {4}));
    try {
        (void)affine(k2, zero, one, one, zero);
        FAIL("expected ZeroScale");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroScale);
    }
    CHECK_THROWS_AS(affine(k2, one, one, zero, zero), Error);
}

TEST_CASE("derived identities examples") {
    CHECK(derived_identities(krawtchouk_array(2, Q)));
    CHECK(recursion_identities(krawtchouk_array(2, Q)));
    CHECK_THROWS_AS(derived_identities(array(Q, {5}, {7}, {}, {})), Error);
    CHECK_THROWS_AS(derived_identities(array(Q, {2, 0, -2}, {2, 0, -2}, {-4, -3}, {4, 4})), Error);
}

TEST_CASE("vartheta") {
    const auto v = vartheta(ints(Q, {2, 0, -2}));
    CHECK(v == ints(Q, {0, 1, 1}));
    const auto w = vartheta(ints(Q, {3, 1, -1, -3}));
    CHECK(w[0].is_zero());
    CHECK(w[1].is_one());
}

TEST_CASE("krawtchouk family") {
    CHECK(krawtchouk_array(1, Q) == array(Q, {1, -1}, {1, -1}, {-2}, {2}));
    CHECK(krawtchouk_array(2, Q) == array(Q, {2, 0, -2}, {2, 0, -2}, {-4, -4}, {4, 4}));
    const FieldSpec f3 = FieldSpec::prime(3);
    CHECK(krawtchouk_array(0, f3) == array(f3, {0}, {0}, {}, {}));
    for (auto [p, d] : {std::pair<std::uint64_t, std::size_t>{3, 4}, {2, 1}, {5, 5}}) {
        try {
            (void)krawtchouk_array(d, FieldSpec::prime(p));
            FAIL("expected BadCharacteristic");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::BadCharacteristic);
        }
    }
}

TEST_CASE("krawtchouk arrays for p in (d, 2d] validate") {
    // Every factor of theta_i - theta_j and varphi_i lies below p once p > d.
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        const FieldSpec f = FieldSpec::prime(p);
        for (std::size_t d = (p + 1) / 2; d < p; ++d) {
            CAPTURE(p);
            CAPTURE(d);
            CHECK(validate(krawtchouk_array(d, f)).valid);
        }
    }
}

TEST_CASE("q-Racah family") {
    const FieldSpec f = Q;
    const QRacahParams zero{0, Scalar(f, 2), Scalar(f, 1), Scalar(f, 1), Scalar(f, 1), Scalar(f, 2)};
    CHECK(qracah_array(zero) == array(f, {3}, {3}, {}, {}));

    const ParameterArray p2 = qracah_array(qracah_rational_fixture(2));
    CHECK(validate(p2).valid);
    CHECK(p2.theta(0) == Scalar(f, 1) + Scalar(f, 3) * Scalar(f, 2));

    QRacahParams bad = qracah_rational_fixture(2);
    bad.q = Scalar(f, 1);
    bad.r2 = bad.s * bad.s_star / bad.r1;
    try {
        (void)qracah_array(bad);
        FAIL("expected ConstraintViolated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ConstraintViolated);
        CHECK(e.detail().find("q^i != 1") != std::string::npos);
    }
    QRacahParams unbalanced = qracah_rational_fixture(2);
    unbalanced.r2 += Scalar::one(f);
    CHECK_THROWS_AS(qracah_array(unbalanced), Error);

    for (std::size_t d = 1; d <= 8; ++d) CHECK(validate(qracah_array(qracah_rational_fixture(d))).valid);
    CHECK(validate(qracah_array(qracah_gf13_fixture())).valid);
}

TEST_CASE("properties on random valid arrays") {
    std::mt19937 rng(1234);
    for (const FieldSpec& f : {Q, F13}) {
        const auto pool = family_arrays(f);
        for (int trial = 0; trial < 60; ++trial) {
            const ParameterArray p = random_valid_array(rng, f, pool);
            REQUIRE(validate(p).valid);
            for (D4Gen g : {D4Gen::Star, D4Gen::Down, D4Gen::DDown}) CHECK(validate(d4_act(p, {g})).valid);
            CHECK(d4_relations_hold(p));
            const auto rel = pair_arrays(p);
            CHECK(rel.size() == (p.d() == 0 ? 1U : 4U));
            if (p.d() >= 1) {
                CHECK(derived_identities(p));
                CHECK(recursion_identities(p));
            }

            const Scalar a = random_nonzero(rng, f);
            const Scalar b = random_scalar(rng, f);
            const Scalar as = random_nonzero(rng, f);
            const Scalar bs = random_scalar(rng, f);
            const Scalar c = random_nonzero(rng, f);
            const Scalar e = random_scalar(rng, f);
            const Scalar cs = random_nonzero(rng, f);
            const Scalar es = random_scalar(rng, f);
            const ParameterArray twice = affine(affine(p, a, b, as, bs), c, e, cs, es);
            CHECK(twice == affine(p, c * a, c * b + e, cs * as, cs * bs + es));
            CHECK(validate(twice).valid);

            if (p.d() >= 1) {
                std::uniform_int_distribution<std::size_t> at(0, p.d() - 1);
                std::vector<Scalar> vp = p.varphi();
                vp[at(rng)] += random_nonzero(rng, f);
                CHECK_FALSE(validate(ParameterArray(f, p.theta(), p.theta_star(), vp, p.phi())).valid);
            }
        }
    }
}

TEST_CASE("construction checks lengths and fields") {
    CHECK_THROWS_AS(ParameterArray(Q, ints(Q, {1, 2}), ints(Q, {1}), {}, {}), Error);
    CHECK_THROWS_AS(ParameterArray(Q, ints(Q, {1, 2}), ints(Q, {1, 2}), ints(Q, {1, 2}), ints(Q, {1})), Error);
    CHECK_THROWS_AS(ParameterArray(Q, ints(F13, {1}), ints(Q, {1}), {}, {}), Error);
    CHECK_THROWS_AS(ParameterArray(Q, {}, {}, {}, {}), Error);
    const ParameterArray k2 = krawtchouk_array(2, Q);
    CHECK(k2.varphi(0).is_zero());
    CHECK(k2.varphi(3).is_zero());
    CHECK(k2.phi(0).is_zero());
    CHECK(k2.phi(3).is_zero());
    CHECK(k2.varphi(1) == Scalar(Q, -4));
}
