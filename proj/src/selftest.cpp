#include "leonard/selftest.hpp"

#include <algorithm>
#include <functional>

#include "leonard/canon.hpp"
#include "leonard/json_io.hpp"
#include "leonard/recognize.hpp"
#include "leonard/transition.hpp"

namespace leonard {

namespace {

bool same_set(const std::vector<ParameterArray>& got, const std::vector<ParameterArray>& want) {
    if (got.size() != want.size()) return false;
    return std::all_of(want.begin(), want.end(),
                       [&](const ParameterArray& p) { return std::find(got.begin(), got.end(), p) != got.end(); });
}

std::vector<ParameterArray> expected_tdd(const ParameterArray& p) {
    if (p.d() == 0) return {p};
    return {p, apply_generator(p, D4Gen::DDown)};
}

bool check_validate(const ParameterArray& p) { return validate(p).valid; }

bool check_lbub(const ParameterArray& p) {
    const CanonicalPair pair = lb_ub(p);
    const RecognitionReport r = recognize_lbub(pair.a, pair.a_star);
    return r.accepted && r.arrays.size() == 1 && r.arrays.front() == p;
}

bool check_tdd(const ParameterArray& p) {
    const CanonicalPair pair = td_d(p);
    const RecognitionReport r = recognize_tdd(pair.a, pair.a_star);
    return r.accepted && same_set(r.arrays, expected_tdd(p));
}

bool check_oracle(const ParameterArray& p) {
    const CanonicalPair tdd = td_d(p);
    const CanonicalPair lbub = lb_ub(p);
    return verify_leonard_oracle(tdd.a, tdd.a_star, p.theta(), p.theta_star()) &&
           verify_leonard_oracle(lbub.a, lbub.a_star, p.theta(), p.theta_star());
}

bool check_transition(const ParameterArray& p) {
    const TransitionData t = transition_matrices(p);
    const std::size_t n = p.d() + 1;
    const Scalar one = Scalar::one(p.field());
    for (std::size_t i = 0; i < n; ++i) {
        if (!(t.p_mat(i, 0) == one) || !(t.p_star_mat(i, 0) == one)) return false;
    }
    return t.p_mat * t.p_star_mat == Matrix::identity(p.field(), n).scaled(t.nu) && intertwine_check(p);
}

bool check_json(const ParameterArray& p) {
    const std::string text = json_io::emit(json_io::to_json(p));
    const ParameterArray back = json_io::array_from_json(json_io::parse(text));
    return back == p && json_io::emit(json_io::to_json(back)) == text;
}

ParameterArray corrupted(const ParameterArray& p) {
    std::vector<Scalar> vp = p.varphi();
    if (!vp.empty()) vp.front() += Scalar::one(p.field());
    return ParameterArray(p.field(), p.theta(), p.theta_star(), std::move(vp), p.phi());
}

}  // namespace

QRacahParams qracah_rational_fixture(std::size_t d) {
    const FieldSpec q = FieldSpec::rational();
    return QRacahParams{d, Scalar(q, 2), Scalar(q, 3), Scalar(q, 5), Scalar(q, 3),
                        Scalar(q, 5) * Scalar(q, 2).pow(static_cast<long>(d) + 1)};
}

QRacahParams qracah_gf13_fixture() {
    const FieldSpec f = FieldSpec::prime(13);
    return QRacahParams{4, Scalar(f, 2), Scalar(f, 1), Scalar(f, 2), Scalar(f, 1), Scalar(f, 12)};
}

std::vector<Fixture> builtin_fixtures() {
    std::vector<Fixture> out;
    for (const FieldSpec& field : {FieldSpec::rational(), FieldSpec::prime(13)}) {
        for (std::size_t d = 1; d <= 6; ++d) {
            out.push_back({"krawtchouk d=" + std::to_string(d) + " over " + field.to_string(), krawtchouk_array(d, field)});
        }
    }
    out.push_back({"qracah d=4 over Q", qracah_array(qracah_rational_fixture(4))});
    out.push_back({"qracah d=4 over GF(13)", qracah_array(qracah_gf13_fixture())});
    return out;
}

bool SelftestSummary::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const InvariantResult& r) { return r.pass; });
}

SelftestSummary roundtrip_selftest(bool corrupt) {
    const std::vector<std::pair<std::string, std::function<bool(const ParameterArray&)>>> invariants = {
        {"validate", check_validate},
        {"lbub_roundtrip", check_lbub},
        {"tdd_roundtrip", check_tdd},
        {"oracle", check_oracle},
        {"d4_relations", d4_relations_hold},
        {"derived_identities", derived_identities},
        {"recursion_identities", recursion_identities},
        {"transition", check_transition},
        {"json_roundtrip", check_json},
    };
    std::vector<Fixture> fixtures = builtin_fixtures();
    if (corrupt) fixtures.front().array = corrupted(fixtures.front().array);

    SelftestSummary summary;
    for (const Fixture& fx : fixtures) {
        for (const auto& [name, check] : invariants) {
            InvariantResult r{fx.name, name, false, {}};
            try {
                r.pass = check(fx.array);
            } catch (const Error& e) {
                r.detail = e.what();
            }
            summary.results.push_back(std::move(r));
        }
    }
    return summary;
}

}  // namespace leonard
