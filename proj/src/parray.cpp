#include "leonard/parray.hpp"

#include <algorithm>

namespace leonard {

namespace {

void require_field(const std::vector<Scalar>& values, const FieldSpec& field, const char* name) {
    for (const Scalar& v : values) {
        if (!(v.field() == field)) throw Error(Errc::FieldMismatch, std::string(name) + " entry outside " + field.to_string());
    }
}

template <class T>
std::vector<T> reversed(const std::vector<T>& v) {
    return {v.rbegin(), v.rend()};
}

// sum_{h=0}^{i-1} (x_h - x_{d-h}) / (x_0 - x_d); x_0 != x_d is the caller's job.
Scalar telescoping_sum(const std::vector<Scalar>& x, std::size_t i) {
    const std::size_t d = x.size() - 1;
    const Scalar denom = x[0] - x[d];
    Scalar sum = Scalar::zero(x[0].field());
    for (std::size_t h = 0; h < i; ++h) sum += (x[h] - x[d - h]) / denom;
    return sum;
}

void require_valid(const ParameterArray& p, const char* what) {
    if (!validate(p).valid) throw Error(Errc::InvalidInput, std::string(what) + " requires a valid parameter array");
}

}  // namespace

ParameterArray::ParameterArray(FieldSpec field, std::vector<Scalar> theta, std::vector<Scalar> theta_star,
                               std::vector<Scalar> varphi, std::vector<Scalar> phi)
    : field_(field), theta_(std::move(theta)), theta_star_(std::move(theta_star)), varphi_(std::move(varphi)),
      phi_(std::move(phi)) {
    if (theta_.empty()) throw Error(Errc::InvalidInput, "theta must have d+1 >= 1 entries");
    const std::size_t d = theta_.size() - 1;
    if (theta_star_.size() != d + 1 || varphi_.size() != d || phi_.size() != d) {
        throw Error(Errc::InvalidInput, "parameter array lengths must be d+1, d+1, d, d with d = " + std::to_string(d));
    }
    require_field(theta_, field_, "theta");
    require_field(theta_star_, field_, "theta_star");
    require_field(varphi_, field_, "varphi");
    require_field(phi_, field_, "phi");
}

Scalar ParameterArray::varphi(std::size_t j) const {
    if (j == 0 || j > d()) return Scalar::zero(field_);
    return varphi_[j - 1];
}

Scalar ParameterArray::phi(std::size_t j) const {
    if (j == 0 || j > d()) return Scalar::zero(field_);
    return phi_[j - 1];
}

bool operator==(const ParameterArray& lhs, const ParameterArray& rhs) {
    return lhs.field_ == rhs.field_ && lhs.theta_.size() == rhs.theta_.size() && lhs.theta_ == rhs.theta_ &&
           lhs.theta_star_ == rhs.theta_star_ && lhs.varphi_ == rhs.varphi_ && lhs.phi_ == rhs.phi_;
}

std::string_view condition_name(Condition c) noexcept {
    switch (c) {
        case Condition::I: return "I";
        case Condition::II: return "II";
        case Condition::III: return "III";
        case Condition::IV: return "IV";
        case Condition::V: return "V";
    }
    return "?";
}

ValidationReport validate(const ParameterArray& p) {
    ValidationReport report;
    auto fail = [&](Condition c, std::optional<std::size_t> index, std::string detail, bool unevaluated = false) {
        report.violations.push_back(Violation{c, index, std::move(detail), unevaluated});
    };
    const std::size_t d = p.d();
    const auto& th = p.theta();
    const auto& ths = p.theta_star();

    for (std::size_t i = 1; i <= d; ++i) {
        if (p.varphi(i).is_zero()) fail(Condition::I, i, "varphi_" + std::to_string(i) + " = 0");
        if (p.phi(i).is_zero()) fail(Condition::I, i, "phi_" + std::to_string(i) + " = 0");
    }

    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = i + 1; j <= d; ++j) {
            const std::string pair = std::to_string(i) + "," + std::to_string(j);
            if (th[i] == th[j]) fail(Condition::II, i, "theta_" + std::to_string(i) + " = theta_" + std::to_string(j) + " (" + pair + ")");
            if (ths[i] == ths[j]) fail(Condition::II, i, "theta*_" + std::to_string(i) + " = theta*_" + std::to_string(j) + " (" + pair + ")");
        }
    }

    if (d >= 1 && th[0] == th[d]) {
        fail(Condition::III, std::nullopt, "needs theta_0 != theta_d", true);
        fail(Condition::IV, std::nullopt, "needs theta_0 != theta_d", true);
        if (d >= 3) fail(Condition::V, std::nullopt, "needs theta_0 != theta_d", true);
        report.valid = report.violations.empty();
        return report;
    }

    for (std::size_t i = 1; i <= d; ++i) {
        const Scalar sum = telescoping_sum(th, i);
        const Scalar expect_varphi = p.phi(1) * sum + (ths[i] - ths[0]) * (th[i - 1] - th[d]);
        if (!(p.varphi(i) == expect_varphi)) {
            fail(Condition::III, i, "varphi_" + std::to_string(i) + " = " + p.varphi(i).to_string() + ", expected " +
                                        expect_varphi.to_string());
        }
        const Scalar expect_phi = p.varphi(1) * sum + (ths[i] - ths[0]) * (th[d - i + 1] - th[0]);
        if (!(p.phi(i) == expect_phi)) {
            fail(Condition::IV, i, "phi_" + std::to_string(i) + " = " + p.phi(i).to_string() + ", expected " +
                                       expect_phi.to_string());
        }
    }

    // (theta_{i-2} - theta_{i+1}) / (theta_{i-1} - theta_i) and its starred
    // twin must agree and be constant over 2 <= i <= d-1.
    std::optional<Scalar> reference;
    for (std::size_t i = 2; i + 1 <= d; ++i) {
        const Scalar den = th[i - 1] - th[i];
        const Scalar den_star = ths[i - 1] - ths[i];
        if (den.is_zero() || den_star.is_zero()) {
            fail(Condition::V, i, "zero denominator", true);
            continue;
        }
        const Scalar ratio = (th[i - 2] - th[i + 1]) / den;
        const Scalar ratio_star = (ths[i - 2] - ths[i + 1]) / den_star;
        if (!(ratio == ratio_star)) {
            fail(Condition::V, i, "ratios " + ratio.to_string() + " and " + ratio_star.to_string() + " differ");
        }
        if (!reference) {
            reference = ratio;
        } else if (!(*reference == ratio)) {
            fail(Condition::V, i, "ratio " + ratio.to_string() + " differs from " + reference->to_string() + " at i=2");
        }
    }

    report.valid = report.violations.empty();
    return report;
}

ParameterArray apply_generator(const ParameterArray& p, D4Gen g) {
    switch (g) {
        case D4Gen::Star:
            return ParameterArray(p.field(), p.theta_star(), p.theta(), p.varphi(), reversed(p.phi()));
        case D4Gen::Down:
            return ParameterArray(p.field(), p.theta(), reversed(p.theta_star()), reversed(p.phi()),
                                  reversed(p.varphi()));
        case D4Gen::DDown:
            return ParameterArray(p.field(), reversed(p.theta()), p.theta_star(), p.phi(), p.varphi());
    }
    throw Error(Errc::InvalidInput, "unknown D4 generator");
}

ParameterArray d4_act(const ParameterArray& p, const std::vector<D4Gen>& word) {
    require_valid(p, "d4_act");
    ParameterArray out = p;
    for (D4Gen g : word) out = apply_generator(out, g);
    return out;
}

std::vector<ParameterArray> d4_orbit(const ParameterArray& p) {
    using enum D4Gen;
    const std::vector<std::vector<D4Gen>> words = {
        {}, {Down}, {DDown}, {Down, DDown}, {Star}, {Down, Star}, {DDown, Star}, {Down, DDown, Star},
    };
    std::vector<ParameterArray> out;
    for (const auto& w : words) out.push_back(d4_act(p, w));
    return out;
}

const std::vector<D4Relation>& d4_relations() {
    using enum D4Gen;
    static const std::vector<D4Relation> relations = {
        {"star^2 = 1", {Star, Star}, {}},
        {"down^2 = 1", {Down, Down}, {}},
        {"ddown^2 = 1", {DDown, DDown}, {}},
        {"ddown star = star down", {DDown, Star}, {Star, Down}},
        {"down star = star ddown", {Down, Star}, {Star, DDown}},
        {"down ddown = ddown down", {Down, DDown}, {DDown, Down}},
        {"(down ddown)^2 = 1", {Down, DDown, Down, DDown}, {}},
        {"(star down)^4 = 1", {Star, Down, Star, Down, Star, Down, Star, Down}, {}},
    };
    return relations;
}

bool d4_relations_hold(const ParameterArray& p) {
    require_valid(p, "d4_relations_hold");
    return std::all_of(d4_relations().begin(), d4_relations().end(),
                       [&](const D4Relation& r) { return d4_act(p, r.lhs) == d4_act(p, r.rhs); });
}

std::vector<ParameterArray> pair_arrays(const ParameterArray& p) {
    using enum D4Gen;
    std::vector<ParameterArray> out;
    for (const auto& w : std::vector<std::vector<D4Gen>>{{}, {Down}, {DDown}, {Down, DDown}}) {
        ParameterArray candidate = d4_act(p, w);
        if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
    }
    return out;
}

ParameterArray affine(const ParameterArray& p, const Scalar& alpha, const Scalar& beta, const Scalar& alpha_star,
                      const Scalar& beta_star) {
    if (alpha.is_zero() || alpha_star.is_zero()) throw Error(Errc::ZeroScale, "affine scale must be nonzero");
    std::vector<Scalar> th;
    std::vector<Scalar> ths;
    std::vector<Scalar> vp;
    std::vector<Scalar> ph;
    for (const Scalar& t : p.theta()) th.push_back(alpha * t + beta);
    for (const Scalar& t : p.theta_star()) ths.push_back(alpha_star * t + beta_star);
    const Scalar both = alpha * alpha_star;
    for (const Scalar& v : p.varphi()) vp.push_back(both * v);
    for (const Scalar& v : p.phi()) ph.push_back(both * v);
    return ParameterArray(p.field(), std::move(th), std::move(ths), std::move(vp), std::move(ph));
}

bool derived_identities(const ParameterArray& p) {
    require_valid(p, "derived_identities");
    const std::size_t d = p.d();
    if (d == 0) throw Error(Errc::InvalidInput, "derived_identities requires d >= 1");
    const auto& th = p.theta();
    const auto& ths = p.theta_star();
    for (std::size_t i = 0; i <= d; ++i) {
        if (!((th[i] - th[d - i]) / (th[0] - th[d]) == (ths[i] - ths[d - i]) / (ths[0] - ths[d]))) return false;
    }
    for (std::size_t i = 1; i <= d; ++i) {
        const Scalar sum = telescoping_sum(th, i);
        if (!(p.varphi(i) == p.phi(d) * sum + (th[i] - th[0]) * (ths[i - 1] - ths[d]))) return false;
        if (!(p.phi(i) == p.varphi(d) * sum + (th[d - i] - th[d]) * (ths[i - 1] - ths[d]))) return false;
    }
    return true;
}

std::vector<Scalar> vartheta(const std::vector<Scalar>& theta_star) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < theta_star.size(); ++i) {
        out.push_back(i == 0 ? Scalar::zero(theta_star[0].field()) : telescoping_sum(theta_star, i));
    }
    return out;
}

bool recursion_identities(const ParameterArray& p) {
    require_valid(p, "recursion_identities");
    const std::size_t d = p.d();
    if (d == 0) throw Error(Errc::InvalidInput, "recursion_identities requires d >= 1");
    const auto& th = p.theta();
    const auto& ths = p.theta_star();
    const std::vector<Scalar> vt = vartheta(ths);
    auto from_start = [&](std::size_t i) { return (p.varphi(i) - p.phi(d) * vt[i]) / (ths[i - 1] - ths[d]); };
    auto from_end = [&](std::size_t i) { return (p.varphi(i + 1) - p.phi(1) * vt[i + 1]) / (ths[i + 1] - ths[0]); };
    for (std::size_t i = 1; i <= d; ++i) {
        if (!(th[i] == th[0] + from_start(i))) return false;
    }
    for (std::size_t i = 0; i + 1 <= d; ++i) {
        if (!(th[i] == th[d] + from_end(i))) return false;
    }
    for (std::size_t i = 1; i + 1 <= d; ++i) {
        if (!(from_end(i) == from_start(i) + th[0] - th[d])) return false;
    }
    return true;
}

ParameterArray krawtchouk_array(std::size_t d, const FieldSpec& field) {
    if (!characteristic_guard(field, d)) {
        throw Error(Errc::BadCharacteristic,
                    "Krawtchouk array of diameter " + std::to_string(d) + " needs characteristic 0 or an odd prime > d, got " +
                        field.to_string());
    }
    const long dd = static_cast<long>(d);
    std::vector<Scalar> th;
    std::vector<Scalar> vp;
    std::vector<Scalar> ph;
    for (long i = 0; i <= dd; ++i) th.emplace_back(field, dd - 2 * i);
    for (long i = 1; i <= dd; ++i) {
        vp.emplace_back(field, -2 * i * (dd - i + 1));
        ph.emplace_back(field, 2 * i * (dd - i + 1));
    }
    ParameterArray out(field, th, th, std::move(vp), std::move(ph));
    if (!validate(out).valid) {
        throw Error(Errc::BadCharacteristic, "Krawtchouk array degenerates over " + field.to_string());
    }
    return out;
}

void check_qracah_constraints(const QRacahParams& params) {
    const FieldSpec& field = params.q.field();
    auto violated = [](const std::string& clause) { throw Error(Errc::ConstraintViolated, clause); };
    for (const Scalar* s : {&params.q, &params.s, &params.s_star, &params.r1, &params.r2}) {
        if (!(s->field() == field)) throw Error(Errc::FieldMismatch, "q-Racah parameters must share a field");
        if (s->is_zero()) violated("q, s, s*, r1, r2 must be nonzero");
    }
    const long d = static_cast<long>(params.d);
    if (!(params.r1 * params.r2 == params.s * params.s_star * params.q.pow(d + 1))) violated("r1 r2 = s s* q^(d+1)");
    for (long i = 1; i <= d; ++i) {
        const Scalar qi = params.q.pow(i);
        const std::string at = " at i=" + std::to_string(i);
        if (qi.is_one()) violated("q^i != 1" + at);
        if ((params.r1 * qi).is_one()) violated("r1 q^i != 1" + at);
        if ((params.r2 * qi).is_one()) violated("r2 q^i != 1" + at);
        if ((params.s_star * qi / params.r1).is_one()) violated("s* q^i / r1 != 1" + at);
        if ((params.s_star * qi / params.r2).is_one()) violated("s* q^i / r2 != 1" + at);
    }
    for (long i = 2; i <= 2 * d; ++i) {
        const Scalar qi = params.q.pow(i);
        const std::string at = " at i=" + std::to_string(i);
        if ((params.s * qi).is_one()) violated("s q^i != 1" + at);
        if ((params.s_star * qi).is_one()) violated("s* q^i != 1" + at);
    }
}

ParameterArray qracah_array(const QRacahParams& params) {
    check_qracah_constraints(params);
    const FieldSpec& field = params.q.field();
    const Scalar one = Scalar::one(field);
    const Scalar& q = params.q;
    const long d = static_cast<long>(params.d);
    std::vector<Scalar> th;
    std::vector<Scalar> ths;
    std::vector<Scalar> vp;
    std::vector<Scalar> ph;
    for (long i = 0; i <= d; ++i) {
        th.push_back(q.pow(-i) + params.s * q.pow(i + 1));
        ths.push_back(q.pow(-i) + params.s_star * q.pow(i + 1));
    }
    for (long i = 1; i <= d; ++i) {
        const Scalar qi = q.pow(i);
        const Scalar common = q.pow(1 - 2 * i) * (one - qi) * (one - q.pow(i - d - 1));
        vp.push_back(common * (one - params.r1 * qi) * (one - params.r2 * qi));
        ph.push_back(common * (params.r1 - params.s_star * qi) * (params.r2 - params.s_star * qi) / params.s_star);
    }
    ParameterArray out(field, std::move(th), std::move(ths), std::move(vp), std::move(ph));
    if (!validate(out).valid) {
        throw Error(Errc::ConstraintViolated, "q-Racah parameters give an array that fails validation");
    }
    return out;
}

}  // namespace leonard
