#include "leonard/json_io.hpp"

namespace leonard::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& require_key(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

}  // namespace

json to_json(const FieldSpec& field) {
    if (field.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"p", field.modulus()}};
}

FieldSpec field_from_json(const json& j) {
    const json& kind = require_key(j, "kind");
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") {
        const json& p = require_key(j, "p");
        if (!p.is_number_unsigned()) malformed("field \"p\" must be a positive integer");
        return FieldSpec::prime(p.get<std::uint64_t>());
    }
    malformed("field kind must be \"rational\" or \"prime\"");
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const std::vector<Scalar>& values) {
    json out = json::array();
    for (const Scalar& s : values) out.push_back(s.to_string());
    return out;
}

Scalar scalar_from_json(const FieldSpec& field, const json& j) {
    if (!j.is_string()) malformed("scalars must be JSON strings, got " + j.dump());
    return Scalar::parse(field, j.get<std::string>());
}

std::vector<Scalar> scalars_from_json(const FieldSpec& field, const json& j) {
    if (!j.is_array()) malformed("expected an array of scalars");
    std::vector<Scalar> out;
    for (const json& item : j) out.push_back(scalar_from_json(field, item));
    return out;
}

json entries_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.order(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_entries(const FieldSpec& field, const json& rows) {
    if (!rows.is_array() || rows.empty()) malformed("matrix entries must be a nonempty array of rows");
    std::vector<std::vector<Scalar>> out;
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != rows.size()) malformed("matrix must be square");
        out.push_back(scalars_from_json(field, row));
    }
    return Matrix::from_rows(field, out);
}

json to_json(const Matrix& m) { return json{{"field", to_json(m.field())}, {"entries", entries_to_json(m)}}; }

Matrix matrix_from_json(const json& j) {
    const FieldSpec field = field_from_json(require_key(j, "field"));
    return matrix_from_entries(field, require_key(j, "entries"));
}

json array_body(const ParameterArray& p) {
    return json{{"d", p.d()},
                {"theta", to_json(p.theta())},
                {"theta_star", to_json(p.theta_star())},
                {"varphi", to_json(p.varphi())},
                {"phi", to_json(p.phi())}};
}

json to_json(const ParameterArray& p) {
    json out = array_body(p);
    out["field"] = to_json(p.field());
    return out;
}

ParameterArray array_from_body(const FieldSpec& field, const json& j) {
    const json& d = require_key(j, "d");
    if (!d.is_number_unsigned()) malformed("\"d\" must be a nonnegative integer");
    auto theta = scalars_from_json(field, require_key(j, "theta"));
    auto theta_star = scalars_from_json(field, require_key(j, "theta_star"));
    auto varphi = scalars_from_json(field, require_key(j, "varphi"));
    auto phi = scalars_from_json(field, require_key(j, "phi"));
    const auto dd = d.get<std::size_t>();
    if (theta.size() != dd + 1) malformed("\"theta\" must have d+1 entries");
    try {
        return ParameterArray(field, std::move(theta), std::move(theta_star), std::move(varphi), std::move(phi));
    } catch (const Error& e) {
        malformed(e.detail());
    }
}

ParameterArray array_from_json(const json& j) {
    return array_from_body(field_from_json(require_key(j, "field")), j);
}

json to_json(const ValidationReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
        violations.push_back(json{{"condition", std::string(condition_name(v.condition))},
                                  {"index", v.index ? json(*v.index) : json(nullptr)},
                                  {"detail", v.detail},
                                  {"unevaluated", v.unevaluated}});
    }
    return json{{"valid", report.valid}, {"violations", std::move(violations)}};
}

json to_json(const CanonicalPair& pair) {
    return json{{"field", to_json(pair.a.field())},
                {"form", pair.form == CanonicalForm::LBUB ? "lbub" : "tdd"},
                {"a", entries_to_json(pair.a)},
                {"a_star", entries_to_json(pair.a_star)},
                {"source", array_body(pair.source)}};
}

json to_json(const RecognitionReport& report, const FieldSpec& field) {
    json arrays = json::array();
    for (const ParameterArray& p : report.arrays) arrays.push_back(array_body(p));
    return json{{"field", to_json(field)},
                {"accepted", report.accepted},
                {"arrays", std::move(arrays)},
                {"reject_reason", report.reject_reason ? json(std::string(reject_reason_name(*report.reject_reason)))
                                                       : json(nullptr)},
                {"detail", report.detail}};
}

json to_json(const TransitionData& data) {
    return json{{"field", to_json(data.source.field())},
                {"P", entries_to_json(data.p_mat)},
                {"P_star", entries_to_json(data.p_star_mat)},
                {"k", to_json(data.k)},
                {"k_star", to_json(data.k_star)},
                {"nu", to_json(data.nu)},
                {"source", array_body(data.source)}};
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

}  // namespace leonard::json_io
