#include "leonard/recognize.hpp"

#include "leonard/canon.hpp"
#include "leonard/kernels.hpp"

namespace leonard {

std::string_view reject_reason_name(RejectReason r) noexcept {
    switch (r) {
        case RejectReason::BadShape: return "BadShape";
        case RejectReason::RepeatedDualEigenvalue: return "RepeatedDualEigenvalue";
        case RejectReason::QuadraticNoRootsInField: return "QuadraticNoRootsInField";
        case RejectReason::QuadraticDoubleRoot: return "QuadraticDoubleRoot";
        case RejectReason::RecursionInconsistent: return "RecursionInconsistent";
        case RejectReason::ValidationFailed: return "ValidationFailed";
        case RejectReason::EntryMismatch: return "EntryMismatch";
        case RejectReason::ZeroOffdiagonal: return "ZeroOffdiagonal";
    }
    return "Unknown";
}

namespace {

RecognitionReport reject(RejectReason reason, std::string detail) {
    RecognitionReport out;
    out.reject_reason = reason;
    out.detail = std::move(detail);
    return out;
}

RecognitionReport accept(std::vector<ParameterArray> arrays) {
    RecognitionReport out;
    out.accepted = true;
    out.arrays = std::move(arrays);
    return out;
}

bool same_frame(const Matrix& a, const Matrix& a_star) {
    return a.order() == a_star.order() && a.field() == a_star.field();
}

std::vector<Scalar> diagonal_of(const Matrix& m) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < m.order(); ++i) out.push_back(m(i, i));
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> repeated_entry(const std::vector<Scalar>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j]) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

std::string first_violation(const ValidationReport& report) {
    if (report.violations.empty()) return {};
    const Violation& v = report.violations.front();
    return "condition " + std::string(condition_name(v.condition)) + ": " + v.detail;
}

}  // namespace

RecognitionReport recognize_lbub(const Matrix& a, const Matrix& a_star) {
    if (!same_frame(a, a_star)) return reject(RejectReason::BadShape, "matrices differ in order or field");
    if (!shape(a).lower_bidiagonal) return reject(RejectReason::BadShape, "A is not lower bidiagonal");
    if (!shape(a_star).upper_bidiagonal) return reject(RejectReason::BadShape, "A* is not upper bidiagonal");

    const FieldSpec& f = a.field();
    const std::size_t d = a.diameter();
    std::vector<Scalar> theta = diagonal_of(a);
    std::vector<Scalar> theta_star = diagonal_of(a_star);
    std::vector<Scalar> varphi;
    for (std::size_t i = 1; i <= d; ++i) {
        Scalar product = a(i, i - 1) * a_star(i - 1, i);
        if (product.is_zero()) {
            return reject(RejectReason::ZeroOffdiagonal, "A_{i,i-1} A*_{i-1,i} = 0 at i=" + std::to_string(i));
        }
        varphi.push_back(std::move(product));
    }
    if (d >= 1 && theta[0] == theta[d]) return reject(RejectReason::ValidationFailed, "theta_0 = theta_d");

    // phi_i = varphi_1 sum_{h<i} (theta_h - theta_{d-h})/(theta_0 - theta_d) + (theta*_i - theta*_0)(theta_{d-i+1} - theta_0)
    std::vector<Scalar> phi;
    Scalar sum = Scalar::zero(f);
    for (std::size_t i = 1; i <= d; ++i) {
        sum += (theta[i - 1] - theta[d - i + 1]) / (theta[0] - theta[d]);
        phi.push_back(varphi[0] * sum + (theta_star[i] - theta_star[0]) * (theta[d - i + 1] - theta[0]));
    }
    ParameterArray p(f, std::move(theta), std::move(theta_star), std::move(varphi), std::move(phi));
    ValidationReport report = validate(p);
    if (!report.valid) return reject(RejectReason::ValidationFailed, first_violation(report));
    return accept({std::move(p)});
}

RecognitionWork compute_eps_alpha(const Matrix& a, const std::vector<Scalar>& ts) {
    const std::size_t d = a.diameter();
    if (d == 0) throw Error(Errc::InvalidInput, "epsilon and alpha need d >= 1");
    if (ts.size() != d + 1) throw Error(Errc::SizeMismatch, "theta_star needs d+1 entries");
    if (auto rep = repeated_entry(ts)) {
        throw Error(Errc::RepeatedDualEigenvalue,
                    "theta*_" + std::to_string(rep->first) + " = theta*_" + std::to_string(rep->second));
    }
    const FieldSpec& f = a.field();
    RecognitionWork work;
    work.vartheta = vartheta(ts);
    if (d == 1) {
        work.epsilon = Scalar::one(f);
        work.alpha = a(1, 1);
        return work;
    }
    Scalar eps = Scalar::one(f);
    for (std::size_t h = 2; h <= d; ++h) eps *= (ts[1] - ts[h]) / (ts[0] - ts[h]);
    work.epsilon = eps;
    const Scalar shared = (ts[0] - ts[1]) / (ts[0] - ts[d]);
    const Scalar span = ts[0] - ts[2];
    work.alpha = a(1, 1) * (ts[1] - ts[2]) / span - a(0, 0) * (ts[1] - ts[d]) / span * shared +
                 a(d, d) * (ts[d - 1] - ts[d]) / span * shared;
    return work;
}

EndpointQuadratic endpoint_quadratic(const Matrix& a, const RecognitionWork& work) {
    const Scalar shifted = work.alpha / work.epsilon;
    return EndpointQuadratic{-(a(0, 0) + shifted), a(0, 0) * shifted - a(1, 0) * a(0, 1) / work.epsilon};
}

RecognitionReport assemble_from_endpoints(const Matrix& a, const std::vector<Scalar>& ts, const RecognitionWork& work,
                                          const Scalar& theta_0, const Scalar& theta_d) {
    const std::size_t d = a.diameter();
    const FieldSpec& f = a.field();
    if (d == 0) throw Error(Errc::InvalidInput, "endpoint assembly needs d >= 1");
    if (theta_0 == theta_d) return reject(RejectReason::QuadraticDoubleRoot, "theta_0 = theta_d");
    const auto& vt = work.vartheta;

    const Scalar varphi_1 = (a(0, 0) - theta_0) * (ts[0] - ts[1]);
    const Scalar varphi_d = (a(d, d) - theta_d) * (ts[d] - ts[d - 1]);
    const Scalar phi_1 = (a(0, 0) - theta_d) * (ts[0] - ts[1]);
    const Scalar phi_d = (a(d, d) - theta_0) * (ts[d] - ts[d - 1]);

    // varphi indexed 1..d here; slot 0 unused.
    std::vector<Scalar> varphi(d + 1, Scalar::zero(f));
    varphi[1] = varphi_1;
    auto from_start = [&](std::size_t i) { return (varphi[i] - phi_d * vt[i]) / (ts[i - 1] - ts[d]); };
    for (std::size_t i = 1; i + 1 <= d; ++i) {
        const Scalar next = phi_1 * vt[i + 1] + (ts[i + 1] - ts[0]) * (from_start(i) + theta_0 - theta_d);
        if (i + 1 < d) {
            varphi[i + 1] = next;
        } else if (!(next == varphi_d)) {
            return reject(RejectReason::RecursionInconsistent,
                          "recursion gives varphi_d = " + next.to_string() + ", endpoint formula gives " + varphi_d.to_string());
        }
    }
    if (d == 1 && (!(varphi_1 == varphi_d) || !(phi_1 == phi_d))) {
        return reject(RejectReason::RecursionInconsistent, "endpoint formulas disagree at d = 1");
    }
    varphi[d] = varphi_d;

    std::vector<Scalar> theta(d + 1, Scalar::zero(f));
    theta[0] = theta_0;
    theta[d] = theta_d;
    for (std::size_t i = 1; i < d; ++i) theta[i] = theta_0 + from_start(i);

    std::vector<Scalar> phi(d + 1, Scalar::zero(f));
    phi[1] = phi_1;
    phi[d] = phi_d;
    Scalar sum = Scalar::zero(f);
    for (std::size_t i = 1; i < d; ++i) {
        sum += (theta[i - 1] - theta[d - i + 1]) / (theta[0] - theta[d]);
        if (i >= 2) phi[i] = varphi_1 * sum + (ts[i] - ts[0]) * (theta[d - i + 1] - theta[0]);
    }

    ParameterArray p(f, std::move(theta), ts, {varphi.begin() + 1, varphi.end()}, {phi.begin() + 1, phi.end()});
    ValidationReport report = validate(p);
    if (!report.valid) return reject(RejectReason::ValidationFailed, first_violation(report));

    for (std::size_t i = 0; i <= d; ++i) {
        if (!(a(i, i) == td_diagonal_entry(p, i))) {
            return reject(RejectReason::EntryMismatch, "diagonal entry " + std::to_string(i));
        }
    }
    for (std::size_t i = 1; i <= d; ++i) {
        if (!(a(i, i - 1) * a(i - 1, i) == td_cross_product(p, i))) {
            return reject(RejectReason::EntryMismatch, "off-diagonal product at i=" + std::to_string(i));
        }
    }
    return accept({std::move(p)});
}

RecognitionReport recognize_tdd(const Matrix& a, const Matrix& a_star) {
    if (!same_frame(a, a_star)) return reject(RejectReason::BadShape, "matrices differ in order or field");
    if (!shape(a).tridiagonal) return reject(RejectReason::BadShape, "A is not tridiagonal");
    if (!shape(a_star).diagonal) return reject(RejectReason::BadShape, "A* is not diagonal");

    const FieldSpec& f = a.field();
    const std::size_t d = a.diameter();
    std::vector<Scalar> ts = diagonal_of(a_star);
    if (auto rep = repeated_entry(ts)) {
        return reject(RejectReason::RepeatedDualEigenvalue,
                      "A*_" + std::to_string(rep->first) + " = A*_" + std::to_string(rep->second));
    }
    if (d == 0) return accept({ParameterArray(f, {a(0, 0)}, ts, {}, {})});

    const RecognitionWork work = compute_eps_alpha(a, ts);
    const EndpointQuadratic quad = endpoint_quadratic(a, work);
    const QuadraticRoots roots = solve_quadratic_in_field(Scalar::one(f), quad.linear, quad.constant);
    if (roots.roots.empty()) {
        return reject(RejectReason::QuadraticNoRootsInField, "endpoint quadratic has no roots in " + f.to_string());
    }
    if (roots.double_root) return reject(RejectReason::QuadraticDoubleRoot, "endpoint quadratic has a double root");

    const Scalar& r0 = roots.roots[0];
    const Scalar& r1 = roots.roots[1];
    std::vector<RecognitionReport> attempts(2);
    kernels::parallel_for(2, [&](std::size_t k) {
        attempts[k] = k == 0 ? assemble_from_endpoints(a, ts, work, r0, r1) : assemble_from_endpoints(a, ts, work, r1, r0);
    });

    std::vector<ParameterArray> arrays;
    for (auto& attempt : attempts) {
        for (auto& p : attempt.arrays) arrays.push_back(std::move(p));
    }
    if (arrays.empty()) return attempts.front();
    return accept(std::move(arrays));
}

bool verify_leonard_oracle(const Matrix& a, const Matrix& a_star, const std::vector<Scalar>& theta,
                           const std::vector<Scalar>& theta_star) {
    if (!same_frame(a, a_star)) throw Error(Errc::SizeMismatch, "A and A* must share order and field");
    const std::vector<Matrix> e = primitive_idempotents(a, theta);
    const std::vector<Matrix> e_star = primitive_idempotents(a_star, theta_star);
    const std::size_t n = a.order();

    auto pattern_holds = [n](const std::vector<Matrix>& idem, const Matrix& other) {
        std::vector<char> ok(n * n, 1);
        kernels::parallel_for(n * n, [&](std::size_t idx) {
            const std::size_t i = idx / n;
            const std::size_t j = idx % n;
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap == 0) return;
            const bool zero = kernels::multiply_serial(kernels::multiply_serial(idem[i], other), idem[j]).is_zero();
            ok[idx] = gap > 1 ? zero : !zero;
        });
        for (char c : ok) {
            if (c == 0) return false;
        }
        return true;
    };
    return pattern_holds(e, a_star) && pattern_holds(e_star, a);
}

}  // namespace leonard
