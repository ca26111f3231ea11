#include "leonard/transition.hpp"

#include <algorithm>

#include "leonard/canon.hpp"
#include "leonard/kernels.hpp"

namespace leonard {

namespace {

Scalar script_p_upto(const ParameterArray& p, std::size_t i, std::size_t j, std::size_t last) {
    const FieldSpec& f = p.field();
    const auto& th = p.theta();
    const auto& ths = p.theta_star();
    Scalar sum = Scalar::zero(f);
    Scalar numerator = Scalar::one(f);
    Scalar denominator = Scalar::one(f);
    for (std::size_t n = 0; n <= last; ++n) {
        if (n > 0) {
            numerator *= (th[i] - th[n - 1]) * (ths[j] - ths[n - 1]);
            denominator *= p.varphi(n);
        }
        sum += numerator / denominator;
    }
    return sum;
}

void require_valid(const ParameterArray& p, const char* what) {
    if (!validate(p).valid) throw Error(Errc::InvalidInput, std::string(what) + " requires a valid parameter array");
}

// prod_{h != j} (x_j - x_h)
Scalar product_except(const std::vector<Scalar>& x, std::size_t j) {
    Scalar out = Scalar::one(x[j].field());
    for (std::size_t h = 0; h < x.size(); ++h) {
        if (h != j) out *= x[j] - x[h];
    }
    return out;
}

}  // namespace

Scalar script_p(const ParameterArray& p, std::size_t i, std::size_t j) {
    return script_p_upto(p, i, j, std::min(i, j));
}

Scalar script_p_full(const ParameterArray& p, std::size_t i, std::size_t j) { return script_p_upto(p, i, j, p.d()); }

Matrix script_p_table(const ParameterArray& p) {
    const std::size_t n = p.d() + 1;
    return Matrix::from_entries(p.field(), n,
                                kernels::tabulate_parallel(n, [&](std::size_t i, std::size_t j) { return script_p(p, i, j); }));
}

Matrix script_p_table_serial(const ParameterArray& p) {
    const std::size_t n = p.d() + 1;
    return Matrix::from_entries(p.field(), n,
                                kernels::tabulate_serial(n, [&](std::size_t i, std::size_t j) { return script_p(p, i, j); }));
}

Weights weights(const ParameterArray& p) {
    const std::size_t d = p.d();
    const FieldSpec& f = p.field();
    const auto& th = p.theta();
    const auto& ths = p.theta_star();
    const Scalar base = product_except(ths, 0);
    const Scalar base_dual = product_except(th, 0);
    Weights w;
    Scalar varphi_prod = Scalar::one(f);
    Scalar phi_prod = Scalar::one(f);
    Scalar phi_rev_prod = Scalar::one(f);
    for (std::size_t j = 0; j <= d; ++j) {
        if (j > 0) {
            varphi_prod *= p.varphi(j);
            phi_prod *= p.phi(j);
            phi_rev_prod *= p.phi(d - j + 1);
        }
        w.k.push_back(varphi_prod / phi_prod * base / product_except(ths, j));
        w.k_star.push_back(varphi_prod / phi_rev_prod * base_dual / product_except(th, j));
    }
    // For d = 0 both products are empty and nu = 1.
    w.nu = base_dual * base / phi_prod;
    return w;
}

TransitionData transition_matrices(const ParameterArray& p) {
    require_valid(p, "transition_matrices");
    const std::size_t n = p.d() + 1;
    const Matrix table = script_p_table(p);
    Weights w = weights(p);
    Matrix pm = Matrix::generate(p.field(), n, [&](std::size_t i, std::size_t j) { return w.k[j] * table(i, j); });
    Matrix psm = Matrix::generate(p.field(), n, [&](std::size_t i, std::size_t j) { return w.k_star[j] * table(j, i); });
    return TransitionData{std::move(pm), std::move(psm), std::move(w.k), std::move(w.k_star), std::move(w.nu), p};
}

bool intertwine_check(const ParameterArray& p) {
    const TransitionData t = transition_matrices(p);
    const Matrix tri = td_d(p).a;
    const Matrix tri_dual = td_d(apply_generator(p, D4Gen::Star)).a;
    const Matrix diag_theta = Matrix::diagonal(p.theta());
    const Matrix diag_theta_star = Matrix::diagonal(p.theta_star());
    return diag_theta * t.p_mat == t.p_mat * tri && tri_dual * t.p_mat == t.p_mat * diag_theta_star &&
           tri * t.p_star_mat == t.p_star_mat * diag_theta && diag_theta_star * t.p_star_mat == t.p_star_mat * tri_dual;
}

Scalar pochhammer(const Scalar& a, std::size_t n) {
    Scalar out = Scalar::one(a.field());
    Scalar term = a;
    for (std::size_t k = 0; k < n; ++k) {
        out *= term;
        term += Scalar::one(a.field());
    }
    return out;
}

Scalar q_pochhammer(const Scalar& a, const Scalar& q, std::size_t n) {
    const Scalar one = Scalar::one(a.field());
    Scalar out = one;
    Scalar aq = a;
    for (std::size_t k = 0; k < n; ++k) {
        out *= one - aq;
        aq *= q;
    }
    return out;
}

Scalar hyper_2f1(const KrawtchoukParams& params, std::size_t i, std::size_t j) {
    const FieldSpec& f = params.field;
    const Scalar two(f, 2);
    const Scalar minus_i(f, -static_cast<long>(i));
    const Scalar minus_j(f, -static_cast<long>(j));
    const Scalar minus_d(f, -static_cast<long>(params.d));
    Scalar sum = Scalar::zero(f);
    for (std::size_t n = 0; n <= params.d; ++n) {
        const Scalar numer = pochhammer(minus_i, n) * pochhammer(minus_j, n) * two.pow(static_cast<long>(n));
        if (numer.is_zero()) continue;
        sum += numer / (pochhammer(minus_d, n) * pochhammer(Scalar::one(f), n));
    }
    return sum;
}

Scalar hyper_4phi3(const QRacahParams& params, std::size_t i, std::size_t j) {
    const Scalar& q = params.q;
    const long li = static_cast<long>(i);
    const long lj = static_cast<long>(j);
    const long ld = static_cast<long>(params.d);
    Scalar sum = Scalar::zero(q.field());
    for (std::size_t n = 0; n <= params.d; ++n) {
        const Scalar numer = q_pochhammer(q.pow(-li), q, n) * q_pochhammer(params.s * q.pow(li + 1), q, n) *
                             q_pochhammer(q.pow(-lj), q, n) * q_pochhammer(params.s_star * q.pow(lj + 1), q, n) *
                             q.pow(static_cast<long>(n));
        if (numer.is_zero()) continue;
        const Scalar denom = q_pochhammer(params.r1 * q, q, n) * q_pochhammer(params.r2 * q, q, n) *
                             q_pochhammer(q.pow(-ld), q, n) * q_pochhammer(q, q, n);
        sum += numer / denom;
    }
    return sum;
}

Weights krawtchouk_weights(const KrawtchoukParams& params) {
    const FieldSpec& f = params.field;
    Weights w;
    mpz_class binom;
    for (std::size_t j = 0; j <= params.d; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), params.d, j);
        w.k.push_back(Scalar::from_integer(f, binom));
    }
    w.k_star = w.k;
    w.nu = Scalar(f, 2).pow(static_cast<long>(params.d));
    return w;
}

Weights qracah_weights(const QRacahParams& params) {
    const Scalar& q = params.q;
    const Scalar one = Scalar::one(q.field());
    const long d = static_cast<long>(params.d);
    auto k_of = [&](const Scalar& s_self, const Scalar& s_other, std::size_t j) {
        const long lj = static_cast<long>(j);
        const Scalar numer = q_pochhammer(params.r1 * q, q, j) * q_pochhammer(params.r2 * q, q, j) *
                             q_pochhammer(q.pow(-d), q, j) * q_pochhammer(s_other * q, q, j) *
                             (one - s_other * q.pow(2 * lj + 1));
        const Scalar denom = s_self.pow(lj) * q.pow(lj) * q_pochhammer(q, q, j) *
                             q_pochhammer(s_other * q / params.r1, q, j) * q_pochhammer(s_other * q / params.r2, q, j) *
                             q_pochhammer(s_other * q.pow(d + 2), q, j) * (one - s_other * q);
        return numer / denom;
    };
    Weights w;
    for (std::size_t j = 0; j <= params.d; ++j) {
        w.k.push_back(k_of(params.s, params.s_star, j));
        w.k_star.push_back(k_of(params.s_star, params.s, j));
    }
    const auto ud = static_cast<std::size_t>(d);
    w.nu = q_pochhammer(params.s * q * q, q, ud) * q_pochhammer(params.s_star * q * q, q, ud) /
           (params.r1.pow(d) * q.pow(d) * q_pochhammer(params.s * q / params.r1, q, ud) *
            q_pochhammer(params.s_star * q / params.r1, q, ud));
    return w;
}

}  // namespace leonard
