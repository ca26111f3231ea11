#include "leonard/canon.hpp"

namespace leonard {

namespace {

void require_valid(const ParameterArray& p, const char* what) {
    if (!validate(p).valid) throw Error(Errc::InvalidInput, std::string(what) + " requires a valid parameter array");
}

// prod_{h in [from, to)} (x_k - x_h), skipping nothing; empty range gives 1.
Scalar diff_product(const std::vector<Scalar>& x, std::size_t k, std::size_t from, std::size_t to) {
    Scalar out = Scalar::one(x[k].field());
    for (std::size_t h = from; h < to; ++h) out *= x[k] - x[h];
    return out;
}

}  // namespace

CanonicalPair lb_ub(const ParameterArray& p) {
    require_valid(p, "lb_ub");
    const std::size_t n = p.d() + 1;
    const FieldSpec& f = p.field();
    Matrix lower = Matrix::generate(f, n, [&](std::size_t i, std::size_t j) {
        if (i == j) return p.theta(i);
        if (i == j + 1) return Scalar::one(f);
        return Scalar::zero(f);
    });
    Matrix upper = Matrix::generate(f, n, [&](std::size_t i, std::size_t j) {
        if (i == j) return p.theta_star(i);
        if (j == i + 1) return p.varphi(j);
        return Scalar::zero(f);
    });
    return CanonicalPair{std::move(lower), std::move(upper), CanonicalForm::LBUB, p};
}

Scalar td_diagonal_entry(const ParameterArray& p, std::size_t i) {
    const auto& ths = p.theta_star();
    Scalar out = p.theta(i);
    // theta*_{-1} and theta*_{d+1} never matter: their numerators are varphi_0 = varphi_{d+1} = 0.
    if (i > 0) out += p.varphi(i) / (ths[i] - ths[i - 1]);
    if (i < p.d()) out += p.varphi(i + 1) / (ths[i] - ths[i + 1]);
    return out;
}

Scalar td_upper_entry(const ParameterArray& p, std::size_t i) {
    const auto& ths = p.theta_star();
    return p.varphi(i) * diff_product(ths, i - 1, 0, i - 1) / diff_product(ths, i, 0, i);
}

Scalar td_lower_entry(const ParameterArray& p, std::size_t i) {
    const auto& ths = p.theta_star();
    return p.phi(i) * diff_product(ths, i, i + 1, p.d() + 1) / diff_product(ths, i - 1, i, p.d() + 1);
}

Scalar td_cross_product(const ParameterArray& p, std::size_t i) {
    const auto& ths = p.theta_star();
    const std::size_t d = p.d();
    const Scalar upper_quotient = diff_product(ths, i - 1, 0, i - 1) / diff_product(ths, i, 0, i);
    const Scalar lower_quotient = diff_product(ths, i, i + 1, d + 1) / diff_product(ths, i - 1, i, d + 1);
    return p.varphi(i) * p.phi(i) * upper_quotient * lower_quotient;
}

CanonicalPair td_d(const ParameterArray& p) {
    require_valid(p, "td_d");
    const std::size_t n = p.d() + 1;
    const FieldSpec& f = p.field();
    Matrix tri = Matrix::generate(f, n, [&](std::size_t i, std::size_t j) {
        if (i == j) return td_diagonal_entry(p, i);
        if (j == i + 1) return td_upper_entry(p, j);
        if (i == j + 1) return td_lower_entry(p, i);
        return Scalar::zero(f);
    });
    return CanonicalPair{std::move(tri), Matrix::diagonal(p.theta_star()), CanonicalForm::TDD, p};
}

bool is_lbub_canonical(const Matrix& a, const Matrix& a_star) {
    if (a.order() != a_star.order() || !(a.field() == a_star.field())) return false;
    if (!shape(a).lower_bidiagonal || !shape(a_star).upper_bidiagonal) return false;
    for (std::size_t i = 1; i < a.order(); ++i) {
        if (!a(i, i - 1).is_one()) return false;
    }
    return true;
}

bool is_tdd_canonical_shape(const Matrix& a, const Matrix& a_star) {
    if (a.order() != a_star.order() || !(a.field() == a_star.field())) return false;
    if (!shape(a).tridiagonal || !shape(a_star).diagonal) return false;
    if (!constant_row_sum(a)) return false;
    for (std::size_t i = 0; i < a_star.order(); ++i) {
        for (std::size_t j = i + 1; j < a_star.order(); ++j) {
            if (a_star(i, i) == a_star(j, j)) return false;
        }
    }
    return true;
}

bool cross_product_check(const ParameterArray& p) {
    require_valid(p, "cross_product_check");
    if (p.d() == 0) throw Error(Errc::InvalidInput, "cross_product_check requires d >= 1");
    const Matrix tri = td_d(p).a;
    for (std::size_t i = 1; i <= p.d(); ++i) {
        if (!(tri(i, i - 1) * tri(i - 1, i) == td_cross_product(p, i))) return false;
    }
    return true;
}

}  // namespace leonard
