#pragma once

#include "leonard/densemat.hpp"
#include "leonard/parray.hpp"

namespace leonard {

enum class CanonicalForm { LBUB, TDD };

/// A matrix realization of the Leonard system with parameter array `source`.
struct CanonicalPair {
    Matrix a;
    Matrix a_star;
    CanonicalForm form;
    ParameterArray source;
};

/// p^L: diagonal theta, unit subdiagonal. p^U: diagonal theta*, superdiagonal varphi.
/// Errc::InvalidInput unless p validates.
CanonicalPair lb_ub(const ParameterArray& p);

/// p^T (tridiagonal, constant row sum theta_0) and p^D = diag(theta*).
/// Errc::InvalidInput unless p validates.
CanonicalPair td_d(const ParameterArray& p);

// Entry formulas of p^T, shared with the tridiagonal recognizer. `i` follows
// the matrix indexing: diagonal i in 0..d, off-diagonal i in 1..d.
Scalar td_diagonal_entry(const ParameterArray& p, std::size_t i);
/// p^T_{i-1,i}
Scalar td_upper_entry(const ParameterArray& p, std::size_t i);
/// p^T_{i,i-1}
Scalar td_lower_entry(const ParameterArray& p, std::size_t i);
/// varphi_i phi_i times both theta*-product quotients: the value every
/// diagonal conjugate of p^T carries in A_{i,i-1} A_{i-1,i}.
Scalar td_cross_product(const ParameterArray& p, std::size_t i);

/// Lower bidiagonal a with unit subdiagonal and upper bidiagonal a_star.
bool is_lbub_canonical(const Matrix& a, const Matrix& a_star);
/// Tridiagonal a with a constant row sum, diagonal a_star with distinct entries.
bool is_tdd_canonical_shape(const Matrix& a, const Matrix& a_star);

/// p^T_{i,i-1} p^T_{i-1,i} against td_cross_product for every i; requires a
/// valid array with d >= 1.
bool cross_product_check(const ParameterArray& p);

}  // namespace leonard
