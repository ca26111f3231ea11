#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "leonard/exactfield.hpp"

namespace leonard {

/// Dense (d+1)x(d+1) matrix over a FieldSpec, rows and columns indexed 0..d.
/// Values are immutable; every operation returns a fresh matrix.
class Matrix {
public:
    /// Zero matrix of the given order.
    Matrix(const FieldSpec& field, std::size_t order);

    static Matrix identity(const FieldSpec& field, std::size_t order);
    static Matrix diagonal(std::span<const Scalar> entries);
    static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows);
    /// Convenience for small integer fixtures.
    static Matrix from_ints(const FieldSpec& field, std::initializer_list<std::initializer_list<long>> rows);
    /// Row-major entries; Errc::SizeMismatch unless there are order^2 of them.
    static Matrix from_entries(const FieldSpec& field, std::size_t order, std::vector<Scalar> entries);
    static Matrix generate(const FieldSpec& field, std::size_t order,
                           const std::function<Scalar(std::size_t, std::size_t)>& entry);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t order() const noexcept { return order_; }
    /// The diameter d; the matrix is (d+1)x(d+1). Order must be positive.
    std::size_t diameter() const noexcept { return order_ - 1; }

    const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }
    std::span<const Scalar> entries() const noexcept { return entries_; }

    Matrix with_entry(std::size_t row, std::size_t col, const Scalar& value) const;
    Matrix scaled(const Scalar& factor) const;
    bool is_zero() const;

    friend bool operator==(const Matrix& lhs, const Matrix& rhs);

private:
    FieldSpec field_;
    std::size_t order_;
    std::vector<Scalar> entries_;
};

struct ShapeReport {
    bool diagonal = false;
    bool lower_bidiagonal = false;
    bool upper_bidiagonal = false;
    bool tridiagonal = false;
    /// Tridiagonal with every sub- and superdiagonal entry nonzero.
    bool irreducible_tridiagonal = false;
};

ShapeReport shape(const Matrix& m);

/// The common row sum, if every row has the same sum.
std::optional<Scalar> constant_row_sum(const Matrix& m);

enum class MatOp { Add, Sub, Mul };

/// Errc::SizeMismatch / Errc::FieldMismatch on incompatible operands.
Matrix mat_ops(const Matrix& a, const Matrix& b, MatOp op);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_ops(a, b, MatOp::Add); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return mat_ops(a, b, MatOp::Sub); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_ops(a, b, MatOp::Mul); }

/// D a D^{-1} with D = diag(scales). Errc::ZeroScale if a scale vanishes.
Matrix diag_conjugate(const Matrix& a, std::span<const Scalar> scales);

/// E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
///
/// The result is checked against A E_i = theta_i E_i, E_i E_j = delta_ij E_i,
/// sum E_i = I and A = sum theta_i E_i; any failure means `eigenvalues` is not
/// the exact spectrum of a multiplicity-free A and raises
/// Errc::NotMultiplicityFree. Repeated eigenvalues raise the same error.
std::vector<Matrix> primitive_idempotents(const Matrix& m, std::span<const Scalar> eigenvalues);

}  // namespace leonard
