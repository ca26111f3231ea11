#include "leonard/densemat.hpp"

#include <string>

#include "leonard/kernels.hpp"

namespace leonard {

Matrix::Matrix(const FieldSpec& field, std::size_t order)
    : field_(field), order_(order), entries_(order * order, Scalar::zero(field)) {
    if (order == 0) throw Error(Errc::InvalidInput, "matrix order must be positive");
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t order) {
    Matrix out(field, order);
    for (std::size_t i = 0; i < order; ++i) out.entries_[i * order + i] = Scalar::one(field);
    return out;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
    if (entries.empty()) throw Error(Errc::InvalidInput, "empty diagonal");
    Matrix out(entries.front().field(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i].field() == out.field_)) throw Error(Errc::FieldMismatch, "diagonal entries");
        out.entries_[i * out.order_ + i] = entries[i];
    }
    return out;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows) {
    Matrix out(field, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw Error(Errc::SizeMismatch, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                                " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (!(rows[i][j].field() == field)) throw Error(Errc::FieldMismatch, "matrix entry");
            out.entries_[i * out.order_ + j] = rows[i][j];
        }
    }
    return out;
}

Matrix Matrix::from_ints(const FieldSpec& field, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Scalar>> scalars;
    for (const auto& row : rows) {
        auto& out = scalars.emplace_back();
        for (long v : row) out.emplace_back(field, v);
    }
    return from_rows(field, scalars);
}

Matrix Matrix::from_entries(const FieldSpec& field, std::size_t order, std::vector<Scalar> entries) {
    if (entries.size() != order * order) throw Error(Errc::SizeMismatch, "entry count does not match order");
    Matrix out(field, order);
    for (const Scalar& s : entries) {
        if (!(s.field() == field)) throw Error(Errc::FieldMismatch, "matrix entry");
    }
    out.entries_ = std::move(entries);
    return out;
}

Matrix Matrix::generate(const FieldSpec& field, std::size_t order,
                        const std::function<Scalar(std::size_t, std::size_t)>& entry) {
    Matrix out(field, order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) out.entries_[i * order + j] = entry(i, j);
    }
    return out;
}

Matrix Matrix::with_entry(std::size_t row, std::size_t col, const Scalar& value) const {
    if (row >= order_ || col >= order_) throw Error(Errc::SizeMismatch, "entry index out of range");
    if (!(value.field() == field_)) throw Error(Errc::FieldMismatch, "replacement entry");
    Matrix out = *this;
    out.entries_[row * order_ + col] = value;
    return out;
}

Matrix Matrix::scaled(const Scalar& factor) const {
    Matrix out = *this;
    for (Scalar& s : out.entries_) s *= factor;
    return out;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : entries_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
    if (!(lhs.field_ == rhs.field_) || lhs.order_ != rhs.order_) return false;
    return lhs.entries_ == rhs.entries_;
}

ShapeReport shape(const Matrix& m) {
    const std::size_t n = m.order();
    bool nonzero_above_super = false;
    bool nonzero_below_sub = false;
    bool nonzero_super = false;
    bool nonzero_sub = false;
    bool all_super = true;
    bool all_sub = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool zero = m(i, j).is_zero();
            if (j > i + 1 && !zero) nonzero_above_super = true;
            if (i > j + 1 && !zero) nonzero_below_sub = true;
            if (j == i + 1) {
                nonzero_super = nonzero_super || !zero;
                all_super = all_super && !zero;
            }
            if (i == j + 1) {
                nonzero_sub = nonzero_sub || !zero;
                all_sub = all_sub && !zero;
            }
        }
    }
    ShapeReport report;
    report.tridiagonal = !nonzero_above_super && !nonzero_below_sub;
    report.lower_bidiagonal = report.tridiagonal && !nonzero_super;
    report.upper_bidiagonal = report.tridiagonal && !nonzero_sub;
    report.diagonal = report.lower_bidiagonal && report.upper_bidiagonal;
    // A 1x1 matrix has no off-diagonal entries to be nonzero.
    report.irreducible_tridiagonal = report.tridiagonal && n > 1 && all_super && all_sub;
    return report;
}

std::optional<Scalar> constant_row_sum(const Matrix& m) {
    std::optional<Scalar> common;
    for (std::size_t i = 0; i < m.order(); ++i) {
        Scalar sum = Scalar::zero(m.field());
        for (std::size_t j = 0; j < m.order(); ++j) sum += m(i, j);
        if (!common) {
            common = sum;
        } else if (!(*common == sum)) {
            return std::nullopt;
        }
    }
    return common;
}

Matrix mat_ops(const Matrix& a, const Matrix& b, MatOp op) {
    if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
    if (a.order() != b.order()) {
        throw Error(Errc::SizeMismatch, std::to_string(a.order()) + " vs " + std::to_string(b.order()));
    }
    if (op == MatOp::Mul) return kernels::multiply(a, b);
    std::vector<Scalar> out(a.entries().begin(), a.entries().end());
    auto rhs = b.entries();
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (op == MatOp::Add) {
            out[k] += rhs[k];
        } else {
            out[k] -= rhs[k];
        }
    }
    return Matrix::from_entries(a.field(), a.order(), std::move(out));
}

Matrix diag_conjugate(const Matrix& a, std::span<const Scalar> scales) {
    if (scales.size() != a.order()) throw Error(Errc::SizeMismatch, "scale count does not match matrix order");
    for (const Scalar& s : scales) {
        if (s.is_zero()) throw Error(Errc::ZeroScale, "diagonal conjugation by a zero scale");
    }
    return Matrix::generate(a.field(), a.order(),
                            [&](std::size_t i, std::size_t j) { return scales[i] * a(i, j) / scales[j]; });
}

std::vector<Matrix> primitive_idempotents(const Matrix& m, std::span<const Scalar> eigenvalues) {
    const std::size_t n = m.order();
    const FieldSpec& field = m.field();
    if (eigenvalues.size() != n) throw Error(Errc::SizeMismatch, "need one eigenvalue per row");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (eigenvalues[i] == eigenvalues[j]) {
                throw Error(Errc::NotMultiplicityFree, "eigenvalues " + std::to_string(i) + " and " +
                                                           std::to_string(j) + " coincide");
            }
        }
    }
    const Matrix id = Matrix::identity(field, n);
    std::vector<Matrix> shifted;
    shifted.reserve(n);
    for (std::size_t j = 0; j < n; ++j) shifted.push_back(m - id.scaled(eigenvalues[j]));

    std::vector<Matrix> idempotents(n, id);
    kernels::parallel_for(n, [&](std::size_t i) {
        Matrix e = id;
        Scalar denom = Scalar::one(field);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            e = kernels::multiply_serial(e, shifted[j]);
            denom *= eigenvalues[i] - eigenvalues[j];
        }
        idempotents[i] = e.scaled(denom.inverse());
    });

    auto fail = [](const std::string& what) {
        throw Error(Errc::NotMultiplicityFree, what + " fails; the supplied eigenvalues are not the spectrum");
    };
    Matrix sum(field, n);
    Matrix weighted(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(m * idempotents[i] == idempotents[i].scaled(eigenvalues[i]))) fail("A E_i = theta_i E_i");
        for (std::size_t j = 0; j < n; ++j) {
            Matrix product = idempotents[i] * idempotents[j];
            if (i == j ? !(product == idempotents[i]) : !product.is_zero()) fail("E_i E_j = delta_ij E_i");
        }
        sum = sum + idempotents[i];
        weighted = weighted + idempotents[i].scaled(eigenvalues[i]);
    }
    if (!(sum == id)) fail("sum of E_i = I");
    if (!(weighted == m)) fail("A = sum theta_i E_i");
    return idempotents;
}

}  // namespace leonard
