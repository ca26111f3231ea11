#include "leonard/kernels.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "leonard/densemat.hpp"

namespace leonard::kernels {

namespace {

void check_operands(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "matrix product operands");
    if (a.order() != b.order()) throw Error(Errc::SizeMismatch, "matrix product operands");
}

Scalar dot_row_col(const Matrix& a, const Matrix& b, std::size_t i, std::size_t j) {
    Scalar acc = Scalar::zero(a.field());
    for (std::size_t k = 0; k < a.order(); ++k) {
        const Scalar& lhs = a(i, k);
        if (lhs.is_zero()) continue;
        acc += lhs * b(k, j);
    }
    return acc;
}

// Exceptions must not escape an OpenMP region; the first one is kept and
// rethrown after the loop joins.
class ErrorSlot {
public:
    template <class F>
    void guard(F&& body) noexcept {
        try {
            body();
        } catch (...) {
            std::lock_guard<std::mutex> lock(mutex_);
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
    check_operands(a, b);
    const std::size_t n = a.order();
    std::vector<Scalar> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = dot_row_col(a, b, i, j);
    }
    return Matrix::from_entries(a.field(), n, std::move(out));
}

Matrix multiply_parallel(const Matrix& a, const Matrix& b) {
    check_operands(a, b);
    const std::size_t n = a.order();
    std::vector<Scalar> out(n * n);
    ErrorSlot slot;
    const long total = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) {
        slot.guard([&] {
            const auto i = static_cast<std::size_t>(idx) / n;
            const auto j = static_cast<std::size_t>(idx) % n;
            out[static_cast<std::size_t>(idx)] = dot_row_col(a, b, i, j);
        });
    }
    slot.rethrow();
    return Matrix::from_entries(a.field(), n, std::move(out));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    return a.order() >= kParallelThreshold ? multiply_parallel(a, b) : multiply_serial(a, b);
}

std::vector<Scalar> tabulate_serial(std::size_t order, const std::function<Scalar(std::size_t, std::size_t)>& entry) {
    std::vector<Scalar> out(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) out[i * order + j] = entry(i, j);
    }
    return out;
}

std::vector<Scalar> tabulate_parallel(std::size_t order, const std::function<Scalar(std::size_t, std::size_t)>& entry) {
    std::vector<Scalar> out(order * order);
    ErrorSlot slot;
    const long total = static_cast<long>(order * order);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) {
        slot.guard([&] {
            const auto u = static_cast<std::size_t>(idx);
            out[u] = entry(u / order, u % order);
        });
    }
    slot.rethrow();
    return out;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    ErrorSlot slot;
    const long total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) {
        slot.guard([&] { body(static_cast<std::size_t>(idx)); });
    }
    slot.rethrow();
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace leonard::kernels
