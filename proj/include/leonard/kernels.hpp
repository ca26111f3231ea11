#pragma once

// Data-parallel inner loops. Each kernel has a serial reference that the
// tests compare against and the benchmark times against the OpenMP version.

#include <cstddef>
#include <functional>
#include <vector>

#include "leonard/exactfield.hpp"

namespace leonard {
class Matrix;
}

namespace leonard::kernels {

/// Below this order the parallel kernels fall back to the serial loop.
inline constexpr std::size_t kParallelThreshold = 12;

Matrix multiply_serial(const Matrix& a, const Matrix& b);
Matrix multiply_parallel(const Matrix& a, const Matrix& b);
/// Dispatches on kParallelThreshold.
Matrix multiply(const Matrix& a, const Matrix& b);

/// Fills an order x order table with entry(i, j), row-major.
std::vector<Scalar> tabulate_serial(std::size_t order, const std::function<Scalar(std::size_t, std::size_t)>& entry);
std::vector<Scalar> tabulate_parallel(std::size_t order, const std::function<Scalar(std::size_t, std::size_t)>& entry);

/// Runs body(i) for i in [0, count), in parallel when OpenMP is available.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads() noexcept;

}  // namespace leonard::kernels
