#pragma once

// Data-parallel kernels. Each has a serial reference kept for tests and for
// the benchmark in bench/; the OpenMP versions must agree with them exactly.

#include <span>
#include <vector>

#include "clusterbn/configuration.hpp"
#include "clusterbn/matrix.hpp"

namespace clusterbn::kernels {

/// Inverse of a unit lower triangular integer matrix, row by row.
IntMatrix unit_lower_inverse_serial(const IntMatrix& p);

/// Same result; the columns are independent forward solves and are
/// distributed over OpenMP threads.
IntMatrix unit_lower_inverse_parallel(const IntMatrix& p);

/// Picks the parallel kernel above a size threshold when more than one thread is available.
IntMatrix unit_lower_inverse(const IntMatrix& p);

/// total_d for every configuration of a batch.
std::vector<Integer> total_d_serial(std::span<const Configuration> batch);
std::vector<Integer> total_d_parallel(std::span<const Configuration> batch);

}  // namespace clusterbn::kernels
