#include "clusterbn/kernels.hpp"

#include <cassert>
#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#include <omp.h>

#include "clusterbn/sufficiency.hpp"

namespace clusterbn::kernels {

namespace {

// Below this size the thread start-up costs more than the solve.
constexpr std::size_t kParallelInverseThreshold = 96;

}  // namespace

IntMatrix unit_lower_inverse_serial(const IntMatrix& p) {
    assert(p.is_unit_lower_triangular());
    const std::size_t n = p.rows();
    IntMatrix x = IntMatrix::identity(n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) {
            if (p(i, k) == 0) continue;
            for (std::size_t j = 0; j <= k; ++j)
                if (x(k, j) != 0) x(i, j) -= p(i, k) * x(k, j);
        }
    return x;
}

IntMatrix unit_lower_inverse_parallel(const IntMatrix& p) {
    assert(p.is_unit_lower_triangular());
    const auto n = static_cast<std::ptrdiff_t>(p.rows());
    // Strictly lower nonzeros per row, shared read-only by the column tasks.
    std::vector<std::vector<std::pair<std::ptrdiff_t, Integer>>> rows(p.rows());
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t k = 0; k < i; ++k)
            if (p(i, k) != 0) rows[i].emplace_back(k, p(i, k));
    IntMatrix x(p.rows(), p.cols());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        x(j, j) = 1;
        for (std::ptrdiff_t i = j + 1; i < n; ++i) {
            Integer acc = 0;
            for (const auto& [k, v] : rows[i])
                if (k >= j && x(k, j) != 0) acc -= v * x(k, j);
            x(i, j) = std::move(acc);
        }
    }
    return x;
}

IntMatrix unit_lower_inverse(const IntMatrix& p) {
    const bool parallel = p.rows() >= kParallelInverseThreshold && omp_get_max_threads() > 1;
    return parallel ? unit_lower_inverse_parallel(p) : unit_lower_inverse_serial(p);
}

std::vector<Integer> total_d_serial(std::span<const Configuration> batch) {
    std::vector<Integer> out;
    out.reserve(batch.size());
    for (const Configuration& c : batch) out.push_back(total_d(c));
    return out;
}

std::vector<Integer> total_d_parallel(std::span<const Configuration> batch) {
    std::vector<Integer> out(batch.size());
    const auto n = static_cast<std::ptrdiff_t>(batch.size());
    // Exceptions cannot leave an OpenMP region; keep the first and rethrow.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = total_d(batch[i]);
        } catch (...) {
#pragma omp critical(clusterbn_total_d_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace clusterbn::kernels
