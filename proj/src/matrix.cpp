#include "clusterbn/matrix.hpp"

#include <cassert>

namespace clusterbn {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool IntMatrix::is_unit_lower_triangular() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if ((*this)(i, i) != 1) return false;
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    }
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols() == b.rows());
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) {
    assert(a.cols() == x.size());
    std::vector<Integer> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) out[i] += a(i, j) * x[j];
    return out;
}

}  // namespace clusterbn
