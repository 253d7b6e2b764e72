#include "knotproj/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace knotproj {

bool is_square(const IntMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size())
            return false;
    return true;
}

IntMat transpose(const IntMat& m) {
    const std::size_t r = m.size();
    const std::size_t c = r == 0 ? 0 : m[0].size();
    IntMat t(c, std::vector<Int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            t[j][i] = m[i][j];
    return t;
}

IntMat negated(const IntMat& m) {
    IntMat r = m;
    for (auto& row : r)
        for (auto& x : row)
            x = -x;
    return r;
}

IntMat mat_add(const IntMat& a, const IntMat& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("mat_add: shape mismatch");
    IntMat r = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size())
            throw std::invalid_argument("mat_add: shape mismatch");
        for (std::size_t j = 0; j < a[i].size(); ++j)
            r[i][j] += b[i][j];
    }
    return r;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size();
    const std::size_t k = n == 0 ? 0 : a[0].size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    if (b.size() != k)
        throw std::invalid_argument("mat_mul: shape mismatch");
    IntMat r(n, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

IntMat identity_mat(std::size_t n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMat block_diag(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size() + b.size();
    IntMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            m[i][j] = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j)
            m[a.size() + i][a.size() + j] = b[i][j];
    return m;
}

Int int_det(IntMat m) {
    const std::size_t n = m.size();
    if (!is_square(m))
        throw std::invalid_argument("int_det: matrix not square");
    if (n == 0)
        return 1;

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace knotproj
