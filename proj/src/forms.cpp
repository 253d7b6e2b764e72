#include "knotproj/forms.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace knotproj {

SymForm::SymForm(IntMat entries) : entries_(std::move(entries)) {
    if (!is_square(entries_))
        throw std::invalid_argument("SymForm: matrix not square");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (std::size_t j = i + 1; j < entries_.size(); ++j)
            if (entries_[i][j] != entries_[j][i])
                throw std::invalid_argument("SymForm: matrix not symmetric at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ")");
}

bool SymForm::even() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i][i] % 2 != 0)
            return false;
    return true;
}

SymForm SymForm::negated() const {
    SymForm f;
    f.entries_ = knotproj::negated(entries_);
    return f;
}

SymForm hyperbolic() {
    return SymForm(IntMat{{0, 1}, {1, 0}});
}

SymForm e8(FormSign sign) {
    IntMat m(8, std::vector<Int>(8, 0));
    for (int i = 0; i < 8; ++i)
        m[i][i] = 2;
    // Dynkin edges, 0-indexed: chain 1..7 plus node 8 on node 5.
    constexpr std::array<std::pair<int, int>, 7> edges{
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}}};
    for (auto [a, b] : edges) {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    SymForm f{std::move(m)};
    return sign == FormSign::Positive ? f : f.negated();
}

SymForm kummer_form() {
    SymForm f;
    for (int i = 0; i < 3; ++i)
        f = direct_sum(f, hyperbolic());
    for (int i = 0; i < 2; ++i)
        f = direct_sum(f, e8(FormSign::Negative));
    return f;
}

SymForm direct_sum(const SymForm& a, const SymForm& b) {
    return SymForm(block_diag(a.entries(), b.entries()));
}

namespace {

struct PivotCounts {
    int positive = 0;
    int negative = 0;
};

// Symmetric congruence diagonalization over Q. A zero diagonal pivot facing a
// nonzero off-diagonal entry is resolved by a row+column addition, which
// turns the corresponding hyperbolic pair into pivots of opposite sign.
PivotCounts diagonalize(const SymForm& f) {
    const std::size_t n = f.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = Rational(f.at(i, j));

    PivotCounts counts;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] == 0) {
            std::size_t swap_j = n, add_j = n;
            for (std::size_t j = i + 1; j < n && swap_j == n; ++j) {
                if (m[j][j] != 0)
                    swap_j = j;
                else if (add_j == n && m[i][j] != 0)
                    add_j = j;
            }
            if (swap_j != n) {
                std::swap(m[i], m[swap_j]);
                for (std::size_t r = 0; r < n; ++r)
                    std::swap(m[r][i], m[r][swap_j]);
            } else if (add_j != n) {
                for (std::size_t c = 0; c < n; ++c)
                    m[i][c] += m[add_j][c];
                for (std::size_t r = 0; r < n; ++r)
                    m[r][i] += m[r][add_j];
            } else {
                continue;  // zero direction
            }
        }
        const Rational pivot = m[i][i];
        if (pivot > 0)
            ++counts.positive;
        else
            ++counts.negative;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i] == 0)
                continue;
            const Rational factor = m[r][i] / pivot;
            for (std::size_t c = i; c < n; ++c)
                m[r][c] -= factor * m[i][c];
        }
        for (std::size_t c = i + 1; c < n; ++c) {
            m[i][c] = 0;
            m[c][i] = 0;
        }
    }
    return counts;
}

}  // namespace

int signature(const SymForm& f) {
    const PivotCounts counts = diagonalize(f);
    return counts.positive - counts.negative;
}

Int determinant(const SymForm& f) {
    return int_det(f.entries());
}

FormInvariants form_invariants(const SymForm& f) {
    const PivotCounts counts = diagonalize(f);
    FormInvariants inv;
    inv.rank = counts.positive + counts.negative;
    inv.signature = counts.positive - counts.negative;
    inv.determinant = determinant(f);
    inv.even = f.even();
    return inv;
}

}  // namespace knotproj
