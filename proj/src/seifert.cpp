#include "knotproj/seifert.hpp"

#include <stdexcept>
#include <utility>

namespace knotproj {

SeifertMatrix::SeifertMatrix(int k, IntMat a) : k(k), a(std::move(a)) {
    if (k < 0)
        throw std::invalid_argument("SeifertMatrix: k must be non-negative");
    if (!is_square(this->a))
        throw std::invalid_argument("SeifertMatrix: matrix not square");
}

namespace {

int parity_sign(int k) {
    return k % 2 == 0 ? 1 : -1;
}

}  // namespace

LaurentPoly canonical_delta(const LaurentPoly& p) {
    LaurentPoly q = p.normalized();
    if (!q.is_zero()) {
        const Rational at_one = q.eval(1);
        if (at_one == -1)
            q = -q;
    }
    return q;
}

LaurentPoly alexander(const SeifertMatrix& s) {
    const std::size_t n = s.size();
    const int eps = parity_sign(s.k);
    LaurentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = LaurentPoly::term(s.a[i][j], 1) - LaurentPoly::term(eps * s.a[j][i], 0);
        }
    return canonical_delta(m.det());
}

bool is_valid(const SeifertMatrix& s) {
    const int eps = parity_sign(s.k);
    IntMat m = s.a;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            m[i][j] -= eps * s.a[j][i];
    const Int d = int_det(std::move(m));
    return d == 1 || d == -1;
}

int knot_signature(const SeifertMatrix& s) {
    if (s.k % 2 == 0)
        throw std::domain_error(
            "knot_signature: defined for odd k only (A + A^T is not symmetric data otherwise)");
    return signature(SymForm(mat_add(s.a, transpose(s.a))));
}

SeifertMatrix connected_sum(const SeifertMatrix& s1, const SeifertMatrix& s2) {
    if (s1.k != s2.k)
        throw std::invalid_argument("connected_sum: parity mismatch between Seifert matrices");
    return SeifertMatrix(s1.k, block_diag(s1.a, s2.a));
}

SeifertMatrix mirror_reverse(const SeifertMatrix& s) {
    return SeifertMatrix(s.k, negated(transpose(s.a)));
}

SeifertMatrix kummer_seifert() {
    const SymForm f = kummer_form();
    const std::size_t n = f.size();
    IntMat a(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = f.at(i, i) / 2;  // integral: the form is even
        for (std::size_t j = i + 1; j < n; ++j)
            a[i][j] = f.at(i, j);
    }
    return SeifertMatrix(1, std::move(a));
}

bool realizable_3knot_signature(long s) {
    return s % 16 == 0;
}

KnotModel KnotModel::from_seifert(SeifertMatrix s, bool simple, std::string origin) {
    KnotModel m;
    m.n = 2 * s.k + 1;
    m.delta = alexander(s);
    if (s.k % 2 == 1)
        m.sigma = knot_signature(s);
    m.seifert = std::move(s);
    m.simple = simple;
    m.spin_count = 0;
    m.origin = std::move(origin);
    return m;
}

KnotModel KnotModel::unknot() {
    return from_seifert(SeifertMatrix(1, {}), true, "unknot");
}

bool is_unknotted_simple(const KnotModel& k) {
    if (!k.simple)
        throw std::domain_error("is_unknotted_simple: requires a simple knot model");
    if (k.n < 3 || k.n % 2 == 0)
        throw std::domain_error("is_unknotted_simple: requires odd dimension >= 3");
    return k.delta == LaurentPoly::one();
}

KnotModel connected_sum(const KnotModel& k1, const KnotModel& k2) {
    if (k1.n != k2.n)
        throw std::invalid_argument("connected_sum: dimension mismatch between knot models");
    KnotModel m;
    m.n = k1.n;
    m.delta = canonical_delta(k1.delta * k2.delta);
    if (k1.seifert && k2.seifert && k1.seifert->k == k2.seifert->k)
        m.seifert = connected_sum(*k1.seifert, *k2.seifert);
    if (m.seifert && k1.sigma && k2.sigma)
        m.sigma = *k1.sigma + *k2.sigma;
    m.simple = k1.simple && k2.simple;
    m.spin_count = 0;
    m.origin = "sum(" + k1.origin + "," + k2.origin + ")";
    return m;
}

KnotModel mirror_reverse(const KnotModel& k) {
    KnotModel m = k;
    m.delta = canonical_delta(k.delta.reversed());
    if (k.sigma)
        m.sigma = -*k.sigma;
    if (k.seifert)
        m.seifert = mirror_reverse(*k.seifert);
    m.origin = "mirror(" + k.origin + ")";
    return m;
}

}  // namespace knotproj
