#include "knotproj/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace knotproj {

void LaurentPoly::insert_term(long exp, Int c) {
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(exp, std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::term(Int coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0)
        p.terms_.emplace(exp, std::move(coeff));
    return p;
}

Int LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, Int(-c));
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, Int(-c));
        if (!fresh) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r;
    for (const auto& [ep, cp] : p.terms_)
        for (const auto& [eq, cq] : q.terms_)
            r.insert_term(ep + eq, cp * cq);
    return r;
}

Rational LaurentPoly::eval(const Int& a) const {
    if (a == 0)
        throw std::domain_error("LaurentPoly::eval: t = 0 is outside the domain");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        if (e >= 0) {
            sum += Rational(Int(c * boost::multiprecision::pow(a, static_cast<unsigned>(e))));
        } else {
            sum += Rational(c, Int(boost::multiprecision::pow(a, static_cast<unsigned>(-e))));
        }
    }
    return sum;
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero())
        return *this;
    const long s = min_exp();
    const bool flip = terms_.begin()->second < 0;
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e - s, flip ? Int(-c) : c);
    return r;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long s) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e + s, c);
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        if (first) {
            if (neg)
                out << '-';
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        const Int mag = neg ? Int(-c) : c;
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1)
                out << mag;
            out << 't';
            if (e != 1)
                out << '^' << e;
        }
    }
    return out.str();
}

LaurentMatrix LaurentMatrix::block_diag(const LaurentMatrix& a, const LaurentMatrix& b) {
    LaurentMatrix m(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            m.at(a.size() + i, a.size() + j) = b.at(i, j);
    return m;
}

namespace {

// Exact division in Z[t]; the quotient is required to exist (Bareiss
// guarantees it over an integral domain). Throws std::logic_error otherwise.
LaurentPoly exact_div(LaurentPoly p, const LaurentPoly& q) {
    if (q.is_zero())
        throw std::logic_error("exact_div: division by zero polynomial");
    LaurentPoly quot;
    const long dq = q.max_exp();
    const Int& qc = q.terms().rbegin()->second;
    while (!p.is_zero()) {
        const long dp = p.max_exp();
        const Int& pc = p.terms().rbegin()->second;
        if (dp < dq || pc % qc != 0)
            throw std::logic_error("exact_div: non-exact polynomial division");
        LaurentPoly t = LaurentPoly::term(pc / qc, dp - dq);
        quot += t;
        p -= t * q;
    }
    return quot;
}

}  // namespace

LaurentPoly LaurentMatrix::det() const {
    if (n_ == 0)
        return LaurentPoly::one();

    // Shift each row so all exponents are non-negative; det gains t^{sum}.
    LaurentMatrix m = *this;
    long total_shift = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        bool any = false;
        long lo = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            const LaurentPoly& p = m.at(i, j);
            if (!p.is_zero()) {
                lo = any ? std::min(lo, p.min_exp()) : p.min_exp();
                any = true;
            }
        }
        if (!any)
            return LaurentPoly::zero();
        if (lo < 0) {
            for (std::size_t j = 0; j < n_; ++j)
                m.at(i, j) = m.at(i, j).shifted(-lo);
            total_shift += -lo;
        }
    }

    // Fraction-free elimination with row pivoting.
    int sign = 1;
    LaurentPoly prev = LaurentPoly::one();
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        std::size_t pivot = k;
        while (pivot < n_ && m.at(pivot, k).is_zero())
            ++pivot;
        if (pivot == n_)
            return LaurentPoly::zero();
        if (pivot != k) {
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = LaurentPoly::zero();
        }
        prev = m.at(k, k);
    }

    LaurentPoly d = m.at(n_ - 1, n_ - 1).shifted(-total_shift);
    return sign < 0 ? -d : d;
}

}  // namespace knotproj
