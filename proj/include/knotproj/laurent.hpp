#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace knotproj {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial over Z: finitely many terms c*t^e with e possibly
/// negative. Zero coefficients are never stored, so the zero polynomial is
/// the empty term map and equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return term(1, 0); }
    /// The monomial c*t^e.
    static LaurentPoly term(Int coeff, long exp);
    /// The variable t.
    static LaurentPoly var() { return term(1, 1); }
    static LaurentPoly constant(Int c) { return term(std::move(c), 0); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Int>& terms() const { return terms_; }
    /// Coefficient of t^e (zero if absent).
    Int coeff(long exp) const;
    /// Lowest/highest exponent with nonzero coefficient. Undefined on zero.
    long min_exp() const { return terms_.begin()->first; }
    long max_exp() const { return terms_.rbegin()->first; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    bool operator==(const LaurentPoly&) const = default;

    /// Substitute t := a (a nonzero integer); exact rational result.
    /// Throws std::domain_error on a = 0.
    Rational eval(const Int& a) const;

    /// Canonical representative of the unit class {±t^s * p}: lowest exponent
    /// shifted to 0 and lowest coefficient made positive. Zero maps to zero.
    LaurentPoly normalized() const;

    /// t -> t^-1.
    LaurentPoly reversed() const;

    /// Multiply by t^s.
    LaurentPoly shifted(long s) const;

    /// Canonical text form: increasing exponents, e.g. "1 - t + t^2",
    /// "t^-1 + t"; zero renders as "0".
    std::string str() const;

private:
    std::map<long, Int> terms_;

    void insert_term(long exp, Int c);
};

/// Square matrix of Laurent polynomials.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    std::size_t size() const { return n_; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    LaurentPoly& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    static LaurentMatrix block_diag(const LaurentMatrix& a, const LaurentMatrix& b);

    /// Exact determinant. Rows are first shifted to non-negative exponents,
    /// then eliminated fraction-free (Bareiss) over Z[t], and the result is
    /// shifted back. det of the 0x0 matrix is 1.
    LaurentPoly det() const;

private:
    std::size_t n_ = 0;
    std::vector<LaurentPoly> entries_;
};

}  // namespace knotproj
