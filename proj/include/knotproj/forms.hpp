#pragma once

#include "knotproj/intmat.hpp"

#include <cstddef>
#include <string>

namespace knotproj {

enum class FormSign { Positive, Negative };

/// Congruence invariants of an integer symmetric bilinear form. rank is the
/// rank over Q, so |signature| <= rank always holds.
struct FormInvariants {
    int rank = 0;
    int signature = 0;
    Int determinant = 1;
    bool even = true;  // all diagonal entries even

    bool operator==(const FormInvariants&) const = default;
};

/// Integer symmetric bilinear form, stored as its Gram matrix.
class SymForm {
public:
    SymForm() = default;  // the 0x0 form
    /// Throws std::invalid_argument unless the matrix is square and symmetric.
    explicit SymForm(IntMat entries);

    std::size_t size() const { return entries_.size(); }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const IntMat& entries() const { return entries_; }

    bool even() const;
    SymForm negated() const;

    bool operator==(const SymForm&) const = default;

private:
    IntMat entries_;
};

/// The hyperbolic plane [[0,1],[1,0]].
SymForm hyperbolic();

/// The rank-8 even unimodular definite form. Off-diagonal entries follow the
/// E8 Dynkin diagram with nodes 1..7 in a chain and node 8 attached to node
/// 5; Positive gives diagonal +2, Negative its entrywise negation.
SymForm e8(FormSign sign);

/// 3H + 2*e8(Negative): rank 22, signature -16.
SymForm kummer_form();

SymForm direct_sum(const SymForm& a, const SymForm& b);

/// Exact signature: positive minus negative eigen-directions, computed by
/// symmetric congruence diagonalization over Q (no floating point). Zero
/// directions contribute 0.
int signature(const SymForm& f);

Int determinant(const SymForm& f);

FormInvariants form_invariants(const SymForm& f);

}  // namespace knotproj
