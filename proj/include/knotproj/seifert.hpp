#pragma once

#include "knotproj/forms.hpp"
#include "knotproj/intmat.hpp"
#include "knotproj/laurent.hpp"

#include <optional>
#include <string>

namespace knotproj {

/// Seifert matrix of a (2k+1)-knot. Validity (|det(A - (-1)^k A^T)| = 1) is
/// checked by is_valid, not assumed here.
struct SeifertMatrix {
    int k = 0;  // the knot has dimension 2k+1
    IntMat a;   // square, possibly 0x0

    SeifertMatrix() = default;
    /// Throws std::invalid_argument if k < 0 or the matrix is not square.
    SeifertMatrix(int k, IntMat a);

    std::size_t size() const { return a.size(); }
    bool operator==(const SeifertMatrix&) const = default;
};

/// Alexander polynomial det(t*A - (-1)^k A^T) in canonical form: the unit
/// representative from LaurentPoly::normalized, further negated when that
/// makes the value at t=1 equal to +1 (possible exactly when |value| is 1).
/// The 0x0 matrix yields 1.
LaurentPoly alexander(const SeifertMatrix& s);

/// Canonicalization used by alexander; exposed for composing invariants.
LaurentPoly canonical_delta(const LaurentPoly& p);

/// True iff |det(A - (-1)^k A^T)| = 1.
bool is_valid(const SeifertMatrix& s);

/// Signature of A + A^T. Defined for odd k only (the symmetrized matrix is
/// then the intersection form of a Seifert hypersurface); even k throws
/// std::domain_error.
int knot_signature(const SeifertMatrix& s);

/// Block sum; the parities must agree (std::invalid_argument otherwise).
SeifertMatrix connected_sum(const SeifertMatrix& s1, const SeifertMatrix& s2);

/// The mirror image with reversed orientation, modeled as -A^T.
SeifertMatrix mirror_reverse(const SeifertMatrix& s);

/// k=1 Seifert matrix with A + A^T = kummer_form(); Seifert data of the
/// 3-knot bounding the punctured Kummer surface.
SeifertMatrix kummer_seifert();

/// True iff s is the signature of some 3-knot, i.e. s is a multiple of 16.
bool realizable_3knot_signature(long s);

/// Derived invariants of an n-knot. The Seifert matrix is kept only when the
/// model was built from one and not spun afterwards; sigma is present only
/// for n = 3 mod 4 with a Seifert matrix present.
struct KnotModel {
    int n = 3;
    std::optional<SeifertMatrix> seifert;
    LaurentPoly delta;  // canonical form (see alexander)
    std::optional<int> sigma;
    bool simple = false;  // has a simply connected Seifert hypersurface
    int spin_count = 0;   // spins applied since the base model
    std::string origin;   // readable derivation chain

    static KnotModel from_seifert(SeifertMatrix s, bool simple, std::string origin);
    /// Empty Seifert matrix with k=1: n=3, delta=1, sigma=0.
    static KnotModel unknot();
};

/// Triviality test for simple odd-dimensional knots: true iff delta is 1.
/// Requires simple=true and odd n >= 3; throws std::domain_error otherwise.
bool is_unknotted_simple(const KnotModel& k);

/// Connected sum on models: delta multiplies, sigma adds, simplicity is
/// preserved. Dimensions must agree.
KnotModel connected_sum(const KnotModel& k1, const KnotModel& k2);

/// Mirror with reversed orientation on models: delta gets t -> t^-1, sigma
/// flips sign.
KnotModel mirror_reverse(const KnotModel& k);

}  // namespace knotproj
