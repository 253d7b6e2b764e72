#pragma once

#include "knotproj/seifert.hpp"

namespace knotproj {

/// Spun-knot operator: raises the dimension by one and transfers the
/// Alexander data and the simple flag. The transfer needs a simply connected
/// Seifert hypersurface, so simple=false throws std::domain_error. The
/// signature is dropped: no signature claim exists for the spun knot.
KnotModel spin_knot(const KnotModel& k);

/// Knottedness certificate along a spin tower: for a model obtained by
/// spinning a simple odd-dimensional knot (>= 3) zero or more times, returns
/// true iff the Alexander polynomial is nontrivial. Throws std::domain_error
/// when the model is not such a tower.
bool is_knotted_tower(const KnotModel& k);

}  // namespace knotproj
