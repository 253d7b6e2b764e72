#include "knotproj/spin.hpp"

#include <stdexcept>

namespace knotproj {

KnotModel spin_knot(const KnotModel& k) {
    if (!k.simple) {
        throw std::domain_error(
            "spin_knot: the Alexander polynomial only transfers along a spin "
            "of a simple knot");
    }
    KnotModel out;
    out.n = k.n + 1;
    out.seifert.reset();
    out.delta = k.delta;
    out.sigma.reset();
    out.simple = true;
    out.spin_count = k.spin_count + 1;
    out.origin = "spin(" + k.origin + ")";
    return out;
}

bool is_knotted_tower(const KnotModel& k) {
    if (!k.simple) {
        throw std::domain_error("is_knotted_tower: model is not simple");
    }
    int base_n = k.n - k.spin_count;
    if (base_n < 3 || base_n % 2 == 0) {
        throw std::domain_error(
            "is_knotted_tower: tower must start at an odd-dimensional knot of "
            "dimension >= 3");
    }
    return !(k.delta == LaurentPoly::one());
}

}  // namespace knotproj
