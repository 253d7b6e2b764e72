#pragma once

#include <string>
#include <vector>

#include "knotproj/forms.hpp"

namespace knotproj {

/// A system of immersed disks, each carrying the multiset of signs of its
/// double points, together with the signed sum each disk must reach.
struct DiskSystem {
    std::vector<std::vector<int>> disks;  // per-disk signs, each entry +1/-1
    std::vector<long> targets;            // required sign-sum per disk

    DiskSystem() = default;
    DiskSystem(std::vector<std::vector<int>> disks_,
               std::vector<long> targets_);

    std::size_t size() const { return disks.size(); }
    long sign_sum(std::size_t i) const;
};

/// One adjustment: connect-sum a small sphere contributing a single double
/// point of sign epsilon to the given disk (1-based index).
struct Move {
    int disk = 0;  // 1-based
    int epsilon = 0;

    bool operator==(const Move&) const = default;
};

/// A framed link: symmetric linking matrix (zero diagonal) plus framings.
struct FramedLink {
    int size = 0;
    IntMat linking;               // symmetric, zero diagonal
    std::vector<Int> framings;

    FramedLink() = default;
    FramedLink(IntMat linking_, std::vector<Int> framings_);
};

/// Framing contributed by a disk's double points: twice the sign sum.
long framing_of(const std::vector<int>& disk_signs);

/// Minimal move sequence driving every disk's sign sum to its target.
/// Moves are emitted disk-by-disk in ascending index order; all moves for a
/// disk share the sign of its deficit. The length is the sum of |deficit|.
std::vector<Move> adjust_to_targets(const DiskSystem& ds);

/// Replay a move sequence, appending each move's sign to its disk.
DiskSystem after_moves(const DiskSystem& ds, const std::vector<Move>& moves);

/// The 22 target sums of the reference handle decomposition: 0 for the first
/// disk, -1 for each of the remaining 21.
std::vector<long> kirby_disk_targets();

/// The 22-disk system with no double points yet, targets as above.
DiskSystem kirby_disk_system();

/// Intersection form of the 2-handlebody attached along a framed link:
/// linking numbers off the diagonal, framings on it.
SymForm intersection_form(const FramedLink& fl);

/// Per-check report for verify_kummer.
struct KummerCheck {
    bool rank_ok = false;
    bool signature_ok = false;
    bool determinant_ok = false;
    bool even_ok = false;
    FormInvariants found;

    bool ok() const {
        return rank_ok && signature_ok && determinant_ok && even_ok;
    }
};

/// Check a form against the reference invariants rank 22, signature -16,
/// determinant -1, even. (Integral congruence is not decided.)
KummerCheck verify_kummer(const SymForm& f);

}  // namespace knotproj
