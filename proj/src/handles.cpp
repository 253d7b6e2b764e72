#include "knotproj/handles.hpp"

#include <cstdlib>
#include <stdexcept>

namespace knotproj {

DiskSystem::DiskSystem(std::vector<std::vector<int>> disks_,
                       std::vector<long> targets_)
    : disks(std::move(disks_)), targets(std::move(targets_)) {
    if (disks.size() != targets.size()) {
        throw std::invalid_argument(
            "DiskSystem: disk count and target count differ");
    }
    for (const auto& d : disks) {
        for (int s : d) {
            if (s != 1 && s != -1) {
                throw std::invalid_argument(
                    "DiskSystem: double-point signs must be +1 or -1");
            }
        }
    }
}

long DiskSystem::sign_sum(std::size_t i) const {
    long sum = 0;
    for (int s : disks.at(i)) sum += s;
    return sum;
}

FramedLink::FramedLink(IntMat linking_, std::vector<Int> framings_)
    : size(static_cast<int>(framings_.size())),
      linking(std::move(linking_)),
      framings(std::move(framings_)) {
    if (!is_square(linking) ||
        linking.size() != static_cast<std::size_t>(size)) {
        throw std::invalid_argument(
            "FramedLink: linking matrix must be square with one row per "
            "component");
    }
    for (int i = 0; i < size; ++i) {
        if (linking[i][i] != 0) {
            throw std::invalid_argument(
                "FramedLink: linking matrix diagonal must be zero (framings "
                "are carried separately)");
        }
        for (int j = 0; j < size; ++j) {
            if (linking[i][j] != linking[j][i]) {
                throw std::invalid_argument(
                    "FramedLink: linking matrix must be symmetric");
            }
        }
    }
}

long framing_of(const std::vector<int>& disk_signs) {
    long sum = 0;
    for (int s : disk_signs) sum += s;
    return 2 * sum;
}

std::vector<Move> adjust_to_targets(const DiskSystem& ds) {
    std::vector<Move> moves;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        long deficit = ds.targets[i] - ds.sign_sum(i);
        int eps = deficit > 0 ? 1 : -1;
        for (long m = 0; m < std::labs(deficit); ++m) {
            moves.push_back(Move{static_cast<int>(i) + 1, eps});
        }
    }
    return moves;
}

DiskSystem after_moves(const DiskSystem& ds, const std::vector<Move>& moves) {
    DiskSystem out = ds;
    for (const Move& m : moves) {
        if (m.disk < 1 || static_cast<std::size_t>(m.disk) > out.size()) {
            throw std::out_of_range("after_moves: disk index out of range");
        }
        if (m.epsilon != 1 && m.epsilon != -1) {
            throw std::invalid_argument("after_moves: epsilon must be +1 or -1");
        }
        out.disks[m.disk - 1].push_back(m.epsilon);
    }
    return out;
}

std::vector<long> kirby_disk_targets() {
    std::vector<long> targets(22, -1);
    targets[0] = 0;
    return targets;
}

DiskSystem kirby_disk_system() {
    return DiskSystem(std::vector<std::vector<int>>(22), kirby_disk_targets());
}

SymForm intersection_form(const FramedLink& fl) {
    IntMat m = fl.linking;
    for (int i = 0; i < fl.size; ++i) m[i][i] = fl.framings[i];
    return SymForm(m);
}

KummerCheck verify_kummer(const SymForm& f) {
    KummerCheck check;
    check.found = form_invariants(f);
    check.rank_ok = check.found.rank == 22;
    check.signature_ok = check.found.signature == -16;
    check.determinant_ok = check.found.determinant == -1;
    check.even_ok = check.found.even;
    return check;
}

}  // namespace knotproj
