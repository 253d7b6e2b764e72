#include "knotproj/projection.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace knotproj {

ProjectionExpr ProjectionExpr::base(int mu) {
    if (mu < 1) {
        throw std::invalid_argument("ProjectionExpr: mu must be positive");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Base;
    node->mu = mu;
    return ProjectionExpr(std::move(node));
}

ProjectionExpr ProjectionExpr::stack(std::vector<ProjectionExpr> parts) {
    if (parts.empty()) {
        throw std::invalid_argument("ProjectionExpr: stack of zero parts");
    }
    const int dim = dimension(parts.front());
    for (const auto& p : parts) {
        if (dimension(p) != dim) {
            throw std::invalid_argument(
                "ProjectionExpr: stacked projections must have equal "
                "dimensions");
        }
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Stack;
    node->parts = std::move(parts);
    return ProjectionExpr(std::move(node));
}

ProjectionExpr ProjectionExpr::doubled(ProjectionExpr inner) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Double;
    node->parts.push_back(std::move(inner));
    return ProjectionExpr(std::move(node));
}

ProjectionExpr ProjectionExpr::mirror(ProjectionExpr inner) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Mirror;
    node->parts.push_back(std::move(inner));
    return ProjectionExpr(std::move(node));
}

ProjectionExpr ProjectionExpr::spin(ProjectionExpr inner) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Spin;
    node->parts.push_back(std::move(inner));
    return ProjectionExpr(std::move(node));
}

int ProjectionExpr::base_mu() const {
    if (node_->kind != Kind::Base) {
        throw std::logic_error("ProjectionExpr: base_mu on a non-Base node");
    }
    return node_->mu;
}

const std::vector<ProjectionExpr>& ProjectionExpr::parts() const {
    if (node_->kind != Kind::Stack) {
        throw std::logic_error("ProjectionExpr: parts on a non-Stack node");
    }
    return node_->parts;
}

const ProjectionExpr& ProjectionExpr::inner() const {
    if (node_->kind == Kind::Base || node_->kind == Kind::Stack) {
        throw std::logic_error("ProjectionExpr: inner on a leaf or Stack node");
    }
    return node_->parts.front();
}

bool ProjectionExpr::operator==(const ProjectionExpr& other) const {
    if (node_->kind != other.node_->kind) return false;
    if (node_->kind == Kind::Base) return node_->mu == other.node_->mu;
    return node_->parts == other.node_->parts;
}

int mu(const ProjectionExpr& p) {
    switch (p.kind()) {
        case ProjectionExpr::Kind::Base:
            return p.base_mu();
        case ProjectionExpr::Kind::Stack: {
            int total = 0;
            for (const auto& part : p.parts()) total += mu(part);
            return total;
        }
        case ProjectionExpr::Kind::Double:
            return 2 * mu(p.inner());
        case ProjectionExpr::Kind::Mirror:
        case ProjectionExpr::Kind::Spin:
            return mu(p.inner());
    }
    throw std::logic_error("mu: unreachable");
}

int dimension(const ProjectionExpr& p) {
    switch (p.kind()) {
        case ProjectionExpr::Kind::Base:
            return 3;
        case ProjectionExpr::Kind::Stack:
            return dimension(p.parts().front());
        case ProjectionExpr::Kind::Double:
        case ProjectionExpr::Kind::Mirror:
            return dimension(p.inner());
        case ProjectionExpr::Kind::Spin:
            return dimension(p.inner()) + 1;
    }
    throw std::logic_error("dimension: unreachable");
}

std::string SingularComponent::topology() const {
    std::string s = "Torus";
    for (int i = 0; i < spin_factors; ++i) s += " x S^1";
    return s;
}

namespace {

void collect_components(const ProjectionExpr& p, int spin_depth,
                        std::vector<SingularComponent>& out) {
    switch (p.kind()) {
        case ProjectionExpr::Kind::Base:
            for (int i = 0; i < p.base_mu(); ++i) {
                SingularComponent c;
                c.id = static_cast<int>(out.size()) + 1;
                c.spin_factors = spin_depth;
                c.double_points_only = true;
                out.push_back(c);
            }
            return;
        case ProjectionExpr::Kind::Stack:
            for (const auto& part : p.parts()) {
                collect_components(part, spin_depth, out);
            }
            return;
        case ProjectionExpr::Kind::Double:
            collect_components(p.inner(), spin_depth, out);
            collect_components(p.inner(), spin_depth, out);
            return;
        case ProjectionExpr::Kind::Mirror:
            collect_components(p.inner(), spin_depth, out);
            return;
        case ProjectionExpr::Kind::Spin:
            collect_components(p.inner(), spin_depth + 1, out);
            return;
    }
}

}  // namespace

std::vector<SingularComponent> singular_components(const ProjectionExpr& p) {
    std::vector<SingularComponent> out;
    collect_components(p, 0, out);
    return out;
}

LiftAssignment::LiftAssignment(std::vector<int> rho_) : rho(std::move(rho_)) {
    for (int r : rho) {
        if (r != 1 && r != -1) {
            throw std::invalid_argument(
                "LiftAssignment: entries must be +1 or -1");
        }
    }
}

std::string rho_string(const std::vector<int>& rho) {
    std::string s;
    s.reserve(rho.size());
    for (int r : rho) s += (r == 1 ? '+' : '-');
    return s;
}

namespace {

const KnotModel& kummer_base_model() {
    static const KnotModel model =
        KnotModel::from_seifert(kummer_seifert(), true, "kummer");
    return model;
}

KnotModel lift_range(const ProjectionExpr& p, std::size_t begin,
                     std::size_t end) {
    switch (p.kind()) {
        case ProjectionExpr::Kind::Base:
            return kummer_base_model();
        case ProjectionExpr::Kind::Stack: {
            std::optional<KnotModel> acc;
            std::size_t at = begin;
            for (const auto& part : p.parts()) {
                const std::size_t width = static_cast<std::size_t>(mu(part));
                KnotModel m = lift_range(part, at, at + width);
                at += width;
                acc = acc ? connected_sum(*acc, m) : std::move(m);
            }
            return *acc;
        }
        case ProjectionExpr::Kind::Double: {
            const std::size_t half = (end - begin) / 2;
            KnotModel first = lift_range(p.inner(), begin, begin + half);
            KnotModel second = lift_range(p.inner(), begin + half, end);
            return connected_sum(first, mirror_reverse(second));
        }
        case ProjectionExpr::Kind::Mirror:
            return mirror_reverse(lift_range(p.inner(), begin, end));
        case ProjectionExpr::Kind::Spin:
            return spin_knot(lift_range(p.inner(), begin, end));
    }
    throw std::logic_error("lift: unreachable");
}

}  // namespace

KnotModel lift(const ProjectionExpr& p, const LiftAssignment& rho) {
    const std::size_t needed = static_cast<std::size_t>(mu(p));
    if (rho.rho.size() != needed) {
        throw std::invalid_argument(
            "lift: assignment length does not match the number of singular "
            "components");
    }
    return lift_range(p, 0, needed);
}

namespace {

// Lexicographic order on assignments with +1 before -1.
bool rho_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return a.size() < b.size();
}

LiftClass make_class(const ProjectionExpr& p, std::vector<int> rho) {
    LiftClass c;
    c.model = lift(p, LiftAssignment(rho));
    c.knotted = !(c.model.delta == LaurentPoly::one());
    c.rho = std::move(rho);
    return c;
}

}  // namespace

ClassificationReport classify_lifts(const ProjectionExpr& p,
                                    std::optional<std::size_t> sample,
                                    std::uint64_t seed) {
    ClassificationReport report;
    report.mu = mu(p);
    report.seed = seed;
    report.note =
        "classes indexed by rho; equal rho implies equivalent lifts, "
        "distinctness across classes is not claimed; at most 2^mu classes";
    const int m = report.mu;
    if (m <= 20) {
        report.exhaustive = true;
        const std::uint64_t total = std::uint64_t{1} << m;
        for (std::uint64_t counter = 0; counter < total; ++counter) {
            std::vector<int> rho(m);
            for (int i = 0; i < m; ++i) {
                rho[i] = ((counter >> (m - 1 - i)) & 1) ? -1 : 1;
            }
            report.classes.push_back(make_class(p, std::move(rho)));
        }
        return report;
    }
    report.exhaustive = false;
    const std::size_t want = sample.value_or(100);
    if (m <= 62 && want > (std::uint64_t{1} << m)) {
        throw std::invalid_argument(
            "classify_lifts: sample exceeds the number of distinct "
            "assignments");
    }
    std::mt19937_64 rng(seed);
    std::set<std::vector<int>, bool (*)(const std::vector<int>&,
                                        const std::vector<int>&)>
        seen(rho_less);
    while (seen.size() < want) {
        std::vector<int> rho(m);
        for (int i = 0; i < m; ++i) rho[i] = (rng() & 1) ? -1 : 1;
        seen.insert(std::move(rho));
    }
    for (const auto& rho : seen) {
        report.classes.push_back(make_class(p, rho));
    }
    return report;
}

ProjectionExpr realize_signature(long r, int base_mu) {
    auto stack_of = [base_mu](long count) {
        std::vector<ProjectionExpr> parts(
            static_cast<std::size_t>(count), ProjectionExpr::base(base_mu));
        if (count == 1) return parts.front();
        return ProjectionExpr::stack(std::move(parts));
    };
    if (r == 0) return ProjectionExpr::doubled(ProjectionExpr::base(base_mu));
    if (r < 0) return stack_of(-r);
    return ProjectionExpr::mirror(stack_of(r));
}

ImmersedSphereExpr ImmersedSphereExpr::giller() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Giller;
    node->dimension = 2;
    return ImmersedSphereExpr(std::move(node));
}

ImmersedSphereExpr ImmersedSphereExpr::embedded(int n) {
    if (n < 1) {
        throw std::invalid_argument(
            "ImmersedSphereExpr: embedded dimension must be >= 1");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Embedded;
    node->dimension = n;
    return ImmersedSphereExpr(std::move(node));
}

ImmersedSphereExpr ImmersedSphereExpr::spin(ImmersedSphereExpr inner) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::SpinI;
    node->dimension = inner.dimension() + 1;
    node->children.push_back(std::move(inner));
    return ImmersedSphereExpr(std::move(node));
}

ImmersedSphereExpr ImmersedSphereExpr::connsum(ImmersedSphereExpr left,
                                               ImmersedSphereExpr right) {
    if (left.dimension() != right.dimension()) {
        throw std::invalid_argument(
            "ImmersedSphereExpr: connected-sum operands must have equal "
            "dimensions");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::ConnSum;
    node->dimension = left.dimension();
    node->children.push_back(std::move(left));
    node->children.push_back(std::move(right));
    return ImmersedSphereExpr(std::move(node));
}

const ImmersedSphereExpr& ImmersedSphereExpr::left() const {
    if (node_->children.empty()) {
        throw std::logic_error("ImmersedSphereExpr: no children on a leaf");
    }
    return node_->children.front();
}

const ImmersedSphereExpr& ImmersedSphereExpr::right() const {
    if (node_->kind != Kind::ConnSum) {
        throw std::logic_error(
            "ImmersedSphereExpr: right child exists only under a connected "
            "sum");
    }
    return node_->children.back();
}

int ImmersedSphereExpr::embedded_dimension() const {
    if (node_->kind != Kind::Embedded) {
        throw std::logic_error(
            "ImmersedSphereExpr: embedded_dimension on a non-Embedded node");
    }
    return node_->dimension;
}

bool ImmersedSphereExpr::operator==(const ImmersedSphereExpr& other) const {
    if (node_->kind != other.node_->kind ||
        node_->dimension != other.node_->dimension) {
        return false;
    }
    return node_->children == other.node_->children;
}

std::string to_string(Liftability s) {
    switch (s) {
        case Liftability::Liftable:
            return "Liftable";
        case Liftability::NonLiftable:
            return "NonLiftable";
        case Liftability::Unknown:
            return "Unknown";
    }
    throw std::logic_error("to_string: unreachable");
}

LiftabilityResult liftable(const ImmersedSphereExpr& e) {
    LiftabilityResult result;
    switch (e.kind()) {
        case ImmersedSphereExpr::Kind::Giller:
            result.status = Liftability::NonLiftable;
            result.chain.push_back(
                "giller: the dimension-2 sphere with no lift -> NonLiftable");
            return result;
        case ImmersedSphereExpr::Kind::Embedded:
            result.status = Liftability::Liftable;
            result.chain.push_back(
                "embedded(" + std::to_string(e.embedded_dimension()) +
                "): an embedded sphere is its own lift -> Liftable");
            return result;
        case ImmersedSphereExpr::Kind::SpinI: {
            LiftabilityResult inner = liftable(e.left());
            result.status = inner.status;
            result.chain = std::move(inner.chain);
            result.chain.push_back(
                "spin: liftability passes to and from the spun sphere -> " +
                to_string(result.status));
            return result;
        }
        case ImmersedSphereExpr::Kind::ConnSum: {
            LiftabilityResult l = liftable(e.left());
            LiftabilityResult r = liftable(e.right());
            result.chain = std::move(l.chain);
            result.chain.insert(result.chain.end(), r.chain.begin(),
                                r.chain.end());
            if (l.status == Liftability::NonLiftable ||
                r.status == Liftability::NonLiftable) {
                result.status = Liftability::NonLiftable;
                result.chain.push_back(
                    "connsum: a non-liftable summand obstructs the sum -> "
                    "NonLiftable");
            } else if (l.status == Liftability::Liftable &&
                       r.status == Liftability::Liftable) {
                result.status = Liftability::Unknown;
                result.chain.push_back(
                    "connsum: two liftable summands prove nothing about the "
                    "sum -> Unknown");
            } else {
                result.status = Liftability::Unknown;
                result.chain.push_back(
                    "connsum: an undecided summand leaves the sum undecided "
                    "-> Unknown");
            }
            return result;
        }
    }
    throw std::logic_error("liftable: unreachable");
}

}  // namespace knotproj
