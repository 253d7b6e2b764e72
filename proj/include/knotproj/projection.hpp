#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotproj/seifert.hpp"
#include "knotproj/spin.hpp"

namespace knotproj {

/// Default number of singular-set components of the base projection: the
/// minimal disk system meeting the reference targets has 21 double points.
inline constexpr int kDefaultBaseMu = 21;

/// Compositional projection expression. Value-semantic immutable tree:
///   Base    — the reference 3-knot projection built from the Kummer surface,
///             with mu singular components;
///   Stack   — parallel displacement of several projections into one;
///   Double  — a projection together with a displaced mirrored copy;
///   Mirror  — the mirrored projection;
///   Spin    — the spun projection, one dimension up.
class ProjectionExpr {
  public:
    enum class Kind { Base, Stack, Double, Mirror, Spin };

    static ProjectionExpr base(int mu = kDefaultBaseMu);
    /// Throws std::invalid_argument when parts is empty or the parts have
    /// different dimensions.
    static ProjectionExpr stack(std::vector<ProjectionExpr> parts);
    static ProjectionExpr doubled(ProjectionExpr inner);
    static ProjectionExpr mirror(ProjectionExpr inner);
    static ProjectionExpr spin(ProjectionExpr inner);

    Kind kind() const { return node_->kind; }
    /// Base only.
    int base_mu() const;
    /// Stack only.
    const std::vector<ProjectionExpr>& parts() const;
    /// Double, Mirror, Spin only.
    const ProjectionExpr& inner() const;

    bool operator==(const ProjectionExpr& other) const;

  private:
    struct Node {
        Kind kind;
        int mu = 0;                         // Base
        std::vector<ProjectionExpr> parts;  // Stack; singleton for unary nodes
    };
    explicit ProjectionExpr(std::shared_ptr<const Node> node)
        : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Number of singular-set components: Base -> mu, Stack -> sum, Double -> 2x,
/// Mirror and Spin -> unchanged.
int mu(const ProjectionExpr& p);

/// Dimension of the knots projecting onto p: Base -> 3, Spin adds one,
/// the rest preserve.
int dimension(const ProjectionExpr& p);

/// One connected component of the singular point set.
struct SingularComponent {
    int id = 0;             // 1-based index
    int spin_factors = 0;   // m in Torus x (S^1)^m
    bool double_points_only = true;

    /// "Torus", "Torus x S^1", "Torus x S^1 x S^1", ...
    std::string topology() const;
};

/// The mu(p) components with their topology descriptors.
std::vector<SingularComponent> singular_components(const ProjectionExpr& p);

/// Over/under resolution choice at each singular component: +1 or -1 per
/// component, mu(p) entries in all.
struct LiftAssignment {
    std::vector<int> rho;

    LiftAssignment() = default;
    /// Throws std::invalid_argument on entries other than +1/-1.
    explicit LiftAssignment(std::vector<int> rho);
};

/// Render rho as one character per entry: '+' for +1, '-' for -1.
std::string rho_string(const std::vector<int>& rho);

/// The knot lifting p under rho. Base ignores the rho values (they label the
/// equivalence class, not the invariants); Stack takes the connected sum of
/// part lifts under the split sub-assignment; Double sums the lift of the
/// inner copy (first half of rho) with the mirror of its second-half lift;
/// Mirror mirrors; Spin spins. Throws std::invalid_argument when rho's
/// length is not mu(p).
KnotModel lift(const ProjectionExpr& p, const LiftAssignment& rho);

/// One class of the rho-classification together with its lift's invariants.
struct LiftClass {
    std::vector<int> rho;
    KnotModel model;
    bool knotted = false;  // certified by a nontrivial Alexander polynomial
};

struct ClassificationReport {
    int mu = 0;
    bool exhaustive = false;       // all 2^mu assignments enumerated
    std::uint64_t seed = 0;        // meaningful when sampled
    std::vector<LiftClass> classes;
    /// Wording of what the classes mean; equal rho implies equivalent lifts,
    /// distinctness of classes is not claimed.
    std::string note;
};

/// Partition lift assignments by rho. Exhaustive (lexicographic, +1 before
/// -1) when mu <= 20; otherwise `sample` distinct assignments (default 100)
/// are drawn with the given seed and reported in the same order.
ClassificationReport classify_lifts(
    const ProjectionExpr& p,
    std::optional<std::size_t> sample = std::nullopt,
    std::uint64_t seed = 0);

/// The projection expression whose every lift has signature 16*r:
/// r = 0 -> Double(Base); r < 0 -> Stack of |r| Bases (a single Base for
/// r = -1); r > 0 -> Mirror of that stack. base_mu sets the mu of every Base.
ProjectionExpr realize_signature(long r, int base_mu = kDefaultBaseMu);

/// Immersed-sphere expression for the liftability calculus:
///   Giller      — the dimension-2 sphere known to admit no lift;
///   Embedded(n) — an embedded n-sphere;
///   SpinI       — the spun immersed sphere, one dimension up;
///   ConnSum     — connected sum (equal dimensions).
class ImmersedSphereExpr {
  public:
    enum class Kind { Giller, Embedded, SpinI, ConnSum };

    static ImmersedSphereExpr giller();
    /// Throws std::invalid_argument when n < 1.
    static ImmersedSphereExpr embedded(int n);
    static ImmersedSphereExpr spin(ImmersedSphereExpr inner);
    /// Throws std::invalid_argument on dimension mismatch.
    static ImmersedSphereExpr connsum(ImmersedSphereExpr left,
                                      ImmersedSphereExpr right);

    Kind kind() const { return node_->kind; }
    int dimension() const { return node_->dimension; }
    /// SpinI and ConnSum children.
    const ImmersedSphereExpr& left() const;
    const ImmersedSphereExpr& right() const;
    /// Embedded only.
    int embedded_dimension() const;

    bool operator==(const ImmersedSphereExpr& other) const;

  private:
    struct Node {
        Kind kind;
        int dimension = 0;
        std::vector<ImmersedSphereExpr> children;
    };
    explicit ImmersedSphereExpr(std::shared_ptr<const Node> node)
        : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class Liftability { Liftable, NonLiftable, Unknown };

std::string to_string(Liftability s);

struct LiftabilityResult {
    Liftability status = Liftability::Unknown;
    std::vector<std::string> chain;  // rule applications, leaves first
};

/// Inference rules: Embedded is Liftable (it is its own lift); Giller is
/// NonLiftable; SpinI passes the status through unchanged; ConnSum is
/// NonLiftable as soon as one summand is, and Unknown otherwise (two
/// liftable summands prove nothing about the sum).
LiftabilityResult liftable(const ImmersedSphereExpr& e);

}  // namespace knotproj
