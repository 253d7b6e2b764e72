#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "knotproj/projection.hpp"
#include "knotproj/seifert.hpp"

using knotproj::ImmersedSphereExpr;
using knotproj::KnotModel;
using knotproj::LaurentPoly;
using knotproj::Liftability;
using knotproj::LiftAssignment;
using knotproj::ProjectionExpr;

namespace {

std::vector<int> all_plus(int n) { return std::vector<int>(n, 1); }

LaurentPoly kummer_delta() {
    return knotproj::alexander(knotproj::kummer_seifert());
}

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("mu") {
    CHECK(knotproj::mu(ProjectionExpr::base()) == 21);
    CHECK(knotproj::mu(ProjectionExpr::base(5)) == 5);
    CHECK(knotproj::mu(ProjectionExpr::doubled(ProjectionExpr::base())) == 42);
    CHECK(knotproj::mu(ProjectionExpr::stack(
              {ProjectionExpr::base(2), ProjectionExpr::base(3)})) == 5);
    CHECK(knotproj::mu(ProjectionExpr::mirror(ProjectionExpr::base(7))) == 7);
    CHECK(knotproj::mu(ProjectionExpr::spin(ProjectionExpr::base(7))) == 7);
}

TEST_CASE("dimension") {
    CHECK(knotproj::dimension(ProjectionExpr::base()) == 3);
    CHECK(knotproj::dimension(ProjectionExpr::mirror(ProjectionExpr::base())) == 3);
    CHECK(knotproj::dimension(ProjectionExpr::spin(ProjectionExpr::base())) == 4);
    CHECK(knotproj::dimension(ProjectionExpr::spin(
              ProjectionExpr::spin(ProjectionExpr::base()))) == 5);
    CHECK_THROWS_AS(
        ProjectionExpr::stack({ProjectionExpr::base(),
                               ProjectionExpr::spin(ProjectionExpr::base())}),
        std::invalid_argument);
    CHECK_THROWS_AS(ProjectionExpr::stack({}), std::invalid_argument);
    CHECK_THROWS_AS(ProjectionExpr::base(0), std::invalid_argument);
}

TEST_CASE("structure accessors") {
    const ProjectionExpr b = ProjectionExpr::base(4);
    CHECK(b.kind() == ProjectionExpr::Kind::Base);
    CHECK(b.base_mu() == 4);
    const ProjectionExpr d = ProjectionExpr::doubled(b);
    CHECK(d.kind() == ProjectionExpr::Kind::Double);
    CHECK(d.inner() == b);
    const ProjectionExpr s = ProjectionExpr::stack({b, d});
    CHECK(s.parts().size() == 2);
    CHECK(s.parts()[0] == b);
    CHECK(s.parts()[1] == d);
    CHECK(!(b == d));
    CHECK_THROWS_AS(b.inner(), std::logic_error);
    CHECK_THROWS_AS(d.base_mu(), std::logic_error);
}

TEST_CASE("singular components") {
    const auto base_comps = knotproj::singular_components(ProjectionExpr::base());
    REQUIRE(base_comps.size() == 21);
    for (int i = 0; i < 21; ++i) {
        CHECK(base_comps[i].id == i + 1);
        CHECK(base_comps[i].spin_factors == 0);
        CHECK(base_comps[i].double_points_only);
        CHECK(base_comps[i].topology() == "Torus");
    }

    const auto spun = knotproj::singular_components(
        ProjectionExpr::spin(ProjectionExpr::base(2)));
    REQUIRE(spun.size() == 2);
    CHECK(spun[0].topology() == "Torus x S^1");
    CHECK(spun[1].topology() == "Torus x S^1");

    const auto spun2 = knotproj::singular_components(ProjectionExpr::spin(
        ProjectionExpr::spin(ProjectionExpr::base(1))));
    REQUIRE(spun2.size() == 1);
    CHECK(spun2[0].spin_factors == 2);
    CHECK(spun2[0].topology() == "Torus x S^1 x S^1");

    // Mixed depths through a stack of spun and plain copies are impossible
    // (dimensions must agree), but doubling after a spin keeps the factor
    // count of both halves.
    const auto doubled = knotproj::singular_components(
        ProjectionExpr::doubled(ProjectionExpr::spin(ProjectionExpr::base(3))));
    REQUIRE(doubled.size() == 6);
    for (const auto& c : doubled) {
        CHECK(c.spin_factors == 1);
        CHECK(c.double_points_only);
    }
}

TEST_CASE("lift assignments") {
    CHECK_THROWS_AS(LiftAssignment({1, 0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(LiftAssignment({2}), std::invalid_argument);
    CHECK(knotproj::rho_string({1, -1, 1}) == "+-+");
    CHECK(knotproj::rho_string({}) == "");
}

TEST_CASE("lifting the base projection") {
    const ProjectionExpr base = ProjectionExpr::base();
    const KnotModel k = knotproj::lift(base, LiftAssignment(all_plus(21)));
    CHECK(k.n == 3);
    CHECK(k.simple);
    REQUIRE(k.sigma.has_value());
    CHECK(*k.sigma == -16);
    CHECK(k.delta == kummer_delta());
    CHECK_FALSE(knotproj::is_unknotted_simple(k));

    // Every resolution choice lifts to the same model.
    std::vector<int> mixed = all_plus(21);
    mixed[0] = -1;
    mixed[20] = -1;
    mixed[7] = -1;
    const KnotModel k2 = knotproj::lift(base, LiftAssignment(mixed));
    CHECK(k2.delta == k.delta);
    CHECK(*k2.sigma == -16);

    CHECK_THROWS_AS(knotproj::lift(base, LiftAssignment(all_plus(20))),
                    std::invalid_argument);
}

TEST_CASE("lifting composites") {
    const ProjectionExpr dbl = ProjectionExpr::doubled(ProjectionExpr::base());
    const KnotModel kd = knotproj::lift(dbl, LiftAssignment(all_plus(42)));
    CHECK(kd.n == 3);
    REQUIRE(kd.sigma.has_value());
    CHECK(*kd.sigma == 0);
    CHECK(!(kd.delta == LaurentPoly::one()));  // still knotted
    CHECK_FALSE(knotproj::is_unknotted_simple(kd));

    const ProjectionExpr two = ProjectionExpr::stack(
        {ProjectionExpr::base(), ProjectionExpr::base()});
    const KnotModel k2 = knotproj::lift(two, LiftAssignment(all_plus(42)));
    CHECK(*k2.sigma == -32);
    const KnotModel one = knotproj::lift(ProjectionExpr::base(),
                                         LiftAssignment(all_plus(21)));
    CHECK(k2.delta ==
          knotproj::canonical_delta(one.delta * one.delta));

    const ProjectionExpr mir = ProjectionExpr::mirror(ProjectionExpr::base());
    const KnotModel km = knotproj::lift(mir, LiftAssignment(all_plus(21)));
    CHECK(*km.sigma == 16);

    const ProjectionExpr spun = ProjectionExpr::spin(ProjectionExpr::base());
    const KnotModel ks = knotproj::lift(spun, LiftAssignment(all_plus(21)));
    CHECK(ks.n == 4);
    CHECK(ks.delta == kummer_delta());
    CHECK_FALSE(ks.sigma.has_value());
    CHECK(ks.spin_count == 1);
}

TEST_CASE("exhaustive classification") {
    const auto report =
        knotproj::classify_lifts(ProjectionExpr::base(3));
    CHECK(report.mu == 3);
    CHECK(report.exhaustive);
    REQUIRE(report.classes.size() == 8);
    // Lexicographic with +1 before -1.
    CHECK(knotproj::rho_string(report.classes.front().rho) == "+++");
    CHECK(knotproj::rho_string(report.classes[1].rho) == "++-");
    CHECK(knotproj::rho_string(report.classes.back().rho) == "---");
    for (const auto& c : report.classes) {
        CHECK(*c.model.sigma == -16);
        CHECK(c.model.delta == kummer_delta());
        CHECK(c.knotted);
    }
    CHECK(report.note.find("rho") != std::string::npos);

    const auto doubled = knotproj::classify_lifts(
        ProjectionExpr::doubled(ProjectionExpr::base(1)));
    CHECK(doubled.mu == 2);
    REQUIRE(doubled.classes.size() == 4);
    for (const auto& c : doubled.classes) {
        CHECK(*c.model.sigma == 0);
        CHECK(c.knotted);
    }
}

TEST_CASE("sampled classification") {
    const ProjectionExpr base = ProjectionExpr::base();  // mu = 21 > 20
    const auto report = knotproj::classify_lifts(base, 50, 7);
    CHECK(report.mu == 21);
    CHECK_FALSE(report.exhaustive);
    CHECK(report.seed == 7);
    REQUIRE(report.classes.size() == 50);
    std::set<std::string> seen;
    for (const auto& c : report.classes) {
        REQUIRE(c.rho.size() == 21);
        seen.insert(knotproj::rho_string(c.rho));
        CHECK(*c.model.sigma == -16);
        CHECK(c.knotted);
    }
    CHECK(seen.size() == 50);  // distinct assignments

    // Classes are reported in the same +1-before--1 order as exhaustive mode.
    std::vector<std::string> order;
    for (const auto& c : report.classes) order.push_back(knotproj::rho_string(c.rho));
    std::vector<std::string> sorted = order;
    std::sort(sorted.begin(), sorted.end());  // '+' < '-' in ASCII
    CHECK(order == sorted);

    // Deterministic for a fixed seed, virtually surely different across seeds.
    const auto again = knotproj::classify_lifts(base, 50, 7);
    REQUIRE(again.classes.size() == 50);
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(again.classes[i].rho == report.classes[i].rho);
    }
    const auto other = knotproj::classify_lifts(base, 50, 8);
    bool identical = true;
    for (std::size_t i = 0; i < 50; ++i) {
        if (!(other.classes[i].rho == report.classes[i].rho)) identical = false;
    }
    CHECK_FALSE(identical);

    // Requesting more samples than there are assignments is refused.
    CHECK_THROWS_AS(knotproj::classify_lifts(
                        ProjectionExpr::doubled(ProjectionExpr::base(21)),
                        5'000'000'000'000ULL, 1),
                    std::invalid_argument);
}

TEST_CASE("realize_signature structure") {
    CHECK(knotproj::realize_signature(-1) == ProjectionExpr::base());
    CHECK(knotproj::realize_signature(-2) ==
          ProjectionExpr::stack({ProjectionExpr::base(), ProjectionExpr::base()}));
    CHECK(knotproj::realize_signature(0) ==
          ProjectionExpr::doubled(ProjectionExpr::base()));
    CHECK(knotproj::realize_signature(1) ==
          ProjectionExpr::mirror(ProjectionExpr::base()));
    CHECK(knotproj::realize_signature(2) ==
          ProjectionExpr::mirror(ProjectionExpr::stack(
              {ProjectionExpr::base(), ProjectionExpr::base()})));
    CHECK(knotproj::realize_signature(-1, 4) == ProjectionExpr::base(4));
}

TEST_CASE("realized projections meet their signature target") {
    for (long r = -3; r <= 3; ++r) {
        const ProjectionExpr p = knotproj::realize_signature(r, 2);
        CHECK(knotproj::dimension(p) == 3);
        const auto report = knotproj::classify_lifts(p);
        CHECK(report.exhaustive);
        for (const auto& c : report.classes) {
            REQUIRE(c.model.sigma.has_value());
            CHECK(*c.model.sigma == 16 * r);
            CHECK(c.knotted);
            CHECK_FALSE(knotproj::is_unknotted_simple(c.model));
        }
        for (const auto& comp : knotproj::singular_components(p)) {
            CHECK(comp.double_points_only);
            CHECK(comp.topology() == "Torus");
        }
    }
}

TEST_CASE("signature counts mirrored bases") {
    // sigma(lift) = 16 * (signed base count): each Base contributes -1,
    // Mirror negates its subtree, Double contributes 0, Stack adds.
    const ProjectionExpr b = ProjectionExpr::base(1);
    struct Case {
        ProjectionExpr p;
        long count;
    };
    const std::vector<Case> cases = {
        {ProjectionExpr::stack({ProjectionExpr::mirror(b), b}), 0},
        {ProjectionExpr::stack({b, b, ProjectionExpr::mirror(b)}), -1},
        {ProjectionExpr::mirror(ProjectionExpr::mirror(b)), -1},
        {ProjectionExpr::stack({ProjectionExpr::doubled(b), b}), -1},
        {ProjectionExpr::mirror(ProjectionExpr::stack(
             {b, ProjectionExpr::doubled(ProjectionExpr::mirror(b))})),
         1},
    };
    for (const auto& c : cases) {
        const KnotModel k =
            knotproj::lift(c.p, LiftAssignment(all_plus(knotproj::mu(c.p))));
        REQUIRE(k.sigma.has_value());
        CHECK(*k.sigma == 16 * c.count);
    }
}

TEST_CASE("liftability of immersed spheres") {
    ImmersedSphereExpr g = ImmersedSphereExpr::giller();
    CHECK(g.dimension() == 2);
    CHECK(knotproj::liftable(g).status == Liftability::NonLiftable);
    for (int k = 1; k <= 10; ++k) {
        g = ImmersedSphereExpr::spin(g);
        CHECK(g.dimension() == 2 + k);
        const auto res = knotproj::liftable(g);
        CHECK(res.status == Liftability::NonLiftable);
        CHECK(res.chain.size() == static_cast<std::size_t>(k + 1));
    }

    ImmersedSphereExpr e = ImmersedSphereExpr::embedded(2);
    CHECK(knotproj::liftable(e).status == Liftability::Liftable);
    for (int k = 1; k <= 10; ++k) {
        e = ImmersedSphereExpr::spin(e);
        CHECK(knotproj::liftable(e).status == Liftability::Liftable);
    }

    const auto mixed = knotproj::liftable(ImmersedSphereExpr::connsum(
        ImmersedSphereExpr::embedded(2), ImmersedSphereExpr::giller()));
    CHECK(mixed.status == Liftability::NonLiftable);

    const auto both = knotproj::liftable(ImmersedSphereExpr::connsum(
        ImmersedSphereExpr::embedded(2), ImmersedSphereExpr::embedded(2)));
    CHECK(both.status == Liftability::Unknown);

    // An Unknown summand keeps the sum undecided.
    const auto nested = knotproj::liftable(ImmersedSphereExpr::connsum(
        ImmersedSphereExpr::connsum(ImmersedSphereExpr::embedded(2),
                                    ImmersedSphereExpr::embedded(2)),
        ImmersedSphereExpr::embedded(2)));
    CHECK(nested.status == Liftability::Unknown);

    // ... unless the other summand is already obstructed.
    const auto blocked = knotproj::liftable(ImmersedSphereExpr::connsum(
        ImmersedSphereExpr::connsum(ImmersedSphereExpr::embedded(2),
                                    ImmersedSphereExpr::embedded(2)),
        ImmersedSphereExpr::giller()));
    CHECK(blocked.status == Liftability::NonLiftable);
}

TEST_CASE("immersed sphere construction rules") {
    CHECK_THROWS_AS(ImmersedSphereExpr::embedded(0), std::invalid_argument);
    CHECK_THROWS_AS(
        ImmersedSphereExpr::connsum(ImmersedSphereExpr::embedded(3),
                                    ImmersedSphereExpr::giller()),
        std::invalid_argument);
    const ImmersedSphereExpr ok = ImmersedSphereExpr::connsum(
        ImmersedSphereExpr::embedded(3),
        ImmersedSphereExpr::spin(ImmersedSphereExpr::giller()));
    CHECK(ok.dimension() == 3);
    CHECK(knotproj::liftable(ok).status == Liftability::NonLiftable);
    CHECK(ok.left() == ImmersedSphereExpr::embedded(3));
    CHECK(ok.left().embedded_dimension() == 3);
}

TEST_CASE("liftability verdicts come with rule chains") {
    const auto res = knotproj::liftable(ImmersedSphereExpr::spin(
        ImmersedSphereExpr::connsum(ImmersedSphereExpr::embedded(2),
                                    ImmersedSphereExpr::giller())));
    CHECK(res.status == Liftability::NonLiftable);
    REQUIRE(!res.chain.empty());
    CHECK(res.chain.back().find("NonLiftable") != std::string::npos);
    CHECK(knotproj::to_string(Liftability::Liftable) == "Liftable");
    CHECK(knotproj::to_string(Liftability::NonLiftable) == "NonLiftable");
    CHECK(knotproj::to_string(Liftability::Unknown) == "Unknown");
}

}  // TEST_SUITE
