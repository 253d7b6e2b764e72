#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "knotproj/io.hpp"
#include "oracles.hpp"

using knotproj::DiskSystem;
using knotproj::FramedLink;
using knotproj::ImmersedSphereExpr;
using knotproj::Int;
using knotproj::IntMat;
using knotproj::ParseError;
using knotproj::ProjectionExpr;
using knotproj::SeifertMatrix;
using knotproj::SymForm;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(KNOTPROJ_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

template <typename Fn>
ParseError capture(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError(0, 0, "unreachable");
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse error formatting") {
    const ParseError e(4, 7, "something odd", {"<int>", "end of line"});
    CHECK(e.line() == 4);
    CHECK(e.column() == 7);
    CHECK(e.detail() == "something odd");
    CHECK(std::string(e.what()) ==
          "line 4, column 7: something odd (expected <int> | end of line)");
    const ParseError bare(1, 1, "plain");
    CHECK(std::string(bare.what()) == "line 1, column 1: plain");
}

TEST_CASE("parsing a seifert matrix file") {
    const SeifertMatrix s = knotproj::parse_seifert(slurp(golden_path("trefoil.seifert")));
    CHECK(s.k == 0);
    CHECK(s.a == IntMat{{-1, 1}, {0, -1}});
    CHECK(knotproj::alexander(s).str() == "1 - t + t^2");

    const SeifertMatrix empty = knotproj::parse_seifert("SEIFERT k=1 dim=0");
    CHECK(empty.k == 1);
    CHECK(empty.size() == 0);

    // Comments and blank lines are ignored; whitespace is free-form.
    const SeifertMatrix commented = knotproj::parse_seifert(
        "# reference trefoil data\nSEIFERT k=0 dim=2   # header\n\n"
        "  -1   1\n0 -1  # last row\n\n");
    CHECK(commented.a == IntMat{{-1, 1}, {0, -1}});

    // Explicitly signed entries are legal in every table format.
    const SeifertMatrix plus = knotproj::parse_seifert(
        "SEIFERT k=0 dim=2\n+1 -1\n+0 +1\n");
    CHECK(plus.a == IntMat{{1, -1}, {0, 1}});
}

TEST_CASE("seifert parse errors carry positions") {
    // Too few rows: reported just past the end of the two-line source.
    const ParseError missing = capture(
        [] { knotproj::parse_seifert("SEIFERT k=1 dim=2\n1 2"); });
    CHECK(missing.line() == 3);
    CHECK(missing.column() == 1);
    CHECK(missing.detail().find("missing") != std::string::npos);

    const ParseError bad_head =
        capture([] { knotproj::parse_seifert("SEIFRT k=1 dim=0"); });
    CHECK(bad_head.line() == 1);
    CHECK(bad_head.column() == 1);

    const ParseError bad_k =
        capture([] { knotproj::parse_seifert("SEIFERT k=-1 dim=0"); });
    CHECK(bad_k.line() == 1);
    CHECK(bad_k.column() == 9);

    const ParseError bad_entry = capture(
        [] { knotproj::parse_seifert("SEIFERT k=0 dim=1\nx"); });
    CHECK(bad_entry.line() == 2);
    CHECK(bad_entry.column() == 1);
    CHECK(bad_entry.detail() == "'x' is not an integer");
    CHECK(bad_entry.expected() == std::vector<std::string>{"<int>"});

    const ParseError short_row = capture(
        [] { knotproj::parse_seifert("SEIFERT k=0 dim=2\n1 2\n3"); });
    CHECK(short_row.line() == 3);
    CHECK(short_row.column() == 2);  // just after the lone entry

    const ParseError long_row = capture(
        [] { knotproj::parse_seifert("SEIFERT k=0 dim=1\n1 2"); });
    CHECK(long_row.line() == 2);
    CHECK(long_row.column() == 3);

    const ParseError trailing = capture(
        [] { knotproj::parse_seifert("SEIFERT k=0 dim=1\n1\nextra"); });
    CHECK(trailing.line() == 3);
    CHECK(trailing.column() == 1);

    const ParseError missing_field =
        capture([] { knotproj::parse_seifert("SEIFERT k=2"); });
    CHECK(missing_field.line() == 1);
    CHECK(missing_field.column() == 12);
}

TEST_CASE("parsing symmetric form files") {
    const SymForm h = knotproj::parse_form(slurp(golden_path("hyperbolic.form")));
    CHECK(h == knotproj::hyperbolic());
    CHECK(knotproj::parse_form("FORM dim=0").size() == 0);

    const ParseError asym = capture(
        [] { knotproj::parse_form("FORM dim=2\n0 5\n-5 0"); });
    CHECK(asym.line() == 3);
    CHECK(asym.column() == 1);  // the offending mirror entry
    CHECK(asym.detail() ==
          "matrix not symmetric: entry (1,2) is 5 but entry (2,1) is -5");
}

TEST_CASE("parsing disk system files") {
    const DiskSystem kirby = knotproj::parse_disks(slurp(golden_path("kirby.disks")));
    CHECK(kirby.size() == 22);
    CHECK(kirby.targets == knotproj::kirby_disk_targets());
    for (const auto& d : kirby.disks) CHECK(d.empty());

    const DiskSystem ds =
        knotproj::parse_disks("DISKS n=2\n0 : +1 -1\n-3 : -1\n");
    CHECK(ds.disks == std::vector<std::vector<int>>{{1, -1}, {-1}});
    CHECK(ds.targets == std::vector<long>{0, -3});

    const ParseError bad_sign = capture(
        [] { knotproj::parse_disks("DISKS n=1\n0 : +2\n"); });
    CHECK(bad_sign.line() == 2);
    CHECK(bad_sign.column() == 5);
    CHECK(bad_sign.expected() == std::vector<std::string>{"+1", "-1"});

    const ParseError no_colon = capture(
        [] { knotproj::parse_disks("DISKS n=1\n0 +1\n"); });
    CHECK(no_colon.line() == 2);
    CHECK(no_colon.column() == 3);
}

TEST_CASE("parsing framed link files") {
    const FramedLink hopf =
        knotproj::parse_framedlink(slurp(golden_path("hopf.framedlink")));
    CHECK(hopf.size == 2);
    CHECK(hopf.linking == IntMat{{0, 1}, {1, 0}});
    CHECK(hopf.framings == std::vector<Int>{0, 0});
    CHECK(knotproj::intersection_form(hopf) == knotproj::hyperbolic());

    const FramedLink framed =
        knotproj::parse_framedlink("FRAMEDLINK dim=2\n-2 1\n1 3\n");
    CHECK(framed.framings == std::vector<Int>{-2, 3});
    CHECK(framed.linking == IntMat{{0, 1}, {1, 0}});

    const ParseError asym = capture([] {
        knotproj::parse_framedlink("FRAMEDLINK dim=2\n0 1\n2 0\n");
    });
    CHECK(asym.detail().find("not symmetric") != std::string::npos);
}

TEST_CASE("table round trips") {
    const SeifertMatrix ks = knotproj::kummer_seifert();
    CHECK(knotproj::parse_seifert(knotproj::render_seifert(ks)) == ks);
    const SeifertMatrix trefoil(0, IntMat{{-1, 1}, {0, -1}});
    CHECK(knotproj::render_seifert(trefoil) == slurp(golden_path("trefoil.seifert")));

    const SymForm kf = knotproj::kummer_form();
    CHECK(knotproj::parse_form(knotproj::render_form(kf)) == kf);
    CHECK(knotproj::render_form(knotproj::hyperbolic()) ==
          slurp(golden_path("hyperbolic.form")));

    const DiskSystem kirby = knotproj::kirby_disk_system();
    CHECK(knotproj::render_disks(kirby) == slurp(golden_path("kirby.disks")));
    const DiskSystem replay = knotproj::after_moves(
        kirby, knotproj::adjust_to_targets(kirby));
    const DiskSystem reparsed = knotproj::parse_disks(knotproj::render_disks(replay));
    CHECK(reparsed.disks == replay.disks);
    CHECK(reparsed.targets == replay.targets);

    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = rng() % 4;
        IntMat linking(n, std::vector<Int>(n, 0));
        std::vector<Int> framings;
        for (std::size_t i = 0; i < n; ++i) {
            framings.push_back(oracles::rand_range(rng, -9, 9));
            for (std::size_t j = i + 1; j < n; ++j) {
                linking[i][j] = oracles::rand_range(rng, -9, 9);
                linking[j][i] = linking[i][j];
            }
        }
        const FramedLink fl(linking, framings);
        const FramedLink back =
            knotproj::parse_framedlink(knotproj::render_framedlink(fl));
        CHECK(back.linking == fl.linking);
        CHECK(back.framings == fl.framings);

        const SeifertMatrix s = oracles::random_valid_seifert(rng, 1, 3);
        CHECK(knotproj::parse_seifert(knotproj::render_seifert(s)) == s);
    }
}

TEST_CASE("parsing projection expressions") {
    CHECK(knotproj::parse_proj("double(base(kummer))") ==
          ProjectionExpr::doubled(ProjectionExpr::base()));
    CHECK(knotproj::mu(knotproj::parse_proj(
              "stack(base(kummer),base(kummer))")) == 42);
    CHECK(knotproj::parse_proj("base(kummer,mu=4)") == ProjectionExpr::base(4));
    CHECK(knotproj::parse_proj("base(kummer)", 7) == ProjectionExpr::base(7));
    CHECK(knotproj::parse_proj(
              "  mirror ( base ( kummer , mu = 3 ) )  # note\n") ==
          ProjectionExpr::mirror(ProjectionExpr::base(3)));
    CHECK(knotproj::parse_proj(slurp(golden_path("double_base.proj"))) ==
          ProjectionExpr::doubled(ProjectionExpr::base()));

    const ParseError typo = capture([] { knotproj::parse_proj("stak(base(kummer))"); });
    CHECK(typo.line() == 1);
    CHECK(typo.column() == 1);
    CHECK(typo.detail() == "unknown projection constructor 'stak'");

    const ParseError semantic = capture([] {
        knotproj::parse_proj("stack(base(kummer),spin(base(kummer)))");
    });
    CHECK(semantic.line() == 1);
    CHECK(semantic.column() == 1);  // anchored at the stack head
    CHECK(semantic.detail().find("dimension") != std::string::npos);

    const ParseError bad_mu =
        capture([] { knotproj::parse_proj("base(kummer,mu=0)"); });
    CHECK(bad_mu.column() == 16);

    const ParseError bad_option =
        capture([] { knotproj::parse_proj("base(kummer,nu=2)"); });
    CHECK(bad_option.column() == 13);

    const ParseError trailing =
        capture([] { knotproj::parse_proj("base(kummer) base"); });
    CHECK(trailing.column() == 14);

    const ParseError eof = capture([] { knotproj::parse_proj("double(base(kummer)"); });
    CHECK(eof.detail() == "unexpected end of input");
}

TEST_CASE("parsing immersed sphere expressions") {
    const ImmersedSphereExpr tower =
        knotproj::parse_imm(slurp(golden_path("tower.imm")));
    CHECK(tower == ImmersedSphereExpr::spin(
                       ImmersedSphereExpr::spin(ImmersedSphereExpr::giller())));
    CHECK(tower.dimension() == 4);
    CHECK(knotproj::liftable(tower).status ==
          knotproj::Liftability::NonLiftable);

    CHECK(knotproj::parse_imm("connsum(embedded(2),giller)") ==
          ImmersedSphereExpr::connsum(ImmersedSphereExpr::embedded(2),
                                      ImmersedSphereExpr::giller()));

    const ParseError mismatch = capture([] {
        knotproj::parse_imm("connsum(embedded(3),giller)");
    });
    CHECK(mismatch.line() == 1);
    CHECK(mismatch.column() == 1);
    CHECK(mismatch.detail().find("dimension") != std::string::npos);

    const ParseError bad_dim = capture([] { knotproj::parse_imm("embedded(0)"); });
    CHECK(bad_dim.column() == 10);

    const ParseError unknown = capture([] { knotproj::parse_imm("torus"); });
    CHECK(unknown.detail() == "unknown immersed-sphere constructor 'torus'");
}

TEST_CASE("expression round trips") {
    const std::vector<std::string> proj_sources = {
        "base(kummer,mu=21)",
        "stack(base(kummer,mu=21),base(kummer,mu=21))",
        "double(base(kummer,mu=1))",
        "mirror(stack(base(kummer,mu=2),double(base(kummer,mu=3))))",
        "spin(spin(base(kummer,mu=21)))",
    };
    for (const auto& src : proj_sources) {
        const ProjectionExpr p = knotproj::parse_proj(src);
        CHECK(knotproj::render_proj(p) == src);
        CHECK(knotproj::parse_proj(knotproj::render_proj(p)) == p);
    }
    // The renderer pins mu explicitly, so defaults survive the round trip.
    CHECK(knotproj::render_proj(knotproj::parse_proj("base(kummer)")) ==
          "base(kummer,mu=21)");

    const std::vector<std::string> imm_sources = {
        "giller",
        "embedded(5)",
        "spin(connsum(embedded(2),giller))",
        "connsum(spin(giller),embedded(3))",
    };
    for (const auto& src : imm_sources) {
        const ImmersedSphereExpr e = knotproj::parse_imm(src);
        CHECK(knotproj::render_imm(e) == src);
        CHECK(knotproj::parse_imm(knotproj::render_imm(e)) == e);
    }
}

TEST_CASE("malformed input never escapes as a foreign exception") {
    std::mt19937_64 rng(89);
    const std::string alphabet =
        "ABCDEFKMRSIOLN()=,:+-0123456789 \n#abcdeghiklmnoprstuvwz_";
    for (int trial = 0; trial < 400; ++trial) {
        std::string text;
        const std::size_t len = rng() % 60;
        for (std::size_t i = 0; i < len; ++i) {
            text += alphabet[rng() % alphabet.size()];
        }
        for (int which = 0; which < 6; ++which) {
            try {
                switch (which) {
                    case 0: knotproj::parse_seifert(text); break;
                    case 1: knotproj::parse_form(text); break;
                    case 2: knotproj::parse_disks(text); break;
                    case 3: knotproj::parse_framedlink(text); break;
                    case 4: knotproj::parse_proj(text); break;
                    case 5: knotproj::parse_imm(text); break;
                }
            } catch (const ParseError& e) {
                CHECK(e.line() >= 1);
                CHECK(e.column() >= 1);
            }
            // Anything else (or a crash) fails the test run.
        }
    }

    // Token-level mutations of valid sources stay inside ParseError too.
    const std::string base = slurp(golden_path("trefoil.seifert"));
    for (int trial = 0; trial < 200; ++trial) {
        std::string text = base;
        const std::size_t pos = rng() % text.size();
        switch (rng() % 3) {
            case 0: text[pos] = alphabet[rng() % alphabet.size()]; break;
            case 1: text.erase(pos, 1); break;
            case 2: text.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
        }
        try {
            knotproj::parse_seifert(text);
        } catch (const ParseError& e) {
            CHECK(e.line() >= 1);
            CHECK(e.line() <= 5);  // one mutation adds at most one line
            CHECK(e.column() >= 1);
        }
    }
}

}  // TEST_SUITE
