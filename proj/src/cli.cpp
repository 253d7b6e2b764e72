#include "knotproj/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "knotproj/handles.hpp"
#include "knotproj/io.hpp"
#include "knotproj/projection.hpp"
#include "knotproj/seifert.hpp"
#include "knotproj/spin.hpp"

namespace knotproj {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::string first_word(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            break;
        }
    }
    std::string word;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
        word += text[i];
        ++i;
    }
    return word;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_model(std::ostream& out, const KnotModel& m) {
    out << "n=" << m.n << "\n";
    out << "delta=" << m.delta.str() << "\n";
    if (m.sigma) {
        out << "sigma=" << *m.sigma << "\n";
    } else {
        out << "sigma=n/a\n";
    }
    out << "simple=" << yes_no(m.simple) << "\n";
    out << "knotted=" << yes_no(!(m.delta == LaurentPoly::one())) << "\n";
    out << "origin=" << m.origin << "\n";
}

std::string class_row(const LiftClass& c) {
    std::ostringstream os;
    os << "rho=" << rho_string(c.rho) << " n=" << c.model.n;
    if (c.model.sigma) {
        os << " sigma=" << *c.model.sigma;
    } else {
        os << " sigma=n/a";
    }
    os << " knotted=" << yes_no(c.knotted);
    os << " delta=" << c.model.delta.str();
    return os.str();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Exact invariants of high-dimensional knots and their "
                 "projections"};
    app.require_subcommand(1);
    int exit_code = 0;

    // alex <seifert-file>
    std::string alex_file;
    auto* alex_cmd =
        app.add_subcommand("alex", "Alexander polynomial of a Seifert matrix");
    alex_cmd->add_option("file", alex_file, "SEIFERT file")->required();
    alex_cmd->callback([&] {
        const SeifertMatrix s = parse_seifert(read_file(alex_file));
        out << alexander(s).str() << "\n";
    });

    // sig <seifert-file|form-file>
    std::string sig_file;
    auto* sig_cmd = app.add_subcommand(
        "sig", "Signature of a Seifert matrix or a symmetric form");
    sig_cmd->add_option("file", sig_file, "SEIFERT or FORM file")->required();
    sig_cmd->callback([&] {
        const std::string text = read_file(sig_file);
        const std::string word = first_word(text);
        if (word == "SEIFERT") {
            out << knot_signature(parse_seifert(text)) << "\n";
        } else if (word == "FORM") {
            out << signature(parse_form(text)) << "\n";
        } else {
            throw ParseError(1, 1, "unrecognized file header '" + word + "'",
                             {"SEIFERT", "FORM"});
        }
    });

    // sum <s1> <s2> -o <out>
    std::string sum_a, sum_b, sum_out;
    auto* sum_cmd =
        app.add_subcommand("sum", "Connected sum of two Seifert matrices");
    sum_cmd->add_option("first", sum_a, "SEIFERT file")->required();
    sum_cmd->add_option("second", sum_b, "SEIFERT file")->required();
    sum_cmd->add_option("-o,--output", sum_out, "output SEIFERT file")
        ->required();
    sum_cmd->callback([&] {
        const SeifertMatrix a = parse_seifert(read_file(sum_a));
        const SeifertMatrix b = parse_seifert(read_file(sum_b));
        write_file(sum_out, render_seifert(connected_sum(a, b)));
    });

    // mirror <s> -o <out>
    std::string mirror_in, mirror_out;
    auto* mirror_cmd = app.add_subcommand(
        "mirror", "Mirror image with reversed orientation of a Seifert matrix");
    mirror_cmd->add_option("file", mirror_in, "SEIFERT file")->required();
    mirror_cmd->add_option("-o,--output", mirror_out, "output SEIFERT file")
        ->required();
    mirror_cmd->callback([&] {
        const SeifertMatrix s = parse_seifert(read_file(mirror_in));
        write_file(mirror_out, render_seifert(mirror_reverse(s)));
    });

    // spin --seifert <file> | --proj <file> [--times K] [--mu M]
    std::string spin_seifert, spin_proj;
    int spin_times = 1;
    int spin_mu = kDefaultBaseMu;
    auto* spin_cmd =
        app.add_subcommand("spin", "Spin a knot model a number of times");
    spin_cmd->add_option("--seifert", spin_seifert,
                         "SEIFERT file for the base model");
    spin_cmd->add_option("--proj", spin_proj,
                         "PROJ file; the spun projection's lift is reported");
    spin_cmd->add_option("--times", spin_times, "number of spins")
        ->default_val(1);
    spin_cmd->add_option("--mu", spin_mu,
                         "default mu for base(kummer) in PROJ files")
        ->default_val(kDefaultBaseMu);
    spin_cmd->callback([&] {
        if (spin_times < 0) {
            throw std::runtime_error("spin: --times must be >= 0");
        }
        if (spin_seifert.empty() == spin_proj.empty()) {
            throw std::runtime_error(
                "spin: exactly one of --seifert and --proj is required");
        }
        if (!spin_seifert.empty()) {
            const SeifertMatrix s = parse_seifert(read_file(spin_seifert));
            KnotModel m = KnotModel::from_seifert(s, true, "seifert");
            for (int i = 0; i < spin_times; ++i) m = spin_knot(m);
            print_model(out, m);
        } else {
            ProjectionExpr p = parse_proj(read_file(spin_proj), spin_mu);
            for (int i = 0; i < spin_times; ++i) {
                p = ProjectionExpr::spin(std::move(p));
            }
            out << "mu=" << mu(p) << "\n";
            out << "dim=" << dimension(p) << "\n";
            const LiftAssignment all_over(std::vector<int>(mu(p), 1));
            print_model(out, lift(p, all_over));
        }
    });

    // lifts <proj-file> [--classify] [--sample N] [--seed S] [--mu M]
    std::string lifts_file;
    bool lifts_classify = false;
    std::optional<std::size_t> lifts_sample;
    std::uint64_t lifts_seed = 0;
    int lifts_mu = kDefaultBaseMu;
    auto* lifts_cmd = app.add_subcommand(
        "lifts", "Classify the lifts of a projection by rho");
    lifts_cmd->add_option("file", lifts_file, "PROJ file")->required();
    lifts_cmd->add_flag("--classify", lifts_classify,
                        "print one row per class");
    lifts_cmd->add_option(
        "--sample", lifts_sample,
        "number of sampled assignments when mu > 20 (default 100)");
    lifts_cmd->add_option("--seed", lifts_seed, "sampling seed")
        ->default_val(0);
    lifts_cmd->add_option("--mu", lifts_mu,
                          "default mu for base(kummer)")
        ->default_val(kDefaultBaseMu);
    lifts_cmd->callback([&] {
        const ProjectionExpr p = parse_proj(read_file(lifts_file), lifts_mu);
        const ClassificationReport report =
            classify_lifts(p, lifts_sample, lifts_seed);
        out << "mu=" << report.mu << "\n";
        out << "dim=" << dimension(p) << "\n";
        out << "assignments=2^" << report.mu << "\n";
        out << "mode=" << (report.exhaustive ? "exhaustive" : "sampled")
            << "\n";
        out << "classes=" << report.classes.size() << "\n";
        out << "note: " << report.note << "\n";
        if (!report.classes.empty()) {
            const LiftClass& c = report.classes.front();
            out << "invariants: n=" << c.model.n;
            if (c.model.sigma) {
                out << " sigma=" << *c.model.sigma;
            } else {
                out << " sigma=n/a";
            }
            out << " knotted=" << yes_no(c.knotted);
            out << " delta=" << c.model.delta.str() << "\n";
        }
        if (lifts_classify) {
            for (const LiftClass& c : report.classes) {
                out << class_row(c) << "\n";
            }
        }
    });

    // realize --r N [-o <file>] [--mu M]
    long realize_r = 0;
    std::string realize_out;
    int realize_mu = kDefaultBaseMu;
    auto* realize_cmd = app.add_subcommand(
        "realize",
        "Projection whose every lift has signature 16*r");
    realize_cmd->add_option("--r", realize_r, "target signature / 16")
        ->required();
    realize_cmd->add_option("-o,--output", realize_out, "output PROJ file");
    realize_cmd->add_option("--mu", realize_mu, "mu for each base(kummer)")
        ->default_val(kDefaultBaseMu);
    realize_cmd->callback([&] {
        const ProjectionExpr p = realize_signature(realize_r, realize_mu);
        const std::string text = render_proj(p) + "\n";
        if (realize_out.empty()) {
            out << text;
        } else {
            write_file(realize_out, text);
        }
        out << "sigma=" << 16 * realize_r << "\n";
    });

    // adjust <disks-file>
    std::string adjust_file;
    auto* adjust_cmd = app.add_subcommand(
        "adjust", "Minimal moves driving a disk system to its targets");
    adjust_cmd->add_option("file", adjust_file, "DISKS file")->required();
    adjust_cmd->callback([&] {
        const DiskSystem ds = parse_disks(read_file(adjust_file));
        const std::vector<Move> moves = adjust_to_targets(ds);
        out << "moves=" << moves.size() << "\n";
        for (const Move& m : moves) {
            out << "disk=" << m.disk << " eps=" << (m.epsilon > 0 ? "+1" : "-1")
                << "\n";
        }
    });

    // framing <disks-file>
    std::string framing_file;
    auto* framing_cmd =
        app.add_subcommand("framing", "Per-disk framings of a disk system");
    framing_cmd->add_option("file", framing_file, "DISKS file")->required();
    framing_cmd->callback([&] {
        const DiskSystem ds = parse_disks(read_file(framing_file));
        for (std::size_t i = 0; i < ds.size(); ++i) {
            out << "disk=" << i + 1 << " framing=" << framing_of(ds.disks[i])
                << "\n";
        }
    });

    // verify-kummer [<form-file>]
    std::string verify_file;
    auto* verify_cmd = app.add_subcommand(
        "verify-kummer",
        "Check a form for rank 22, signature -16, determinant -1, even");
    verify_cmd->add_option("file", verify_file,
                           "FORM file (default: the built-in form)");
    verify_cmd->callback([&] {
        const SymForm f = verify_file.empty()
                              ? kummer_form()
                              : parse_form(read_file(verify_file));
        const KummerCheck check = verify_kummer(f);
        out << "rank=" << check.found.rank << " sig=" << check.found.signature
            << " det=" << check.found.determinant
            << " even=" << yes_no(check.found.even) << "\n";
        if (check.ok()) {
            out << "kummer=yes\n";
        } else {
            std::string failed;
            auto add = [&failed](const char* name) {
                if (!failed.empty()) failed += ",";
                failed += name;
            };
            if (!check.rank_ok) add("rank");
            if (!check.signature_ok) add("sig");
            if (!check.determinant_ok) add("det");
            if (!check.even_ok) add("even");
            out << "kummer=no (failed: " << failed << ")\n";
            exit_code = 2;
        }
    });

    // liftable <imm-file>
    std::string liftable_file;
    auto* liftable_cmd = app.add_subcommand(
        "liftable", "Liftability status of an immersed-sphere expression");
    liftable_cmd->add_option("file", liftable_file, "IMM file")->required();
    liftable_cmd->callback([&] {
        const LiftabilityResult res = liftable(parse_imm(read_file(liftable_file)));
        out << "status=" << to_string(res.status) << "\n";
        for (const std::string& line : res.chain) {
            out << "rule: " << line << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace knotproj
