// Python bindings for the knotproj core library.
//
// The binding layer keeps the Python surface plain-data: matrices cross the
// boundary as lists of lists of ints (arbitrary precision preserved via
// decimal strings), polynomials as their canonical text form, rho assignments
// as '+'/'-' strings, and derived invariants as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotproj/forms.hpp"
#include "knotproj/handles.hpp"
#include "knotproj/intmat.hpp"
#include "knotproj/io.hpp"
#include "knotproj/laurent.hpp"
#include "knotproj/projection.hpp"
#include "knotproj/seifert.hpp"
#include "knotproj/spin.hpp"

namespace py = pybind11;
using namespace knotproj;

namespace {

Int int_from_py(const py::handle& h) {
    // Index protocol: accepts ints (and anything with __index__), rejects
    // floats and strings with a TypeError. PyNumber_Long then normalizes
    // bool to 0/1 so the decimal rendering below is always parseable.
    PyObject* indexed = PyNumber_Index(h.ptr());
    if (indexed == nullptr) {
        throw py::error_already_set();
    }
    PyObject* as_long = PyNumber_Long(indexed);
    Py_DECREF(indexed);
    if (as_long == nullptr) {
        throw py::error_already_set();
    }
    auto obj = py::reinterpret_steal<py::object>(as_long);
    return Int(py::str(obj).cast<std::string>());
}

py::int_ int_to_py(const Int& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (obj == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

IntMat mat_from_py(const py::sequence& rows) {
    IntMat m;
    for (py::handle row : rows) {
        if (!py::isinstance<py::sequence>(row) || py::isinstance<py::str>(row)) {
            throw py::type_error("matrix must be a sequence of rows of ints");
        }
        std::vector<Int> r;
        for (py::handle x : py::cast<py::sequence>(row)) {
            r.push_back(int_from_py(x));
        }
        m.push_back(std::move(r));
    }
    return m;
}

py::list mat_to_py(const IntMat& m) {
    py::list rows;
    for (const auto& r : m) {
        py::list row;
        for (const auto& v : r) {
            row.append(int_to_py(v));
        }
        rows.append(std::move(row));
    }
    return rows;
}

SeifertMatrix seifert_from_py(int k, const py::sequence& rows) {
    return SeifertMatrix(k, mat_from_py(rows));
}

std::vector<int> rho_from_string(const std::string& text) {
    std::vector<int> rho;
    rho.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            rho.push_back(1);
        } else if (c == '-') {
            rho.push_back(-1);
        } else {
            throw std::invalid_argument(
                std::string("rho must consist of '+' and '-' characters, got '") +
                c + "'");
        }
    }
    return rho;
}

py::dict model_to_py(const KnotModel& m) {
    py::dict d;
    d["n"] = m.n;
    d["delta"] = m.delta.str();
    d["sigma"] = m.sigma ? py::object(py::int_(*m.sigma)) : py::object(py::none());
    d["simple"] = m.simple;
    d["spin_count"] = m.spin_count;
    d["origin"] = m.origin;
    return d;
}

py::dict invariants_to_py(const FormInvariants& fi) {
    py::dict d;
    d["rank"] = fi.rank;
    d["signature"] = fi.signature;
    d["determinant"] = int_to_py(fi.determinant);
    d["even"] = fi.even;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact invariants of high-dimensional knots and their projections: "
        "Seifert-matrix invariants, integer symmetric bilinear forms, spun "
        "knots, lift classification of projection expressions, and signed "
        "double-point combinatorics. Matrices are lists of int rows; "
        "polynomials are canonical strings such as '1 - t + t^2'.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.attr("__version__") = "1.0.0";
    m.attr("DEFAULT_BASE_MU") = kDefaultBaseMu;

    // ---- Seifert matrices and knot models -------------------------------

    m.def(
        "parse_seifert",
        [](const std::string& text) {
            SeifertMatrix s = parse_seifert(text);
            return py::make_tuple(s.k, mat_to_py(s.a));
        },
        py::arg("text"),
        "Parse a SEIFERT table; returns (k, matrix) for a (2k+1)-knot.");

    m.def(
        "render_seifert",
        [](int k, const py::sequence& rows) {
            return render_seifert(seifert_from_py(k, rows));
        },
        py::arg("k"), py::arg("matrix"),
        "Canonical SEIFERT table for the matrix of a (2k+1)-knot.");

    m.def(
        "alexander",
        [](int k, const py::sequence& rows) {
            return alexander(seifert_from_py(k, rows)).str();
        },
        py::arg("k"), py::arg("matrix"),
        "Alexander polynomial det(t*A - (-1)^k A^T) in canonical form, as a "
        "string such as '1 - t + t^2'.");

    m.def(
        "is_valid_seifert",
        [](int k, const py::sequence& rows) {
            return is_valid(seifert_from_py(k, rows));
        },
        py::arg("k"), py::arg("matrix"),
        "True iff |det(A - (-1)^k A^T)| = 1, i.e. the matrix is the Seifert "
        "matrix of a (2k+1)-knot.");

    m.def(
        "knot_signature",
        [](int k, const py::sequence& rows) {
            return knot_signature(seifert_from_py(k, rows));
        },
        py::arg("k"), py::arg("matrix"),
        "Signature of A + A^T; defined for odd k only (ValueError otherwise).");

    m.def(
        "connected_sum",
        [](int k, const py::sequence& a, const py::sequence& b) {
            return mat_to_py(
                connected_sum(seifert_from_py(k, a), seifert_from_py(k, b)).a);
        },
        py::arg("k"), py::arg("a"), py::arg("b"),
        "Block sum of two Seifert matrices of the same parity.");

    m.def(
        "mirror_seifert",
        [](int k, const py::sequence& rows) {
            return mat_to_py(mirror_reverse(seifert_from_py(k, rows)).a);
        },
        py::arg("k"), py::arg("matrix"),
        "Seifert matrix -A^T of the mirror image with reversed orientation.");

    m.def(
        "kummer_seifert",
        []() {
            SeifertMatrix s = kummer_seifert();
            return py::make_tuple(s.k, mat_to_py(s.a));
        },
        "Seifert data (k, matrix) of the 3-knot bounding the punctured "
        "Kummer surface; A + A^T is kummer_form().");

    m.def("realizable_3knot_signature", &realizable_3knot_signature,
          py::arg("s"),
          "True iff s is the signature of some 3-knot (s is a multiple of 16).");

    m.def(
        "spin_tower",
        [](int k, const py::sequence& rows, int times, bool simple) {
            if (times < 0) {
                throw std::invalid_argument("times must be >= 0");
            }
            KnotModel model = KnotModel::from_seifert(
                seifert_from_py(k, rows), simple, "seifert");
            for (int i = 0; i < times; ++i) {
                model = spin_knot(model);
            }
            py::dict d = model_to_py(model);
            try {
                d["knotted"] = is_knotted_tower(model);
            } catch (const std::domain_error&) {
                d["knotted"] = py::none();  // certificate undefined here
            }
            return d;
        },
        py::arg("k"), py::arg("matrix"), py::arg("times"),
        py::arg("simple") = true,
        "Invariants after spinning the (2k+1)-knot of the given Seifert "
        "matrix `times` times: dict with n, delta, sigma, simple, spin_count, "
        "origin, and the knottedness certificate (None when undefined).");

    // ---- Symmetric bilinear forms ---------------------------------------

    m.def("hyperbolic_form", [] { return mat_to_py(hyperbolic().entries()); },
          "Gram matrix of the hyperbolic plane [[0,1],[1,0]].");

    m.def(
        "e8_form",
        [](int sign) {
            if (sign != 1 && sign != -1) {
                throw std::invalid_argument("sign must be +1 or -1");
            }
            return mat_to_py(
                e8(sign == 1 ? FormSign::Positive : FormSign::Negative)
                    .entries());
        },
        py::arg("sign") = -1,
        "Gram matrix of the rank-8 even unimodular definite form; sign=+1 "
        "for the positive definite form, -1 for its negation.");

    m.def("kummer_form", [] { return mat_to_py(kummer_form().entries()); },
          "Gram matrix 3H + 2*E8(-1): rank 22, signature -16, even, "
          "determinant -1.");

    m.def(
        "form_invariants",
        [](const py::sequence& rows) {
            return invariants_to_py(form_invariants(SymForm(mat_from_py(rows))));
        },
        py::arg("matrix"),
        "Congruence invariants of a symmetric integer matrix: dict with "
        "rank, signature, determinant, even.");

    m.def(
        "verify_kummer",
        [](const py::sequence& rows) {
            KummerCheck c = verify_kummer(SymForm(mat_from_py(rows)));
            py::dict d;
            d["rank_ok"] = c.rank_ok;
            d["signature_ok"] = c.signature_ok;
            d["determinant_ok"] = c.determinant_ok;
            d["even_ok"] = c.even_ok;
            d["ok"] = c.ok();
            d["found"] = invariants_to_py(c.found);
            return d;
        },
        py::arg("matrix"),
        "Check a symmetric matrix against the reference invariants rank 22, "
        "signature -16, determinant -1, even.");

    // ---- Signed double points and framings ------------------------------

    m.def(
        "framing_of",
        [](const std::vector<int>& signs) { return framing_of(signs); },
        py::arg("signs"),
        "Framing contributed by a disk's double points: twice the sign sum.");

    m.def("kirby_disk_targets", &kirby_disk_targets,
          "The 22 reference target sums: 0 for the first disk, -1 for each "
          "of the remaining 21.");

    m.def(
        "adjust_to_targets",
        [](const std::vector<std::vector<int>>& disks,
           const std::vector<long>& targets) {
            py::list out;
            for (const Move& mv : adjust_to_targets(DiskSystem(disks, targets))) {
                out.append(py::make_tuple(mv.disk, mv.epsilon));
            }
            return out;
        },
        py::arg("disks"), py::arg("targets"),
        "Minimal move sequence driving every disk's sign sum to its target; "
        "each move is a (disk, epsilon) pair with 1-based disk index.");

    // ---- Projections and lifts ------------------------------------------

    m.def(
        "mu",
        [](const std::string& proj, int default_mu) {
            return mu(parse_proj(proj, default_mu));
        },
        py::arg("proj"), py::arg("default_mu") = kDefaultBaseMu,
        "Number of singular-set components of a projection expression.");

    m.def(
        "dimension",
        [](const std::string& proj, int default_mu) {
            return dimension(parse_proj(proj, default_mu));
        },
        py::arg("proj"), py::arg("default_mu") = kDefaultBaseMu,
        "Dimension of the knots projecting onto the expression.");

    m.def(
        "singular_components",
        [](const std::string& proj, int default_mu) {
            py::list out;
            for (const SingularComponent& c :
                 singular_components(parse_proj(proj, default_mu))) {
                py::dict d;
                d["id"] = c.id;
                d["spin_factors"] = c.spin_factors;
                d["double_points_only"] = c.double_points_only;
                d["topology"] = c.topology();
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("proj"), py::arg("default_mu") = kDefaultBaseMu,
        "The singular-set components with their topology descriptors.");

    m.def(
        "lift",
        [](const std::string& proj, const std::optional<std::string>& rho,
           int default_mu) {
            ProjectionExpr p = parse_proj(proj, default_mu);
            std::vector<int> entries =
                rho ? rho_from_string(*rho) : std::vector<int>(mu(p), 1);
            return model_to_py(lift(p, LiftAssignment(std::move(entries))));
        },
        py::arg("proj"), py::arg("rho") = py::none(),
        py::arg("default_mu") = kDefaultBaseMu,
        "Invariants of the knot lifting the projection under rho (a string "
        "of '+'/'-' per singular component; default all '+').");

    m.def(
        "classify_lifts",
        [](const std::string& proj, std::optional<std::size_t> sample,
           std::uint64_t seed, int default_mu) {
            ClassificationReport r =
                classify_lifts(parse_proj(proj, default_mu), sample, seed);
            py::dict d;
            d["mu"] = r.mu;
            d["exhaustive"] = r.exhaustive;
            d["seed"] = r.seed;
            d["note"] = r.note;
            py::list classes;
            for (const LiftClass& c : r.classes) {
                py::dict e = model_to_py(c.model);
                e["rho"] = rho_string(c.rho);
                e["knotted"] = c.knotted;
                classes.append(std::move(e));
            }
            d["classes"] = std::move(classes);
            return d;
        },
        py::arg("proj"), py::arg("sample") = py::none(),
        py::arg("seed") = std::uint64_t{0},
        py::arg("default_mu") = kDefaultBaseMu,
        "Partition lift assignments by rho: exhaustive for mu <= 20, sampled "
        "otherwise. Each class carries rho, the lift's invariants, and "
        "whether a nontrivial Alexander polynomial certifies knottedness.");

    m.def(
        "realize_signature",
        [](long r, int base_mu) {
            return render_proj(realize_signature(r, base_mu));
        },
        py::arg("r"), py::arg("base_mu") = kDefaultBaseMu,
        "Projection expression whose every lift has signature 16*r, in "
        "canonical DSL form.");

    m.def(
        "liftable",
        [](const std::string& imm) {
            LiftabilityResult r = liftable(parse_imm(imm));
            py::dict d;
            d["status"] = to_string(r.status);
            d["chain"] = r.chain;
            return d;
        },
        py::arg("imm"),
        "Liftability of an immersed-sphere expression: dict with status "
        "('Liftable' | 'NonLiftable' | 'Unknown') and the rule chain.");

    // ---- DSL round-trips -------------------------------------------------

    m.def(
        "canonical_proj",
        [](const std::string& text, int default_mu) {
            return render_proj(parse_proj(text, default_mu));
        },
        py::arg("text"), py::arg("default_mu") = kDefaultBaseMu,
        "Parse a projection expression and render it canonically (mu always "
        "explicit).");

    m.def(
        "canonical_imm",
        [](const std::string& text) { return render_imm(parse_imm(text)); },
        py::arg("text"),
        "Parse an immersed-sphere expression and render it canonically.");
}
