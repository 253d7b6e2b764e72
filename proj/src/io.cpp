#include "knotproj/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace knotproj {

namespace {

std::string build_message(int line, int column, const std::string& detail,
                          const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << detail;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) os << " | ";
            os << expected[i];
        }
        os << ")";
    }
    return os.str();
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& detail,
                       std::vector<std::string> expected)
    : std::runtime_error(build_message(line, column, detail, expected)),
      line_(line),
      column_(column),
      detail_(detail),
      expected_(std::move(expected)) {}

namespace {

// ---------- line/token scanning for the table formats ----------

struct Token {
    std::string text;
    int line = 0;
    int col = 0;
};

struct TableSource {
    std::vector<std::vector<Token>> rows;  // non-blank lines only
    int eof_line = 1;                      // position just past the content
};

TableSource tokenize_lines(const std::string& text) {
    TableSource src;
    std::vector<Token> current;
    int line = 1;
    int col = 1;
    bool in_comment = false;
    auto flush = [&] {
        if (!current.empty()) {
            src.rows.push_back(std::move(current));
            current.clear();
        }
    };
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            flush();
            ++line;
            col = 1;
            ++i;
            in_comment = false;
            continue;
        }
        if (in_comment || c == '#') {
            in_comment = true;
            ++col;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        while (i < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '#') {
            t.text += text[i];
            ++col;
            ++i;
        }
        current.push_back(std::move(t));
    }
    flush();
    src.eof_line = (!text.empty() && text.back() == '\n') ? line : line + 1;
    return src;
}

[[noreturn]] void fail_at(const Token& t, const std::string& detail,
                          std::vector<std::string> expected = {}) {
    throw ParseError(t.line, t.col, detail, std::move(expected));
}

[[noreturn]] void fail_after(const Token& t, const std::string& detail,
                             std::vector<std::string> expected = {}) {
    throw ParseError(t.line, t.col + static_cast<int>(t.text.size()), detail,
                     std::move(expected));
}

const std::vector<Token>& require_row(const TableSource& src, std::size_t idx,
                                      const std::string& what) {
    if (idx >= src.rows.size()) {
        throw ParseError(src.eof_line, 1, "missing " + what, {what});
    }
    return src.rows[idx];
}

void require_no_more(const TableSource& src, std::size_t idx) {
    if (idx < src.rows.size()) {
        fail_at(src.rows[idx][0], "unexpected trailing content",
                {"end of input"});
    }
}

const Token& field(const std::vector<Token>& row, std::size_t idx,
                   const std::string& what) {
    if (idx >= row.size()) {
        fail_after(row.back(), "missing " + what, {what});
    }
    return row[idx];
}

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Int parse_big(const Token& t) {
    if (!is_integer_text(t.text)) {
        fail_at(t, "'" + t.text + "' is not an integer", {"<int>"});
    }
    // cpp_int's string constructor rejects an explicit leading '+'.
    return Int(t.text[0] == '+' ? t.text.substr(1) : t.text);
}

long parse_long(const Token& t) {
    if (!is_integer_text(t.text)) {
        fail_at(t, "'" + t.text + "' is not an integer", {"<int>"});
    }
    try {
        return std::stol(t.text);
    } catch (const std::out_of_range&) {
        fail_at(t, "integer out of range");
    }
}

long parse_keyed(const Token& t, const std::string& key) {
    const std::string want = key + "<int>";
    if (t.text.rfind(key, 0) != 0) {
        fail_at(t, "expected " + want, {want});
    }
    Token value = t;
    value.text = t.text.substr(key.size());
    value.col = t.col + static_cast<int>(key.size());
    return parse_long(value);
}

struct ParsedMatrix {
    IntMat values;
    std::vector<std::vector<Token>> tokens;
};

ParsedMatrix parse_matrix_rows(const TableSource& src, std::size_t first_row,
                               long dim) {
    ParsedMatrix out;
    for (long r = 0; r < dim; ++r) {
        const auto& row = require_row(src, first_row + r, "matrix row");
        if (static_cast<long>(row.size()) < dim) {
            fail_after(row.back(),
                       "matrix row has " + std::to_string(row.size()) +
                           " entries, need " + std::to_string(dim),
                       {"<int>"});
        }
        if (static_cast<long>(row.size()) > dim) {
            fail_at(row[dim], "unexpected extra entry", {"end of line"});
        }
        std::vector<Int> values;
        for (long c = 0; c < dim; ++c) values.push_back(parse_big(row[c]));
        out.values.push_back(std::move(values));
        out.tokens.push_back(row);
    }
    return out;
}

void require_symmetric(const ParsedMatrix& m) {
    const std::size_t n = m.values.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.values[i][j] != m.values[j][i]) {
                const Token& t = m.tokens[j][i];
                std::ostringstream os;
                os << "matrix not symmetric: entry (" << i + 1 << ","
                   << j + 1 << ") is " << m.values[i][j] << " but entry ("
                   << j + 1 << "," << i + 1 << ") is " << m.values[j][i];
                fail_at(t, os.str());
            }
        }
    }
}

std::vector<Token> parse_header(const TableSource& src,
                                const std::string& keyword,
                                const std::vector<std::string>& keys,
                                std::vector<long>& values) {
    std::ostringstream what;
    what << "header '" << keyword;
    for (const auto& k : keys) what << " " << k << "<int>";
    what << "'";
    const auto& hdr = require_row(src, 0, what.str());
    if (hdr[0].text != keyword) {
        fail_at(hdr[0], "expected " + what.str(), {keyword});
    }
    values.clear();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const Token& t = field(hdr, 1 + i, keys[i] + "<int>");
        values.push_back(parse_keyed(t, keys[i]));
    }
    if (hdr.size() > 1 + keys.size()) {
        fail_at(hdr[1 + keys.size()], "unexpected token", {"end of line"});
    }
    return hdr;
}

}  // namespace

SeifertMatrix parse_seifert(const std::string& text) {
    TableSource src = tokenize_lines(text);
    std::vector<long> vals;
    const auto hdr = parse_header(src, "SEIFERT", {"k=", "dim="}, vals);
    const long k = vals[0];
    const long dim = vals[1];
    if (k < 0) fail_at(hdr[1], "k must be >= 0");
    if (dim < 0) fail_at(hdr[2], "dim must be >= 0");
    ParsedMatrix m = parse_matrix_rows(src, 1, dim);
    require_no_more(src, 1 + static_cast<std::size_t>(dim));
    return SeifertMatrix(static_cast<int>(k), std::move(m.values));
}

SymForm parse_form(const std::string& text) {
    TableSource src = tokenize_lines(text);
    std::vector<long> vals;
    const auto hdr = parse_header(src, "FORM", {"dim="}, vals);
    const long dim = vals[0];
    if (dim < 0) fail_at(hdr[1], "dim must be >= 0");
    ParsedMatrix m = parse_matrix_rows(src, 1, dim);
    require_no_more(src, 1 + static_cast<std::size_t>(dim));
    require_symmetric(m);
    return SymForm(std::move(m.values));
}

DiskSystem parse_disks(const std::string& text) {
    TableSource src = tokenize_lines(text);
    std::vector<long> vals;
    const auto hdr = parse_header(src, "DISKS", {"n="}, vals);
    const long n = vals[0];
    if (n < 0) fail_at(hdr[1], "n must be >= 0");
    std::vector<std::vector<int>> disks;
    std::vector<long> targets;
    for (long r = 0; r < n; ++r) {
        const auto& row =
            require_row(src, 1 + r, "disk row '<target> : <signs>'");
        targets.push_back(parse_long(row[0]));
        const Token& sep = field(row, 1, "':'");
        if (sep.text != ":") fail_at(sep, "expected ':'", {":"});
        std::vector<int> signs;
        for (std::size_t c = 2; c < row.size(); ++c) {
            const long v = parse_long(row[c]);
            if (v != 1 && v != -1) {
                fail_at(row[c], "double-point sign must be +1 or -1",
                        {"+1", "-1"});
            }
            signs.push_back(static_cast<int>(v));
        }
        disks.push_back(std::move(signs));
    }
    require_no_more(src, 1 + static_cast<std::size_t>(n));
    return DiskSystem(std::move(disks), std::move(targets));
}

FramedLink parse_framedlink(const std::string& text) {
    TableSource src = tokenize_lines(text);
    std::vector<long> vals;
    const auto hdr = parse_header(src, "FRAMEDLINK", {"dim="}, vals);
    const long dim = vals[0];
    if (dim < 0) fail_at(hdr[1], "dim must be >= 0");
    ParsedMatrix m = parse_matrix_rows(src, 1, dim);
    require_no_more(src, 1 + static_cast<std::size_t>(dim));
    require_symmetric(m);
    std::vector<Int> framings;
    IntMat linking = m.values;
    for (long i = 0; i < dim; ++i) {
        framings.push_back(linking[i][i]);
        linking[i][i] = 0;
    }
    return FramedLink(std::move(linking), std::move(framings));
}

// ---------- character scanner for the expression DSLs ----------

namespace {

struct SToken {
    std::string text;
    int line = 0;
    int col = 0;
};

class Scanner {
  public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip() {
        while (i_ < s_.size()) {
            const char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip();
        return i_ >= s_.size();
    }

    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    int line() {
        skip();
        return line_;
    }

    int col() {
        skip();
        return col_;
    }

    void expect(char c, const std::string& what) {
        skip();
        if (i_ >= s_.size()) {
            throw ParseError(line_, col_, "unexpected end of input", {what});
        }
        if (s_[i_] != c) {
            throw ParseError(line_, col_,
                             std::string("unexpected '") + s_[i_] + "'",
                             {what});
        }
        step();
    }

    SToken ident(const std::vector<std::string>& expected) {
        skip();
        if (i_ >= s_.size()) {
            throw ParseError(line_, col_, "unexpected end of input", expected);
        }
        if (!std::isalpha(static_cast<unsigned char>(s_[i_])) &&
            s_[i_] != '_') {
            throw ParseError(line_, col_,
                             std::string("unexpected '") + s_[i_] + "'",
                             expected);
        }
        SToken t;
        t.line = line_;
        t.col = col_;
        while (i_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                s_[i_] == '_')) {
            t.text += s_[i_];
            step();
        }
        return t;
    }

    long integer(const std::string& what) {
        skip();
        const int ln = line_;
        const int cl = col_;
        std::string digits;
        if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
            digits += s_[i_];
            step();
        }
        if (i_ >= s_.size() ||
            !std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            throw ParseError(ln, cl,
                             i_ >= s_.size()
                                 ? "unexpected end of input"
                                 : std::string("unexpected '") + s_[i_] + "'",
                             {what});
        }
        while (i_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            digits += s_[i_];
            step();
        }
        try {
            return std::stol(digits);
        } catch (const std::out_of_range&) {
            throw ParseError(ln, cl, "integer out of range");
        }
    }

  private:
    void step() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const std::vector<std::string> kProjHeads = {"base", "stack", "double",
                                             "mirror", "spin"};
const std::vector<std::string> kImmHeads = {"giller", "embedded", "spin",
                                            "connsum"};

ProjectionExpr parse_proj_expr(Scanner& sc, int default_mu) {
    const SToken head = sc.ident(kProjHeads);
    if (head.text == "base") {
        sc.expect('(', "(");
        const SToken arg = sc.ident({"kummer"});
        if (arg.text != "kummer") {
            throw ParseError(arg.line, arg.col,
                             "unknown base template '" + arg.text + "'",
                             {"kummer"});
        }
        int mu = default_mu;
        if (sc.peek() == ',') {
            sc.expect(',', ",");
            const SToken key = sc.ident({"mu"});
            if (key.text != "mu") {
                throw ParseError(key.line, key.col,
                                 "unknown base option '" + key.text + "'",
                                 {"mu"});
            }
            sc.expect('=', "=");
            const int ln = sc.line();
            const int cl = sc.col();
            const long v = sc.integer("<int>");
            if (v < 1) throw ParseError(ln, cl, "mu must be positive");
            mu = static_cast<int>(v);
        }
        sc.expect(')', ")");
        return ProjectionExpr::base(mu);
    }
    if (head.text == "stack") {
        sc.expect('(', "(");
        std::vector<ProjectionExpr> parts;
        parts.push_back(parse_proj_expr(sc, default_mu));
        while (sc.peek() == ',') {
            sc.expect(',', ",");
            parts.push_back(parse_proj_expr(sc, default_mu));
        }
        sc.expect(')', ")");
        try {
            return ProjectionExpr::stack(std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(head.line, head.col, e.what());
        }
    }
    if (head.text == "double" || head.text == "mirror" ||
        head.text == "spin") {
        sc.expect('(', "(");
        ProjectionExpr inner = parse_proj_expr(sc, default_mu);
        sc.expect(')', ")");
        if (head.text == "double")
            return ProjectionExpr::doubled(std::move(inner));
        if (head.text == "mirror")
            return ProjectionExpr::mirror(std::move(inner));
        return ProjectionExpr::spin(std::move(inner));
    }
    throw ParseError(head.line, head.col,
                     "unknown projection constructor '" + head.text + "'",
                     kProjHeads);
}

ImmersedSphereExpr parse_imm_expr(Scanner& sc) {
    const SToken head = sc.ident(kImmHeads);
    if (head.text == "giller") {
        return ImmersedSphereExpr::giller();
    }
    if (head.text == "embedded") {
        sc.expect('(', "(");
        const int ln = sc.line();
        const int cl = sc.col();
        const long n = sc.integer("<int>");
        sc.expect(')', ")");
        if (n < 1) {
            throw ParseError(ln, cl, "embedded dimension must be >= 1");
        }
        return ImmersedSphereExpr::embedded(static_cast<int>(n));
    }
    if (head.text == "spin") {
        sc.expect('(', "(");
        ImmersedSphereExpr inner = parse_imm_expr(sc);
        sc.expect(')', ")");
        return ImmersedSphereExpr::spin(std::move(inner));
    }
    if (head.text == "connsum") {
        sc.expect('(', "(");
        ImmersedSphereExpr left = parse_imm_expr(sc);
        sc.expect(',', ",");
        ImmersedSphereExpr right = parse_imm_expr(sc);
        sc.expect(')', ")");
        try {
            return ImmersedSphereExpr::connsum(std::move(left),
                                               std::move(right));
        } catch (const std::invalid_argument& e) {
            throw ParseError(head.line, head.col, e.what());
        }
    }
    throw ParseError(head.line, head.col,
                     "unknown immersed-sphere constructor '" + head.text + "'",
                     kImmHeads);
}

}  // namespace

ProjectionExpr parse_proj(const std::string& text, int default_mu) {
    Scanner sc(text);
    ProjectionExpr p = parse_proj_expr(sc, default_mu);
    if (!sc.at_end()) {
        throw ParseError(sc.line(), sc.col(), "unexpected trailing content",
                         {"end of input"});
    }
    return p;
}

ImmersedSphereExpr parse_imm(const std::string& text) {
    Scanner sc(text);
    ImmersedSphereExpr e = parse_imm_expr(sc);
    if (!sc.at_end()) {
        throw ParseError(sc.line(), sc.col(), "unexpected trailing content",
                         {"end of input"});
    }
    return e;
}

// ---------- renderers ----------

namespace {

void render_int_matrix(std::ostringstream& os, const IntMat& m) {
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << " ";
            os << row[j];
        }
        os << "\n";
    }
}

}  // namespace

std::string render_seifert(const SeifertMatrix& s) {
    std::ostringstream os;
    os << "SEIFERT k=" << s.k << " dim=" << s.size() << "\n";
    render_int_matrix(os, s.a);
    return os.str();
}

std::string render_form(const SymForm& f) {
    std::ostringstream os;
    os << "FORM dim=" << f.size() << "\n";
    render_int_matrix(os, f.entries());
    return os.str();
}

std::string render_disks(const DiskSystem& ds) {
    std::ostringstream os;
    os << "DISKS n=" << ds.size() << "\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        os << ds.targets[i] << " :";
        for (int s : ds.disks[i]) os << " " << (s > 0 ? "+1" : "-1");
        os << "\n";
    }
    return os.str();
}

std::string render_framedlink(const FramedLink& fl) {
    std::ostringstream os;
    os << "FRAMEDLINK dim=" << fl.size << "\n";
    IntMat m = fl.linking;
    for (int i = 0; i < fl.size; ++i) m[i][i] = fl.framings[i];
    render_int_matrix(os, m);
    return os.str();
}

std::string render_proj(const ProjectionExpr& p) {
    switch (p.kind()) {
        case ProjectionExpr::Kind::Base:
            return "base(kummer,mu=" + std::to_string(p.base_mu()) + ")";
        case ProjectionExpr::Kind::Stack: {
            std::string s = "stack(";
            const auto& parts = p.parts();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) s += ",";
                s += render_proj(parts[i]);
            }
            return s + ")";
        }
        case ProjectionExpr::Kind::Double:
            return "double(" + render_proj(p.inner()) + ")";
        case ProjectionExpr::Kind::Mirror:
            return "mirror(" + render_proj(p.inner()) + ")";
        case ProjectionExpr::Kind::Spin:
            return "spin(" + render_proj(p.inner()) + ")";
    }
    throw std::logic_error("render_proj: unreachable");
}

std::string render_imm(const ImmersedSphereExpr& e) {
    switch (e.kind()) {
        case ImmersedSphereExpr::Kind::Giller:
            return "giller";
        case ImmersedSphereExpr::Kind::Embedded:
            return "embedded(" + std::to_string(e.embedded_dimension()) + ")";
        case ImmersedSphereExpr::Kind::SpinI:
            return "spin(" + render_imm(e.left()) + ")";
        case ImmersedSphereExpr::Kind::ConnSum:
            return "connsum(" + render_imm(e.left()) + "," +
                   render_imm(e.right()) + ")";
    }
    throw std::logic_error("render_imm: unreachable");
}

}  // namespace knotproj
