#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "knotproj/forms.hpp"
#include "knotproj/handles.hpp"
#include "knotproj/projection.hpp"
#include "knotproj/seifert.hpp"

namespace knotproj {

/// Parse failure with a 1-based source position. The what() string combines
/// position, detail and the expected-token set.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& detail,
               std::vector<std::string> expected = {});

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& detail() const { return detail_; }
    const std::vector<std::string>& expected() const { return expected_; }

  private:
    int line_;
    int column_;
    std::string detail_;
    std::vector<std::string> expected_;
};

// Line-oriented formats. '#' starts a comment anywhere; blank lines are
// ignored; tokens are whitespace-separated.

/// `SEIFERT k=<int> dim=<int>` then dim rows of dim integers.
SeifertMatrix parse_seifert(const std::string& text);

/// `FORM dim=<int>` then a symmetric integer matrix.
SymForm parse_form(const std::string& text);

/// `DISKS n=<int>` then n rows `<target> : <signs>` with signs +1/-1.
DiskSystem parse_disks(const std::string& text);

/// `FRAMEDLINK dim=<int>` then a full symmetric matrix whose diagonal
/// carries the framings.
FramedLink parse_framedlink(const std::string& text);

// Expression DSLs. Whitespace-insensitive; '#' comments run to end of line.

/// PROJ ::= base(kummer[,mu=INT]) | stack(PROJ{,PROJ}) | double(PROJ)
///        | mirror(PROJ) | spin(PROJ)
ProjectionExpr parse_proj(const std::string& text,
                          int default_mu = kDefaultBaseMu);

/// IMM ::= giller | embedded(INT) | spin(IMM) | connsum(IMM,IMM)
ImmersedSphereExpr parse_imm(const std::string& text);

// Canonical renderers; parse(render(x)) reproduces x and render is
// idempotent on parsed values.

std::string render_seifert(const SeifertMatrix& s);
std::string render_form(const SymForm& f);
std::string render_disks(const DiskSystem& ds);
std::string render_framedlink(const FramedLink& fl);
std::string render_proj(const ProjectionExpr& p);  // mu always explicit
std::string render_imm(const ImmersedSphereExpr& e);

}  // namespace knotproj
