#pragma once

#include <iosfwd>

namespace knotproj {

/// Entry point of the command-line tool; testable against any streams.
/// Exit codes: 0 success, 1 parse/validation error (message on err),
/// 2 a verification command ran fine but the property checked is false.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace knotproj
