#pragma once

#include <iosfwd>

namespace octarep::cli {

// Exit codes: 0 ok, 1 usage or parse error, 2 verification failure,
// 3 internal inconsistency (InconsistentSystem, RankDeficient).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace octarep::cli
