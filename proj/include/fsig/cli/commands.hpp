#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fsig/golden.hpp"

namespace fsig::cli {

// Entry point of fsig-lab. Returns the process exit code: 0 success,
// 1 domain error (bad spec file, non-m-primary input, resource limit, golden
// mismatch), 2 usage error (bad flags or flag values).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Engine-side recomputation of a frozen reference value, rendered in the
// golden file's value syntax.
struct GoldenCheck {
  std::string id;
  std::function<std::string()> compute;
};
// Every golden id the engine can reproduce; oracle-only metadata is absent.
const std::vector<GoldenCheck>& golden_checks();

}  // namespace fsig::cli
