#pragma once

#include <iosfwd>

namespace pbr::cli {

  // Exit codes: 0 success, 1 failed check, 2 unreadable or invalid input,
  // 3 shape mismatch, 4 internal consistency failure.
  int run(int argc, char const* const* argv, std::ostream& out,
          std::ostream& err);

}  // namespace pbr::cli
