#pragma once

#include <string>

#include "pbr/pbr.hpp"

namespace pbr {

  // A DOT digraph with the codomain column on the left and the domain column
  // on the right, each listed top to bottom in declared order.
  std::string to_dot(Pbr const& p, std::string const& name = "pbr");

}  // namespace pbr
