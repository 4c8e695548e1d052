#pragma once

#include <string>

#include "omltopo/lattice.hpp"

namespace omltopo::cli {

/// Resolves a lattice argument: either a path to a lattice JSON file or an
/// inline generator spec
///   gen:boolean:K | gen:mo:K | gen:product:S,S | gen:hsum:S,S
/// where nested operands S are themselves generator specs.
FiniteOml load_lattice(const std::string& argument);

}  // namespace omltopo::cli
