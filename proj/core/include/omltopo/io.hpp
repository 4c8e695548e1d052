#pragma once

#include <string>
#include <string_view>

#include "omltopo/lattice.hpp"
#include "omltopo/topology.hpp"

namespace omltopo {

/// Lattice interchange format:
///   {"elements": [names...],
///    "order": {"kind": "covers"|"full", "pairs": [[i,j], ...]},
///    "ortho": {"name": "name", ...}}
LatticeSpec parse_lattice_json(std::string_view text);

/// Serializes the validated lattice back to the interchange format
/// (full order relation).
std::string lattice_to_json(const FiniteOml& lattice, int indent = 2);

/// Hasse diagram in DOT, cover edges only, bottom at the bottom rank.
std::string lattice_to_dot(const FiniteOml& lattice);

/// Report format:
///   {"kind":..., "stabilization":n*, "relations":[{"n":k,"pairs":[[i,j],...]}],
///    "isolated":[names], "balls":{"element":{"n":[names]}}, ...}
std::string report_to_json(const TopologyReport& report, const FiniteOml& lattice,
                           int indent = 2);

}  // namespace omltopo
