#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "omltopo/lattice.hpp"

namespace omltopo {

/// The three ball families generating the topology.
///   Atom     balls of atoms inside At(L)²
///   Lattice  whole-lattice balls driven by the atom relations
///   General  whole-lattice balls from the lower-set construction on L^{#2}
enum class Family { Atom, Lattice, General };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

/// Stabilizing relation chain R_0 ⊆ R_1 ⊆ … on At(L)². `relations` holds
/// R_0 … R_{n*}; indices past the fixpoint read as R_{n*} itself.
struct AtomRelationProfile {
  std::vector<int> atoms;         // element ids, ascending
  std::vector<int> atom_ordinal;  // element id -> position in atoms, or -1
  std::vector<Bitset> relations;  // masks over ordinal pairs (k*k bits)
  int stabilization = 0;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  const Bitset& relation(int n) const {
    return relations[n < 0 ? 0 : std::min<std::size_t>(n, relations.size() - 1)];
  }
  const Bitset& r_infinity() const { return relations.back(); }
  bool related(int n, int elem_a, int elem_b) const;
};

/// Same chain computed on the smashed carrier L^{#2}; every R_n is a
/// lower set of the carrier (double-complement closed).
struct GeneralRelationProfile {
  SmashedPoset carrier;
  std::vector<Bitset> relations;  // masks over carrier indices
  int stabilization = 0;

  const Bitset& relation(int n) const {
    return relations[n < 0 ? 0 : std::min<std::size_t>(n, relations.size() - 1)];
  }
  const Bitset& r_infinity() const { return relations.back(); }
  bool related(int n, int elem_a, int elem_b) const;
};

/// Atom-family relations. Requires the standing hypotheses and reports
/// their failure as NotAtomic / NoAtomProjection.
AtomRelationProfile atom_relation_profile(const FiniteOml& lattice);

/// General-family relations; no hypotheses beyond a validated lattice.
GeneralRelationProfile general_relation_profile(const FiniteOml& lattice);

/// Atoms b with (a, b) ∈ R_∞ \ R_n. Empty for n ≥ stabilization.
std::vector<int> atom_ball(const FiniteOml& lattice, const AtomRelationProfile& profile,
                           int atom, int n);

/// Whole-lattice ball driven by atom balls: every atom of a sees some atom
/// of b within the atom ball and vice versa.
std::vector<int> lattice_ball(const FiniteOml& lattice, const AtomRelationProfile& profile,
                              int a, int n);

/// Whole-lattice ball from the lower-set construction: the two ∀∃∃ clauses
/// over nonbottom lower bounds, membership in R_∞ ∩ ¬R_n.
std::vector<int> general_ball(const FiniteOml& lattice, const GeneralRelationProfile& profile,
                              int a, int n);

/// Memoizing facade over one family: balls, openness, isolated points.
class TopologyEngine {
 public:
  TopologyEngine(const FiniteOml& lattice, Family family);

  const FiniteOml& lattice() const { return *lattice_; }
  Family family() const { return family_; }
  int stabilization() const;
  /// Elements the family's balls range over (atoms for Family::Atom).
  const std::vector<int>& carrier() const { return carrier_; }

  const std::vector<int>& ball(int a, int n);
  /// Smallest n with ball(a, n) empty; bounded by stabilization.
  int first_empty_ball(int a);
  /// ∃n ≤ n*+1 with ball(a, n) ⊆ subset, for every a in the subset.
  bool is_open(const std::vector<int>& subset);
  std::vector<int> isolated_points();

  const AtomRelationProfile& atom_profile() const { return *atom_; }
  const GeneralRelationProfile& general_profile() const { return *general_; }

 private:
  const FiniteOml* lattice_;
  Family family_;
  std::optional<AtomRelationProfile> atom_;
  std::optional<GeneralRelationProfile> general_;
  std::vector<int> carrier_;
  std::map<std::pair<int, int>, std::vector<int>> ball_cache_;
};

struct ReportOptions {
  Family family = Family::General;
  int max_n = -1;  // cap emitted relation/ball depth; -1 = no cap
  bool include_relations = true;
  bool include_balls = true;
  bool include_isolated = true;
  std::optional<std::vector<int>> ball_elements;   // subset of carrier; nullopt = all
  std::vector<std::vector<int>> subsets;           // openness queries
};

/// Aggregated, serialization-ready view of one family's topology.
struct TopologyReport {
  Family family = Family::General;
  int stabilization = 0;
  std::vector<std::vector<std::pair<int, int>>> relations;  // per n, element-id pairs
  std::vector<int> carrier;
  std::vector<int> isolated;
  std::vector<int> first_empty;                       // parallel to carrier
  std::vector<std::pair<int, std::vector<std::vector<int>>>> balls;  // element -> trace
  struct SubsetVerdict {
    std::vector<int> subset;
    bool open = false;
  };
  std::vector<SubsetVerdict> subsets;
  bool has_relations = false, has_balls = false, has_isolated = false;
};

TopologyReport topology_report(const FiniteOml& lattice, const ReportOptions& options = {});

}  // namespace omltopo
