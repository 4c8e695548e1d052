#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omltopo/posets.hpp"

namespace omltopo {

/// Hard cap on validated carrier size; keeps every table O(n^2)-cheap.
inline constexpr int kMaxLatticeElements = 512;
/// Default cap for the boolean-algebra generator (2^5 = 32 elements).
inline constexpr int kMaxBooleanAtoms = 5;

/// Interchange form of a lattice: element names, order pairs (either the
/// full relation or the cover relation), and the orthocomplement by name.
struct LatticeSpec {
  std::vector<std::string> elements;
  bool order_is_covers = true;
  std::vector<std::pair<int, int>> order_pairs;  // [i, j] meaning i ≤ j (or i ⋖ j)
  std::map<std::string, std::string> ortho;
};

/// Validated finite orthomodular lattice. Immutable after construction;
/// meet/join/orthocomplement are table lookups, so instances can be shared
/// across threads freely.
class FiniteOml {
 public:
  int size() const { return order_.size(); }
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the element with this name, or -1.
  int index_of(std::string_view name) const;

  bool leq(int a, int b) const { return order_.leq(a, b); }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * size() + b]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * size() + b]; }
  int ortho(int a) const { return ortho_[a]; }
  int bottom() const { return order_.bottom(); }
  int top() const { return top_; }

  /// Sasaki projection of a onto b: b ∧ (a ∨ b⊥).
  int sasaki(int a, int b) const { return meet(b, join(a, ortho(b))); }

  const std::vector<int>& atoms() const { return order_.atoms(); }
  bool is_atom(int x) const { return order_.is_atom(x); }
  std::vector<int> atoms_below(int x) const { return order_.atoms_below(x).to_indices(); }
  const Bitset& atom_mask_below(int x) const { return order_.atoms_below(x); }

  /// Every x > ⊥ has an atom below it. Always true on finite carriers;
  /// kept as an explicit, checkable hypothesis.
  bool is_atomic() const;
  /// Sasaki projections of atoms land in At(L) ∪ {⊥}.
  bool has_atom_projection() const;

  const FinitePoset& order() const { return order_; }
  /// Hasse-diagram edges (a ⋖ b), ascending lexicographic.
  std::vector<std::pair<int, int>> cover_pairs() const;

  friend bool operator==(const FiniteOml& a, const FiniteOml& b) {
    return a.names_ == b.names_ && a.order_ == b.order_ && a.ortho_ == b.ortho_;
  }

  friend FiniteOml validate(const LatticeSpec& spec);

 private:
  FiniteOml() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> name_index_;
  FinitePoset order_;
  std::vector<int> ortho_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int top_ = -1;
};

/// Checks every structural invariant and fills the operation tables.
/// Errors name the witnessing element pair:
///   NotAPoset          order axioms fail
///   NotALattice        some pair has no greatest lower / least upper bound
///   NotAnOrtholattice  ortho is not an involutive order-reversing complement
///   NotOrthomodular    a ≤ b but b ≠ a ∨ (b ∧ a⊥)
FiniteOml validate(const LatticeSpec& spec);

/// Powerset of k points ordered by inclusion; atoms p1..pk. k in [1, cap].
FiniteOml make_boolean(int k, int cap = kMaxBooleanAtoms);
/// ⊥, ⊤ and k orthogonal atom pairs a1,a1',…,ak,ak' (2k + 2 elements).
FiniteOml make_mo(int k);
/// Pointwise-ordered product with pointwise orthocomplement.
FiniteOml make_product(const FiniteOml& a, const FiniteOml& b);
/// Glues two lattices at shared bounds; interiors stay incomparable.
FiniteOml make_horizontal_sum(const FiniteOml& a, const FiniteOml& b);

}  // namespace omltopo
