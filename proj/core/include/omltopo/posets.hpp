#pragma once

#include <utility>
#include <vector>

#include "omltopo/bitset.hpp"
#include "omltopo/errors.hpp"

namespace omltopo {

/// Finite poset with a unique least element, stored as a full order matrix.
/// Immutable after construction; all queries are O(1) or O(n/64).
class FinitePoset {
 public:
  /// Tag for relations already known to satisfy the order axioms
  /// (products, validated lattices). Skips the O(n^2) axiom scan.
  struct Trusted {};

  /// Empty poset; placeholder until assigned.
  FinitePoset() = default;
  /// Validating constructor: `leq` is row-major, leq[a*n+b] != 0 meaning a ≤ b.
  /// Throws NotAPoset when reflexivity/antisymmetry/transitivity fail and
  /// DomainError when there is no unique least element.
  FinitePoset(int n, const std::vector<std::uint8_t>& leq);
  FinitePoset(Trusted, int n, std::vector<Bitset> up_rows);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  bool leq(int a, int b) const { return up_[a].test(b); }

  /// {y : x ≤ y} as a mask over element indices.
  const Bitset& up_set(int x) const { return up_[x]; }
  /// {y : y ≤ x}
  const Bitset& down_set(int x) const { return down_[x]; }

  /// Minimal elements above bottom, ascending.
  const std::vector<int>& atoms() const { return atoms_; }
  bool is_atom(int x) const { return atom_ordinal_[x] >= 0; }
  /// Position of x in atoms(), or -1.
  int atom_ordinal(int x) const { return atom_ordinal_[x]; }
  /// Atoms a with a ≤ x, as a mask over element indices.
  const Bitset& atoms_below(int x) const { return atoms_below_[x]; }
  /// Mask with a bit for every atom.
  const Bitset& atom_mask() const { return atom_mask_; }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

 private:
  void finish();  // derive down sets, bottom, atoms

  int n_ = 0;
  int bottom_ = -1;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<int> atoms_;
  std::vector<int> atom_ordinal_;
  std::vector<Bitset> atoms_below_;
  Bitset atom_mask_;
};

/// Downward-closure test for an arbitrary subset mask.
bool is_lower_set(const FinitePoset& poset, const Bitset& members);

/// Downward-closed subset of a poset. The constructor rejects masks that are
/// not downward closed, so every instance is a genuine lower set.
class LowerSet {
 public:
  LowerSet(const FinitePoset& host, Bitset members);

  const FinitePoset& host() const { return *host_; }
  const Bitset& members() const { return members_; }
  bool contains(int x) const { return members_.test(x); }
  std::size_t count() const { return members_.count(); }

  /// ¬I = {x : every y ≤ x that lies in I is the bottom element}.
  LowerSet complement() const;
  /// ¬¬I.
  LowerSet closure() const;

  friend bool operator==(const LowerSet& a, const LowerSet& b) {
    return a.host_ == b.host_ && a.members_ == b.members_;
  }

 private:
  const FinitePoset* host_;
  Bitset members_;
};

/// Complement mask of an arbitrary lower-set mask (no LowerSet wrapper).
Bitset lower_complement(const FinitePoset& poset, const Bitset& members);

/// The carrier {(a,b) : a ≠ ⊥ and b ≠ ⊥} ∪ {(⊥,⊥)} with the pointwise order.
/// Elements are densely re-indexed; (⊥,⊥) is index 0 and is the bottom.
class SmashedPoset {
 public:
  explicit SmashedPoset(const FinitePoset& base);

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  int base_size() const { return base_n_; }

  /// Dense index of the pair (a,b), or -1 when the pair is not in the carrier.
  int index_of(int a, int b) const {
    return index_[static_cast<std::size_t>(a) * base_n_ + b];
  }
  std::pair<int, int> pair_at(int idx) const { return pairs_[idx]; }

 private:
  int base_n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> index_;
  FinitePoset poset_;
};

SmashedPoset smashed_product(const FinitePoset& base);

}  // namespace omltopo
