#include "omltopo/posets.hpp"

#include <string>

namespace omltopo {

namespace {

std::string idx(int i) { return std::to_string(i); }

}  // namespace

FinitePoset::FinitePoset(int n, const std::vector<std::uint8_t>& leq) {
  if (n <= 0) raise(ErrorKind::DomainError, "poset needs at least one element");
  if (leq.size() != static_cast<std::size_t>(n) * n)
    raise(ErrorKind::DomainError, "order matrix size mismatch");

  n_ = n;
  up_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[static_cast<std::size_t>(a) * n + b]) up_[a].set(b);

  for (int a = 0; a < n; ++a)
    if (!up_[a].test(a))
      raise(ErrorKind::NotAPoset, "order not reflexive at " + idx(a), {idx(a)});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && up_[a].test(b) && up_[b].test(a))
        raise(ErrorKind::NotAPoset, "antisymmetry fails for (" + idx(a) + ", " + idx(b) + ")",
              {idx(a), idx(b)});
      // a ≤ b requires up(b) ⊆ up(a)
      if (up_[a].test(b) && !up_[b].is_subset_of(up_[a]))
        raise(ErrorKind::NotAPoset, "transitivity fails through (" + idx(a) + ", " + idx(b) + ")",
              {idx(a), idx(b)});
    }

  finish();
}

FinitePoset::FinitePoset(Trusted, int n, std::vector<Bitset> up_rows) {
  n_ = n;
  up_ = std::move(up_rows);
  finish();
}

void FinitePoset::finish() {
  down_.assign(n_, Bitset(n_));
  for (int a = 0; a < n_; ++a)
    up_[a].for_each([&](std::size_t b) { down_[b].set(a); });

  bottom_ = -1;
  for (int a = 0; a < n_; ++a) {
    if (up_[a].count() == static_cast<std::size_t>(n_)) {
      if (bottom_ >= 0) raise(ErrorKind::DomainError, "least element not unique");
      bottom_ = a;
    }
  }
  if (bottom_ < 0) raise(ErrorKind::DomainError, "poset has no least element");

  atom_ordinal_.assign(n_, -1);
  atom_mask_ = Bitset(n_);
  for (int x = 0; x < n_; ++x) {
    if (x != bottom_ && down_[x].count() == 2) {  // down(x) = {⊥, x}
      atom_ordinal_[x] = static_cast<int>(atoms_.size());
      atoms_.push_back(x);
      atom_mask_.set(x);
    }
  }

  atoms_below_.assign(n_, Bitset(n_));
  for (int x = 0; x < n_; ++x) {
    atoms_below_[x] = down_[x];
    atoms_below_[x] &= atom_mask_;
  }
}

bool is_lower_set(const FinitePoset& poset, const Bitset& members) {
  bool ok = true;
  members.for_each([&](std::size_t x) {
    if (!poset.down_set(static_cast<int>(x)).is_subset_of(members)) ok = false;
  });
  return ok;
}

LowerSet::LowerSet(const FinitePoset& host, Bitset members) : host_(&host), members_(std::move(members)) {
  if (members_.size() != static_cast<std::size_t>(host.size()))
    raise(ErrorKind::DomainError, "member mask size mismatch");
  if (!is_lower_set(host, members_))
    raise(ErrorKind::NotALowerSet, "subset is not downward closed");
}

Bitset lower_complement(const FinitePoset& poset, const Bitset& members) {
  const int n = poset.size();
  Bitset out(n);
  for (int x = 0; x < n; ++x) {
    // x ∈ ¬I iff down(x) ∩ I ⊆ {⊥}
    Bitset hits = poset.down_set(x) & members;
    if (hits.test(poset.bottom())) hits.reset(poset.bottom());
    if (hits.none()) out.set(x);
  }
  return out;
}

LowerSet LowerSet::complement() const {
  return LowerSet(*host_, lower_complement(*host_, members_));
}

LowerSet LowerSet::closure() const { return complement().complement(); }

SmashedPoset::SmashedPoset(const FinitePoset& base) : base_n_(base.size()) {
  const int n = base_n_;
  const int bot = base.bottom();
  index_.assign(static_cast<std::size_t>(n) * n, -1);

  pairs_.emplace_back(bot, bot);
  index_[static_cast<std::size_t>(bot) * n + bot] = 0;
  for (int a = 0; a < n; ++a) {
    if (a == bot) continue;
    for (int b = 0; b < n; ++b) {
      if (b == bot) continue;
      index_[static_cast<std::size_t>(a) * n + b] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(a, b);
    }
  }

  const int m = static_cast<int>(pairs_.size());
  std::vector<Bitset> up(m, Bitset(m));
  for (int i = 0; i < m; ++i) {
    const auto [a, b] = pairs_[i];
    for (int j = 0; j < m; ++j) {
      const auto [c, d] = pairs_[j];
      if (base.leq(a, c) && base.leq(b, d)) up[i].set(j);
    }
  }
  // Pointwise products of orders are orders; skip re-validation.
  poset_ = FinitePoset(FinitePoset::Trusted{}, m, std::move(up));
}

SmashedPoset smashed_product(const FinitePoset& base) { return SmashedPoset(base); }

}  // namespace omltopo
