#include "omltopo/topology.hpp"

#include <stdexcept>
#include <string>

namespace omltopo {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Atom: return "at";
    case Family::Lattice: return "lattice";
    case Family::General: return "general";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "at") return Family::Atom;
  if (name == "lattice") return Family::Lattice;
  if (name == "general") return Family::General;
  return std::nullopt;
}

bool AtomRelationProfile::related(int n, int elem_a, int elem_b) const {
  const int oa = atom_ordinal[elem_a], ob = atom_ordinal[elem_b];
  if (oa < 0 || ob < 0) return false;
  return relation(n).test(static_cast<std::size_t>(oa) * atom_count() + ob);
}

bool GeneralRelationProfile::related(int n, int elem_a, int elem_b) const {
  const int idx = carrier.index_of(elem_a, elem_b);
  return idx >= 0 && relation(n).test(idx);
}

namespace {

std::vector<std::vector<int>> up_lists(const FiniteOml& lattice) {
  std::vector<std::vector<int>> ups(lattice.size());
  for (int x = 0; x < lattice.size(); ++x) ups[x] = lattice.order().up_set(x).to_indices();
  return ups;
}

// Nonbottom lower bounds, including the element itself.
std::vector<std::vector<int>> down_nz_lists(const FiniteOml& lattice) {
  std::vector<std::vector<int>> downs(lattice.size());
  for (int x = 0; x < lattice.size(); ++x) {
    Bitset d = lattice.order().down_set(x);
    d.reset(lattice.bottom());
    downs[x] = d.to_indices();
  }
  return downs;
}

Bitset atom_step(const FiniteOml& lattice, const AtomRelationProfile& profile,
                 const std::vector<std::vector<int>>& ups, const Bitset& prev) {
  const int k = profile.atom_count();
  Bitset next(static_cast<std::size_t>(k) * k);
  for (int ai = 0; ai < k; ++ai) {
    const int a = profile.atoms[ai];
    for (int bi = 0; bi < k; ++bi) {
      const std::size_t bit = static_cast<std::size_t>(ai) * k + bi;
      if (prev.test(bit)) {  // (⊤,⊤) witnesses R_n ⊆ R_{n+1}
        next.set(bit);
        continue;
      }
      const int b = profile.atoms[bi];
      bool hit = false;
      for (int a_up : ups[a]) {
        for (int b_up : ups[b]) {
          const int s1 = profile.atom_ordinal[lattice.sasaki(a, b_up)];
          const int s2 = profile.atom_ordinal[lattice.sasaki(b, a_up)];
          if (s1 >= 0 && s2 >= 0 && prev.test(static_cast<std::size_t>(s1) * k + s2)) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (hit) next.set(bit);
    }
  }
  return next;
}

}  // namespace

AtomRelationProfile atom_relation_profile(const FiniteOml& lattice) {
  if (!lattice.is_atomic())
    raise(ErrorKind::NotAtomic, "lattice is not atomic");
  if (!lattice.has_atom_projection())
    raise(ErrorKind::NoAtomProjection,
          "Sasaki projection of some atom is neither bottom nor an atom");

  AtomRelationProfile profile;
  profile.atoms = lattice.atoms();
  profile.atom_ordinal.assign(lattice.size(), -1);
  for (int i = 0; i < profile.atom_count(); ++i) profile.atom_ordinal[profile.atoms[i]] = i;

  const int k = profile.atom_count();
  Bitset r0(static_cast<std::size_t>(k) * k);
  for (int ai = 0; ai < k; ++ai)
    for (int bi = 0; bi < k; ++bi)
      if (lattice.leq(profile.atoms[ai], lattice.ortho(profile.atoms[bi])))
        r0.set(static_cast<std::size_t>(ai) * k + bi);
  profile.relations.push_back(std::move(r0));

  const auto ups = up_lists(lattice);
  for (;;) {
    Bitset next = atom_step(lattice, profile, ups, profile.relations.back());
    if (!profile.relations.back().is_subset_of(next))
      throw std::logic_error("atom relation chain is not increasing");
    if (next == profile.relations.back()) break;
    profile.relations.push_back(std::move(next));
  }
  profile.stabilization = static_cast<int>(profile.relations.size()) - 1;
  return profile;
}

GeneralRelationProfile general_relation_profile(const FiniteOml& lattice) {
  GeneralRelationProfile profile{SmashedPoset(lattice.order()), {}, 0};
  const SmashedPoset& carrier = profile.carrier;
  const FinitePoset& poset = carrier.poset();
  const int m = carrier.size();

  Bitset seed(m);
  for (int idx = 0; idx < m; ++idx) {
    const auto [a, b] = carrier.pair_at(idx);
    if (lattice.leq(a, lattice.ortho(b))) seed.set(idx);
  }
  if (!is_lower_set(poset, seed))
    throw std::logic_error("orthogonality seed is not a lower set of the smashed carrier");
  profile.relations.push_back(lower_complement(poset, lower_complement(poset, seed)));

  const auto ups = up_lists(lattice);
  for (;;) {
    const Bitset& prev = profile.relations.back();
    Bitset pre(m);
    for (int idx = 0; idx < m; ++idx) {
      if (prev.test(idx)) {  // (⊤,⊤) witnesses monotonicity
        pre.set(idx);
        continue;
      }
      const auto [a, b] = carrier.pair_at(idx);
      bool hit = false;
      for (int a_up : ups[a]) {
        for (int b_up : ups[b]) {
          const int target = carrier.index_of(lattice.sasaki(a, b_up), lattice.sasaki(b, a_up));
          if (target >= 0 && prev.test(target)) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (hit) pre.set(idx);
    }
    if (!is_lower_set(poset, pre))
      throw std::logic_error("relation step produced a non-lower set");
    Bitset next = lower_complement(poset, lower_complement(poset, pre));
    if (!prev.is_subset_of(next))
      throw std::logic_error("general relation chain is not increasing");
    if (next == prev) break;
    profile.relations.push_back(std::move(next));
  }
  profile.stabilization = static_cast<int>(profile.relations.size()) - 1;
  return profile;
}

std::vector<int> atom_ball(const FiniteOml& lattice, const AtomRelationProfile& profile,
                           int atom, int n) {
  if (!lattice.is_atom(atom))
    raise(ErrorKind::NotAnAtom, "\"" + lattice.name(atom) + "\" is not an atom",
          {lattice.name(atom)});
  const int k = profile.atom_count();
  const int oa = profile.atom_ordinal[atom];
  Bitset members = profile.r_infinity();
  members.subtract(profile.relation(n));
  std::vector<int> out;
  for (int bi = 0; bi < k; ++bi)
    if (members.test(static_cast<std::size_t>(oa) * k + bi)) out.push_back(profile.atoms[bi]);
  return out;
}

std::vector<int> lattice_ball(const FiniteOml& lattice, const AtomRelationProfile& profile,
                              int a, int n) {
  std::vector<int> out;
  // Bottom carries no atom evidence; its ball is empty.
  if (a == lattice.bottom()) return out;

  const int k = profile.atom_count();
  const Bitset& r_inf = profile.r_infinity();
  const Bitset& r_n = profile.relation(n);
  const auto in_ball = [&](int x, int y) {
    const std::size_t bit =
        static_cast<std::size_t>(profile.atom_ordinal[x]) * k + profile.atom_ordinal[y];
    return r_inf.test(bit) && !r_n.test(bit);
  };

  const std::vector<int> atoms_a = lattice.atoms_below(a);
  for (int b = 0; b < lattice.size(); ++b) {
    const std::vector<int> atoms_b = lattice.atoms_below(b);
    bool ok = true;
    for (int x : atoms_a) {
      bool found = false;
      for (int y : atoms_b)
        if (in_ball(x, y)) {
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int y : atoms_b) {
      bool found = false;
      for (int x : atoms_a)
        if (in_ball(y, x)) {
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(b);
  }
  return out;
}

std::vector<int> general_ball(const FiniteOml& lattice, const GeneralRelationProfile& profile,
                              int a, int n) {
  std::vector<int> out;
  // The (⊥,⊥) vacuity of the two clauses is not proximity evidence.
  if (a == lattice.bottom()) return out;

  const SmashedPoset& carrier = profile.carrier;
  Bitset witness = profile.r_infinity();
  witness &= lower_complement(carrier.poset(), profile.relation(n));

  const auto downs = down_nz_lists(lattice);

  const auto has_witness = [&](const std::vector<int>& firsts, const std::vector<int>& seconds,
                               bool first_slot) {
    for (int x : firsts)
      for (int y : seconds) {
        const int idx = first_slot ? carrier.index_of(x, y) : carrier.index_of(y, x);
        if (idx >= 0 && witness.test(idx)) return true;
      }
    return false;
  };

  for (int b = 0; b < lattice.size(); ++b) {
    bool ok = true;
    for (int a_low : downs[a]) {  // ∀ a' ≤ a nonbottom ∃ a'' ≤ a', b' ≤ b
      if (!has_witness(downs[a_low], downs[b], true)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int b_low : downs[b]) {  // ∀ b' ≤ b nonbottom ∃ b'' ≤ b', a' ≤ a
      if (!has_witness(downs[b_low], downs[a], false)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(b);
  }
  return out;
}

TopologyEngine::TopologyEngine(const FiniteOml& lattice, Family family)
    : lattice_(&lattice), family_(family) {
  if (family == Family::General) {
    general_ = general_relation_profile(lattice);
  } else {
    atom_ = atom_relation_profile(lattice);
  }
  if (family == Family::Atom) {
    carrier_ = lattice.atoms();
  } else {
    carrier_.resize(lattice.size());
    for (int i = 0; i < lattice.size(); ++i) carrier_[i] = i;
  }
}

int TopologyEngine::stabilization() const {
  return family_ == Family::General ? general_->stabilization : atom_->stabilization;
}

const std::vector<int>& TopologyEngine::ball(int a, int n) {
  n = std::min(n, stabilization() + 1);
  const auto key = std::make_pair(a, n);
  auto it = ball_cache_.find(key);
  if (it != ball_cache_.end()) return it->second;

  std::vector<int> members;
  switch (family_) {
    case Family::Atom: members = atom_ball(*lattice_, *atom_, a, n); break;
    case Family::Lattice: members = lattice_ball(*lattice_, *atom_, a, n); break;
    case Family::General: members = general_ball(*lattice_, *general_, a, n); break;
  }
  return ball_cache_.emplace(key, std::move(members)).first->second;
}

int TopologyEngine::first_empty_ball(int a) {
  for (int n = 0; n <= stabilization() + 1; ++n)
    if (ball(a, n).empty()) return n;
  throw std::logic_error("ball did not vanish by the stabilization index");
}

bool TopologyEngine::is_open(const std::vector<int>& subset) {
  Bitset mask(lattice_->size());
  for (int x : subset) {
    if (family_ == Family::Atom && !lattice_->is_atom(x))
      raise(ErrorKind::NotAnAtom, "\"" + lattice_->name(x) + "\" is not an atom",
            {lattice_->name(x)});
    mask.set(x);
  }
  for (int a : subset) {
    bool contained = false;
    for (int n = 0; n <= stabilization() + 1 && !contained; ++n) {
      contained = true;
      for (int b : ball(a, n))
        if (!mask.test(b)) {
          contained = false;
          break;
        }
    }
    if (!contained) return false;
  }
  return true;
}

std::vector<int> TopologyEngine::isolated_points() {
  std::vector<int> out;
  for (int a : carrier_)
    if (is_open({a})) out.push_back(a);
  return out;
}

TopologyReport topology_report(const FiniteOml& lattice, const ReportOptions& options) {
  TopologyEngine engine(lattice, options.family);
  TopologyReport report;
  report.family = options.family;
  report.stabilization = engine.stabilization();
  report.carrier = engine.carrier();
  report.has_relations = options.include_relations;
  report.has_balls = options.include_balls;
  report.has_isolated = options.include_isolated;

  const int depth_cap = options.max_n < 0 ? engine.stabilization() : options.max_n;

  if (options.include_relations) {
    for (int n = 0; n <= std::min(depth_cap, engine.stabilization()); ++n) {
      std::vector<std::pair<int, int>> pairs;
      if (options.family == Family::General) {
        const auto& profile = engine.general_profile();
        profile.relation(n).for_each(
            [&](std::size_t idx) { pairs.push_back(profile.carrier.pair_at(static_cast<int>(idx))); });
      } else {
        const auto& profile = engine.atom_profile();
        const int k = profile.atom_count();
        profile.relation(n).for_each([&](std::size_t bit) {
          pairs.emplace_back(profile.atoms[bit / k], profile.atoms[bit % k]);
        });
      }
      report.relations.push_back(std::move(pairs));
    }
  }

  if (options.include_balls) {
    const std::vector<int>& elements =
        options.ball_elements ? *options.ball_elements : engine.carrier();
    for (int a : elements) {
      const int upto =
          std::min(engine.first_empty_ball(a), options.max_n < 0 ? engine.stabilization() + 1
                                                                 : options.max_n);
      std::vector<std::vector<int>> trace;
      for (int n = 0; n <= upto; ++n) trace.push_back(engine.ball(a, n));
      report.balls.emplace_back(a, std::move(trace));
    }
  }

  for (int a : engine.carrier()) report.first_empty.push_back(engine.first_empty_ball(a));
  if (options.include_isolated) report.isolated = engine.isolated_points();

  for (const auto& subset : options.subsets)
    report.subsets.push_back({subset, engine.is_open(subset)});

  return report;
}

}  // namespace omltopo
