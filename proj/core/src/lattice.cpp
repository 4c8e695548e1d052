#include "omltopo/lattice.hpp"

#include <algorithm>
#include <set>

namespace omltopo {

namespace {

// Greatest element of `candidates`, or -1 when none dominates all of them.
int greatest_of(const std::vector<Bitset>& down, const Bitset& candidates) {
  int found = -1;
  candidates.for_each([&](std::size_t g) {
    if (found < 0 && candidates.is_subset_of(down[g])) found = static_cast<int>(g);
  });
  return found;
}

}  // namespace

int FiniteOml::index_of(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  return it == name_index_.end() ? -1 : it->second;
}

bool FiniteOml::is_atomic() const {
  for (int x = 0; x < size(); ++x)
    if (x != bottom() && order_.atoms_below(x).none()) return false;
  return true;
}

bool FiniteOml::has_atom_projection() const {
  for (int a : atoms())
    for (int b = 0; b < size(); ++b) {
      const int s = sasaki(a, b);
      if (s != bottom() && !is_atom(s)) return false;
    }
  return true;
}

std::vector<std::pair<int, int>> FiniteOml::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      // a ⋖ b iff the interval [a, b] is exactly {a, b}
      Bitset between = order_.up_set(a) & order_.down_set(b);
      if (between.count() == 2) covers.emplace_back(a, b);
    }
  return covers;
}

FiniteOml validate(const LatticeSpec& spec) {
  const int n = static_cast<int>(spec.elements.size());
  if (n == 0) raise(ErrorKind::ParseError, "lattice has no elements");
  if (n > kMaxLatticeElements)
    raise(ErrorKind::SizeLimit,
          "lattice has " + std::to_string(n) + " elements; compiled maximum is " +
              std::to_string(kMaxLatticeElements));

  std::unordered_map<std::string, int> name_index;
  for (int i = 0; i < n; ++i) {
    const auto& name = spec.elements[i];
    if (name.empty()) raise(ErrorKind::ParseError, "empty element name at index " + std::to_string(i));
    if (!name_index.emplace(name, i).second)
      raise(ErrorKind::ParseError, "duplicate element name \"" + name + "\"");
  }
  const auto nm = [&](int i) { return spec.elements[i]; };

  // Order matrix. Reflexive closure is implied; covers get a transitive closure.
  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [i, j] : spec.order_pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      raise(ErrorKind::ParseError, "order pair index out of range");
    up[i].set(j);
  }
  if (spec.order_is_covers) {
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (up[i].test(k)) up[i] |= up[k];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && up[i].test(j) && up[j].test(i))
        raise(ErrorKind::NotAPoset, "antisymmetry fails for (" + nm(i) + ", " + nm(j) + ")",
              {nm(i), nm(j)});
      if (!spec.order_is_covers && up[i].test(j) && !up[j].is_subset_of(up[i]))
        raise(ErrorKind::NotAPoset, "transitivity fails through (" + nm(i) + ", " + nm(j) + ")",
              {nm(i), nm(j)});
    }

  std::vector<Bitset> down(n, Bitset(n));
  for (int i = 0; i < n; ++i) up[i].for_each([&](std::size_t j) { down[j].set(i); });

  // Meet/join tables; first pair without a bound wins the error report.
  std::vector<int> meet(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> join(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int glb = greatest_of(down, down[a] & down[b]);
      if (glb < 0)
        raise(ErrorKind::NotALattice, "no meet for (" + nm(a) + ", " + nm(b) + ")", {nm(a), nm(b)});
      meet[static_cast<std::size_t>(a) * n + b] = glb;
      const int lub = greatest_of(up, up[a] & up[b]);  // least upper bound, dually
      if (lub < 0)
        raise(ErrorKind::NotALattice, "no join for (" + nm(a) + ", " + nm(b) + ")", {nm(a), nm(b)});
      join[static_cast<std::size_t>(a) * n + b] = lub;
    }

  int bottom = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bottom = meet[static_cast<std::size_t>(bottom) * n + i];
    top = join[static_cast<std::size_t>(top) * n + i];
  }

  // Orthocomplement: involutive, order-reversing, complement laws.
  std::vector<int> ortho(n, -1);
  for (int i = 0; i < n; ++i) {
    auto it = spec.ortho.find(spec.elements[i]);
    if (it == spec.ortho.end())
      raise(ErrorKind::ParseError, "ortho map misses element \"" + nm(i) + "\"");
    auto target = name_index.find(it->second);
    if (target == name_index.end())
      raise(ErrorKind::ParseError, "ortho of \"" + nm(i) + "\" names unknown element \"" + it->second + "\"");
    ortho[i] = target->second;
  }
  for (int i = 0; i < n; ++i)
    if (ortho[ortho[i]] != i)
      raise(ErrorKind::NotAnOrtholattice, "orthocomplement not an involution at " + nm(i),
            {nm(i), nm(ortho[i])});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (up[i].test(j) && !up[ortho[j]].test(ortho[i]))
        raise(ErrorKind::NotAnOrtholattice,
              "orthocomplement not order-reversing on (" + nm(i) + ", " + nm(j) + ")",
              {nm(i), nm(j)});
  for (int i = 0; i < n; ++i) {
    if (join[static_cast<std::size_t>(i) * n + ortho[i]] != top ||
        meet[static_cast<std::size_t>(i) * n + ortho[i]] != bottom)
      raise(ErrorKind::NotAnOrtholattice, "complement laws fail for (" + nm(i) + ", " + nm(ortho[i]) + ")",
            {nm(i), nm(ortho[i])});
  }

  // Orthomodular law: a ≤ b implies b = a ∨ (b ∧ a⊥).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!up[a].test(b)) continue;
      const int rel = meet[static_cast<std::size_t>(b) * n + ortho[a]];
      if (join[static_cast<std::size_t>(a) * n + rel] != b)
        raise(ErrorKind::NotOrthomodular,
              "orthomodular law fails for (" + nm(a) + ", " + nm(b) + ")", {nm(a), nm(b)});
    }

  FiniteOml oml;
  oml.names_ = spec.elements;
  oml.name_index_ = std::move(name_index);
  oml.order_ = FinitePoset(FinitePoset::Trusted{}, n, std::move(up));
  oml.ortho_ = std::move(ortho);
  oml.meet_ = std::move(meet);
  oml.join_ = std::move(join);
  oml.top_ = top;
  return oml;
}

namespace {

LatticeSpec full_order_spec(std::vector<std::string> names,
                            const std::vector<std::pair<int, int>>& leq_pairs,
                            std::map<std::string, std::string> ortho) {
  LatticeSpec spec;
  spec.elements = std::move(names);
  spec.order_is_covers = false;
  spec.order_pairs = leq_pairs;
  spec.ortho = std::move(ortho);
  return spec;
}

}  // namespace

FiniteOml make_boolean(int k, int cap) {
  if (k < 1)
    raise(ErrorKind::SizeLimit, "boolean generator needs k >= 1 (k = 0 would collapse the bounds)");
  if (k > cap)
    raise(ErrorKind::SizeLimit, "boolean generator capped at k = " + std::to_string(cap));

  const int n = 1 << k;
  std::vector<std::string> names(n);
  for (int mask = 0; mask < n; ++mask) {
    if (mask == 0) {
      names[mask] = "0";
    } else if (mask == n - 1) {
      names[mask] = "1";
    } else {
      std::string s;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) s += "p" + std::to_string(i + 1);
      names[mask] = s;
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) pairs.emplace_back(a, b);
  std::map<std::string, std::string> ortho;
  for (int a = 0; a < n; ++a) ortho[names[a]] = names[(n - 1) ^ a];
  return validate(full_order_spec(std::move(names), pairs, std::move(ortho)));
}

FiniteOml make_mo(int k) {
  if (k < 1) raise(ErrorKind::SizeLimit, "MO generator needs k >= 1");
  const int n = 2 * k + 2;
  if (n > kMaxLatticeElements)
    raise(ErrorKind::SizeLimit, "MO(" + std::to_string(k) + ") exceeds the compiled element cap");

  std::vector<std::string> names;
  names.push_back("0");
  for (int i = 1; i <= k; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("a" + std::to_string(i) + "'");
  }
  names.push_back("1");

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    pairs.emplace_back(0, x);
    pairs.emplace_back(x, n - 1);
  }
  std::map<std::string, std::string> ortho;
  ortho["0"] = "1";
  ortho["1"] = "0";
  for (int i = 1; i <= k; ++i) {
    ortho[names[2 * i - 1]] = names[2 * i];
    ortho[names[2 * i]] = names[2 * i - 1];
  }
  return validate(full_order_spec(std::move(names), pairs, std::move(ortho)));
}

FiniteOml make_product(const FiniteOml& a, const FiniteOml& b) {
  const int na = a.size(), nb = b.size();
  if (na * nb > kMaxLatticeElements)
    raise(ErrorKind::SizeLimit, "product would have " + std::to_string(na * nb) + " elements");

  const auto id = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::string> names(static_cast<std::size_t>(na) * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) names[id(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";

  std::vector<std::pair<int, int>> pairs;
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          if (a.leq(x1, x2) && b.leq(y1, y2)) pairs.emplace_back(id(x1, y1), id(x2, y2));

  std::map<std::string, std::string> ortho;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) ortho[names[id(x, y)]] = names[id(a.ortho(x), b.ortho(y))];
  return validate(full_order_spec(std::move(names), pairs, std::move(ortho)));
}

FiniteOml make_horizontal_sum(const FiniteOml& a, const FiniteOml& b) {
  // Interior elements of each operand keep their own order and ortho;
  // the bounds are shared. Interiors from different operands stay incomparable.
  const int n = (a.size() - 2) + (b.size() - 2) + 2;
  if (n > kMaxLatticeElements)
    raise(ErrorKind::SizeLimit, "horizontal sum would have " + std::to_string(n) + " elements");

  std::vector<std::string> names{"0"};
  std::vector<int> map_a(a.size(), -1), map_b(b.size(), -1);
  map_a[a.bottom()] = 0;
  map_b[b.bottom()] = 0;
  for (int x = 0; x < a.size(); ++x) {
    if (x == a.bottom() || x == a.top()) continue;
    map_a[x] = static_cast<int>(names.size());
    names.push_back("l:" + a.name(x));
  }
  for (int y = 0; y < b.size(); ++y) {
    if (y == b.bottom() || y == b.top()) continue;
    map_b[y] = static_cast<int>(names.size());
    names.push_back("r:" + b.name(y));
  }
  const int top = static_cast<int>(names.size());
  names.push_back("1");
  map_a[a.top()] = top;
  map_b[b.top()] = top;

  std::set<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    pairs.emplace(0, x);
    pairs.emplace(x, top);
  }
  for (int x1 = 0; x1 < a.size(); ++x1)
    for (int x2 = 0; x2 < a.size(); ++x2)
      if (a.leq(x1, x2)) pairs.emplace(map_a[x1], map_a[x2]);
  for (int y1 = 0; y1 < b.size(); ++y1)
    for (int y2 = 0; y2 < b.size(); ++y2)
      if (b.leq(y1, y2)) pairs.emplace(map_b[y1], map_b[y2]);

  std::map<std::string, std::string> ortho;
  ortho["0"] = "1";
  ortho["1"] = "0";
  for (int x = 0; x < a.size(); ++x)
    if (x != a.bottom() && x != a.top()) ortho[names[map_a[x]]] = names[map_a[a.ortho(x)]];
  for (int y = 0; y < b.size(); ++y)
    if (y != b.bottom() && y != b.top()) ortho[names[map_b[y]]] = names[map_b[b.ortho(y)]];

  return validate(full_order_spec(std::move(names),
                                  std::vector<std::pair<int, int>>(pairs.begin(), pairs.end()),
                                  std::move(ortho)));
}

}  // namespace omltopo
