#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/errors.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/polymatroid.hpp"
#include "latpoly/rational.hpp"
#include "latpoly/report.hpp"

namespace latpoly {

// Nonnegative weights on the atoms of L, aligned with lattice atoms().
struct AtomWeighting {
  const FiniteLattice* lattice = nullptr;
  std::vector<Rational> f;  // per atom, in atoms() order

  const Rational& on_atom(ElementId a) const {
    int p = lattice->atom_position(a);
    if (p < 0) fail(errc::bad_argument, lattice->name(a) + " is not an atom");
    return f[p];
  }
};

inline AtomWeighting make_atom_weighting(const FiniteLattice& L,
                                         std::vector<Rational> f) {
  if (f.size() != L.atoms().size())
    fail(errc::missing_value, "need one weight per atom");
  for (const auto& v : f)
    if (v < Rational(0))
      fail(errc::bad_argument, "atom weights must be nonnegative");
  return AtomWeighting{&L, std::move(f)};
}

// Weighting induced by a rank function: f = r restricted to atoms.
inline AtomWeighting atom_weights_from_rank(const RankFunction& rf) {
  const FiniteLattice& L = *rf.lattice;
  std::vector<Rational> f;
  f.reserve(L.atoms().size());
  for (ElementId a : L.atoms()) f.push_back(rf(a));
  return make_atom_weighting(L, std::move(f));
}

// X is a flat when joining any atom outside X strictly raises the rank.
// (Equivalent to quantifying over all elements, by monotonicity.)
inline bool is_flat(const RankFunction& rf, ElementId x) {
  const FiniteLattice& L = *rf.lattice;
  for (ElementId a : L.atoms()) {
    if (L.leq(a, x)) continue;
    if (rf(L.join(x, a)) == rf(x)) return false;
  }
  return true;
}

// X is cyclic when for every H covered by X either the rank does not drop,
// or some atom of X outside H has rank exceeding the drop.
inline bool is_cyclic(const RankFunction& rf, ElementId x) {
  const FiniteLattice& L = *rf.lattice;
  for (ElementId h : L.lower_covers(x)) {
    Rational drop = rf(x) - rf(h);
    if (drop == Rational(0)) continue;
    bool witness = false;
    for (ElementId a : L.atoms_below(x)) {
      if (L.leq(a, h)) continue;
      if (rf(a) > drop) {
        witness = true;
        break;
      }
    }
    if (!witness) return false;
  }
  return true;
}

// Join of all cyclic elements below X: the unique maximal cycle below X.
inline ElementId cyc(const RankFunction& rf, ElementId x) {
  const FiniteLattice& L = *rf.lattice;
  std::vector<ElementId> cycles;
  for (ElementId y : L.down_set(x))
    if (is_cyclic(rf, y)) cycles.push_back(y);
  return L.join_of(cycles);
}

// Closure: join of every element whose addition preserves the rank.
inline ElementId cl(const RankFunction& rf, ElementId x) {
  const FiniteLattice& L = *rf.lattice;
  std::vector<ElementId> keep;
  for (ElementId y = 0; y < L.size(); ++y)
    if (rf(L.join(x, y)) == rf(x)) keep.push_back(y);
  return L.join_of(keep);
}

// Atom-only closure; agrees with cl on polymatroids (tested as a property).
inline ElementId cl_atoms(const RankFunction& rf, ElementId x) {
  const FiniteLattice& L = *rf.lattice;
  ElementId out = x;
  for (ElementId a : L.atoms())
    if (rf(L.join(x, a)) == rf(x)) out = L.join(out, a);
  return out;
}

// ---------------------------------------------------------------------------
// Atom bases and the minimum-weight basis value.

struct AtomBasis {
  std::vector<ElementId> atoms;  // ascending element id
};

// Every set of h(A) atoms below A whose join is A. For the bottom element
// the empty set qualifies (empty join = bottom).
inline std::vector<AtomBasis> enumerate_atom_bases(const FiniteLattice& L,
                                                   ElementId a) {
  std::vector<AtomBasis> out;
  const std::vector<ElementId> pool = L.atoms_below(a);
  const int need = L.height(a);
  if (need == 0) {
    out.push_back(AtomBasis{});
    return out;
  }
  if (static_cast<int>(pool.size()) < need) return out;
  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i) pick[i] = i;
  while (true) {
    std::vector<ElementId> chosen;
    chosen.reserve(need);
    for (int i : pick) chosen.push_back(pool[i]);
    if (L.join_of(chosen) == a) out.push_back(AtomBasis{chosen});
    int i = need - 1;
    while (i >= 0 && pick[i] == static_cast<int>(pool.size()) - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Greedy minimum-weight basis: repeatedly absorb the cheapest atom of A not
// yet below the running join. Ties go to the atom whose position appears
// first in tie_order (identity by default); the resulting value is
// tie-independent, which the tests exercise directly.
inline Rational mu_greedy(const FiniteLattice& L, const AtomWeighting& f,
                          ElementId a,
                          const std::vector<int>* tie_order = nullptr) {
  ElementId v = L.bottom();
  Rational total(0);
  auto rank_of = [&](ElementId atom) {
    int p = L.atom_position(atom);
    return tie_order ? (*tie_order)[p] : p;
  };
  while (v != a) {
    bool found = false;
    ElementId best = -1;
    for (ElementId e : L.atoms_below(a)) {
      if (L.leq(e, v)) continue;
      if (!found || f.on_atom(e) < f.on_atom(best) ||
          (f.on_atom(e) == f.on_atom(best) && rank_of(e) < rank_of(best))) {
        best = e;
        found = true;
      }
    }
    if (!found)
      fail(errc::bad_argument,
           "atoms of " + L.name(a) + " do not join up to it");
    total += f.on_atom(best);
    v = L.join(v, best);
  }
  return total;
}

// Direct evaluation of the defining minimum; the oracle for mu_greedy.
inline Rational mu_bruteforce(const FiniteLattice& L, const AtomWeighting& f,
                              ElementId a) {
  auto bases = enumerate_atom_bases(L, a);
  if (bases.empty())
    fail(errc::bad_argument, L.name(a) + " has no atom basis");
  std::optional<Rational> best;
  for (const auto& b : bases) {
    Rational s(0);
    for (ElementId e : b.atoms) s += f.on_atom(e);
    if (!best || s < *best) best = s;
  }
  return *best;
}

inline std::vector<Rational> mu_table(const FiniteLattice& L,
                                      const AtomWeighting& f) {
  std::vector<Rational> out(L.size());
  for (ElementId x = 0; x < L.size(); ++x) out[x] = mu_greedy(L, f, x);
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-modularity of a grounded function g on the interval [bottom, X]:
// every Y <= X must admit a complement Y^c (in the whole lattice) with
// g(X) = g(Y) + g(X ^ Y^c).

inline Report is_quasi_modular(const FiniteLattice& L,
                               const std::vector<Rational>& g, ElementId x) {
  if (static_cast<int>(g.size()) != L.size())
    fail(errc::missing_value, "g must be defined on every element");
  if (g[L.bottom()] != Rational(0))
    fail(errc::bad_argument, "quasi-modularity requires g(bottom) = 0");
  for (ElementId y : L.down_set(x)) {
    bool witnessed = false;
    for (ElementId yc : L.complements(y)) {
      if (g[x] == g[y] + g[L.meet(x, yc)]) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed)
      return Report::violation(
          "quasi-modular",
          "no complement of " + L.name(y) + " splits g on [" +
              L.name(L.bottom()) + ", " + L.name(x) + "]",
          {L.name(x), L.name(y)});
  }
  return Report::ok("quasi-modular");
}

// ---------------------------------------------------------------------------
// The lattice formed by a subset of elements under the induced order.

struct CyclicFlatLattice {
  const FiniteLattice* lattice = nullptr;
  std::vector<ElementId> members;   // ascending element id
  std::vector<int> member_pos;      // element -> position in members, or -1
  std::vector<int16_t> meet_z, join_z;  // position-indexed tables
  int bottom_pos = 0, top_pos = 0;

  int size() const { return static_cast<int>(members.size()); }
  ElementId member(int i) const { return members[i]; }
  int position(ElementId x) const { return member_pos[x]; }
  bool contains(ElementId x) const { return member_pos[x] >= 0; }
  ElementId bottom_z() const { return members[bottom_pos]; }
  ElementId top_z() const { return members[top_pos]; }
  ElementId meet_member(int i, int j) const {
    return members[meet_z[i * size() + j]];
  }
  ElementId join_member(int i, int j) const {
    return members[join_z[i * size() + j]];
  }
};

// Builds the member lattice from the induced order, or fails loudly if some
// pair lacks a unique bound within the member set.
inline CyclicFlatLattice make_member_lattice(const FiniteLattice& L,
                                             std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) fail(errc::empty_z, "member set is empty");

  CyclicFlatLattice Z;
  Z.lattice = &L;
  Z.members = std::move(members);
  Z.member_pos.assign(L.size(), -1);
  const int m = Z.size();
  for (int i = 0; i < m; ++i) Z.member_pos[Z.members[i]] = i;
  Z.meet_z.assign(m * m, -1);
  Z.join_z.assign(m * m, -1);

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      ElementId a = Z.members[i], b = Z.members[j];
      int glb = -1, lub = -1;
      for (int k = 0; k < m; ++k) {
        ElementId c = Z.members[k];
        if (L.leq(c, a) && L.leq(c, b)) {
          bool greatest = true;
          for (int l = 0; l < m && greatest; ++l)
            if (L.leq(Z.members[l], a) && L.leq(Z.members[l], b) &&
                !L.leq(Z.members[l], c))
              greatest = false;
          if (greatest) glb = k;
        }
        if (L.leq(a, c) && L.leq(b, c)) {
          bool least = true;
          for (int l = 0; l < m && least; ++l)
            if (L.leq(a, Z.members[l]) && L.leq(b, Z.members[l]) &&
                !L.leq(c, Z.members[l]))
              least = false;
          if (least) lub = k;
        }
      }
      if (glb < 0 || lub < 0)
        fail(errc::not_a_sublattice,
             "members " + L.name(a) + " and " + L.name(b) +
                 " lack a unique bound within the member set");
      Z.meet_z[i * m + j] = static_cast<int16_t>(glb);
      Z.join_z[i * m + j] = static_cast<int16_t>(lub);
    }

  Z.bottom_pos = 0;
  Z.top_pos = 0;
  for (int i = 1; i < m; ++i) {
    Z.bottom_pos = Z.meet_z[Z.bottom_pos * m + i];
    Z.top_pos = Z.join_z[Z.top_pos * m + i];
  }
  return Z;
}

// Members = elements that are simultaneously flats and cyclic.
inline CyclicFlatLattice cyclic_flat_lattice(const RankFunction& rf) {
  const FiniteLattice& L = *rf.lattice;
  if (!L.modular())
    fail(errc::not_modular, "cyclic flats require a modular lattice");
  if (!L.complemented())
    fail(errc::not_complemented, "cyclic flats require a complemented lattice");
  Report rep = check_rank_axioms(rf);
  if (!rep.pass) fail(errc::rank_axiom_violation, rep.message);
  std::vector<ElementId> members;
  for (ElementId x = 0; x < L.size(); ++x)
    if (is_flat(rf, x) && is_cyclic(rf, x)) members.push_back(x);
  return make_member_lattice(L, std::move(members));
}

// Rank reconstruction from the member lattice, its rank values, and the atom
// weights: min over members Z and decomposing complements Z^c in C(Z;X) of
// lambda(Z) + mu_f(X ^ Z^c).
inline Rational reconstruct_rank(const CyclicFlatLattice& Z,
                                 const std::vector<Rational>& lambda,
                                 const AtomWeighting& f, ElementId x) {
  const FiniteLattice& L = *Z.lattice;
  if (Z.size() == 0) fail(errc::empty_z, "member set is empty");
  if (static_cast<int>(lambda.size()) != Z.size())
    fail(errc::missing_value, "need one lambda value per member");
  std::optional<Rational> best;
  for (int i = 0; i < Z.size(); ++i) {
    ElementId z = Z.member(i);
    auto dcomp = L.decomposing_complements(z, x);
    if (dcomp.empty())
      fail(errc::empty_decomposing_set,
           "no decomposing complement of " + L.name(z) + " toward " +
               L.name(x));
    for (ElementId zc : dcomp) {
      Rational v = lambda[i] + mu_greedy(L, f, L.meet(x, zc));
      if (!best || v < *best) best = v;
    }
  }
  return *best;
}

}  // namespace latpoly
