#pragma once

#include <latpoly/latpoly.hpp>

#include <string>
#include <vector>

// Shared lattices and rank functions for the test suite. Accessors hand out
// references to function-local statics so that RankFunction, CoverWeighting
// and CyclicFlatSystem values can keep their lattice pointers alive across
// test cases.

namespace fx {

using namespace latpoly;

inline const FiniteLattice& f23() {
  static FiniteLattice L = subspace_lattice(2, 3);
  return L;
}

// The running example on L(F_2^3): the three atoms inside the plane <e1,e2>
// get rank 2, the other four atoms rank 1, and every element of height >= 2
// ranks 2. Minimal scale t = 2.
inline const RankFunction& f23_rank() {
  static RankFunction rf = [] {
    const FiniteLattice& L = f23();
    std::vector<Rational> v(L.size());
    for (ElementId x = 0; x < L.size(); ++x) {
      if (L.height(x) == 0) {
        v[x] = Rational(0);
      } else if (L.height(x) >= 2) {
        v[x] = Rational(2);
      } else {
        const std::string& nm = L.name(x);
        bool heavy = nm == "<e1>" || nm == "<e2>" || nm == "<e1+e2>";
        v[x] = Rational(heavy ? 2 : 1);
      }
    }
    return make_rank_function(L, std::move(v));
  }();
  return rf;
}

// The diamond M_3 = L(F_2^2): bottom, three atoms, top.
inline const FiniteLattice& m3() {
  static FiniteLattice L = subspace_lattice(2, 2);
  return L;
}

// The pentagon N_5, the canonical non-modular lattice.
inline const FiniteLattice& pentagon() {
  static FiniteLattice L = build_lattice(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
  return L;
}

inline const FiniteLattice& boolean3() {
  static FiniteLattice L = boolean_lattice(3);
  return L;
}

inline RankFunction height_rank(const FiniteLattice& L) {
  std::vector<Rational> v;
  v.reserve(L.size());
  for (ElementId x = 0; x < L.size(); ++x) v.emplace_back(L.height(x));
  return make_rank_function(L, std::move(v));
}

inline RankFunction zero_rank(const FiniteLattice& L) {
  return make_rank_function(L, std::vector<Rational>(L.size(), Rational(0)));
}

inline ElementId el(const FiniteLattice& L, const std::string& nm) {
  return L.index_of(nm);
}

}  // namespace fx
