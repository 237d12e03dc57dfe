#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/errors.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/rational.hpp"
#include "latpoly/report.hpp"

namespace latpoly {

// A candidate rank function together with the bound t used by (R1). The
// checkers below decide whether it actually is a polymatroid.
struct RankFunction {
  const FiniteLattice* lattice = nullptr;
  std::vector<Rational> values;  // per element
  Rational t;                    // the (L,t) bound

  const Rational& operator()(ElementId x) const { return values[x]; }
};

// Smallest t making (R1)'s upper bound tight: max over A != bottom of
// r(A)/h(A).
inline Rational minimal_t(const FiniteLattice& L,
                          const std::vector<Rational>& values) {
  Rational t(0);
  for (ElementId x = 0; x < L.size(); ++x) {
    if (L.height(x) == 0) continue;
    t = std::max(t, values[x] / Rational(L.height(x)));
  }
  return t;
}

// t defaults to the derived minimal bound; a user-supplied override is kept
// as-is and then checked by (R1).
inline RankFunction make_rank_function(
    const FiniteLattice& L, std::vector<Rational> values,
    std::optional<Rational> t_override = std::nullopt) {
  if (static_cast<int>(values.size()) != L.size())
    fail(errc::missing_value, "rank values must cover every element");
  Rational t = t_override ? *t_override : minimal_t(L, values);
  return RankFunction{&L, std::move(values), t};
}

// (R1) 0 <= r(A) <= t*h(A); (R2) A <= B implies r(A) <= r(B);
// (R3) r(A) + r(B) >= r(AvB) + r(A^B). Exhaustive; first violation in
// element-index order wins.
inline Report check_rank_axioms(const RankFunction& rf) {
  const FiniteLattice& L = *rf.lattice;
  for (ElementId x = 0; x < L.size(); ++x) {
    const Rational& v = rf(x);
    if (v < Rational(0) || v > rf.t * Rational(L.height(x)))
      return Report::violation(
          "R1",
          "r(" + L.name(x) + ") = " + to_string(v) + " outside [0, t*h] with t = " +
              to_string(rf.t) + ", h = " + std::to_string(L.height(x)),
          {L.name(x)});
  }
  for (ElementId a = 0; a < L.size(); ++a)
    for (ElementId b = 0; b < L.size(); ++b) {
      if (a == b || !L.leq(a, b)) continue;
      if (rf(a) > rf(b))
        return Report::violation(
            "R2",
            "r(" + L.name(a) + ") = " + to_string(rf(a)) + " > r(" + L.name(b) +
                ") = " + to_string(rf(b)) + " although " + L.name(a) +
                " <= " + L.name(b),
            {L.name(a), L.name(b)});
    }
  for (ElementId a = 0; a < L.size(); ++a)
    for (ElementId b = a + 1; b < L.size(); ++b) {
      if (rf(a) + rf(b) < rf(L.join(a, b)) + rf(L.meet(a, b)))
        return Report::violation(
            "R3",
            "submodularity fails at (" + L.name(a) + ", " + L.name(b) + "): " +
                to_string(rf(a)) + " + " + to_string(rf(b)) + " < " +
                to_string(rf(L.join(a, b))) + " + " +
                to_string(rf(L.meet(a, b))),
            {L.name(a), L.name(b)});
    }
  return Report::ok("R1-R3");
}

// The same axioms restricted to intervals of length <= 2: (R1) on single
// elements, (R2) on covers, (R3) between the middles of every diamond. On a
// modular lattice this is equivalent to the full check.
inline Report check_rank_axioms_length2(const RankFunction& rf) {
  const FiniteLattice& L = *rf.lattice;
  if (!L.modular()) fail(errc::not_modular, "length-2 check requires a modular lattice");
  for (ElementId x = 0; x < L.size(); ++x) {
    const Rational& v = rf(x);
    if (v < Rational(0) || v > rf.t * Rational(L.height(x)))
      return Report::violation(
          "R1", "r(" + L.name(x) + ") = " + to_string(v) + " outside [0, t*h]",
          {L.name(x)});
  }
  for (const auto& [a, b] : L.covers())
    if (rf(a) > rf(b))
      return Report::violation(
          "R2", "r decreases along the cover " + L.name(a) + " < " + L.name(b),
          {L.name(a), L.name(b)});
  for (ElementId w = 0; w < L.size(); ++w)
    for (ElementId x = 0; x < L.size(); ++x) {
      if (!L.lt(w, x) || L.height(x) - L.height(w) != 2) continue;
      auto inside = L.interval_elements(w, x);
      for (size_t i = 0; i < inside.size(); ++i)
        for (size_t j = i + 1; j < inside.size(); ++j) {
          ElementId y1 = inside[i], y2 = inside[j];
          if (y1 == w || y1 == x || y2 == w || y2 == x) continue;
          if (rf(y1) + rf(y2) < rf(x) + rf(w))
            return Report::violation(
                "R3",
                "submodularity fails on the diamond [" + L.name(w) + ", " +
                    L.name(x) + "] at (" + L.name(y1) + ", " + L.name(y2) + ")",
                {L.name(y1), L.name(y2)});
        }
    }
  return Report::ok("R1-R3 (length <= 2)");
}

// Nonnegative weights on the cover relation, aligned with lattice covers().
struct CoverWeighting {
  const FiniteLattice* lattice = nullptr;
  std::vector<Rational> weights;

  const Rational& on_cover(int cover_index) const {
    return weights[cover_index];
  }
  const Rational& on_cover(ElementId a, ElementId b) const {
    int k = lattice->cover_index(a, b);
    if (k < 0)
      fail(errc::bad_argument,
           lattice->name(b) + " does not cover " + lattice->name(a));
    return weights[k];
  }
};

inline CoverWeighting make_cover_weighting(const FiniteLattice& L,
                                           std::vector<Rational> w) {
  if (w.size() != L.covers().size())
    fail(errc::missing_value, "need one weight per cover");
  for (size_t k = 0; k < w.size(); ++k)
    if (w[k] < Rational(0))
      fail(errc::bad_argument, "cover weights must be nonnegative");
  return CoverWeighting{&L, std::move(w)};
}

// w_r([A,B]) = r(B) - r(A) on covers; requires a valid polymatroid.
inline CoverWeighting weight_from_rank(const RankFunction& rf) {
  Report rep = check_rank_axioms(rf);
  if (!rep.pass) fail(errc::rank_axiom_violation, rep.message);
  const FiniteLattice& L = *rf.lattice;
  std::vector<Rational> w;
  w.reserve(L.covers().size());
  for (const auto& [a, b] : L.covers()) w.push_back(rf(b) - rf(a));
  return CoverWeighting{&L, std::move(w)};
}

namespace detail {

// Shared chain-sum pass: computes r_w bottom-up and detects the first
// IW1 inconsistency. Because every cover inside an interval is a cover of
// the whole lattice, agreement of all lower covers at every element is
// equivalent to "all maximal chains of every interval sum equally".
struct ChainSums {
  bool consistent = true;
  std::vector<Rational> sums;
  ElementId at = -1;        // element where two chains disagree
  ElementId via1 = -1, via2 = -1;
  Rational sum1, sum2;
};

inline ChainSums chain_sums(const CoverWeighting& cw) {
  const FiniteLattice& L = *cw.lattice;
  ChainSums out;
  out.sums.assign(L.size(), Rational(0));
  for (ElementId x : L.topo_order()) {
    const auto& parents = L.lower_covers(x);
    if (parents.empty()) continue;
    Rational v = out.sums[parents[0]] + cw.on_cover(parents[0], x);
    for (size_t i = 1; i < parents.size(); ++i) {
      Rational v2 = out.sums[parents[i]] + cw.on_cover(parents[i], x);
      if (v2 != v) {
        out.consistent = false;
        out.at = x;
        out.via1 = parents[0];
        out.via2 = parents[i];
        out.sum1 = v;
        out.sum2 = v2;
        return out;
      }
    }
    out.sums[x] = v;
  }
  return out;
}

inline std::string chain_text(const FiniteLattice& L,
                              std::vector<ElementId> chain, ElementId last) {
  chain.push_back(last);
  std::string s;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) s += " < ";
    s += L.name(chain[i]);
  }
  return s;
}

}  // namespace detail

// r_w(A) = sum of w along any maximal chain bottom-to-A; well-defined only
// when IW1 holds, otherwise ChainInconsistent with two explicit chains.
inline RankFunction rank_from_weight(const CoverWeighting& cw) {
  const FiniteLattice& L = *cw.lattice;
  auto cs = detail::chain_sums(cw);
  if (!cs.consistent) {
    std::string c1 = detail::chain_text(L, L.maximal_chain(L.bottom(), cs.via1), cs.at);
    std::string c2 = detail::chain_text(L, L.maximal_chain(L.bottom(), cs.via2), cs.at);
    fail(errc::chain_inconsistent,
         "chain sums disagree at " + L.name(cs.at) + ": " + c1 + " gives " +
             to_string(cs.sum1) + " but " + c2 + " gives " + to_string(cs.sum2));
  }
  return make_rank_function(L, std::move(cs.sums));
}

// IW1: every maximal chain of every interval has the same sum;
// IW2: w([A, XvA]) <= w([A^X, X]) for all A, X.
inline Report check_interval_weight_axioms(const CoverWeighting& cw) {
  const FiniteLattice& L = *cw.lattice;
  auto cs = detail::chain_sums(cw);
  if (!cs.consistent) {
    std::string c1 = detail::chain_text(L, L.maximal_chain(L.bottom(), cs.via1), cs.at);
    std::string c2 = detail::chain_text(L, L.maximal_chain(L.bottom(), cs.via2), cs.at);
    return Report::violation(
        "IW1",
        "chains " + c1 + " (sum " + to_string(cs.sum1) + ") and " + c2 +
            " (sum " + to_string(cs.sum2) + ") disagree",
        {L.name(cs.at), L.name(cs.via1), L.name(cs.via2)});
  }
  const auto& rw = cs.sums;
  for (ElementId a = 0; a < L.size(); ++a)
    for (ElementId x = 0; x < L.size(); ++x) {
      Rational lhs = rw[L.join(x, a)] - rw[a];
      Rational rhs = rw[x] - rw[L.meet(a, x)];
      if (lhs > rhs)
        return Report::violation(
            "IW2",
            "w([" + L.name(a) + ", " + L.name(L.join(x, a)) + "]) = " +
                to_string(lhs) + " > w([" + L.name(L.meet(a, x)) + ", " +
                L.name(x) + "]) = " + to_string(rhs),
            {L.name(a), L.name(x)});
    }
  return Report::ok("IW1-IW2");
}

// CW1: the two-step sums through a diamond agree; CW2: w([A,X]) >= w([Y,B])
// for distinct middles X != Y. Length-2 intervals only (modular lattices).
inline Report check_cover_weight_axioms(const CoverWeighting& cw) {
  const FiniteLattice& L = *cw.lattice;
  if (!L.modular())
    fail(errc::not_modular, "cover-weight axioms require a modular lattice");
  for (ElementId w = 0; w < L.size(); ++w)
    for (ElementId b = 0; b < L.size(); ++b) {
      if (!L.lt(w, b) || L.height(b) - L.height(w) != 2) continue;
      std::vector<ElementId> mids;
      for (ElementId y : L.interval_elements(w, b))
        if (y != w && y != b) mids.push_back(y);
      if (mids.empty()) continue;
      Rational base = cw.on_cover(w, mids[0]) + cw.on_cover(mids[0], b);
      for (size_t i = 1; i < mids.size(); ++i) {
        Rational s = cw.on_cover(w, mids[i]) + cw.on_cover(mids[i], b);
        if (s != base)
          return Report::violation(
              "CW1",
              "sums through " + L.name(mids[0]) + " and " + L.name(mids[i]) +
                  " differ on [" + L.name(w) + ", " + L.name(b) + "]: " +
                  to_string(base) + " vs " + to_string(s),
              {L.name(w), L.name(mids[0]), L.name(mids[i]), L.name(b)});
      }
      for (ElementId x : mids)
        for (ElementId y : mids) {
          if (x == y) continue;
          if (cw.on_cover(w, x) < cw.on_cover(y, b))
            return Report::violation(
                "CW2",
                "w([" + L.name(w) + ", " + L.name(x) + "]) = " +
                    to_string(cw.on_cover(w, x)) + " < w([" + L.name(y) +
                    ", " + L.name(b) + "]) = " + to_string(cw.on_cover(y, b)),
                {L.name(w), L.name(x), L.name(y), L.name(b)});
        }
    }
  return Report::ok("CW1-CW2");
}

// Seeded integer polymatroid sampler. Values are assigned bottom-up: each
// element draws uniformly between the largest value below it and the
// smallest diamond bound r(Y1)+r(Y2)-r(W), capped by max_atom_rank*h(X).
// The diamond bounds make the length-2 axioms hold by construction, which
// suffices on a modular lattice. The drawn range can be empty (the largest
// lower cover need not sit inside the minimizing diamond), in which case the
// whole assignment is restarted from the same RNG stream — determinism per
// seed is preserved.
inline RankFunction sample_random_polymatroid(const FiniteLattice& L,
                                              long long max_atom_rank,
                                              uint64_t seed) {
  if (!L.modular()) fail(errc::not_modular, "sampler requires a modular lattice");
  if (max_atom_rank < 0) fail(errc::bad_argument, "max_atom_rank must be >= 0");

  // Diamonds grouped by top element: (W, middles).
  std::vector<std::vector<std::pair<ElementId, std::vector<ElementId>>>>
      diamonds(L.size());
  for (ElementId x = 0; x < L.size(); ++x)
    for (ElementId w = 0; w < L.size(); ++w) {
      if (!L.lt(w, x) || L.height(x) - L.height(w) != 2) continue;
      std::vector<ElementId> mids;
      for (ElementId y : L.interval_elements(w, x))
        if (y != w && y != x) mids.push_back(y);
      if (mids.size() >= 2) diamonds[x].emplace_back(w, std::move(mids));
    }

  std::mt19937_64 rng(seed);
  auto draw = [&rng](long long lo, long long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    uint64_t zone = UINT64_MAX - UINT64_MAX % span;
    uint64_t x = rng();
    while (x >= zone) x = rng();
    return lo + static_cast<long long>(x % span);
  };

  std::vector<long long> r(L.size(), 0);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    bool ok = true;
    for (ElementId x : L.topo_order()) {
      if (x == L.bottom()) {
        r[x] = 0;
        continue;
      }
      long long lo = 0;
      for (ElementId h : L.lower_covers(x)) lo = std::max(lo, r[h]);
      long long hi = max_atom_rank * L.height(x);
      for (const auto& [w, mids] : diamonds[x])
        for (size_t i = 0; i < mids.size() && lo <= hi; ++i)
          for (size_t j = i + 1; j < mids.size(); ++j)
            hi = std::min(hi, r[mids[i]] + r[mids[j]] - r[w]);
      if (hi < lo) {
        ok = false;
        break;
      }
      r[x] = draw(lo, hi);
    }
    if (!ok) continue;
    std::vector<Rational> values;
    values.reserve(L.size());
    for (long long v : r) values.emplace_back(v);
    return make_rank_function(L, std::move(values));
  }
  fail(errc::bad_argument, "sampler failed to find a valid assignment");
}

// q-matroid shape: integer-valued with r(A) <= h(A) (i.e. t = 1 works).
inline bool is_integer_unit(const RankFunction& rf) {
  const FiniteLattice& L = *rf.lattice;
  for (ElementId x = 0; x < L.size(); ++x) {
    if (rf(x).denominator() != 1) return false;
    if (rf(x) > Rational(L.height(x))) return false;
  }
  return true;
}

}  // namespace latpoly
