#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/cyclic_flats.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/polymatroid.hpp"
#include "latpoly/rational.hpp"
#include "latpoly/report.hpp"

namespace latpoly {

// A member lattice Z inside L together with nonnegative weights lambda on
// the members and f on the atoms of L. The axiom checkers below decide
// whether (Z, lambda, f) is a lattice of cyclic flats.
struct CyclicFlatSystem {
  const FiniteLattice* lattice = nullptr;
  CyclicFlatLattice Z;
  std::vector<Rational> lambda;  // per member position
  AtomWeighting f;
};

inline CyclicFlatSystem make_cyclic_flat_system(const FiniteLattice& L,
                                                std::vector<ElementId> members,
                                                std::vector<Rational> lambda,
                                                std::vector<Rational> f) {
  if (!L.modular()) fail(errc::not_modular, "the ambient lattice must be modular");
  if (!L.complemented())
    fail(errc::not_complemented, "the ambient lattice must be complemented");
  CyclicFlatLattice Z = make_member_lattice(L, std::move(members));
  if (static_cast<int>(lambda.size()) != Z.size())
    fail(errc::missing_value, "need one lambda value per member");
  for (const auto& v : lambda)
    if (v < Rational(0))
      fail(errc::bad_argument, "lambda values must be nonnegative");
  AtomWeighting aw = make_atom_weighting(L, std::move(f));
  return CyclicFlatSystem{&L, std::move(Z), std::move(lambda), std::move(aw)};
}

// The forward direction of the cryptomorphism: extract (Z, r|Z, r|atoms)
// from a polymatroid.
inline CyclicFlatSystem derive_system(const RankFunction& rf) {
  const FiniteLattice& L = *rf.lattice;
  CyclicFlatLattice Z = cyclic_flat_lattice(rf);
  std::vector<Rational> lambda;
  lambda.reserve(Z.size());
  for (int i = 0; i < Z.size(); ++i) lambda.push_back(rf(Z.member(i)));
  return CyclicFlatSystem{&L, std::move(Z), std::move(lambda),
                          atom_weights_from_rank(rf)};
}

// Controls the one deliberately downgradeable quantifier: Z2's "for any
// A in L" can be sampled instead of exhausted on large lattices. A sampled
// verdict is marked non-exhaustive in the report text.
struct Z2Options {
  std::optional<int> sample_count;  // nullopt = exhaustive over all A
  uint64_t seed = 0;
};

// Evaluates one system with everything expensive computed once: the mu
// table, the decomposing-complement lists C(Z;X), the rho table with its
// minimizers, and per-element quasi-modularity verdicts of mu_f.
class SystemEvaluator {
 public:
  explicit SystemEvaluator(const CyclicFlatSystem& s)
      : S(&s), L(s.lattice), m_(s.Z.size()) {
    mu_ = mu_table(*L, s.f);
    dcomp_.resize(m_ * L->size());
    for (int i = 0; i < m_; ++i)
      for (ElementId x = 0; x < L->size(); ++x) {
        dcomp_[i * L->size() + x] = L->decomposing_complements(s.Z.member(i), x);
        if (dcomp_[i * L->size() + x].empty())
          fail(errc::empty_decomposing_set,
               "no decomposing complement of " + L->name(s.Z.member(i)) +
                   " toward " + L->name(x));
      }
    rho_.resize(L->size());
    for (ElementId x = 0; x < L->size(); ++x) {
      std::optional<Rational> best;
      for (int i = 0; i < m_; ++i)
        for (ElementId zc : dcomp(i, x)) {
          Rational v = S->lambda[i] + mu_[L->meet(x, zc)];
          if (!best || v < *best) best = v;
        }
      rho_[x] = *best;
    }
    quasimod_.assign(L->size(), std::nullopt);
  }

  const FiniteLattice& lattice() const { return *L; }
  const CyclicFlatSystem& system() const { return *S; }
  const Rational& mu(ElementId x) const { return mu_[x]; }
  const Rational& rho(ElementId x) const { return rho_[x]; }
  const std::vector<ElementId>& dcomp(int member_pos, ElementId x) const {
    return dcomp_[member_pos * L->size() + x];
  }

  Rational rho_component(ElementId x, int member_pos, ElementId zc) const {
    ElementId z = S->Z.member(member_pos);
    if (L->meet(z, zc) != L->bottom() || L->join(z, zc) != L->top())
      fail(errc::not_a_complement,
           L->name(zc) + " is not a complement of " + L->name(z));
    return S->lambda[member_pos] + mu_[L->meet(x, zc)];
  }

  // Member positions attaining rho(x) for at least one decomposing
  // complement.
  std::vector<int> minimizing_flats(ElementId x) const {
    std::vector<int> out;
    for (int i = 0; i < m_; ++i)
      for (ElementId zc : dcomp(i, x)) {
        if (S->lambda[i] + mu_[L->meet(x, zc)] == rho_[x]) {
          out.push_back(i);
          break;
        }
      }
    return out;
  }

  // Verdict of "mu_f is quasi-modular on [bottom, x]", cached per x.
  const Report& quasi_modular_below(ElementId x) const {
    if (!quasimod_[x]) quasimod_[x] = is_quasi_modular(*L, mu_, x);
    return *quasimod_[x];
  }

  Report check_Z1() const {
    for (ElementId x = 0; x < L->size(); ++x) {
      bool found = false;
      for (int i = 0; i < m_ && !found; ++i) {
        bool good = true;
        for (ElementId zc : dcomp(i, x)) {
          if (S->lambda[i] + mu_[L->meet(x, zc)] != rho_[x] ||
              !quasi_modular_below(L->meet(x, zc)).pass) {
            good = false;
            break;
          }
        }
        found = good;
      }
      if (!found)
        return Report::violation(
            "Z1",
            "no member attains rho(" + L->name(x) +
                ") = " + to_string(rho_[x]) +
                " through every decomposing complement with mu_f "
                "quasi-modular below each intersection",
            {L->name(x)});
    }
    return Report::ok("Z1");
  }

  Report check_Z2(const Z2Options& opt = {}) const {
    std::vector<ElementId> pool;
    if (opt.sample_count) {
      std::mt19937_64 rng(opt.seed);
      for (int k = 0; k < *opt.sample_count; ++k)
        pool.push_back(static_cast<ElementId>(rng() % L->size()));
    } else {
      for (ElementId a = 0; a < L->size(); ++a) pool.push_back(a);
    }
    const int m = m_;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        ElementId z1 = S->Z.member(i), z2 = S->Z.member(j);
        int mz = S->Z.meet_z[i * m + j], jz = S->Z.join_z[i * m + j];
        Rational lhs = S->lambda[i] + S->lambda[j];
        Rational base = S->lambda[mz] + S->lambda[jz];
        ElementId w = L->meet(z1, z2);
        for (ElementId c : L->complements(S->Z.member(mz)))
          for (ElementId a : pool) {
            ElementId arg = L->meet(L->meet(a, w), c);
            if (lhs < base + mu_[arg])
              return Report::violation(
                  "Z2",
                  "lambda(" + L->name(z1) + ") + lambda(" + L->name(z2) +
                      ") = " + to_string(lhs) + " < " + to_string(base + mu_[arg]) +
                      " with complement " + L->name(c) + " and A = " + L->name(a),
                  {L->name(z1), L->name(z2), L->name(c), L->name(a)});
          }
      }
    if (opt.sample_count)
      return Report::ok("Z2", "sampled " + std::to_string(*opt.sample_count) +
                                  " choices of A (non-exhaustive)");
    return Report::ok("Z2");
  }

  Report check_Z3() const {
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        ElementId z1 = S->Z.member(i), z2 = S->Z.member(j);
        if (!L->leq(z1, z2)) continue;
        Rational diff = S->lambda[j] - S->lambda[i];
        for (ElementId z1c : L->complements(z1))
          if (diff > mu_[L->meet(z2, z1c)])
            return Report::violation(
                "Z3",
                "lambda(" + L->name(z2) + ") - lambda(" + L->name(z1) +
                    ") = " + to_string(diff) + " > mu_f(" +
                    L->name(L->meet(z2, z1c)) + ") = " +
                    to_string(mu_[L->meet(z2, z1c)]),
                {L->name(z1), L->name(z2), L->name(z1c)});
      }
    return Report::ok("Z3");
  }

  Report check_Z4() const {
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        ElementId z1 = S->Z.member(i), z2 = S->Z.member(j);
        if (!L->lt(z1, z2)) continue;
        if (!(S->lambda[i] < S->lambda[j]))
          return Report::violation(
              "Z4",
              "lambda is not strictly increasing from " + L->name(z1) +
                  " to " + L->name(z2),
              {L->name(z1), L->name(z2)});
        Rational diff = S->lambda[j] - S->lambda[i];
        for (ElementId z1c : L->complements(z1)) {
          if (diff < mu_[L->meet(z2, z1c)]) continue;  // branch (i)
          bool branch_ii = true;
          ElementId bad_h = -1;
          for (ElementId h : L->lower_covers(z2)) {
            if (!L->is_decomposing_complement(z1, z1c, h)) continue;
            bool some_hc = false;
            for (ElementId hc : L->complements(h))
              if (mu_[L->meet(z2, z1c)] <
                  mu_[L->meet(h, z1c)] + mu_[L->meet(z2, hc)]) {
                some_hc = true;
                break;
              }
            if (!some_hc) {
              branch_ii = false;
              bad_h = h;
              break;
            }
          }
          if (!branch_ii)
            return Report::violation(
                "Z4",
                "for complement " + L->name(z1c) + " of " + L->name(z1) +
                    ", neither branch holds: the convolution bound fails at "
                    "the hyperplane " + L->name(bad_h) + " of " + L->name(z2),
                {L->name(z1), L->name(z2), L->name(z1c), L->name(bad_h)});
        }
      }
    return Report::ok("Z4");
  }

  Report check_Z5() const {
    ElementId z0 = S->Z.bottom_z();
    const Rational& v = S->lambda[S->Z.bottom_pos];
    if (v != Rational(0))
      return Report::violation(
          "Z5", "lambda(" + L->name(z0) + ") = " + to_string(v) + " != 0",
          {L->name(z0)});
    return Report::ok("Z5");
  }

  Report check_Z6() const {
    ElementId z0 = S->Z.bottom_z();
    for (ElementId a : L->atoms()) {
      if (L->leq(a, z0)) continue;
      if (!(mu_[a] > Rational(0)))
        return Report::violation(
            "Z6",
            "mu_f(" + L->name(a) + ") = " + to_string(mu_[a]) +
                " is not positive although " + L->name(a) + " is not below " +
                L->name(z0),
            {L->name(a)});
    }
    return Report::ok("Z6");
  }

  // All six verdicts, evaluated independently.
  std::vector<Report> check_all(const Z2Options& opt = {}) const {
    return {check_Z1(), check_Z2(opt), check_Z3(),
            check_Z4(), check_Z5(),    check_Z6()};
  }

 private:
  const CyclicFlatSystem* S;
  const FiniteLattice* L;
  int m_;
  std::vector<Rational> mu_;
  std::vector<std::vector<ElementId>> dcomp_;
  std::vector<Rational> rho_;
  mutable std::vector<std::optional<Report>> quasimod_;
};

inline Rational rho_component(const CyclicFlatSystem& S, ElementId x,
                              ElementId z, ElementId zc) {
  int pos = S.Z.position(z);
  if (pos < 0)
    fail(errc::bad_argument, S.lattice->name(z) + " is not a member");
  return SystemEvaluator(S).rho_component(x, pos, zc);
}

inline Rational rho(const CyclicFlatSystem& S, ElementId x) {
  return SystemEvaluator(S).rho(x);
}

inline std::vector<ElementId> minimizing_flats(const CyclicFlatSystem& S,
                                               ElementId x) {
  SystemEvaluator ev(S);
  std::vector<ElementId> out;
  for (int i : ev.minimizing_flats(x)) out.push_back(S.Z.member(i));
  return out;
}

inline Report check_Z1(const CyclicFlatSystem& S) {
  return SystemEvaluator(S).check_Z1();
}
inline Report check_Z2(const CyclicFlatSystem& S, const Z2Options& opt = {}) {
  return SystemEvaluator(S).check_Z2(opt);
}
inline Report check_Z3(const CyclicFlatSystem& S) {
  return SystemEvaluator(S).check_Z3();
}
inline Report check_Z4(const CyclicFlatSystem& S) {
  return SystemEvaluator(S).check_Z4();
}
inline Report check_Z5(const CyclicFlatSystem& S) {
  return SystemEvaluator(S).check_Z5();
}
inline Report check_Z6(const CyclicFlatSystem& S) {
  return SystemEvaluator(S).check_Z6();
}

inline std::vector<Report> check_all_axioms(const CyclicFlatSystem& S,
                                            const Z2Options& opt = {}) {
  return SystemEvaluator(S).check_all(opt);
}

// The reverse direction of the cryptomorphism: a system passing the six
// axioms defines the rank function X -> rho(X). The output is re-verified
// against the rank axioms before being returned.
inline RankFunction build_polymatroid(const CyclicFlatSystem& S,
                                      const Z2Options& opt = {}) {
  SystemEvaluator ev(S);
  for (const Report& rep : ev.check_all(opt))
    if (!rep.pass)
      fail(errc::axiom_violation, rep.axiom + " fails: " + rep.message);
  const FiniteLattice& L = *S.lattice;
  std::vector<Rational> values;
  values.reserve(L.size());
  for (ElementId x = 0; x < L.size(); ++x) values.push_back(ev.rho(x));
  RankFunction rf = make_rank_function(L, std::move(values));
  Report rep = check_rank_axioms(rf);
  if (!rep.pass) fail(errc::rank_axiom_violation, rep.message);
  return rf;
}

// Both directions stitched together, starting from a polymatroid:
//   (a) the derived system passes all six axioms,
//   (b) rho reproduces the rank pointwise,
//   (c) rebuilding from the system yields the same member lattice with the
//       same operation tables and the same member ranks.
inline Report roundtrip_check(const RankFunction& rf,
                              const Z2Options& opt = {}) {
  const FiniteLattice& L = *rf.lattice;
  Report axioms_ok = check_rank_axioms(rf);
  if (!axioms_ok.pass) fail(errc::rank_axiom_violation, axioms_ok.message);

  CyclicFlatSystem S = derive_system(rf);
  SystemEvaluator ev(S);
  for (const Report& rep : ev.check_all(opt))
    if (!rep.pass)
      return Report::violation(
          "roundtrip:a", "derived system fails " + rep.axiom + ": " + rep.message,
          rep.witness);

  for (ElementId x = 0; x < L.size(); ++x)
    if (ev.rho(x) != rf(x))
      return Report::violation(
          "roundtrip:b",
          "rho(" + L.name(x) + ") = " + to_string(ev.rho(x)) +
              " differs from the rank " + to_string(rf(x)),
          {L.name(x)});

  // Same output as build_polymatroid(S), reusing the evaluator whose axiom
  // verdicts we already hold.
  std::vector<Rational> values;
  values.reserve(L.size());
  for (ElementId x = 0; x < L.size(); ++x) values.push_back(ev.rho(x));
  RankFunction rebuilt = make_rank_function(L, std::move(values));
  CyclicFlatLattice Z2 = cyclic_flat_lattice(rebuilt);
  if (Z2.members != S.Z.members) {
    std::vector<std::string> names;
    for (ElementId z : Z2.members) names.push_back(L.name(z));
    return Report::violation(
        "roundtrip:c", "rebuilt polymatroid has a different cyclic-flat set",
        names);
  }
  if (Z2.meet_z != S.Z.meet_z || Z2.join_z != S.Z.join_z)
    return Report::violation(
        "roundtrip:c", "rebuilt member lattice has different operation tables",
        {});
  for (int i = 0; i < Z2.size(); ++i)
    if (rebuilt(Z2.member(i)) != S.lambda[i])
      return Report::violation(
          "roundtrip:c",
          "rebuilt rank at " + L.name(Z2.member(i)) + " is " +
              to_string(rebuilt(Z2.member(i))) + ", expected lambda = " +
              to_string(S.lambda[i]),
          {L.name(Z2.member(i))});
  return Report::ok("roundtrip");
}

}  // namespace latpoly
