#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace latpoly;

namespace {

// The running example with {bottom, top} as members; lambda and the atom
// weights can be perturbed before assembly.
CyclicFlatSystem f23_system(Rational lambda_bottom = Rational(0),
                             Rational lambda_top = Rational(2),
                             const std::string& zeroed_atom = "") {
  const FiniteLattice& L = fx::f23();
  std::vector<Rational> f;
  for (ElementId a : L.atoms()) {
    if (L.name(a) == zeroed_atom)
      f.push_back(Rational(0));
    else
      f.push_back(fx::f23_rank()(a));
  }
  return make_cyclic_flat_system(L, {L.bottom(), L.top()},
                                 {lambda_bottom, lambda_top}, std::move(f));
}

}  // namespace

TEST_CASE("the derived system reproduces the rank pointwise") {
  const RankFunction& rf = fx::f23_rank();
  const FiniteLattice& L = *rf.lattice;
  CyclicFlatSystem S = derive_system(rf);
  SystemEvaluator ev(S);
  for (ElementId x = 0; x < L.size(); ++x) {
    CHECK(ev.rho(x) == rf(x));
    CHECK(rho(S, x) == rf(x));
  }
}

TEST_CASE("minimizing members of the running example") {
  CyclicFlatSystem S = f23_system();
  const FiniteLattice& L = *S.lattice;
  SystemEvaluator ev(S);

  // mu_f(<e1,e2>) = 4, so only the top member (position 1) attains rho = 2.
  CHECK(ev.minimizing_flats(fx::el(L, "<e1,e2>")) == std::vector<int>{1});
  // mu_f(<e1,e3>) = 2: both members attain rho = 2.
  CHECK(ev.minimizing_flats(fx::el(L, "<e1,e3>")) == std::vector<int>{0, 1});
  // At the bottom only the bottom member gives 0.
  CHECK(ev.minimizing_flats(L.bottom()) == std::vector<int>{0});
  // The free helper names the members themselves.
  CHECK(minimizing_flats(S, L.top()) == std::vector<ElementId>{L.top()});
  CHECK(minimizing_flats(S, fx::el(L, "<e1,e3>")) ==
        std::vector<ElementId>{L.bottom(), L.top()});
}

TEST_CASE("rho components and complement validation") {
  CyclicFlatSystem S = f23_system();
  const FiniteLattice& L = *S.lattice;
  SystemEvaluator ev(S);
  CHECK(ev.rho_component(L.top(), 0, L.top()) == Rational(3));  // 0 + mu(top)
  CHECK(ev.rho_component(L.top(), 1, L.bottom()) == Rational(2));
  try {
    ev.rho_component(L.top(), 1, L.top());  // top is not a complement of top
    FAIL("expected NotAComplement");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_complement);
  }
}

TEST_CASE("the running example satisfies all six axioms") {
  CyclicFlatSystem S = f23_system();
  auto reports = check_all_axioms(S);
  REQUIRE(reports.size() == 6);
  const char* ids[] = {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6"};
  for (size_t i = 0; i < 6; ++i) {
    CHECK(reports[i].axiom == ids[i]);
    CHECK(reports[i].pass);
  }
  CHECK(check_Z1(S).pass);
  CHECK(check_Z2(S).pass);
  CHECK(check_Z3(S).pass);
  CHECK(check_Z4(S).pass);
  CHECK(check_Z5(S).pass);
  CHECK(check_Z6(S).pass);
}

TEST_CASE("a nonzero lambda at the least member breaks exactly Z5") {
  CyclicFlatSystem S = f23_system(Rational(1), Rational(2));
  auto reports = check_all_axioms(S);
  REQUIRE(reports.size() == 6);
  CHECK(reports[0].pass);        // Z1
  CHECK(reports[1].pass);        // Z2
  CHECK(reports[2].pass);        // Z3
  CHECK(reports[3].pass);        // Z4
  REQUIRE_FALSE(reports[4].pass);  // Z5
  CHECK(reports[4].witness == std::vector<std::string>{"0"});
  CHECK(reports[5].pass);        // Z6
}

TEST_CASE("zeroing a heavy atom's weight breaks exactly Z6") {
  CyclicFlatSystem S = f23_system(Rational(0), Rational(2), "<e1>");
  auto reports = check_all_axioms(S);
  REQUIRE(reports.size() == 6);
  for (size_t i = 0; i < 6; ++i) {
    if (reports[i].axiom == "Z6") {
      REQUIRE_FALSE(reports[i].pass);
      CHECK(reports[i].witness == std::vector<std::string>{"<e1>"});
    } else {
      CHECK(reports[i].pass);
    }
  }
}

TEST_CASE("zeroing a light atom's weight breaks Z6 and drags Z1 down") {
  CyclicFlatSystem S = f23_system(Rational(0), Rational(2), "<e3>");
  Report z6 = check_Z6(S);
  REQUIRE_FALSE(z6.pass);
  CHECK(z6.witness == std::vector<std::string>{"<e3>"});
  // With mu_f(<e3>) = 0 the minimum for <e1,e3> is attained only through
  // the bottom member, whose interval is not quasi-modular any more.
  CHECK_FALSE(check_Z1(S).pass);
}

TEST_CASE("an oversized lambda gap breaks Z3") {
  CyclicFlatSystem S = f23_system(Rational(0), Rational(4));
  Report rep = check_Z3(S);
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.axiom == "Z3");
  CHECK(rep.witness.size() == 3);
}

TEST_CASE("a flat lambda breaks the strictness part of Z4") {
  CyclicFlatSystem S = f23_system(Rational(0), Rational(0));
  Report rep = check_Z4(S);
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.message.find("strictly") != std::string::npos);
  // The other five axioms hold for this degenerate system.
  CHECK(check_Z1(S).pass);
  CHECK(check_Z2(S).pass);
  CHECK(check_Z3(S).pass);
  CHECK(check_Z5(S).pass);
  CHECK(check_Z6(S).pass);
}

TEST_CASE("the sampled Z2 quantifier is flagged as non-exhaustive") {
  CyclicFlatSystem S = f23_system();
  Z2Options opt;
  opt.sample_count = 5;
  opt.seed = 1;
  Report rep = check_Z2(S, opt);
  CHECK(rep.pass);
  CHECK(rep.message.find("non-exhaustive") != std::string::npos);

  auto reports = check_all_axioms(S, opt);
  CHECK(reports[1].message.find("non-exhaustive") != std::string::npos);
}

TEST_CASE("a passing system rebuilds the original polymatroid") {
  const RankFunction& rf = fx::f23_rank();
  RankFunction rebuilt = build_polymatroid(derive_system(rf));
  CHECK(rebuilt.values == rf.values);
  CHECK(check_rank_axioms(rebuilt).pass);
}

TEST_CASE("a failing system refuses to build, naming the axiom") {
  CyclicFlatSystem S = f23_system(Rational(1), Rational(2));
  try {
    build_polymatroid(S);
    FAIL("expected AxiomViolation");
  } catch (const error& e) {
    CHECK(e.code() == errc::axiom_violation);
    CHECK(std::string(e.what()).find("Z5") != std::string::npos);
  }
}

TEST_CASE("round trips on the running example and on extremes") {
  CHECK(roundtrip_check(fx::f23_rank()).pass);
  CHECK(roundtrip_check(fx::height_rank(fx::boolean3())).pass);
  CHECK(roundtrip_check(fx::zero_rank(fx::boolean3())).pass);
  CHECK(roundtrip_check(fx::height_rank(fx::m3())).pass);
}

TEST_CASE("round trips on sampled polymatroids") {
  for (const FiniteLattice* Lp : {&fx::m3(), &fx::boolean3(), &fx::f23()}) {
    for (uint64_t seed : {71u, 72u, 73u, 74u}) {
      for (long long cap : {1, 2, 3}) {
        RankFunction rf = sample_random_polymatroid(*Lp, cap, seed);
        Report rep = roundtrip_check(rf);
        INFO(rep.message);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("system assembly validates its inputs") {
  const FiniteLattice& M = fx::m3();
  std::vector<Rational> f(M.atoms().size(), Rational(1));

  try {
    make_cyclic_flat_system(fx::pentagon(), {fx::pentagon().bottom()},
                            {Rational(0)}, {Rational(1), Rational(1)});
    FAIL("expected NotModular");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_modular);
  }

  FiniteLattice chain = build_lattice({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  try {
    make_cyclic_flat_system(chain, {chain.bottom()}, {Rational(0)},
                            {Rational(1)});
    FAIL("expected NotComplemented");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_complemented);
  }

  try {
    make_cyclic_flat_system(M, {M.bottom()}, {Rational(0), Rational(1)}, f);
    FAIL("expected MissingValue");
  } catch (const error& e) {
    CHECK(e.code() == errc::missing_value);
  }

  try {
    make_cyclic_flat_system(M, {M.bottom()}, {Rational(-1)}, f);
    FAIL("expected BadArgument");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_argument);
  }

  try {
    make_cyclic_flat_system(M, {fx::el(M, "<e1>"), fx::el(M, "<e2>")},
                            {Rational(0), Rational(1)}, f);
    FAIL("expected NotASublattice");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_sublattice);
  }
}
