#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace latpoly;

namespace {

std::set<ElementId> atom_set(const FiniteLattice& L, ElementId x) {
  const auto& v = L.atoms_below(x);
  return {v.begin(), v.end()};
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a latpoly::error");
  return errc::bad_argument;  // unreachable
}

}  // namespace

TEST_CASE("boolean meets and joins act like set operations") {
  const FiniteLattice& L = fx::boolean3();
  REQUIRE(L.size() == 8);
  for (ElementId a = 0; a < L.size(); ++a)
    for (ElementId b = 0; b < L.size(); ++b) {
      std::set<ElementId> sa = atom_set(L, a), sb = atom_set(L, b);
      std::set<ElementId> want_meet, want_join = sa;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::inserter(want_meet, want_meet.begin()));
      want_join.insert(sb.begin(), sb.end());
      CHECK(atom_set(L, L.meet(a, b)) == want_meet);
      CHECK(atom_set(L, L.join(a, b)) == want_join);
    }
}

TEST_CASE("redundant edges disappear from the cover relation") {
  FiniteLattice L = build_lattice(
      {"0", "a", "b", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}, {"0", "1"}});
  CHECK(L.covers().size() == 4);
  CHECK(L.cover_index(L.index_of("0"), L.index_of("1")) == -1);
  CHECK(L.height() == 2);
}

TEST_CASE("posets without unique bounds are rejected") {
  // a and b share two minimal upper bounds c, d.
  try {
    build_lattice({"0", "a", "b", "c", "d", "1"},
                  {{"0", "a"},
                   {"0", "b"},
                   {"a", "c"},
                   {"a", "d"},
                   {"b", "c"},
                   {"b", "d"},
                   {"c", "1"},
                   {"d", "1"}});
    FAIL("expected NotALattice");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_lattice);
    CHECK(std::string(e.what()).find("no unique join") != std::string::npos);
  }

  CHECK(code_of([] {
          build_lattice({"x", "y"}, {});
        }) == errc::not_a_lattice);  // two components, no bounds at all
}

TEST_CASE("cyclic or duplicated input is rejected") {
  CHECK(code_of([] {
          build_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}});
        }) == errc::cyclic_covers);
  CHECK(code_of([] {
          build_lattice({"a"}, {{"a", "a"}});
        }) == errc::cyclic_covers);
  CHECK(code_of([] {
          build_lattice({"x", "x"}, {});
        }) == errc::duplicate_name);
  CHECK(code_of([] { build_lattice({"a", "b"}, {{"a", "c"}}); }) ==
        errc::unknown_name);
}

TEST_CASE("modularity verdicts") {
  CHECK(fx::boolean3().is_modular().pass);
  CHECK(fx::m3().is_modular().pass);
  CHECK(fx::f23().modular());

  Report rep = fx::pentagon().is_modular();
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.axiom == "modular");
  CHECK(rep.witness.size() == 3);
  CHECK_FALSE(fx::pentagon().modular());
}

TEST_CASE("complementation verdicts") {
  CHECK(fx::boolean3().is_complemented().pass);
  CHECK(fx::f23().complemented());

  FiniteLattice chain = build_lattice({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  Report rep = chain.is_complemented();
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.witness == std::vector<std::string>{"m"});
  CHECK_FALSE(chain.complemented());
}

TEST_CASE("complements on the diamond") {
  const FiniteLattice& L = fx::m3();
  ElementId e1 = fx::el(L, "<e1>"), e2 = fx::el(L, "<e2>"),
            e12 = fx::el(L, "<e1+e2>");
  CHECK(L.complements(e1) == std::vector<ElementId>{e2, e12});
  CHECK(L.complements(L.bottom()) == std::vector<ElementId>{L.top()});
  CHECK(L.complements(L.top()) == std::vector<ElementId>{L.bottom()});
}

TEST_CASE("decomposing complements match a direct re-derivation") {
  for (const FiniteLattice* Lp : {&fx::m3(), &fx::boolean3(), &fx::f23()}) {
    const FiniteLattice& L = *Lp;
    for (ElementId a = 0; a < L.size(); ++a)
      for (ElementId b = 0; b < L.size(); ++b) {
        std::vector<ElementId> want;
        for (ElementId c = 0; c < L.size(); ++c) {
          if (L.meet(a, c) != L.bottom() || L.join(a, c) != L.top()) continue;
          ElementId u = L.meet(c, b), v = L.meet(a, b);
          if (L.meet(u, v) == L.bottom() && L.join(u, v) == b)
            want.push_back(c);
        }
        CHECK(L.decomposing_complements(a, b) == want);
      }
  }
}

TEST_CASE("a complement extending a disjoint partner always exists here") {
  const FiniteLattice& L = fx::f23();
  for (ElementId a = 0; a < L.size(); ++a)
    for (ElementId b = 0; b < L.size(); ++b) {
      if (L.meet(a, b) != L.bottom()) continue;
      ElementId ac = L.complement_extending(a, b);
      CHECK(L.meet(a, ac) == L.bottom());
      CHECK(L.join(a, ac) == L.top());
      CHECK(L.leq(b, ac));
    }
}

TEST_CASE("a complement decomposing two nested elements always exists here") {
  for (const FiniteLattice* Lp : {&fx::m3(), &fx::boolean3()}) {
    const FiniteLattice& L = *Lp;
    for (ElementId a = 0; a < L.size(); ++a)
      for (ElementId b = 0; b < L.size(); ++b) {
        if (!L.leq(a, b)) continue;
        for (ElementId c = 0; c < L.size(); ++c) {
          ElementId cc = L.complement_decomposing_both(c, a, b);
          CHECK(L.is_decomposing_complement(c, cc, a));
          CHECK(L.is_decomposing_complement(c, cc, b));
        }
      }
  }
}

TEST_CASE("missing complements fail loudly") {
  FiniteLattice chain = build_lattice({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  ElementId m = chain.index_of("m");
  CHECK(code_of([&] { chain.complement_extending(m, chain.bottom()); }) ==
        errc::no_such_complement);
  CHECK(code_of([&] {
          chain.complement_extending(m, chain.top());  // m meet 1 != 0
        }) == errc::no_such_complement);
  CHECK(code_of([&] {
          chain.complement_decomposing_both(m, chain.bottom(), chain.top());
        }) == errc::no_such_complement);
  CHECK(code_of([&] {
          fx::m3().complement_decomposing_both(0, fx::m3().top(),
                                               fx::m3().bottom());
        }) == errc::no_such_complement);  // a must lie below b
}

TEST_CASE("maximal chain enumeration") {
  const FiniteLattice& B = fx::boolean3();
  CHECK(B.all_maximal_chains(B.bottom(), B.top()).size() == 6);

  const FiniteLattice& F = fx::f23();
  auto chains = F.all_maximal_chains(F.bottom(), F.top());
  CHECK(chains.size() == 21);  // 7 lines x 3 planes through each
  for (const auto& ch : chains) {
    CHECK(ch.size() == 4);
    CHECK(F.is_maximal_chain(F.bottom(), F.top(), ch));
  }

  // The pentagon has chains of different lengths.
  const FiniteLattice& N = fx::pentagon();
  auto pent = N.all_maximal_chains(N.bottom(), N.top());
  REQUIRE(pent.size() == 2);
  std::set<size_t> lens{pent[0].size(), pent[1].size()};
  CHECK(lens == std::set<size_t>{3, 4});

  auto one = B.maximal_chain(B.index_of("{1}"), B.top());
  CHECK(B.is_maximal_chain(B.index_of("{1}"), B.top(), one));
  CHECK_FALSE(B.is_maximal_chain(B.bottom(), B.top(),
                                 {B.bottom(), B.index_of("{1,2}"), B.top()}));

  CHECK(code_of([&] {
          B.maximal_chain(B.index_of("{1}"), B.index_of("{2,3}"));
        }) == errc::not_comparable);
}

TEST_CASE("intervals") {
  const FiniteLattice& B = fx::boolean3();
  auto in = B.interval_elements(B.index_of("{1}"), B.top());
  CHECK(in.size() == 4);
  CHECK(code_of([&] {
          make_interval(B, B.index_of("{1}"), B.index_of("{2,3}"));
        }) == errc::not_comparable);

  Interval I = make_interval(B, B.bottom(), B.index_of("{1,2}"));
  CHECK(interval_length(B, I) == 2);
}

TEST_CASE("transposed intervals are related in both directions") {
  for (const FiniteLattice* Lp : {&fx::m3(), &fx::boolean3(), &fx::pentagon()}) {
    const FiniteLattice& L = *Lp;
    for (ElementId x = 0; x < L.size(); ++x)
      for (ElementId y = 0; y < L.size(); ++y) {
        Interval down = make_interval(L, L.meet(x, y), x);
        Interval up = make_interval(L, y, L.join(x, y));
        CHECK(up_related(L, down, up));
        CHECK(down_related(L, up, down));
      }
  }
}

TEST_CASE("layerings of maximal chains") {
  const FiniteLattice& B = fx::boolean3();
  std::vector<ElementId> chain{B.bottom(), B.index_of("{1}"),
                               B.index_of("{1,2}"), B.top()};
  Layering lay = layering(B, chain);
  REQUIRE(lay.layers.size() == 3);
  CHECK(lay.layers[0] == std::vector<ElementId>{B.index_of("{3}")});
  CHECK(lay.layers[1] == std::vector<ElementId>{B.index_of("{2}")});
  CHECK(lay.layers[2] == std::vector<ElementId>{B.index_of("{1}")});

  const FiniteLattice& M = fx::m3();
  Layering lm = layering(M, {M.bottom(), fx::el(M, "<e1>"), M.top()});
  REQUIRE(lm.layers.size() == 2);
  CHECK(lm.layers[0] ==
        std::vector<ElementId>{fx::el(M, "<e2>"), fx::el(M, "<e1+e2>")});
  CHECK(lm.layers[1] == std::vector<ElementId>{fx::el(M, "<e1>")});

  // Layers partition the atoms below the chain's endpoint.
  const FiniteLattice& F = fx::f23();
  for (const auto& ch : F.all_maximal_chains(F.bottom(), F.top())) {
    Layering lf = layering(F, ch);
    std::vector<ElementId> seen;
    for (const auto& layer : lf.layers)
      seen.insert(seen.end(), layer.begin(), layer.end());
    std::sort(seen.begin(), seen.end());
    CHECK(seen == F.atoms_below(F.top()));
  }

  CHECK(layering(B, {B.bottom()}).layers.empty());
  CHECK(code_of([&] {
          layering(B, {B.index_of("{1}"), B.index_of("{1,2}")});
        }) == errc::not_maximal_chain);
  CHECK(code_of([&] {
          layering(B, {B.bottom(), B.index_of("{1,2}")});
        }) == errc::not_maximal_chain);
}

TEST_CASE("atom independence") {
  const FiniteLattice& B = fx::boolean3();
  CHECK(B.is_independent({B.index_of("{1}"), B.index_of("{2}")}));
  CHECK(B.is_independent({}));

  const FiniteLattice& M = fx::m3();
  CHECK(M.is_independent({fx::el(M, "<e1>"), fx::el(M, "<e2>")}));
  CHECK_FALSE(M.is_independent(
      {fx::el(M, "<e1>"), fx::el(M, "<e2>"), fx::el(M, "<e1+e2>")}));
}

TEST_CASE("basic accessors") {
  const FiniteLattice& B = fx::boolean3();
  CHECK(B.name(B.bottom()) == "{}");
  CHECK(B.name(B.top()) == "{1,2,3}");
  CHECK(B.atoms().size() == 3);
  CHECK(B.coatoms().size() == 3);
  CHECK(B.height() == 3);
  for (size_t i = 0; i < B.atoms().size(); ++i)
    CHECK(B.atom_position(B.atoms()[i]) == static_cast<int>(i));
  CHECK(B.atom_position(B.top()) == -1);
  CHECK(code_of([&] { B.index_of("nope"); }) == errc::unknown_name);

  // topo_order is a linear extension.
  std::vector<int> pos(B.size());
  for (int i = 0; i < B.size(); ++i) pos[B.topo_order()[i]] = i;
  for (auto [lo, hi] : B.covers()) CHECK(pos[lo] < pos[hi]);
}
