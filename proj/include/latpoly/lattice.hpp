#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latpoly/errors.hpp"
#include "latpoly/report.hpp"

namespace latpoly {

// Dense index of a lattice element; display names live in FiniteLattice.
using ElementId = int;

namespace detail {

// One row of the materialized order relation.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void or_with(const Bitset& o) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }
  static Bitset and_of(const Bitset& a, const Bitset& b) {
    Bitset r(a.bits_);
    for (size_t w = 0; w < r.words_.size(); ++w)
      r.words_[w] = a.words_[w] & b.words_[w];
    return r;
  }
  // Is o a subset of *this?
  bool contains(const Bitset& o) const {
    for (size_t w = 0; w < words_.size(); ++w)
      if ((o.words_[w] & ~words_[w]) != 0) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }
  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

 private:
  int bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace detail

// A finite lattice materialized from its cover relation: the order is stored
// as bit-indexed rows, meets/joins/heights/atoms/complements are precomputed
// once. Instances are immutable after construction and safe to share.
class FiniteLattice {
 public:
  // Desk-scale guard; also keeps the meet/join tables in int16.
  static constexpr int kMaxElements = 512;

  static FiniteLattice from_covers(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& covers) {
    std::unordered_map<std::string, ElementId> idx;
    for (size_t i = 0; i < names.size(); ++i) {
      if (!idx.emplace(names[i], static_cast<ElementId>(i)).second)
        fail(errc::duplicate_name, "element '" + names[i] + "' declared twice");
    }
    std::vector<std::pair<ElementId, ElementId>> edges;
    edges.reserve(covers.size());
    for (const auto& [lo, hi] : covers) {
      auto a = idx.find(lo);
      auto b = idx.find(hi);
      if (a == idx.end()) fail(errc::unknown_name, "cover references undeclared element '" + lo + "'");
      if (b == idx.end()) fail(errc::unknown_name, "cover references undeclared element '" + hi + "'");
      edges.emplace_back(a->second, b->second);
    }
    return from_cover_ids(std::move(names), std::move(edges));
  }

  static FiniteLattice from_cover_ids(
      std::vector<std::string> names,
      std::vector<std::pair<ElementId, ElementId>> edges) {
    FiniteLattice L;
    L.names_ = std::move(names);
    L.build(std::move(edges));
    return L;
  }

  int size() const { return n_; }
  const std::string& name(ElementId x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  ElementId index_of(std::string_view nm) const {
    auto it = index_.find(std::string(nm));
    if (it == index_.end())
      fail(errc::unknown_name, "no element named '" + std::string(nm) + "'");
    return it->second;
  }

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  bool leq(ElementId a, ElementId b) const { return up_[a].test(b); }
  bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }

  ElementId meet(ElementId a, ElementId b) const { return meet_[a * n_ + b]; }
  ElementId join(ElementId a, ElementId b) const { return join_[a * n_ + b]; }

  // join(empty) = bottom, meet(empty) = top by convention.
  ElementId join_of(const std::vector<ElementId>& xs) const {
    ElementId v = bottom_;
    for (ElementId x : xs) v = join(v, x);
    return v;
  }
  ElementId meet_of(const std::vector<ElementId>& xs) const {
    ElementId v = top_;
    for (ElementId x : xs) v = meet(v, x);
    return v;
  }

  // Longest-chain length from bottom.
  int height(ElementId x) const { return height_[x]; }
  int height() const { return height_[top_]; }

  // Canonical Hasse relation, sorted by (lower, upper).
  const std::vector<std::pair<ElementId, ElementId>>& covers() const {
    return covers_;
  }
  const std::vector<ElementId>& upper_covers(ElementId x) const {
    return upper_[x];
  }
  const std::vector<ElementId>& lower_covers(ElementId x) const {
    return lower_[x];
  }
  // H(X): the elements covered by X.
  const std::vector<ElementId>& coatoms_below(ElementId x) const {
    return lower_[x];
  }
  // Index into covers() for a cover pair, -1 if (a,b) is not a cover.
  int cover_index(ElementId a, ElementId b) const {
    return cover_idx_[a * n_ + b];
  }

  const std::vector<ElementId>& atoms() const { return atoms_; }
  const std::vector<ElementId>& coatoms() const { return coatoms_; }
  // A(X): atoms of the interval [bottom, X].
  const std::vector<ElementId>& atoms_below(ElementId x) const {
    return atoms_below_[x];
  }
  // Position of an atom within atoms(), -1 for non-atoms.
  int atom_position(ElementId x) const { return atom_pos_[x]; }

  // Elements in ascending height (ties by index); a linear extension.
  const std::vector<ElementId>& topo_order() const { return topo_; }

  std::vector<ElementId> down_set(ElementId x) const {
    return down_[x].to_vector();
  }
  std::vector<ElementId> up_set(ElementId x) const {
    return up_[x].to_vector();
  }
  // All elements of [a, b]; NotComparable if a is not below b.
  std::vector<ElementId> interval_elements(ElementId a, ElementId b) const {
    require_leq(a, b);
    return detail::Bitset::and_of(up_[a], down_[b]).to_vector();
  }

  // Modular law: C <= A implies (A ^ B) v C = A ^ (B v C). Exhaustive over
  // triples; the first violating (A,B,C) in index order is the witness.
  Report is_modular() const {
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = 0; b < n_; ++b)
        for (ElementId c = 0; c < n_; ++c) {
          if (!leq(c, a)) continue;
          if (join(meet(a, b), c) != meet(a, join(b, c)))
            return Report::violation(
                "modular",
                "modular law fails: ((" + names_[a] + " meet " + names_[b] +
                    ") join " + names_[c] + ") != (" + names_[a] + " meet (" +
                    names_[b] + " join " + names_[c] + "))",
                {names_[a], names_[b], names_[c]});
        }
    return Report::ok("modular");
  }
  bool modular() const {
    if (modular_cache_ == -1) modular_cache_ = is_modular().pass ? 1 : 0;
    return modular_cache_ == 1;
  }

  Report is_complemented() const {
    for (ElementId x = 0; x < n_; ++x)
      if (complements_[x].empty())
        return Report::violation(
            "complemented", "element " + names_[x] + " has no complement",
            {names_[x]});
    return Report::ok("complemented");
  }
  bool complemented() const {
    for (ElementId x = 0; x < n_; ++x)
      if (complements_[x].empty()) return false;
    return true;
  }

  // C(A) = { C : C ^ A = bottom, C v A = top }, ascending by index.
  const std::vector<ElementId>& complements(ElementId a) const {
    return complements_[a];
  }

  // Is Ac a complement of A that decomposes B, i.e. (Ac^B) and (A^B) have
  // meet bottom and join B?
  bool is_decomposing_complement(ElementId a, ElementId ac, ElementId b) const {
    if (meet(a, ac) != bottom_ || join(a, ac) != top_) return false;
    ElementId u = meet(ac, b);
    ElementId v = meet(a, b);
    return meet(u, v) == bottom_ && join(u, v) == b;
  }

  // C(A;B): complements of A decomposing B.
  std::vector<ElementId> decomposing_complements(ElementId a,
                                                 ElementId b) const {
    std::vector<ElementId> out;
    for (ElementId ac : complements_[a])
      if (is_decomposing_complement(a, ac, b)) out.push_back(ac);
    return out;
  }

  // Some complement of A lying above B; requires A ^ B = bottom.
  ElementId complement_extending(ElementId a, ElementId b) const {
    if (meet(a, b) != bottom_)
      fail(errc::no_such_complement,
           names_[a] + " meet " + names_[b] + " is not bottom");
    for (ElementId ac : complements_[a])
      if (leq(b, ac)) return ac;
    fail(errc::no_such_complement,
         "no complement of " + names_[a] + " contains " + names_[b] +
             " (lattice not modular complemented?)");
  }

  // Some member of C(C;A) ^ C(C;B); requires A <= B.
  ElementId complement_decomposing_both(ElementId c, ElementId a,
                                        ElementId b) const {
    if (!leq(a, b))
      fail(errc::no_such_complement,
           names_[a] + " is not below " + names_[b]);
    for (ElementId cc : complements_[c])
      if (is_decomposing_complement(c, cc, a) &&
          is_decomposing_complement(c, cc, b))
        return cc;
    fail(errc::no_such_complement,
         "no complement of " + names_[c] + " decomposes both " + names_[a] +
             " and " + names_[b]);
  }

  // One saturated chain from a to b (first cover in index order at each step).
  std::vector<ElementId> maximal_chain(ElementId a, ElementId b) const {
    require_leq(a, b);
    std::vector<ElementId> chain{a};
    ElementId cur = a;
    while (cur != b) {
      for (ElementId x : upper_[cur])
        if (leq(x, b)) {
          cur = x;
          break;
        }
      chain.push_back(cur);
    }
    return chain;
  }

  bool is_maximal_chain(ElementId a, ElementId b,
                        const std::vector<ElementId>& chain) const {
    if (chain.empty() || chain.front() != a || chain.back() != b) return false;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      if (cover_index(chain[i], chain[i + 1]) < 0) return false;
    return true;
  }

  // Every saturated chain of [a, b]; exponential in general, desk-scale here.
  std::vector<std::vector<ElementId>> all_maximal_chains(ElementId a,
                                                         ElementId b) const {
    require_leq(a, b);
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId> path{a};
    chains_dfs(a, b, path, out);
    return out;
  }

  // h(join S) == |S| for a set of distinct atoms.
  bool is_independent(const std::vector<ElementId>& atom_set) const {
    return height(join_of(atom_set)) == static_cast<int>(atom_set.size());
  }

 private:
  FiniteLattice() = default;

  void require_leq(ElementId a, ElementId b) const {
    if (!leq(a, b))
      fail(errc::not_comparable,
           names_[a] + " is not below " + names_[b]);
  }

  void chains_dfs(ElementId cur, ElementId b, std::vector<ElementId>& path,
                  std::vector<std::vector<ElementId>>& out) const {
    if (cur == b) {
      out.push_back(path);
      return;
    }
    for (ElementId x : upper_[cur]) {
      if (!leq(x, b)) continue;
      path.push_back(x);
      chains_dfs(x, b, path, out);
      path.pop_back();
    }
  }

  void build(std::vector<std::pair<ElementId, ElementId>> edges) {
    n_ = static_cast<int>(names_.size());
    if (n_ == 0) fail(errc::not_a_lattice, "a lattice needs at least one element");
    if (n_ > kMaxElements)
      fail(errc::size_limit, "lattice exceeds " + std::to_string(kMaxElements) +
                                 " elements");
    for (size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<ElementId>(i)).second)
        fail(errc::duplicate_name,
             "element '" + names_[i] + "' declared twice");
    }
    for (auto& [a, b] : edges) {
      if (a < 0 || a >= n_ || b < 0 || b >= n_)
        fail(errc::bad_argument, "cover index out of range");
      if (a == b)
        fail(errc::cyclic_covers, "self-cover at '" + names_[a] + "'");
    }

    // Topological order of the input digraph (Kahn); rejects cycles.
    std::vector<std::vector<ElementId>> succ(n_);
    std::vector<int> indeg(n_, 0);
    for (auto& [a, b] : edges) {
      succ[a].push_back(b);
      ++indeg[b];
    }
    std::vector<ElementId> order;
    order.reserve(n_);
    for (ElementId v = 0; v < n_; ++v)
      if (indeg[v] == 0) order.push_back(v);
    for (size_t head = 0; head < order.size(); ++head) {
      for (ElementId w : succ[order[head]])
        if (--indeg[w] == 0) order.push_back(w);
    }
    if (static_cast<int>(order.size()) != n_)
      fail(errc::cyclic_covers, "cover relation contains a cycle");

    // leq = reflexive-transitive closure.
    up_.assign(n_, detail::Bitset(n_));
    down_.assign(n_, detail::Bitset(n_));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      ElementId v = *it;
      up_[v].set(v);
      for (ElementId w : succ[v]) up_[v].or_with(up_[w]);
    }
    for (ElementId a = 0; a < n_; ++a)
      up_[a].for_each([&](int b) { down_[b].set(a); });

    // Unique bottom / top. In a finite poset every element sits above some
    // minimal element, so a unique minimal element is a least element.
    std::vector<ElementId> mins, maxs;
    for (ElementId v = 0; v < n_; ++v) {
      if (down_[v].count() == 1) mins.push_back(v);
      if (up_[v].count() == 1) maxs.push_back(v);
    }
    if (mins.size() != 1)
      fail(errc::not_a_lattice,
           "no unique bottom: minimal elements include '" + names_[mins[0]] +
               "' and '" + names_[mins[1]] + "'");
    if (maxs.size() != 1)
      fail(errc::not_a_lattice,
           "no unique top: maximal elements include '" + names_[maxs[0]] +
               "' and '" + names_[maxs[1]] + "'");
    bottom_ = mins[0];
    top_ = maxs[0];

    // Canonical Hasse relation from the closure: (a,b) is a cover iff the
    // interval [a,b] has exactly two elements.
    upper_.assign(n_, {});
    lower_.assign(n_, {});
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = 0; b < n_; ++b) {
        if (a == b || !up_[a].test(b)) continue;
        if (detail::Bitset::and_of(up_[a], down_[b]).count() == 2) {
          covers_.emplace_back(a, b);
          upper_[a].push_back(b);
          lower_[b].push_back(a);
        }
      }
    std::sort(covers_.begin(), covers_.end());
    for (auto& v : upper_) std::sort(v.begin(), v.end());
    for (auto& v : lower_) std::sort(v.begin(), v.end());
    cover_idx_.assign(static_cast<size_t>(n_) * n_, -1);
    for (size_t k = 0; k < covers_.size(); ++k)
      cover_idx_[covers_[k].first * n_ + covers_[k].second] =
          static_cast<int>(k);

    // Heights: longest path from bottom. |down(x)| gives a linear extension.
    topo_.resize(n_);
    for (ElementId v = 0; v < n_; ++v) topo_[v] = v;
    std::vector<int> dc(n_);
    for (ElementId v = 0; v < n_; ++v) dc[v] = down_[v].count();
    std::sort(topo_.begin(), topo_.end(), [&](ElementId a, ElementId b) {
      return dc[a] != dc[b] ? dc[a] < dc[b] : a < b;
    });
    height_.assign(n_, 0);
    for (ElementId v : topo_)
      for (ElementId w : lower_[v])
        height_[v] = std::max(height_[v], height_[w] + 1);
    // Re-sort the traversal order by height for bottom-up passes.
    std::sort(topo_.begin(), topo_.end(), [&](ElementId a, ElementId b) {
      return height_[a] != height_[b] ? height_[a] < height_[b] : a < b;
    });

    // Meet / join tables. The unique candidate of maximal height must
    // dominate every common bound, otherwise the poset is not a lattice.
    meet_.assign(static_cast<size_t>(n_) * n_, 0);
    join_.assign(static_cast<size_t>(n_) * n_, 0);
    std::vector<ElementId> cand;
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = 0; b <= a; ++b) {
        ElementId m;
        if (leq(a, b)) m = a;
        else if (leq(b, a)) m = b;
        else {
          auto lowbits = detail::Bitset::and_of(down_[a], down_[b]);
          cand.clear();
          lowbits.for_each([&](int c) { cand.push_back(c); });
          ElementId best = cand[0];
          for (ElementId c : cand)
            if (height_[c] > height_[best]) best = c;
          for (ElementId c : cand)
            if (!leq(c, best))
              fail(errc::not_a_lattice, "no unique meet of '" + names_[a] +
                                            "' and '" + names_[b] + "'");
          m = best;
        }
        meet_[a * n_ + b] = meet_[b * n_ + a] = static_cast<int16_t>(m);

        ElementId j;
        if (leq(a, b)) j = b;
        else if (leq(b, a)) j = a;
        else {
          auto upbits = detail::Bitset::and_of(up_[a], up_[b]);
          cand.clear();
          upbits.for_each([&](int c) { cand.push_back(c); });
          ElementId best = cand[0];
          for (ElementId c : cand)
            if (height_[c] < height_[best]) best = c;
          for (ElementId c : cand)
            if (!leq(best, c))
              fail(errc::not_a_lattice, "no unique join of '" + names_[a] +
                                            "' and '" + names_[b] + "'");
          j = best;
        }
        join_[a * n_ + b] = join_[b * n_ + a] = static_cast<int16_t>(j);
      }

    atoms_ = upper_[bottom_];
    coatoms_ = lower_[top_];
    atom_pos_.assign(n_, -1);
    for (size_t i = 0; i < atoms_.size(); ++i)
      atom_pos_[atoms_[i]] = static_cast<int>(i);
    atoms_below_.assign(n_, {});
    for (ElementId x = 0; x < n_; ++x)
      for (ElementId a : atoms_)
        if (leq(a, x)) atoms_below_[x].push_back(a);

    complements_.assign(n_, {});
    for (ElementId x = 0; x < n_; ++x)
      for (ElementId c = 0; c < n_; ++c)
        if (meet(x, c) == bottom_ && join(x, c) == top_)
          complements_[x].push_back(c);
  }

  int n_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<detail::Bitset> up_, down_;
  std::vector<std::pair<ElementId, ElementId>> covers_;
  std::vector<std::vector<ElementId>> upper_, lower_;
  std::vector<int> cover_idx_;
  std::vector<int> height_;
  std::vector<ElementId> atoms_, coatoms_;
  std::vector<int> atom_pos_;
  std::vector<std::vector<ElementId>> atoms_below_;
  std::vector<std::vector<ElementId>> complements_;
  std::vector<int16_t> meet_, join_;
  std::vector<ElementId> topo_;
  ElementId bottom_ = 0, top_ = 0;
  mutable int modular_cache_ = -1;
};

// Convenience for building lattices from literal cover lists in tests/docs.
inline FiniteLattice build_lattice(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  return FiniteLattice::from_covers(std::move(names), covers);
}

struct Interval {
  ElementId lower;
  ElementId upper;
};

inline Interval make_interval(const FiniteLattice& L, ElementId a,
                              ElementId b) {
  if (!L.leq(a, b))
    fail(errc::not_comparable, L.name(a) + " is not below " + L.name(b));
  return Interval{a, b};
}

inline int interval_length(const FiniteLattice& L, const Interval& I) {
  return L.height(I.upper) - L.height(I.lower);
}

// [A,B] up-related to [C,D]: A = B ^ C and D = B v C.
inline bool up_related(const FiniteLattice& L, const Interval& I1,
                       const Interval& I2) {
  return I1.lower == L.meet(I1.upper, I2.lower) &&
         I2.upper == L.join(I1.upper, I2.lower);
}

// [A,B] down-related to [C,D]: C = A ^ D and B = A v D.
inline bool down_related(const FiniteLattice& L, const Interval& I1,
                         const Interval& I2) {
  return I2.lower == L.meet(I1.lower, I2.upper) &&
         I1.upper == L.join(I1.lower, I2.upper);
}

// Layering of a maximal chain bottom = H_m < ... < H_0 = X: layer L_k holds
// the atoms of X below H_{k-1} but not below H_k. The layers partition A(X).
struct Layering {
  std::vector<ElementId> chain;                // bottom first, X last
  std::vector<std::vector<ElementId>> layers;  // layers[k-1] = L_k
};

inline Layering layering(const FiniteLattice& L,
                         const std::vector<ElementId>& chain) {
  if (chain.empty() || chain.front() != L.bottom())
    fail(errc::not_maximal_chain, "chain must start at bottom");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (L.cover_index(chain[i], chain[i + 1]) < 0)
      fail(errc::not_maximal_chain,
           L.name(chain[i + 1]) + " does not cover " + L.name(chain[i]));
  Layering out;
  out.chain = chain;
  int m = static_cast<int>(chain.size()) - 1;
  ElementId X = chain.back();
  out.layers.resize(m);
  for (int k = 1; k <= m; ++k) {
    ElementId upper = chain[m - k + 1];  // H_{k-1}
    ElementId lower = chain[m - k];      // H_k
    for (ElementId a : L.atoms_below(X))
      if (L.leq(a, upper) && !L.leq(a, lower)) out.layers[k - 1].push_back(a);
  }
  return out;
}

}  // namespace latpoly
