#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/errors.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

// Boolean lattice of subsets of {1..n}; names "{}", "{1}", "{1,3}", ...
inline FiniteLattice boolean_lattice(int n) {
  if (n < 0 || n > 6)
    fail(errc::size_limit, "boolean_lattice supports 0 <= n <= 6");
  int N = 1 << n;
  std::vector<std::string> names(N);
  for (int mask = 0; mask < N; ++mask) {
    std::string nm = "{";
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) {
        if (nm.size() > 1) nm += ",";
        nm += std::to_string(i + 1);
      }
    nm += "}";
    names[mask] = nm;
  }
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (int mask = 0; mask < N; ++mask)
    for (int i = 0; i < n; ++i)
      if (!(mask & (1 << i))) covers.emplace_back(mask, mask | (1 << i));
  return FiniteLattice::from_cover_ids(std::move(names), std::move(covers));
}

// Canonical representative of a subspace of F_p^n: reduced row echelon basis.
struct SubspaceElement {
  std::vector<std::vector<int>> basis;  // rows of length n, entries in [0,p)
  int dimension() const { return static_cast<int>(basis.size()); }
};

struct SubspaceLattice {
  FiniteLattice lattice;
  std::vector<SubspaceElement> elements;  // aligned with lattice indices
};

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Vectors of F_p^n are coded as integers with base-p digits; digit i is the
// coefficient of e_{i+1}.
inline int vec_add(int u, int v, int p, int n) {
  int out = 0, mul = 1;
  for (int i = 0; i < n; ++i) {
    int d = ((u % p) + (v % p)) % p;
    out += d * mul;
    mul *= p;
    u /= p;
    v /= p;
  }
  return out;
}

inline std::vector<int> vec_digits(int v, int p, int n) {
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

inline std::string vec_name(const std::vector<int>& digits) {
  std::string nm;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    if (!nm.empty()) nm += "+";
    if (digits[i] != 1) nm += std::to_string(digits[i]);
    nm += "e" + std::to_string(i + 1);
  }
  return nm;
}

// Row-reduce a list of vectors over F_p; returns RREF rows ordered by pivot.
inline std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows,
                                          int p) {
  int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    // Scale pivot to 1 (inverse by exhaustive search; p is tiny).
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if (rows[rank][col] * x % p == 1) inv = x;
    for (int& v : rows[rank]) v = v * inv % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int c = rows[r][col];
      for (int j = 0; j < n; ++j)
        rows[r][j] = ((rows[r][j] - c * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace detail

// The lattice of all subspaces of F_p^n (prime p), ordered by inclusion.
// Elements are enumerated by closure: starting from {0}, each known subspace
// is extended by every outside vector. Subspaces are identified by their full
// vector sets, so covers are codimension-1 set inclusions.
inline SubspaceLattice subspace_lattice_full(int p, int n) {
  if (!detail::is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (n < 0) fail(errc::bad_argument, "dimension must be nonnegative");
  long long vectors = 1;
  for (int i = 0; i < n; ++i) {
    vectors *= p;
    if (vectors > 1024) fail(errc::size_limit, "p^n exceeds 1024 vectors");
  }
  // Count subspaces before enumerating, via the Gaussian-binomial recurrence
  // [m,k] = [m-1,k-1] + p^k * [m-1,k], saturating far above the cap.
  constexpr long long kSat = 1 << 20;
  std::vector<std::vector<long long>> G(n + 1, std::vector<long long>(n + 1, 0));
  for (int m = 0; m <= n; ++m) {
    G[m][0] = 1;
    for (int k = 1; k <= m; ++k) {
      long long pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;  // p^k <= p^n <= 1024
      G[m][k] = std::min(kSat, G[m - 1][k - 1] + pk * (m - 1 >= k ? G[m - 1][k] : 0));
    }
  }
  long long total = 0;
  for (int k = 0; k <= n; ++k) total = std::min(kSat, total + G[n][k]);
  if (total > 400)
    fail(errc::size_limit, "subspace lattice would have " +
                               std::to_string(total) + " elements");

  int V = static_cast<int>(vectors);

  std::vector<std::vector<int>> spaces;  // sorted vector codes, {0} first
  std::map<std::vector<int>, int> seen;
  spaces.push_back({0});
  seen.emplace(spaces[0], 0);
  for (size_t head = 0; head < spaces.size(); ++head) {
    std::vector<int> base = spaces[head];
    for (int v = 1; v < V; ++v) {
      if (std::binary_search(base.begin(), base.end(), v)) continue;
      // span(base + v) = union of the cosets base + c*v.
      std::vector<int> span = base;
      int cv = 0;
      for (int c = 1; c < p; ++c) {
        cv = detail::vec_add(cv, v, p, n);
        for (int s : base) span.push_back(detail::vec_add(s, cv, p, n));
      }
      std::sort(span.begin(), span.end());
      if (seen.emplace(span, static_cast<int>(spaces.size())).second)
        spaces.push_back(std::move(span));
    }
  }

  std::sort(spaces.begin(), spaces.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });

  std::vector<SubspaceElement> elements;
  std::vector<std::string> names;
  names.reserve(spaces.size());
  elements.reserve(spaces.size());
  for (const auto& sp : spaces) {
    std::vector<std::vector<int>> rows;
    for (int v : sp)
      if (v != 0) rows.push_back(detail::vec_digits(v, p, n));
    SubspaceElement el{detail::rref(std::move(rows), p)};
    std::string nm;
    if (el.basis.empty()) {
      nm = "0";
    } else {
      nm = "<";
      for (size_t i = 0; i < el.basis.size(); ++i) {
        if (i) nm += ",";
        nm += detail::vec_name(el.basis[i]);
      }
      nm += ">";
    }
    names.push_back(std::move(nm));
    elements.push_back(std::move(el));
  }

  std::vector<std::pair<ElementId, ElementId>> covers;
  for (size_t i = 0; i < spaces.size(); ++i)
    for (size_t j = 0; j < spaces.size(); ++j) {
      if (spaces[j].size() != spaces[i].size() * p) continue;
      if (std::includes(spaces[j].begin(), spaces[j].end(), spaces[i].begin(),
                        spaces[i].end()))
        covers.emplace_back(static_cast<ElementId>(i),
                            static_cast<ElementId>(j));
    }
  return SubspaceLattice{
      FiniteLattice::from_cover_ids(std::move(names), std::move(covers)),
      std::move(elements)};
}

inline FiniteLattice subspace_lattice(int p, int n) {
  return subspace_lattice_full(p, n).lattice;
}

// Direct product with componentwise order; names "(x,y)".
inline FiniteLattice product_lattice(const FiniteLattice& a,
                                     const FiniteLattice& b) {
  long long total = static_cast<long long>(a.size()) * b.size();
  if (total > FiniteLattice::kMaxElements)
    fail(errc::size_limit, "product lattice would have " +
                               std::to_string(total) + " elements");
  auto id = [&](ElementId x, ElementId y) {
    return static_cast<ElementId>(x * b.size() + y);
  };
  std::vector<std::string> names(total);
  for (ElementId x = 0; x < a.size(); ++x)
    for (ElementId y = 0; y < b.size(); ++y)
      names[id(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (ElementId x = 0; x < a.size(); ++x)
    for (ElementId y = 0; y < b.size(); ++y) {
      for (ElementId x2 : a.upper_covers(x)) covers.emplace_back(id(x, y), id(x2, y));
      for (ElementId y2 : b.upper_covers(y)) covers.emplace_back(id(x, y), id(x, y2));
    }
  return FiniteLattice::from_cover_ids(std::move(names), std::move(covers));
}

}  // namespace latpoly
