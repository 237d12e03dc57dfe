#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "latpoly/cf_axioms.hpp"
#include "latpoly/cyclic_flats.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/polymatroid.hpp"
#include "latpoly/rational.hpp"

namespace latpoly {

// One document carries a lattice plus any of the optional payload sections,
// so every CLI subcommand reads the same shape. All values are exact
// rational strings; all references are by declared element name.
struct CfsSection {
  std::vector<std::string> members;
  std::map<std::string, std::string> lambda;  // member name -> value
  std::map<std::string, std::string> f;       // atom name -> value
};

struct LatticeDocument {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::optional<std::map<std::string, std::string>> rank;
  std::optional<std::vector<std::tuple<std::string, std::string, std::string>>>
      cover_weights;
  std::optional<CfsSection> cfs;
};

namespace detail {

inline void fail_at_offset(const std::string& text, size_t byte,
                           const std::string& what) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  fail(errc::parse_error, "line " + std::to_string(line) + ", column " +
                              std::to_string(col) + ": " + what);
}

inline void require_keys(const nlohmann::json& obj,
                         const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      fail(errc::parse_error, "unknown key '" + it.key() + "' in " + where);
}

inline std::string checked_value(const nlohmann::json& v,
                                 const std::string& where) {
  if (!v.is_string())
    fail(errc::parse_error, where + " values must be rational strings");
  parse_rational(v.get<std::string>());  // validates; throws BadRational
  return v.get<std::string>();
}

}  // namespace detail

inline LatticeDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::fail_at_offset(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  if (!j.is_object()) fail(errc::parse_error, "document must be a JSON object");
  detail::require_keys(j, {"elements", "covers", "rank", "cover_weights", "cfs"},
                       "the document");
  if (!j.contains("elements") || !j.contains("covers"))
    fail(errc::parse_error, "document needs 'elements' and 'covers'");

  LatticeDocument doc;
  if (!j["elements"].is_array() || j["elements"].empty())
    fail(errc::parse_error, "'elements' must be a nonempty array of names");
  std::set<std::string> declared;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail(errc::parse_error, "element names must be strings");
    std::string name = e.get<std::string>();
    if (!declared.insert(name).second)
      fail(errc::duplicate_name, "element '" + name + "' declared twice");
    doc.elements.push_back(std::move(name));
  }
  auto known = [&](const std::string& n) {
    if (!declared.count(n))
      fail(errc::unknown_name, "name '" + n + "' is not a declared element");
  };

  if (!j["covers"].is_array())
    fail(errc::parse_error, "'covers' must be an array of [lower, upper] pairs");
  std::set<std::pair<std::string, std::string>> declared_covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      fail(errc::parse_error, "each cover must be a [lower, upper] name pair");
    std::string lo = c[0].get<std::string>(), hi = c[1].get<std::string>();
    known(lo);
    known(hi);
    declared_covers.emplace(lo, hi);
    doc.covers.emplace_back(std::move(lo), std::move(hi));
  }

  if (j.contains("rank")) {
    if (!j["rank"].is_object())
      fail(errc::parse_error, "'rank' must map element names to values");
    std::map<std::string, std::string> r;
    for (auto it = j["rank"].begin(); it != j["rank"].end(); ++it) {
      known(it.key());
      r[it.key()] = detail::checked_value(it.value(), "rank");
    }
    doc.rank = std::move(r);
  }

  if (j.contains("cover_weights")) {
    if (!j["cover_weights"].is_array())
      fail(errc::parse_error,
           "'cover_weights' must be an array of [lower, upper, value] triples");
    std::vector<std::tuple<std::string, std::string, std::string>> w;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& c : j["cover_weights"]) {
      if (!c.is_array() || c.size() != 3 || !c[0].is_string() ||
          !c[1].is_string())
        fail(errc::parse_error,
             "each cover weight must be a [lower, upper, value] triple");
      std::string lo = c[0].get<std::string>(), hi = c[1].get<std::string>();
      known(lo);
      known(hi);
      if (!declared_covers.count({lo, hi}))
        fail(errc::parse_error,
             "cover_weights entry (" + lo + ", " + hi + ") is not a declared cover");
      if (!seen.insert({lo, hi}).second)
        fail(errc::parse_error,
             "duplicate cover_weights entry (" + lo + ", " + hi + ")");
      w.emplace_back(std::move(lo), std::move(hi),
                     detail::checked_value(c[2], "cover_weights"));
    }
    doc.cover_weights = std::move(w);
  }

  if (j.contains("cfs")) {
    const auto& z = j["cfs"];
    if (!z.is_object()) fail(errc::parse_error, "'cfs' must be an object");
    detail::require_keys(z, {"members", "lambda", "f"}, "'cfs'");
    if (!z.contains("members") || !z.contains("lambda") || !z.contains("f"))
      fail(errc::parse_error, "'cfs' needs 'members', 'lambda' and 'f'");
    CfsSection s;
    if (!z["members"].is_array())
      fail(errc::parse_error, "'cfs.members' must be an array of names");
    for (const auto& m : z["members"]) {
      if (!m.is_string()) fail(errc::parse_error, "member names must be strings");
      known(m.get<std::string>());
      s.members.push_back(m.get<std::string>());
    }
    if (!z["lambda"].is_object() || !z["f"].is_object())
      fail(errc::parse_error, "'cfs.lambda' and 'cfs.f' must be objects");
    for (auto it = z["lambda"].begin(); it != z["lambda"].end(); ++it) {
      known(it.key());
      s.lambda[it.key()] = detail::checked_value(it.value(), "cfs.lambda");
    }
    for (auto it = z["f"].begin(); it != z["f"].end(); ++it) {
      known(it.key());
      s.f[it.key()] = detail::checked_value(it.value(), "cfs.f");
    }
    doc.cfs = std::move(s);
  }
  return doc;
}

// Canonical form: fixed key order, covers and all maps sorted in element
// declaration order, rational strings normalized. write is a fixpoint under
// parse: parse(write(d)) serializes back to the same bytes.
inline std::string write_document(const LatticeDocument& doc) {
  std::map<std::string, int> pos;
  for (size_t i = 0; i < doc.elements.size(); ++i)
    pos[doc.elements[i]] = static_cast<int>(i);
  auto order_pair = [&](const std::pair<std::string, std::string>& a,
                        const std::pair<std::string, std::string>& b) {
    return std::pair(pos.at(a.first), pos.at(a.second)) <
           std::pair(pos.at(b.first), pos.at(b.second));
  };
  auto norm = [](const std::string& s) { return to_string(parse_rational(s)); };

  nlohmann::ordered_json j;
  j["elements"] = doc.elements;
  auto covers = doc.covers;
  std::sort(covers.begin(), covers.end(), order_pair);
  j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : covers)
    j["covers"].push_back({lo, hi});

  if (doc.rank) {
    std::vector<std::pair<std::string, std::string>> entries(doc.rank->begin(),
                                                             doc.rank->end());
    std::sort(entries.begin(), entries.end(),
              [&](const auto& a, const auto& b) {
                return pos.at(a.first) < pos.at(b.first);
              });
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (const auto& [k, v] : entries) r[k] = norm(v);
    j["rank"] = std::move(r);
  }

  if (doc.cover_weights) {
    auto w = *doc.cover_weights;
    std::sort(w.begin(), w.end(), [&](const auto& a, const auto& b) {
      return std::pair(pos.at(std::get<0>(a)), pos.at(std::get<1>(a))) <
             std::pair(pos.at(std::get<0>(b)), pos.at(std::get<1>(b)));
    });
    j["cover_weights"] = nlohmann::ordered_json::array();
    for (const auto& [lo, hi, v] : w)
      j["cover_weights"].push_back({lo, hi, norm(v)});
  }

  if (doc.cfs) {
    auto members = doc.cfs->members;
    std::sort(members.begin(), members.end(),
              [&](const auto& a, const auto& b) { return pos.at(a) < pos.at(b); });
    nlohmann::ordered_json z;
    z["members"] = members;
    for (const char* key : {"lambda", "f"}) {
      const auto& src = key == std::string("lambda") ? doc.cfs->lambda
                                                     : doc.cfs->f;
      std::vector<std::pair<std::string, std::string>> entries(src.begin(),
                                                               src.end());
      std::sort(entries.begin(), entries.end(),
                [&](const auto& a, const auto& b) {
                  return pos.at(a.first) < pos.at(b.first);
                });
      nlohmann::ordered_json m = nlohmann::ordered_json::object();
      for (const auto& [k, v] : entries) m[k] = norm(v);
      z[key] = std::move(m);
    }
    j["cfs"] = std::move(z);
  }
  return j.dump(2) + "\n";
}

// --------------------------------------------------------------------------
// Conversions between documents and the in-memory types.

inline FiniteLattice document_to_lattice(const LatticeDocument& doc) {
  return build_lattice(doc.elements, doc.covers);
}

inline RankFunction document_rank(const LatticeDocument& doc,
                                  const FiniteLattice& L) {
  if (!doc.rank) fail(errc::missing_value, "document has no rank section");
  std::vector<Rational> values(L.size());
  for (ElementId x = 0; x < L.size(); ++x) {
    auto it = doc.rank->find(L.name(x));
    if (it == doc.rank->end())
      fail(errc::missing_value, "no rank value for " + L.name(x));
    values[x] = parse_rational(it->second);
  }
  return make_rank_function(L, std::move(values));
}

inline CoverWeighting document_weights(const LatticeDocument& doc,
                                       const FiniteLattice& L) {
  if (!doc.cover_weights)
    fail(errc::missing_value, "document has no cover_weights section");
  std::map<std::pair<ElementId, ElementId>, Rational> by_pair;
  for (const auto& [lo, hi, v] : *doc.cover_weights) {
    ElementId a = L.index_of(lo), b = L.index_of(hi);
    if (L.cover_index(a, b) < 0)
      fail(errc::bad_argument,
           "(" + lo + ", " + hi + ") is not a cover of the lattice");
    by_pair[{a, b}] = parse_rational(v);
  }
  std::vector<Rational> w;
  w.reserve(L.covers().size());
  for (const auto& [a, b] : L.covers()) {
    auto it = by_pair.find({a, b});
    if (it == by_pair.end())
      fail(errc::missing_value,
           "no weight for the cover (" + L.name(a) + ", " + L.name(b) + ")");
    w.push_back(it->second);
  }
  return make_cover_weighting(L, std::move(w));
}

inline CyclicFlatSystem document_system(const LatticeDocument& doc,
                                        const FiniteLattice& L) {
  if (!doc.cfs) fail(errc::missing_value, "document has no cfs section");
  std::vector<ElementId> members;
  for (const auto& name : doc.cfs->members) members.push_back(L.index_of(name));
  std::set<std::string> member_names(doc.cfs->members.begin(),
                                     doc.cfs->members.end());
  for (const auto& [k, v] : doc.cfs->lambda)
    if (!member_names.count(k))
      fail(errc::bad_argument, "lambda key '" + k + "' is not a member");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Rational> lambda;
  for (ElementId z : members) {
    auto it = doc.cfs->lambda.find(L.name(z));
    if (it == doc.cfs->lambda.end())
      fail(errc::missing_value, "no lambda value for member " + L.name(z));
    lambda.push_back(parse_rational(it->second));
  }
  for (const auto& [k, v] : doc.cfs->f)
    if (L.atom_position(L.index_of(k)) < 0)
      fail(errc::bad_argument, "f key '" + k + "' is not an atom");
  std::vector<Rational> f;
  for (ElementId a : L.atoms()) {
    auto it = doc.cfs->f.find(L.name(a));
    if (it == doc.cfs->f.end())
      fail(errc::missing_value, "no f value for atom " + L.name(a));
    f.push_back(parse_rational(it->second));
  }
  return make_cyclic_flat_system(L, std::move(members), std::move(lambda),
                                 std::move(f));
}

inline LatticeDocument document_from_lattice(const FiniteLattice& L) {
  LatticeDocument doc;
  doc.elements = L.names();
  for (const auto& [a, b] : L.covers())
    doc.covers.emplace_back(L.name(a), L.name(b));
  return doc;
}

inline void attach_rank(LatticeDocument& doc, const RankFunction& rf) {
  const FiniteLattice& L = *rf.lattice;
  std::map<std::string, std::string> r;
  for (ElementId x = 0; x < L.size(); ++x) r[L.name(x)] = to_string(rf(x));
  doc.rank = std::move(r);
}

inline void attach_weights(LatticeDocument& doc, const CoverWeighting& cw) {
  const FiniteLattice& L = *cw.lattice;
  std::vector<std::tuple<std::string, std::string, std::string>> w;
  const auto& covers = L.covers();
  for (size_t k = 0; k < covers.size(); ++k)
    w.emplace_back(L.name(covers[k].first), L.name(covers[k].second),
                   to_string(cw.weights[k]));
  doc.cover_weights = std::move(w);
}

inline void attach_system(LatticeDocument& doc, const CyclicFlatSystem& S) {
  const FiniteLattice& L = *S.lattice;
  CfsSection s;
  for (int i = 0; i < S.Z.size(); ++i) {
    s.members.push_back(L.name(S.Z.member(i)));
    s.lambda[L.name(S.Z.member(i))] = to_string(S.lambda[i]);
  }
  for (size_t p = 0; p < L.atoms().size(); ++p)
    s.f[L.name(L.atoms()[p])] = to_string(S.f.f[p]);
  doc.cfs = std::move(s);
}

}  // namespace latpoly
