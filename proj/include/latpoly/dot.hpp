#pragma once

#include <string>
#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/polymatroid.hpp"
#include "latpoly/rational.hpp"

namespace latpoly {

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

// Hasse diagram as a DOT digraph: one node per element (drawn bottom-up),
// one edge per cover. Rank values become node labels, cover weights become
// edge labels, and highlighted nodes (e.g. cyclic flats) are drawn filled
// with a double border. Output is deterministic for a given input.
inline std::string write_dot(const FiniteLattice& L,
                             const RankFunction* rf = nullptr,
                             const CoverWeighting* cw = nullptr,
                             const std::vector<ElementId>* highlight = nullptr) {
  std::vector<bool> marked(L.size(), false);
  if (highlight)
    for (ElementId x : *highlight) marked[x] = true;

  std::string out;
  out += "digraph lattice {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box, fontname=\"monospace\"];\n";
  for (ElementId x = 0; x < L.size(); ++x) {
    std::string label = detail::dot_escape(L.name(x));
    if (rf) label += "\\nr=" + to_string((*rf)(x));
    out += "  \"" + detail::dot_escape(L.name(x)) + "\" [label=\"" + label + "\"";
    if (marked[x]) out += ", style=filled, fillcolor=lightgoldenrod, peripheries=2";
    out += "];\n";
  }
  const auto& covers = L.covers();
  for (size_t k = 0; k < covers.size(); ++k) {
    out += "  \"" + detail::dot_escape(L.name(covers[k].first)) + "\" -> \"" +
           detail::dot_escape(L.name(covers[k].second)) + "\"";
    if (cw) out += " [label=\"" + to_string(cw->weights[k]) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace latpoly
