#pragma once

#include <string>
#include <utility>
#include <vector>

namespace latpoly {

// Outcome of one axiom or structure check. A failing report carries the
// elements involved (by display name) so the violated condition can be
// re-evaluated by hand; witnesses are always the first violation found in a
// fixed deterministic order.
struct Report {
  bool pass = true;
  std::string axiom;                 // "R1".."R3", "IW1", "CW2", "Z1".."Z6", ...
  std::string message;               // human-readable detail
  std::vector<std::string> witness;  // element names involved in a failure

  static Report ok(std::string axiom_id, std::string msg = {}) {
    return Report{true, std::move(axiom_id), std::move(msg), {}};
  }
  static Report violation(std::string axiom_id, std::string msg,
                          std::vector<std::string> names = {}) {
    return Report{false, std::move(axiom_id), std::move(msg),
                  std::move(names)};
  }
};

using AxiomReport = Report;

}  // namespace latpoly
