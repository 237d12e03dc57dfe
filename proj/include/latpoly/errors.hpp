#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

// Failure modes callers can dispatch on. Structural problems (malformed
// input, violated preconditions) throw latpoly::error; axiom checks that are
// *expected* to fail on interesting inputs return a Report instead.
enum class errc {
  not_a_lattice,
  cyclic_covers,
  duplicate_name,
  size_limit,
  not_prime,
  not_comparable,
  not_maximal_chain,
  no_such_complement,
  missing_value,
  not_modular,
  not_complemented,
  rank_axiom_violation,
  chain_inconsistent,
  bad_rational,
  parse_error,
  unknown_name,
  empty_z,
  not_a_complement,
  empty_decomposing_set,
  not_a_sublattice,
  axiom_violation,
  bad_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_lattice: return "NotALattice";
    case errc::cyclic_covers: return "CyclicCovers";
    case errc::duplicate_name: return "DuplicateName";
    case errc::size_limit: return "SizeLimit";
    case errc::not_prime: return "NotPrime";
    case errc::not_comparable: return "NotComparable";
    case errc::not_maximal_chain: return "NotMaximalChain";
    case errc::no_such_complement: return "NoSuchComplement";
    case errc::missing_value: return "MissingValue";
    case errc::not_modular: return "NotModular";
    case errc::not_complemented: return "NotComplemented";
    case errc::rank_axiom_violation: return "RankAxiomViolation";
    case errc::chain_inconsistent: return "ChainInconsistent";
    case errc::bad_rational: return "BadRational";
    case errc::parse_error: return "ParseError";
    case errc::unknown_name: return "UnknownName";
    case errc::empty_z: return "EmptyZ";
    case errc::not_a_complement: return "NotAComplement";
    case errc::empty_decomposing_set: return "EmptyDecomposingSet";
    case errc::not_a_sublattice: return "NotASublattice";
    case errc::axiom_violation: return "AxiomViolation";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

}  // namespace latpoly
