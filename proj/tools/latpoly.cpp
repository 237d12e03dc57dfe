// Command-line front end: generate lattice documents, check rank and weight
// axioms, compute cyclic flats, check the cyclic-flat axiom system, rebuild
// polymatroids from systems, and export DOT drawings.
//
// Exit codes: 0 = everything checked passed, 1 = a check failed (witness on
// stdout), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latpoly/latpoly.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) latpoly::fail(latpoly::errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) latpoly::fail(latpoly::errc::parse_error, "cannot write " + output_path);
  out << text;
}

struct Options {
  std::string input, output;
  uint64_t seed = 1;
  int samples = 200;
  long long max_atom_rank = 2;
  bool sample_z2 = false;
  bool quiet = false;
};

void print_report(const latpoly::Report& rep, bool quiet) {
  if (rep.pass) {
    if (!quiet)
      std::cout << "PASS " << rep.axiom
                << (rep.message.empty() ? "" : " (" + rep.message + ")") << "\n";
    return;
  }
  std::cout << "FAIL " << rep.axiom << ": " << rep.message << "\n";
  if (!rep.witness.empty()) {
    std::cout << "  witness:";
    for (const auto& w : rep.witness) std::cout << " " << w;
    std::cout << "\n";
  }
}

latpoly::LatticeDocument load(const Options& o) {
  return latpoly::parse_document(slurp(o.input));
}

int run_gen_lattice(const std::string& kind, const std::vector<std::string>& args,
                    const Options& o, bool with_sampled_rank) {
  using namespace latpoly;
  FiniteLattice L = [&]() -> FiniteLattice {
    if (kind == "boolean") {
      if (args.size() != 1)
        fail(errc::bad_argument, "usage: gen-lattice boolean N");
      return boolean_lattice(std::stoi(args[0]));
    }
    if (kind == "subspace") {
      if (args.size() != 2)
        fail(errc::bad_argument, "usage: gen-lattice subspace P N");
      return subspace_lattice(std::stoi(args[0]), std::stoi(args[1]));
    }
    if (kind == "product") {
      if (args.size() != 2)
        fail(errc::bad_argument, "usage: gen-lattice product FILE1 FILE2");
      FiniteLattice a = document_to_lattice(parse_document(slurp(args[0])));
      FiniteLattice b = document_to_lattice(parse_document(slurp(args[1])));
      return product_lattice(a, b);
    }
    fail(errc::bad_argument, "unknown lattice kind '" + kind +
                                 "' (expected boolean, subspace or product)");
  }();
  LatticeDocument doc = document_from_lattice(L);
  if (with_sampled_rank)
    attach_rank(doc, sample_random_polymatroid(L, o.max_atom_rank, o.seed));
  emit(write_document(doc), o.output);
  return 0;
}

int run_check_rank(const Options& o) {
  using namespace latpoly;
  LatticeDocument doc = load(o);
  FiniteLattice L = document_to_lattice(doc);
  RankFunction rf = document_rank(doc, L);
  if (!o.quiet)
    std::cout << "lattice: " << L.size() << " elements, "
              << L.covers().size() << " covers, derived t = "
              << to_string(rf.t) << "\n";
  Report rep = check_rank_axioms(rf);
  print_report(rep, o.quiet);
  return rep.pass ? 0 : 1;
}

int run_check_weights(const Options& o) {
  using namespace latpoly;
  LatticeDocument doc = load(o);
  FiniteLattice L = document_to_lattice(doc);
  CoverWeighting cw = document_weights(doc, L);
  Report iw = check_interval_weight_axioms(cw);
  print_report(iw, o.quiet);
  bool all = iw.pass;
  if (L.modular()) {
    Report cwrep = check_cover_weight_axioms(cw);
    print_report(cwrep, o.quiet);
    all = all && cwrep.pass;
  } else if (!o.quiet) {
    std::cout << "note: lattice is not modular, cover-weight axioms skipped\n";
  }
  return all ? 0 : 1;
}

int run_cyclic_flats(const Options& o) {
  using namespace latpoly;
  LatticeDocument doc = load(o);
  FiniteLattice L = document_to_lattice(doc);
  RankFunction rf = document_rank(doc, L);
  CyclicFlatSystem S = derive_system(rf);
  if (!o.quiet || o.output.empty()) {
    std::cout << "cyclic flats (" << S.Z.size() << "):\n";
    for (int i = 0; i < S.Z.size(); ++i)
      std::cout << "  " << L.name(S.Z.member(i))
                << "  lambda=" << to_string(S.lambda[i]) << "\n";
  }
  if (!o.output.empty()) {
    attach_system(doc, S);
    emit(write_document(doc), o.output);
  }
  return 0;
}

latpoly::Z2Options z2_options(const Options& o) {
  latpoly::Z2Options z;
  if (o.sample_z2) z.sample_count = o.samples;
  z.seed = o.seed;
  return z;
}

int run_check_cf_axioms(const Options& o) {
  using namespace latpoly;
  LatticeDocument doc = load(o);
  FiniteLattice L = document_to_lattice(doc);
  CyclicFlatSystem S = document_system(doc, L);
  int failures = 0;
  for (const Report& rep : check_all_axioms(S, z2_options(o))) {
    print_report(rep, o.quiet);
    if (!rep.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

int run_reconstruct(const Options& o) {
  using namespace latpoly;
  LatticeDocument doc = load(o);
  FiniteLattice L = document_to_lattice(doc);
  CyclicFlatSystem S = document_system(doc, L);
  RankFunction rf;
  try {
    rf = build_polymatroid(S, z2_options(o));
  } catch (const error& e) {
    if (e.code() == errc::axiom_violation) {
      std::cout << "FAIL " << e.what() << "\n";
      return 1;
    }
    throw;
  }
  if (doc.rank) {
    RankFunction given = document_rank(doc, L);
    for (ElementId x = 0; x < L.size(); ++x)
      if (given(x) != rf(x)) {
        std::cout << "FAIL reconstruction: rho(" << L.name(x) << ") = "
                  << to_string(rf(x)) << " differs from the declared rank "
                  << to_string(given(x)) << "\n";
        return 1;
      }
    if (!o.quiet)
      std::cout << "PASS reconstruction matches the declared rank\n";
  }
  attach_rank(doc, rf);
  if (!o.output.empty())
    emit(write_document(doc), o.output);
  else if (!o.quiet)
    std::cout << write_document(doc);
  return 0;
}

int run_roundtrip(const Options& o) {
  using namespace latpoly;
  LatticeDocument doc = load(o);
  FiniteLattice L = document_to_lattice(doc);
  RankFunction rf = document_rank(doc, L);
  CyclicFlatSystem S = derive_system(rf);
  if (!o.quiet) {
    std::cout << "cyclic flats (" << S.Z.size() << "):\n";
    for (int i = 0; i < S.Z.size(); ++i)
      std::cout << "  " << L.name(S.Z.member(i))
                << "  lambda=" << to_string(S.lambda[i]) << "\n";
  }
  Report rep = roundtrip_check(rf, z2_options(o));
  print_report(rep, o.quiet);
  return rep.pass ? 0 : 1;
}

int run_export_dot(const Options& o) {
  using namespace latpoly;
  LatticeDocument doc = load(o);
  FiniteLattice L = document_to_lattice(doc);
  std::optional<RankFunction> rf;
  if (doc.rank) rf = document_rank(doc, L);
  std::optional<CoverWeighting> cw;
  if (doc.cover_weights) cw = document_weights(doc, L);
  std::vector<ElementId> highlight;
  if (doc.cfs) {
    for (const auto& name : doc.cfs->members)
      highlight.push_back(L.index_of(name));
  } else if (rf) {
    CyclicFlatLattice Z = cyclic_flat_lattice(*rf);
    highlight = Z.members;
  }
  emit(write_dot(L, rf ? &*rf : nullptr, cw ? &*cw : nullptr,
                 highlight.empty() ? nullptr : &highlight),
       o.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polymatroids on finite modular complemented lattices"};
  app.require_subcommand(1);
  Options o;

  std::string gen_kind;
  std::vector<std::string> gen_args;
  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("--input", o.input, "input document")->required();
    sub->add_option("--output", o.output, "output file (default: stdout)");
    sub->add_option("--seed", o.seed,
                    "random seed (gen-lattice: also attach a sampled rank)");
    sub->add_option("--samples", o.samples, "sample count for --sample");
    sub->add_option("--max-atom-rank", o.max_atom_rank,
                    "rank cap per atom for sampled ranks");
    sub->add_flag("--sample", o.sample_z2,
                  "sample the Z2 quantifier over A instead of exhausting it");
    sub->add_flag("--quiet", o.quiet, "suppress informational output");
  };

  auto* gen = app.add_subcommand("gen-lattice",
                                 "generate a lattice document "
                                 "(boolean N | subspace P N | product F1 F2)");
  gen->add_option("kind", gen_kind, "boolean | subspace | product")->required();
  gen->add_option("args", gen_args, "kind-specific arguments");
  add_common(gen, false);

  auto* crank = app.add_subcommand("check-rank", "check the rank axioms");
  add_common(crank, true);
  auto* cweights = app.add_subcommand(
      "check-weights", "check the interval- and cover-weight axioms");
  add_common(cweights, true);
  auto* cflats = app.add_subcommand(
      "cyclic-flats", "compute the lattice of cyclic flats of a ranked lattice");
  add_common(cflats, true);
  auto* ccf = app.add_subcommand("check-cf-axioms",
                                 "check the six cyclic-flat axioms");
  add_common(ccf, true);
  auto* rec = app.add_subcommand(
      "reconstruct", "rebuild the rank function from a cyclic-flat system");
  add_common(rec, true);
  auto* rt = app.add_subcommand(
      "roundtrip", "derive the cyclic-flat system and verify both directions");
  add_common(rt, true);
  auto* dot = app.add_subcommand("export-dot", "write a DOT Hasse diagram");
  add_common(dot, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed())
      return run_gen_lattice(gen_kind, gen_args, o, gen->count("--seed") > 0);
    if (crank->parsed()) return run_check_rank(o);
    if (cweights->parsed()) return run_check_weights(o);
    if (cflats->parsed()) return run_cyclic_flats(o);
    if (ccf->parsed()) return run_check_cf_axioms(o);
    if (rec->parsed()) return run_reconstruct(o);
    if (rt->parsed()) return run_roundtrip(o);
    if (dot->parsed()) return run_export_dot(o);
  } catch (const latpoly::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
