#include "sylowlens/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>

#include "sylowlens/corpus.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/group_file.hpp"
#include "sylowlens/lattice.hpp"
#include "sylowlens/products.hpp"
#include "sylowlens/report.hpp"
#include "sylowlens/series.hpp"
#include "sylowlens/sylow.hpp"
#include "sylowlens/theorems.hpp"

namespace sylowlens {

namespace {

constexpr int kUsage = 2;

struct Args {
  std::string group_file;
  std::string claim;
  std::optional<std::uint64_t> p;
  std::string a_file;
  std::string b_file;
  bool mut_perm = false;
  std::uint64_t max_order = 0;
  std::vector<std::string> claims;
  std::vector<std::string> families;
  std::string out_file;
  unsigned workers = 1;
  std::size_t budget = LemmaSuiteOptions{}.intersection_budget;
};

nlohmann::json describe(const Subgroup& h) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Perm& x : h.generators()) gens.push_back(x.to_cycles());
  return {{"order", h.order()}, {"generators", gens}};
}

nlohmann::json optional_json(const std::optional<unsigned>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

// Generators of the file, each checked for membership in g.
Subgroup load_subgroup(const Group& g, const std::string& path, const char* what) {
  if (path.empty()) throw Error(ErrorKind::Precondition, std::string("this claim needs --") + what);
  GroupSpec spec = load_group_file(path);
  if (spec.degree != g.degree()) {
    throw Error(ErrorKind::DegreeMismatch, path + ": degree " + std::to_string(spec.degree) +
                                               " differs from the group's degree " + std::to_string(g.degree()));
  }
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    if (!g.contains(spec.generators[i])) {
      throw Error(ErrorKind::NotSubgroup, path + ": generators[" + std::to_string(i) + "] is not in the group");
    }
  }
  return Subgroup(g, spec.generators, spec.name);
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Precondition, "cannot write " + path);
  f << text;
}

int finish(const Report& report, const Args& args, std::ostream& out, std::ostream& err) {
  write_output(emit_report(report), args.out_file, out);
  ReportSummary s = report.summary();
  err << "checked " << s.checked << ", held " << s.held << ", failed " << s.failed << ", preconditions unmet "
      << s.precondition_failed << ", errors " << s.errors << "\n";
  return report.exit_code();
}

std::vector<std::uint64_t> primes_for(const Group& g, const Args& args) {
  if (!args.p) return g.prime_divisors();
  if (!is_prime(*args.p)) throw Error(ErrorKind::Precondition, "--p must be prime");
  return {*args.p};
}

int cmd_invariants(const Args& args, std::ostream& out) {
  Group g = load_group_file(args.group_file).to_group();
  TauProfile tau = tau_profile(g);
  nlohmann::json j = {{"name", g.name()},
                      {"degree", g.degree()},
                      {"order", g.order()},
                      {"abelian", g.is_abelian()},
                      {"nilpotent", is_nilpotent(g)},
                      {"solvable", is_solvable(g)},
                      {"derived_length", optional_json(derived_length(g))},
                      {"fitting_length", optional_json(fitting_length(g))},
                      {"tau", tau.tau_of_group}};
  if (g.order() <= lattice_cap()) {
    j["frattini_order"] = frattini(g).order();
    j["subgroup_count"] = all_subgroups(g)->size();
  }
  nlohmann::json per = nlohmann::json::object();
  for (std::uint64_t p : primes_for(g, args)) {
    const bool solv = is_p_solvable(g, p);
    per[std::to_string(p)] = {{"sylow_number", g.order() % p == 0 ? nlohmann::json(tau.sylow_numbers.at(p))
                                                                  : nlohmann::json(1)},
                              {"tau_p", tau.tau_p(p)},
                              {"p_solvable", solv},
                              {"p_nilpotent", is_p_nilpotent(g, p)},
                              {"p_length", solv ? nlohmann::json(p_length(g, p)) : nlohmann::json(nullptr)},
                              {"o_p_order", o_p(g, p).order()}};
  }
  j["primes"] = per;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_sylow(const Args& args, std::ostream& out) {
  Group g = load_group_file(args.group_file).to_group();
  TauProfile tau = tau_profile(g);
  nlohmann::json per = nlohmann::json::object();
  for (std::uint64_t p : g.prime_divisors()) {
    per[std::to_string(p)] = {{"sylow_number", tau.sylow_numbers.at(p)},
                              {"tau_p", tau.tau_p(p)},
                              {"subgroup", describe(sylow_subgroup(g, p))}};
  }
  out << nlohmann::json{{"name", g.name()}, {"order", g.order()}, {"tau", tau.tau_of_group}, {"primes", per}}.dump(2)
      << "\n";
  return 0;
}

int cmd_factorizations(const Args& args, std::ostream& out) {
  Group g = load_group_file(args.group_file).to_group();
  nlohmann::json list = nlohmann::json::array();
  for (const MutPermWitness& w : find_factorizations(g, args.mut_perm)) {
    list.push_back({{"A", describe(w.a)}, {"B", describe(w.b)}, {"mutually_permutable", w.holds},
                    {"trivial", w.trivial}});
  }
  out << nlohmann::json{{"name", g.name()}, {"order", g.order()}, {"factorizations", list}}.dump(2) << "\n";
  return 0;
}

int cmd_check(const Args& args, std::ostream& out, std::ostream& err) {
  if (!is_claim_id(args.claim)) throw Error(ErrorKind::Unsupported, "unknown claim id '" + args.claim + "'");
  Group g = load_group_file(args.group_file).to_group();
  Report report;
  report.corpus = {{"group_file", args.group_file}, {"group", g.name()}, {"order", g.order()}};
  const std::string& c = args.claim;
  auto a = [&] { return load_subgroup(g, args.a_file, "a"); };
  auto b = [&] { return load_subgroup(g, args.b_file, "b"); };
  if (c == "thm_1_1" || c == "conj_1_4") {
    Subgroup sa = a();
    Subgroup sb = b();
    for (std::uint64_t p : primes_for(g, args)) {
      report.verdicts.push_back(c == "thm_1_1" ? check_p_length_bound(g, sa, sb, p)
                                               : check_p_length_conjecture(g, sa, sb, p));
    }
  } else if (c == "thm_1_2a") {
    report.verdicts.push_back(check_fitting_length_bound(g, a(), b()));
  } else if (c == "thm_1_2b") {
    report.verdicts.push_back(check_frattini_derived_length_bound(g, a(), b()));
  } else if (c == "lemma_2_7") {
    for (std::uint64_t p : primes_for(g, args)) report.verdicts.push_back(check_group_p_length_bound(g, p));
  } else if (c == "hall") {
    report.verdicts = check_hall_sylow_numbers(g);
  } else if (c == "zhang_pnilp") {
    report.verdicts = check_sylow_p_nilpotency(g);
  } else if (c == "lemma_2_6") {
    if (!args.p) throw Error(ErrorKind::Precondition, "lemma_2_6 needs --p (the prime q)");
    report.verdicts.push_back(check_split_extension_index(g, a(), b(), *args.p));
  } else {
    LemmaSuiteOptions opts;
    opts.intersection_budget = args.budget;
    for (BoundVerdict& v : product_lemma_suite(g, a(), b(), opts)) {
      if (v.claim_id == c) report.verdicts.push_back(std::move(v));
    }
  }
  for (const BoundVerdict& v : report.verdicts) {
    if (v.is_equality()) report.equality_instances.push_back(v);
  }
  return finish(report, args, out, err);
}

std::vector<Family> families_for(const Args& args) {
  if (args.families.empty()) return all_families();
  std::vector<Family> out;
  for (const std::string& name : args.families) {
    auto f = family_from_string(name);
    if (!f) throw Error(ErrorKind::Unsupported, "unknown family '" + name + "'");
    out.push_back(*f);
  }
  return out;
}

int cmd_scan(const Args& args, bool conjecture, std::ostream& out, std::ostream& err) {
  if (args.max_order > lattice_cap()) {
    throw Error(ErrorKind::CapExceeded, "--max-order " + std::to_string(args.max_order) + " exceeds the lattice cap " +
                                            std::to_string(lattice_cap()));
  }
  std::vector<Family> families = families_for(args);
  std::vector<Group> corpus = build_corpus(args.max_order, families);
  ScanOptions opts;
  opts.claims = conjecture ? std::vector<std::string>{"conj_1_4"} : args.claims;
  opts.workers = args.workers;
  opts.lemma_suite.intersection_budget = args.budget;
  ScanResult r = scan_corpus(corpus, opts);
  Report report;
  report.corpus = describe_corpus(args.max_order, families, corpus);
  report.corpus["claims"] = opts.claims;
  report.corpus["factorizations"] = r.factorizations;
  report.verdicts = std::move(r.verdicts);
  report.equality_instances = std::move(r.equality_instances);
  if (conjecture) report.near_tight_instances = std::move(r.near_tight_instances);
  err << r.groups << " groups, " << r.factorizations << " mutually permutable factorizations\n";
  return finish(report, args, out, err);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sylow-number bounds on mutually permutable products of finite permutation groups", "sylowlens"};
  app.require_subcommand(1);
  Args args;

  auto* inv = app.add_subcommand("invariants", "Orders, lengths and Sylow data of a group file");
  inv->add_option("groupfile", args.group_file)->required();
  inv->add_option("--p", args.p, "Restrict per-prime data to this prime");

  auto* syl = app.add_subcommand("sylow", "Sylow numbers, tau values and Sylow subgroups");
  syl->add_option("groupfile", args.group_file)->required();

  auto* fac = app.add_subcommand("factorizations", "Factorizations G = AB by subgroups");
  fac->add_option("groupfile", args.group_file)->required();
  fac->add_flag("--mut-perm", args.mut_perm, "Only mutually permutable ones");

  auto* chk = app.add_subcommand("check", "Evaluate one claim on one group");
  chk->add_option("claim", args.claim, "Claim id")->required();
  chk->add_option("groupfile", args.group_file)->required();
  chk->add_option("--p", args.p, "Prime (for lemma_2_6: the prime q)");
  chk->add_option("--a", args.a_file, "Generator file of the first factor (lemma_2_6: normal p-subgroup A)");
  chk->add_option("--b", args.b_file, "Generator file of the second factor (lemma_2_6: complement H)");
  chk->add_option("--out", args.out_file, "Write the report here instead of standard output");
  chk->add_option("--budget", args.budget, "Subgroups tested by bea_2_5 (0 = all)");

  auto* scan = app.add_subcommand("scan", "Evaluate claims over the generated corpus");
  scan->add_option("--max-order", args.max_order)->required();
  scan->add_option("--claims", args.claims, "Claim ids, comma separated; 'bea' selects bea_2_1..bea_2_5")
      ->required()
      ->delimiter(',');
  scan->add_option("--families", args.families, "Restrict the named families, comma separated")->delimiter(',');
  scan->add_option("--out", args.out_file, "Write the report here instead of standard output");
  scan->add_option("--workers", args.workers, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--budget", args.budget, "Subgroups tested by bea_2_5 per factorization (0 = all)");

  auto* conj = app.add_subcommand("conjecture", "p-length inequality without conditions (a)/(b) over the corpus");
  conj->add_option("--max-order", args.max_order)->required();
  conj->add_option("--families", args.families, "Restrict the named families, comma separated")->delimiter(',');
  conj->add_option("--out", args.out_file, "Write the report here instead of standard output");
  conj->add_option("--workers", args.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*inv) return cmd_invariants(args, out);
    if (*syl) return cmd_sylow(args, out);
    if (*fac) return cmd_factorizations(args, out);
    if (*chk) return cmd_check(args, out, err);
    if (*scan) {
      for (const std::string& c : args.claims) {
        if (c != "bea" && c != "all" && !is_claim_id(c)) {
          throw Error(ErrorKind::Unsupported, "unknown claim id '" + c + "'");
        }
      }
      return cmd_scan(args, false, out, err);
    }
    if (*conj) return cmd_scan(args, true, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sylowlens"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sylowlens
