// sylres: checks whether restrictions of irreducible characters to Sylow
// p-subgroups decompose into characters induced from subgroups of the
// matching index, exactly and deterministically.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sylres/census.hpp"
#include "sylres/errors.hpp"
#include "sylres/families.hpp"
#include "sylres/groupio.hpp"
#include "sylres/psub.hpp"

namespace fs = std::filesystem;
using namespace sylres;

namespace {

// 0 ok, 1 parse error, 2 mathematical failure, 3 resource cap (a failure
// anywhere outranks a cap)
struct ExitTracker {
  bool failed = false;
  bool capped = false;
  void note(CheckStatus s, CheckMode mode) {
    if (s == CheckStatus::fails) failed = true;
    if (s == CheckStatus::capped) capped = true;
    if (s == CheckStatus::weak_only && mode == CheckMode::both) failed = true;
  }
  int code() const { return failed ? 2 : capped ? 3 : 0; }
};

CheckMode parse_mode(const std::string& s) {
  if (s == "weak") return CheckMode::weak;
  if (s == "strong") return CheckMode::strong;
  if (s == "both") return CheckMode::both;
  throw CLI::ValidationError("--mode must be weak, strong, or both");
}

int cmd_check(const std::string& file, u64 prime, const std::string& mode_s,
              int chi) {
  CheckMode mode = parse_mode(mode_s);
  GroupFile gf = load_group_file(file);
  std::vector<u64> primes;
  if (prime != 0) {
    primes.push_back(prime);
  } else {
    u64 n = gf.group.order_u64(caps().element_cap);
    primes = prime_divisors(n);
  }
  ExitTracker exit;
  for (u64 p : primes) {
    if (gf.group.order() % (unsigned long)p != 0)
      throw ParseError("prime " + std::to_string(p) +
                       " does not divide the group order");
    if (chi >= 0) {
      CheckVerdict v = check_character(gf.group, p, chi, mode);
      v.group_name = gf.name;
      std::cout << report_line(gf.name, gf.group, v, nullptr, mode) << "\n";
      exit.note(v.status, mode);
    } else {
      for (const auto& v : check_group(gf.group, p, mode, gf.name)) {
        std::cout << report_line(gf.name, gf.group, v, nullptr, mode) << "\n";
        exit.note(v.status, mode);
      }
    }
  }
  return exit.code();
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    GroupFile gf = load_group_file(f.string());
    out.push_back({gf.name, gf.group, gf.tags});
  }
  return out;
}

int cmd_census(const std::string& dir, const std::string& out_file,
               unsigned jobs, bool filters, const std::string& mode_s,
               const std::string& cache_dir) {
  CensusOptions opt;
  opt.jobs = jobs;
  opt.filters = filters;
  opt.mode = parse_mode(mode_s);
  opt.cache_dir = cache_dir;
  std::vector<CorpusEntry> corpus =
      dir.empty() ? builtin_corpus() : load_corpus_dir(dir);
  CensusSummary sum = run_census(corpus, opt);

  std::ostream* out = &std::cout;
  std::ofstream of;
  if (!out_file.empty()) {
    of.open(out_file);
    if (!of) throw ParseError("cannot open output file: " + out_file);
    out = &of;
  }
  for (const auto& line : sum.lines) *out << line << "\n";

  std::cerr << "census: " << corpus.size() << " groups, "
            << sum.lines.size() << " verdicts\n";
  for (int s = 0; s < 5; ++s)
    std::cerr << "  " << status_name(CheckStatus(s)) << ": "
              << sum.counts[size_t(s)] << "\n";
  for (const auto& e : sum.errors) std::cerr << "  error: " << e << "\n";

  ExitTracker exit;
  if (sum.counts[size_t(CheckStatus::fails)] > 0) exit.failed = true;
  if (sum.counts[size_t(CheckStatus::capped)] > 0 || !sum.errors.empty())
    exit.capped = true;
  return exit.code();
}

int cmd_table(const std::string& file) {
  GroupFile gf = load_group_file(file);
  std::cout << table_to_json(character_table(gf.group)) << "\n";
  return 0;
}

void print_oracle(const OracleReport& rep, bool& all_pass) {
  for (const auto& line : rep.lines) {
    std::cout << (line.pass ? "pass  " : "FAIL  ") << line.item;
    if (!line.detail.empty()) std::cout << "  [" << line.detail << "]";
    std::cout << "\n";
    if (!line.pass) all_pass = false;
  }
}

int cmd_families(const std::string& family_s, u64 q) {
  Family f = family_from_name(family_s);
  bool all_pass = true;

  PermGroup g = make_family(f, q);
  std::cout << "pass  construction: " << family_s << " " << q << " order "
            << g.order().get_str() << "\n";

  if (f == Family::sl2 && q >= 5) {
    print_oracle(sl2_closed_form(q), all_pass);
  } else if (f == Family::gl2 && (q == 5 || q == 7)) {
    print_oracle(gl2_closed_form(q), all_pass);
  }

  // generic cross-check: every character passes the strong checker at p = 2
  for (const auto& v : check_group(g, 2, CheckMode::both, family_s)) {
    bool ok = v.status == CheckStatus::trivial_strong ||
              v.status == CheckStatus::strong;
    std::cout << (ok ? "pass  " : "FAIL  ") << "generic check char "
              << v.char_index << " degree " << v.degree << ": "
              << status_name(v.status) << "\n";
    if (!ok) all_pass = false;
  }
  return all_pass ? 0 : 2;
}

int cmd_selftest() {
  bool ok = true;
  auto line = [&](const std::string& item, bool pass) {
    std::cout << (pass ? "pass  " : "FAIL  ") << item << "\n";
    if (!pass) ok = false;
  };

  // exact tables with verified orthogonality
  for (const char* name : {"s4", "quaternion8", "sl2_3", "a5"}) {
    bool pass = false;
    try {
      for (const auto& e : builtin_corpus())
        if (e.name == name) {
          verify_table(character_table(e.group));
          pass = true;
        }
    } catch (const std::exception&) {
    }
    line(std::string("character table + orthogonality: ") + name, pass);
  }

  // closed forms
  try {
    line("sl2 closed form q=5", sl2_closed_form(5).all_pass());
    line("gl2 closed form q=5", gl2_closed_form(5).all_pass());
  } catch (const std::exception& e) {
    line(std::string("closed forms: ") + e.what(), false);
  }

  // checker on a small p-solvable sample: everything strong
  try {
    bool pass = true;
    for (const char* name : {"s4", "sl2_3", "dihedral16"})
      for (const auto& e : builtin_corpus())
        if (e.name == name)
          for (u64 p : prime_divisors(e.group.order_u64(caps().element_cap)))
            for (const auto& v :
                 check_group(e.group, p, CheckMode::both, e.name))
              if (v.status != CheckStatus::trivial_strong &&
                  v.status != CheckStatus::strong)
                pass = false;
    line("strong checks: s4, sl2_3, dihedral16, all primes", pass);
  } catch (const std::exception& e) {
    line(std::string("strong checks: ") + e.what(), false);
  }

  // Brauer-Nesbitt on A5
  try {
    bool pass = true;
    for (const auto& e : builtin_corpus())
      if (e.name == "a5")
        for (u64 p : {2, 3, 5})
          for (auto [idx, vanishes] : brauer_nesbitt_check(e.group, p))
            if (!vanishes) pass = false;
    line("defect-zero vanishing: a5", pass);
  } catch (const std::exception& e) {
    line(std::string("defect-zero vanishing: ") + e.what(), false);
  }

  return ok ? 0 : 2;
}

int cmd_gen_corpus(const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& e : builtin_corpus()) {
    GroupFile gf{e.name, e.group, e.tags};
    std::ofstream out(dir + "/" + e.name + ".json");
    if (!out) throw ParseError("cannot write to directory: " + dir);
    out << group_to_json(gf) << "\n";
  }
  std::cerr << "wrote " << builtin_corpus().size() << " group files to "
            << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sylres: exact Sylow restriction decomposition checker for finite "
      "permutation groups"};
  app.require_subcommand(1);

  std::string group_file, mode = "both", corpus_dir, out_file, cache_dir;
  std::string family_s;
  u64 prime = 0, family_q = 0;
  int chi = -1;
  unsigned jobs = 1;
  bool filters = false;

  auto* check = app.add_subcommand(
      "check", "check one group file (JSONL verdicts on stdout)");
  check->add_option("--group", group_file, "group definition JSON file")
      ->required();
  check->add_option("--prime", prime,
                    "prime to check (default: all primes dividing |G|)");
  check->add_option("--mode", mode, "weak | strong | both (default both)");
  check->add_option("--char", chi,
                    "single character index (default: all characters)");

  auto* census = app.add_subcommand(
      "census", "check every (group, prime) pair of a corpus");
  census->add_option("--corpus", corpus_dir,
                     "directory of group JSON files (default: built-in "
                     "corpus)");
  census->add_option("--out", out_file,
                     "output JSONL file (default: stdout)");
  census->add_option("--jobs", jobs, "worker threads (default 1)");
  census->add_flag("--filters", filters,
                   "attach the minimal-counterexample filter report to "
                   "failing lines");
  census->add_option("--mode", mode, "weak | strong | both (default both)");
  census->add_option("--cache-dir", cache_dir,
                     "result cache directory (default: $SYLRES_CACHE_DIR)");

  auto* table = app.add_subcommand(
      "table", "print the exact character table of a group file");
  table->add_option("--group", group_file, "group definition JSON file")
      ->required();

  auto* families = app.add_subcommand(
      "families", "verify a built-in family member against its known "
                  "decomposition forms");
  families->add_option("--family", family_s,
                       "dihedral | quaternion | semidihedral | wreath | "
                       "sl2 | gl2 | psl2")
      ->required();
  families->add_option("--q", family_q, "family parameter")->required();

  app.add_subcommand("selftest", "run a condensed invariant suite");

  auto* gen = app.add_subcommand(
      "gen-corpus", "write the built-in corpus as group JSON files");
  gen->add_option("--out", out_file, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(group_file, prime, mode, chi);
    if (census->parsed())
      return cmd_census(corpus_dir, out_file, jobs, filters, mode,
                        cache_dir);
    if (table->parsed()) return cmd_table(group_file);
    if (families->parsed()) return cmd_families(family_s, family_q);
    if (app.get_subcommand("selftest")->parsed()) return cmd_selftest();
    if (gen->parsed()) return cmd_gen_corpus(out_file);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
