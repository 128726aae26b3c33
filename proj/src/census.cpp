#include "sylres/census.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sylres/errors.hpp"
#include "sylres/families.hpp"
#include "sylres/numth.hpp"

namespace sylres {

namespace {

Permutation perm_of(std::vector<std::uint16_t> img) {
  return Permutation(std::move(img));
}

Permutation n_cycle(unsigned degree, unsigned lo, unsigned hi) {
  // cycle (lo lo+1 ... hi-1) on {0..degree-1}
  std::vector<std::uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = std::uint16_t(i);
  for (unsigned i = lo; i < hi; ++i)
    img[i] = std::uint16_t(i + 1 < hi ? i + 1 : lo);
  return perm_of(std::move(img));
}

Permutation swap2(unsigned degree, unsigned a, unsigned b) {
  std::vector<std::uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = std::uint16_t(i);
  img[a] = std::uint16_t(b);
  img[b] = std::uint16_t(a);
  return perm_of(std::move(img));
}

// i -> m*i mod n on {0..n-1}
Permutation mul_map(unsigned n, unsigned m) {
  std::vector<std::uint16_t> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = std::uint16_t((i * m) % n);
  return perm_of(std::move(img));
}

PermGroup cyclic(unsigned n) {
  return PermGroup::from_generators(n, {n_cycle(n, 0, n)});
}

PermGroup symmetric(unsigned n) {
  return PermGroup::from_generators(n, {n_cycle(n, 0, n), swap2(n, 0, 1)});
}

PermGroup alternating(unsigned n) {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i + 2 < n; ++i) {
    std::vector<std::uint16_t> img(n);
    for (unsigned j = 0; j < n; ++j) img[j] = std::uint16_t(j);
    img[i] = std::uint16_t(i + 1);
    img[i + 1] = std::uint16_t(i + 2);
    img[i + 2] = std::uint16_t(i);
    gens.push_back(perm_of(std::move(img)));
  }
  return PermGroup::from_generators(n, gens);
}

// C_{n1} x ... x C_{nk} as cycles on disjoint blocks
PermGroup abelian(const std::vector<unsigned>& ns) {
  unsigned degree = 0;
  for (unsigned n : ns) degree += n;
  std::vector<Permutation> gens;
  unsigned off = 0;
  for (unsigned n : ns) {
    gens.push_back(n_cycle(degree, off, off + n));
    off += n;
  }
  return PermGroup::from_generators(degree, gens);
}

// C_n : <m> with m of multiplicative order k mod n (Frobenius when
// gcd-free); acts on {0..n-1}
PermGroup metacyclic(unsigned n, unsigned m) {
  return PermGroup::from_generators(n, {n_cycle(n, 0, n), mul_map(n, m)});
}

// extraspecial 3^{1+2} of exponent 3 on Z_3 x Z_3, point (u,v) = 3u+v
PermGroup heisenberg27() {
  std::vector<std::uint16_t> a(9), b(9);
  for (unsigned u = 0; u < 3; ++u)
    for (unsigned v = 0; v < 3; ++v) {
      a[3 * u + v] = std::uint16_t(3 * ((u + 1) % 3) + v);
      b[3 * u + v] = std::uint16_t(3 * u + (v + u) % 3);
    }
  return PermGroup::from_generators(
      9, {perm_of(std::move(a)), perm_of(std::move(b))});
}

// modular (semidihedral-dual) group of order 16: x^y = x^5 on Z_8
PermGroup modular16() {
  return PermGroup::from_generators(8, {n_cycle(8, 0, 8), mul_map(8, 5)});
}

PermGroup c3_times_s3() {
  return PermGroup::from_generators(
      6, {n_cycle(6, 0, 3), n_cycle(6, 3, 6), swap2(6, 3, 4)});
}

const char* mode_name(CheckMode m) {
  switch (m) {
    case CheckMode::weak: return "weak";
    case CheckMode::strong: return "strong";
    case CheckMode::both: return "both";
  }
  return "?";
}

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::capped: return "capped";
  }
  return "?";
}

nlohmann::json solve_json(const SolveVerdict& s) {
  nlohmann::json j;
  j["status"] = solve_status_name(s.status);
  if (!s.certificate.empty()) j["certificate"] = s.certificate;
  return j;
}

nlohmann::json witness_json(const CheckVerdict& v, const IntVec& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t c = 0; c < w.size(); ++c) {
    if (w[c] == 0) continue;
    nlohmann::json e;
    e["column"] = c;
    e["coefficient"] = w[c].get_str();
    if (c < v.column_provenance.size()) {
      nlohmann::json origins = nlohmann::json::array();
      for (const auto& [qi, li] : v.column_provenance[c])
        origins.push_back({qi, li});
      e["origins"] = origins;
    }
    arr.push_back(e);
  }
  return arr;
}

int status_index(CheckStatus s) { return int(s); }

CheckStatus status_from_name(const std::string& n) {
  for (int i = 0; i < 5; ++i)
    if (n == status_name(CheckStatus(i))) return CheckStatus(i);
  throw ParseError("unknown status: " + n);
}

std::string hex64(u64 h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

}  // namespace

u64 content_hash(const std::string& bytes) {
  u64 h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string group_content_key(const PermGroup& g) {
  std::ostringstream ss;
  ss << g.degree();
  for (const auto& gen : g.generators()) {
    ss << '|';
    for (auto v : gen.images()) ss << v << ',';
  }
  return ss.str();
}

std::string report_line(const std::string& name, const PermGroup& g,
                        const CheckVerdict& v, const FilterReport* filter,
                        CheckMode mode) {
  bool trivial = v.status == CheckStatus::trivial_strong;
  nlohmann::json j;
  j["schema"] = 1;
  j["engine"] = kEngineVersion;
  j["group"] = name;
  j["order"] = g.order().get_str();
  j["group_hash"] = hex64(content_hash(group_content_key(g)));
  j["p"] = v.p;
  j["char"] = v.char_index;
  j["degree"] = v.degree;
  j["degree_p_part"] = v.degree_p_part;
  j["target_index"] = v.target_index;
  j["subgroup_classes"] = v.subgroup_class_count;
  j["columns"] = v.column_count;
  j["status"] = status_name(v.status);
  if (mode == CheckMode::strong && !trivial)
    j["weak"] = {{"status", "skipped"}};
  else
    j["weak"] = solve_json(v.weak);
  if (mode == CheckMode::weak && !trivial)
    j["strong"] = {{"status", "skipped"}};
  else
    j["strong"] = solve_json(v.strong);
  if (v.strong.status == SolveStatus::feasible)
    j["witness"] = witness_json(v, v.strong.witness);
  else if (v.weak.status == SolveStatus::feasible)
    j["witness"] = witness_json(v, v.weak.witness);
  if (v.linear_witness) {
    nlohmann::json lw;
    lw["q_class"] = v.linear_witness->q_class_index;
    lw["lambda"] = v.linear_witness->lambda_index;
    lw["coefficient"] = v.linear_witness->coefficient.get_str();
    j["linear_witness"] = lw;
  }
  if (!v.note.empty()) j["note"] = v.note;
  if (filter && filter->evaluated) {
    nlohmann::json f;
    f["equals_o_upper_pprime"] = filter->equals_o_upper_pprime;
    f["directly_indecomposable"] = filter->directly_indecomposable;
    f["chi_faithful"] = filter->chi_faithful;
    f["abelian_normals_cyclic_central"] =
        filter->abelian_normals_cyclic_central;
    f["o_pprime_in_center_and_derived"] =
        filter->o_pprime_in_center_and_derived;
    f["center_index"] = filter->center_index.get_str();
    f["order"] = filter->order.get_str();
    if (!filter->note.empty()) f["note"] = filter->note;
    j["filter"] = f;
  }
  return j.dump();
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, PermGroup g,
                 std::vector<std::string> tags) {
    out.push_back({std::move(name), std::move(g), std::move(tags)});
  };
  auto fam = [](Family f, u64 param) { return make_family(f, param); };

  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 12u, 16u})
    add("c" + std::to_string(n), cyclic(n), {"abelian", "cyclic"});
  add("c2xc4", abelian({2, 4}), {"abelian"});
  add("c3xc3", abelian({3, 3}), {"abelian"});
  add("c4xc4", abelian({4, 4}), {"abelian"});
  add("e8", abelian({2, 2, 2}), {"abelian", "elementary"});

  for (unsigned n : {8u, 10u, 12u, 16u, 24u, 32u, 64u, 128u})
    add("dihedral" + std::to_string(n), fam(Family::dihedral, n),
        {"dihedral", "solvable"});
  for (unsigned n : {8u, 16u, 32u, 64u})
    add("quaternion" + std::to_string(n), fam(Family::quaternion, n),
        {"quaternion", "2-group"});
  for (unsigned n : {16u, 32u, 64u})
    add("semidihedral" + std::to_string(n), fam(Family::semidihedral, n),
        {"semidihedral", "2-group"});
  add("wreath2", fam(Family::wreath, 2), {"wreath", "2-group"});
  add("wreath3", fam(Family::wreath, 3), {"wreath", "2-group"});

  add("s3", symmetric(3), {"symmetric", "solvable"});
  add("s4", symmetric(4), {"symmetric", "solvable"});
  add("a4", alternating(4), {"alternating", "solvable"});
  add("sl2_3", fam(Family::sl2, 3), {"linear", "solvable"});
  add("gl2_3", fam(Family::gl2, 3), {"linear", "solvable"});
  add("frobenius20", metacyclic(5, 2), {"frobenius", "solvable"});
  add("frobenius21", metacyclic(7, 2), {"frobenius", "solvable"});
  add("frobenius39", metacyclic(13, 3), {"frobenius", "solvable"});
  add("frobenius55", metacyclic(11, 3), {"frobenius", "solvable"});
  add("heisenberg27", heisenberg27(), {"extraspecial", "3-group"});
  add("modular16", modular16(), {"2-group"});
  add("c3xs3", c3_times_s3(), {"solvable"});

  add("s5", symmetric(5), {"symmetric", "nonsolvable"});
  add("s6", symmetric(6), {"symmetric", "nonsolvable"});
  add("a5", alternating(5), {"alternating", "nonsolvable"});
  add("a6", alternating(6), {"alternating", "nonsolvable"});
  add("sl2_5", fam(Family::sl2, 5), {"linear", "nonsolvable"});
  add("sl2_7", fam(Family::sl2, 7), {"linear", "nonsolvable"});
  add("gl2_5", fam(Family::gl2, 5), {"linear", "nonsolvable"});
  add("psl2_5", fam(Family::psl2, 5), {"linear", "nonsolvable"});
  add("psl2_7", fam(Family::psl2, 7), {"linear", "nonsolvable"});
  return out;
}

namespace {

struct Task {
  size_t entry;
  u64 p;
};

std::string cache_key(const PermGroup& g, u64 p, CheckMode mode,
                      bool filters) {
  std::ostringstream ss;
  ss << group_content_key(g) << "|p=" << p << "|mode=" << mode_name(mode)
     << "|filters=" << (filters ? 1 : 0) << "|" << kEngineVersion;
  return hex64(content_hash(ss.str()));
}

bool read_cache(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

void write_cache(const std::string& path, const std::string& body) {
  static std::atomic<unsigned> counter{0};
  std::string tmp = path + ".tmp" + std::to_string(counter.fetch_add(1));
  {
    std::ofstream outf(tmp);
    if (!outf) return;  // cache is best-effort
    outf << body;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) std::remove(tmp.c_str());
}

std::string run_task(const CorpusEntry& e, u64 p, const CensusOptions& opt) {
  auto verdicts = check_group(e.group, p, opt.mode, e.name);
  std::ostringstream ss;
  for (const auto& v : verdicts) {
    FilterReport fr;
    bool want_filter =
        opt.filters && (v.status == CheckStatus::fails ||
                        v.status == CheckStatus::weak_only);
    if (want_filter) fr = mincounter_filter(e.group, p, v.char_index);
    ss << report_line(e.name, e.group, v, want_filter ? &fr : nullptr,
                      opt.mode)
       << '\n';
  }
  return ss.str();
}

}  // namespace

CensusSummary run_census(const std::vector<CorpusEntry>& corpus,
                         const CensusOptions& opt) {
  std::string cache_dir = opt.cache_dir;
  if (cache_dir.empty() && opt.use_cache) {
    if (const char* env = std::getenv(kCacheEnvVar)) cache_dir = env;
  }
  if (!opt.use_cache) cache_dir.clear();

  std::vector<Task> tasks;
  for (size_t i = 0; i < corpus.size(); ++i) {
    u64 n = corpus[i].group.order_u64(caps().element_cap);
    for (u64 p : prime_divisors(n)) tasks.push_back({i, p});
  }

  std::vector<std::string> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      const CorpusEntry& e = corpus[tasks[t].entry];
      u64 p = tasks[t].p;
      std::string path;
      if (!cache_dir.empty())
        path = cache_dir + "/" +
               cache_key(e.group, p, opt.mode, opt.filters) + ".jsonl";
      try {
        if (!path.empty() && read_cache(path, results[t])) continue;
        results[t] = run_task(e, p, opt);
        if (!path.empty()) write_cache(path, results[t]);
      } catch (const std::exception& ex) {
        errors[t] = e.name + " p=" + std::to_string(p) + ": " + ex.what();
      }
    }
  };

  unsigned jobs = opt.jobs == 0 ? 1 : opt.jobs;
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  CensusSummary sum;
  for (size_t t = 0; t < tasks.size(); ++t) {
    if (!errors[t].empty()) {
      sum.errors.push_back(errors[t]);
      continue;
    }
    std::istringstream ss(results[t]);
    std::string line;
    while (std::getline(ss, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line);
      CheckStatus s = status_from_name(j.at("status").get<std::string>());
      ++sum.counts[size_t(status_index(s))];
      sum.lines.push_back(line);
    }
  }
  return sum;
}

}  // namespace sylres
