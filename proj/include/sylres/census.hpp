#pragma once

#include <array>
#include <string>

#include "sylres/checker.hpp"
#include "sylres/groupio.hpp"

namespace sylres {

struct CorpusEntry {
  std::string name;
  PermGroup group;
  std::vector<std::string> tags;
};

// the bundled corpus: >= 40 deterministically constructed groups
std::vector<CorpusEntry> builtin_corpus();

inline constexpr const char* kEngineVersion = "sylres-1";
inline constexpr const char* kCacheEnvVar = "SYLRES_CACHE_DIR";

// 64-bit FNV-1a
u64 content_hash(const std::string& bytes);

// canonical byte key describing the group's generator content
std::string group_content_key(const PermGroup& g);

// one canonical JSONL verdict line (sorted keys, fixed integer formatting,
// no timing fields so identical runs produce identical bytes)
std::string report_line(const std::string& name, const PermGroup& g,
                        const CheckVerdict& v,
                        const FilterReport* filter = nullptr,
                        CheckMode mode = CheckMode::both);

struct CensusOptions {
  unsigned jobs = 1;
  CheckMode mode = CheckMode::both;
  bool filters = false;       // attach mincounter_filter to failing lines
  std::string cache_dir;      // empty: consult the environment variable
  bool use_cache = true;
};

struct CensusSummary {
  std::vector<std::string> lines;   // deterministic order
  std::array<size_t, 5> counts{};   // indexed by CheckStatus
  std::vector<std::string> errors;  // quarantined (group, prime) failures
};

// full check of every (group, prime dividing the order) pair; per-entry
// errors are quarantined, never fatal; output order is independent of jobs
CensusSummary run_census(const std::vector<CorpusEntry>& corpus,
                         const CensusOptions& opt);

}  // namespace sylres
