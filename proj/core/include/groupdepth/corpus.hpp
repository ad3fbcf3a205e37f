#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupdepth/limits.hpp"

namespace groupdepth {

/// One regression entry: a machine-executable construction recipe plus the
/// expected invariants and a human-readable provenance note.
struct CorpusEntry {
  std::string id;
  std::string group_spec;
  std::string subgroup_spec;
  std::optional<unsigned> expect_depth;
  std::optional<unsigned> expect_base;
  std::string provenance;
};

/// Line format: id | group | subgroup | expectations | provenance
/// where expectations is e.g. "depth=7" or "depth=5 base=2". '#' comments.
std::vector<CorpusEntry> load_corpus(const std::string &path);
std::vector<CorpusEntry> parse_corpus_text(const std::string &text);

struct CorpusResult {
  std::string id;
  bool ok = false;
  std::string message;
  std::optional<unsigned> depth;
  std::optional<unsigned> base;
  double wall_ms = 0;
};

struct CorpusRun {
  std::vector<CorpusResult> results;
  bool all_ok = true;
};

/// Runs every entry whose id contains `filter` (all when empty), in
/// parallel across `workers` threads. Entries are isolated: an exception
/// in one entry fails that entry only.
CorpusRun run_corpus(const std::vector<CorpusEntry> &entries, const std::string &filter,
                     unsigned workers, const Limits &limits, std::uint64_t seed);

} // namespace groupdepth
