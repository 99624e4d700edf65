#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coperm/collide.hpp"
#include "coperm/graph.hpp"
#include "coperm/integer.hpp"

namespace coperm {

enum class PolyKind { Perm, Char, Both };

PolyKind parse_kind(std::string_view text);

struct RunConfig {
  int n_min = 0;
  int n_max = 0;
  std::optional<EdgeCount> edges;  // restrict to one m shard
  PolyKind kind = PolyKind::Perm;
  std::optional<std::filesystem::path> input;  // graph6 file instead of the builtin generator
  unsigned workers = 1;
  ArithMode arith = ArithMode::Fixed128;
  bool dedup = false;     // canonicalize ingested graphs and drop repeats
  bool per_edge = false;  // appendix-style rows, one per m
};

// A cospectral family whose members do not all share a permanental
// polynomial.
struct SplitFamily {
  FamilyRecord cospectral;
  std::size_t perm_classes = 0;
};

struct ShardResult {
  int n = 0;
  EdgeCount m = 0;
  std::optional<ShardStats> perm;
  std::optional<ShardStats> chr;
  std::vector<FamilyRecord> perm_families;
  std::vector<FamilyRecord> char_families;
  std::vector<SplitFamily> split;
};

struct OrderResult {
  int n = 0;
  std::vector<ShardResult> shards;  // ascending m

  ShardStats total(PolyKind kind) const;
};

// Runs every (n, m) shard of the configuration on a pool of
// `config.workers` threads. Results are ordered by (n, m) independently of
// completion order. Families are retained only when `keep_families`.
std::vector<OrderResult> run_pipeline(const RunConfig& config, bool keep_families);

void cmd_table(const RunConfig& config, std::ostream& out);
void cmd_mates(const RunConfig& config, std::ostream& out);
void cmd_compare(const RunConfig& config, std::ostream& out);
void cmd_poly(std::string_view graph6, PolyKind kind, ArithMode arith, std::ostream& out);

// Fingerprint records for the single shard selected by the configuration,
// split round-robin over `runs` files named <out>.<i> (or <out> itself
// when runs == 1). Returns the paths written.
std::vector<std::filesystem::path> cmd_fingerprint(const RunConfig& config,
                                                   const std::filesystem::path& out, unsigned runs);

// Merges run files and prints one line per family plus a stats row.
void cmd_merge(const std::vector<std::filesystem::path>& runs, std::ostream& out);

}  // namespace coperm
