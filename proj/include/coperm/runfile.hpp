#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coperm/collide.hpp"

namespace coperm {

// Fingerprint run file:
//   header  "CPRM" | u16 LE version | u8 n | u16 LE m | u64 LE record count
//   records fingerprint bytes | u8 graph6 length | graph6 bytes
// Records are sorted by (fingerprint bytes, graph6).
inline constexpr char kRunMagic[4] = {'C', 'P', 'R', 'M'};
inline constexpr std::uint16_t kRunVersion = 1;
inline constexpr std::size_t kRunHeaderSize = 17;

struct RunRecord {
  PolyFingerprint fingerprint;
  std::string graph6;

  friend auto operator<=>(const RunRecord&, const RunRecord&) = default;
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Sorts `records` and writes them as one run for shard (n, m). Throws
// ShardViolation for a record of another shard, Io on write failure.
void persist_fingerprints(int n, EdgeCount m, std::vector<RunRecord> records,
                          const std::filesystem::path& path);

class RunReader {
 public:
  explicit RunReader(const std::filesystem::path& path);

  int n() const { return n_; }
  EdgeCount m() const { return m_; }
  std::uint64_t declared_count() const { return declared_; }

  // Next record, checking the run is sorted (UnsortedRun) and that the
  // record count matches the header at end of file (BadRunFile).
  std::optional<RunRecord> next();

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  int n_ = 0;
  EdgeCount m_ = 0;
  std::uint64_t declared_ = 0;
  std::uint64_t read_ = 0;
  std::optional<RunRecord> last_;
};

// k-way merge of sorted runs of one shard, grouped into families as they
// stream past.
class RunMerger {
 public:
  explicit RunMerger(const std::vector<std::filesystem::path>& paths);
  ~RunMerger();
  RunMerger(RunMerger&&) noexcept;
  RunMerger& operator=(RunMerger&&) noexcept;

  std::optional<FamilyRecord> next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::vector<FamilyRecord> merge_sorted_runs(const std::vector<std::filesystem::path>& paths);

}  // namespace coperm
