#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coperm/graph.hpp"
#include "coperm/polynomial.hpp"

namespace coperm {

// Byte key for a graph polynomial:
//   u8 n | u16 LE m | c_{n-2} .. c_0
// each coefficient as sign byte (0 nonneg, 1 neg), u8 length L, then L
// little-endian magnitude bytes with no leading zero byte (L = 0 for 0).
// The x^n and x^{n-1} coefficients are omitted; they are always 1 and 0.
class PolyFingerprint {
 public:
  PolyFingerprint() = default;
  // Validates the layout; throws BadRunFile on malformed bytes.
  static PolyFingerprint from_bytes(std::string_view bytes);
  // Length of the fingerprint at the start of `buffer`, or nullopt when the
  // buffer is too short to hold it.
  static std::optional<std::size_t> encoded_size(std::string_view buffer);

  const std::string& bytes() const { return bytes_; }
  int n() const;
  EdgeCount m() const;
  IntPoly polynomial() const;

  friend bool operator==(const PolyFingerprint&, const PolyFingerprint&) = default;
  friend std::strong_ordering operator<=>(const PolyFingerprint& a, const PolyFingerprint& b) {
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

 private:
  friend PolyFingerprint fingerprint(const IntPoly&, int, EdgeCount);
  std::string bytes_;
};

// Throws DegreeMismatch unless p is monic of degree n with a vanishing
// x^{n-1} term, and EdgeCountMismatch unless the x^{n-2} coefficient is
// +m or -m.
PolyFingerprint fingerprint(const IntPoly& p, int n, EdgeCount m);

struct FamilyRecord {
  PolyFingerprint fingerprint;
  std::vector<std::string> members;  // graph6, sorted

  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

struct ShardStats {
  int n = 0;
  std::optional<EdgeCount> m;  // empty for aggregate rows
  std::uint64_t graphs = 0;
  std::uint64_t distinct_polys = 0;
  std::uint64_t with_mate = 0;
  std::uint64_t max_family = 0;
  std::uint64_t mate_families = 0;  // families of size >= 2

  friend bool operator==(const ShardStats&, const ShardStats&) = default;
};

// Incremental in-memory grouping for one (n, m) shard.
class FamilyGrouper {
 public:
  void add(PolyFingerprint fp, std::string graph6);
  std::size_t size() const { return count_; }
  // Families sorted by fingerprint bytes, members sorted. Throws
  // DuplicateMember if a graph6 word was added twice.
  std::vector<FamilyRecord> finish();

 private:
  std::optional<std::pair<int, EdgeCount>> shard_;
  std::unordered_map<std::string, std::vector<std::string>> groups_;
  std::size_t count_ = 0;
};

std::vector<FamilyRecord> group_families(
    std::span<const std::pair<PolyFingerprint, std::string>> records);

ShardStats shard_stats(std::span<const FamilyRecord> families);

// Sums a fixed-n set of per-m shard results. Throws MixedN, and
// ShardViolation if two shards claim the same m.
ShardStats aggregate(std::span<const ShardStats> shards);

// with_mate / graphs rounded half-up to 5 decimals ("0.01628"), or "0"
// when nothing has a mate.
std::string format_fraction(std::uint64_t with_mate, std::uint64_t graphs);

}  // namespace coperm
