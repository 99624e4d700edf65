#include "coperm/collide.hpp"

#include <algorithm>
#include <set>

#include "coperm/error.hpp"

namespace coperm {

namespace {

void append_coefficient(std::string& out, Int c) {
  out.push_back(c < 0 ? '\x01' : '\x00');
  unsigned __int128 mag = c < 0 ? -static_cast<unsigned __int128>(c) : static_cast<unsigned __int128>(c);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>(mag & 0xff));
    mag >>= 8;
  }
  out.push_back(static_cast<char>(digits.size()));
  out += digits;
}

int coefficient_count(int n) { return n >= 2 ? n - 1 : 0; }

}  // namespace

PolyFingerprint fingerprint(const IntPoly& p, int n, EdgeCount m) {
  if (n < 0 || n > 255 || p.degree() != n || p.coeffs.back() != 1 ||
      (n >= 1 && p.coeffs[n - 1] != 0)) {
    throw Error(ErrorCode::DegreeMismatch,
                "expected a monic polynomial of degree " + std::to_string(n) +
                    " without x^(n-1) term, got " + to_string(p));
  }
  if (m < 0 || m > 0xffff) throw Error(ErrorCode::EdgeCountMismatch, "edge count out of range");
  const Int second = n >= 2 ? p.coeffs[n - 2] : Int{0};
  if (second != m && second != -m) {
    throw Error(ErrorCode::EdgeCountMismatch,
                "x^(n-2) coefficient " + to_string(second) + " disagrees with m = " + std::to_string(m));
  }
  PolyFingerprint fp;
  fp.bytes_.push_back(static_cast<char>(n));
  fp.bytes_.push_back(static_cast<char>(m & 0xff));
  fp.bytes_.push_back(static_cast<char>((m >> 8) & 0xff));
  for (int j = n - 2; j >= 0; --j) append_coefficient(fp.bytes_, p.coeffs[j]);
  return fp;
}

std::optional<std::size_t> PolyFingerprint::encoded_size(std::string_view buffer) {
  if (buffer.size() < 3) return std::nullopt;
  const int n = static_cast<unsigned char>(buffer[0]);
  std::size_t pos = 3;
  for (int i = 0; i < coefficient_count(n); ++i) {
    if (buffer.size() < pos + 2) return std::nullopt;
    pos += 2 + static_cast<unsigned char>(buffer[pos + 1]);
  }
  if (buffer.size() < pos) return std::nullopt;
  return pos;
}

PolyFingerprint PolyFingerprint::from_bytes(std::string_view bytes) {
  const auto size = encoded_size(bytes);
  if (!size || *size != bytes.size()) throw Error(ErrorCode::BadRunFile, "malformed fingerprint");
  std::size_t pos = 3;
  for (int i = 0; i < coefficient_count(static_cast<unsigned char>(bytes[0])); ++i) {
    const auto sign = static_cast<unsigned char>(bytes[pos]);
    const auto len = static_cast<unsigned char>(bytes[pos + 1]);
    if (sign > 1 || len > 16 || (len > 0 && bytes[pos + 1 + len] == 0) || (len == 0 && sign == 1)) {
      throw Error(ErrorCode::BadRunFile, "non-canonical coefficient encoding");
    }
    pos += 2 + len;
  }
  PolyFingerprint fp;
  fp.bytes_ = std::string(bytes);
  return fp;
}

int PolyFingerprint::n() const { return static_cast<unsigned char>(bytes_.at(0)); }

EdgeCount PolyFingerprint::m() const {
  return static_cast<unsigned char>(bytes_.at(1)) | (static_cast<unsigned char>(bytes_.at(2)) << 8);
}

IntPoly PolyFingerprint::polynomial() const {
  const int deg = n();
  IntPoly p;
  p.coeffs.assign(deg + 1, 0);
  p.coeffs[deg] = 1;
  std::size_t pos = 3;
  for (int j = deg - 2; j >= 0; --j) {
    const bool negative = bytes_[pos] != 0;
    const int len = static_cast<unsigned char>(bytes_[pos + 1]);
    unsigned __int128 mag = 0;
    for (int b = len - 1; b >= 0; --b) mag = (mag << 8) | static_cast<unsigned char>(bytes_[pos + 2 + b]);
    p.coeffs[j] = negative ? -static_cast<Int>(mag) : static_cast<Int>(mag);
    pos += 2 + len;
  }
  return p;
}

void FamilyGrouper::add(PolyFingerprint fp, std::string graph6) {
  const std::pair<int, EdgeCount> key{fp.n(), fp.m()};
  if (!shard_) {
    shard_ = key;
  } else if (*shard_ != key) {
    throw Error(ErrorCode::ShardViolation,
                "record for n=" + std::to_string(key.first) + " m=" + std::to_string(key.second) +
                    " in shard n=" + std::to_string(shard_->first) + " m=" + std::to_string(shard_->second));
  }
  groups_[fp.bytes()].push_back(std::move(graph6));
  ++count_;
}

std::vector<FamilyRecord> FamilyGrouper::finish() {
  std::vector<FamilyRecord> out;
  out.reserve(groups_.size());
  for (auto& [bytes, members] : groups_) {
    std::sort(members.begin(), members.end());
    if (auto dup = std::adjacent_find(members.begin(), members.end()); dup != members.end()) {
      throw Error(ErrorCode::DuplicateMember, "graph " + *dup + " appears twice in one shard");
    }
    out.push_back({PolyFingerprint::from_bytes(bytes), std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const FamilyRecord& a, const FamilyRecord& b) { return a.fingerprint < b.fingerprint; });
  groups_.clear();
  count_ = 0;
  return out;
}

std::vector<FamilyRecord> group_families(
    std::span<const std::pair<PolyFingerprint, std::string>> records) {
  FamilyGrouper grouper;
  for (const auto& [fp, g6] : records) grouper.add(fp, g6);
  return grouper.finish();
}

ShardStats shard_stats(std::span<const FamilyRecord> families) {
  ShardStats s;
  if (!families.empty()) {
    s.n = families.front().fingerprint.n();
    s.m = families.front().fingerprint.m();
  }
  for (const FamilyRecord& f : families) {
    if (f.fingerprint.n() != s.n || f.fingerprint.m() != s.m) {
      throw Error(ErrorCode::ShardViolation, "families from more than one shard");
    }
    const std::uint64_t size = f.members.size();
    s.graphs += size;
    s.distinct_polys += 1;
    s.max_family = std::max(s.max_family, size);
    if (size >= 2) {
      s.with_mate += size;
      s.mate_families += 1;
    }
  }
  return s;
}

ShardStats aggregate(std::span<const ShardStats> shards) {
  ShardStats total;
  if (!shards.empty()) total.n = shards.front().n;
  std::set<EdgeCount> seen;
  for (const ShardStats& s : shards) {
    if (s.n != total.n) throw Error(ErrorCode::MixedN, "aggregating shards with different n");
    if (s.m && !seen.insert(*s.m).second) {
      throw Error(ErrorCode::ShardViolation, "two shards for m=" + std::to_string(*s.m));
    }
    total.graphs += s.graphs;
    total.distinct_polys += s.distinct_polys;
    total.with_mate += s.with_mate;
    total.mate_families += s.mate_families;
    total.max_family = std::max(total.max_family, s.max_family);
  }
  return total;
}

std::string format_fraction(std::uint64_t with_mate, std::uint64_t graphs) {
  if (with_mate == 0 || graphs == 0) return "0";
  constexpr std::uint64_t kScale = 100000;
  const std::uint64_t scaled = (2 * with_mate * kScale + graphs) / (2 * graphs);
  std::string frac = std::to_string(scaled % kScale);
  frac.insert(0, 5 - frac.size(), '0');
  return std::to_string(scaled / kScale) + "." + frac;
}

}  // namespace coperm
