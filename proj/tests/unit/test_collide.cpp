#include <doctest.h>

#include <algorithm>
#include <random>

#include "coperm/collide.hpp"
#include "coperm/enumerate.hpp"
#include "coperm/error.hpp"
#include "coperm/permanent.hpp"

using namespace coperm;

namespace {

using Record = std::pair<PolyFingerprint, std::string>;

std::vector<Record> shard_records(int n, EdgeCount m) {
  std::vector<Record> out;
  enumerate_by_edges(n, m).for_each(
      [&](const Graph& g) { out.emplace_back(fingerprint(perm_poly(g), n, m), to_graph6(g)); });
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("fingerprint byte layout") {
  // x^3 + 3x - 2 with m = 3.
  const PolyFingerprint k3 = fingerprint(perm_poly(Graph::complete(3)), 3, 3);
  CHECK(k3.bytes() == std::string("\x03\x03\x00\x00\x01\x03\x01\x01\x02", 9));
  // x^3 + 2x: the zero constant term has an empty magnitude.
  const PolyFingerprint p3 = fingerprint(perm_poly(Graph::path(3)), 3, 2);
  CHECK(p3.bytes() == std::string("\x03\x02\x00\x00\x01\x02\x00\x00", 8));
  // Orders 0 and 1 carry no coefficients.
  CHECK(fingerprint(perm_poly(Graph(0)), 0, 0).bytes() == std::string("\x00\x00\x00", 3));
  CHECK(fingerprint(perm_poly(Graph(1)), 1, 0).bytes() == std::string("\x01\x00\x00", 3));
  // Two-byte magnitudes and m above 255 are little-endian.
  IntPoly wide{{Int{-300}, 0, Int{300}, 0, 1}};
  CHECK(fingerprint(wide, 4, 300).bytes() ==
        std::string("\x04\x2c\x01\x00\x02\x2c\x01\x00\x00\x01\x02\x2c\x01", 13));
}

TEST_CASE("fingerprint determinism and injectivity") {
  const PolyFingerprint a = fingerprint(perm_poly(Graph::complete(2)), 2, 1);
  const PolyFingerprint b = fingerprint(IntPoly{{1, 0, 1}}, 2, 1);
  CHECK(a == b);
  CHECK(fingerprint(perm_poly(Graph::path(3)), 3, 2) != fingerprint(perm_poly(Graph::complete(3)), 3, 3));
  CHECK(a.n() == 2);
  CHECK(a.m() == 1);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    IntPoly p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[n] = 1;
    const EdgeCount m = static_cast<EdgeCount>(rng() % 40);
    p.coeffs[n - 2] = m;
    for (int j = 0; j < n - 2; ++j) p.coeffs[j] = static_cast<Int>(static_cast<std::int64_t>(rng() % 2000001) - 1000000);
    const PolyFingerprint fp = fingerprint(p, n, m);
    CHECK(fp.polynomial() == p);
    CHECK(PolyFingerprint::from_bytes(fp.bytes()) == fp);
    CHECK(PolyFingerprint::encoded_size(fp.bytes() + "tail") == fp.bytes().size());
  }
}

TEST_CASE("shards differ in the key prefix") {
  const PolyFingerprint a = fingerprint(perm_poly(Graph::path(4)), 4, 3);
  const PolyFingerprint b = fingerprint(perm_poly(Graph::cycle(4)), 4, 4);
  CHECK(a.bytes().substr(0, 3) != b.bytes().substr(0, 3));
}

TEST_CASE("fingerprint errors") {
  CHECK(code_of([] { fingerprint(IntPoly{{1, 0, 1}}, 3, 1); }) == ErrorCode::DegreeMismatch);
  CHECK(code_of([] { fingerprint(IntPoly{{1, 0, 2}}, 2, 1); }) == ErrorCode::DegreeMismatch);
  CHECK(code_of([] { fingerprint(IntPoly{{1, 1, 1}}, 2, 1); }) == ErrorCode::DegreeMismatch);
  CHECK(code_of([] { fingerprint(IntPoly{{0, 2, 0, 1}}, 3, 1); }) == ErrorCode::EdgeCountMismatch);
  // The characteristic sign convention is accepted.
  CHECK_NOTHROW(fingerprint(IntPoly{{0, -2, 0, 1}}, 3, 2));
  CHECK(code_of([] { PolyFingerprint::from_bytes(std::string("\x03\x02\x00\x00\x01", 5)); }) ==
        ErrorCode::BadRunFile);
}

TEST_CASE("grouping the n = 6 shards") {
  const auto m4 = group_families(shard_records(6, 4));
  CHECK(m4.size() == 7);
  CHECK(std::count_if(m4.begin(), m4.end(), [](const auto& f) { return f.members.size() == 2; }) == 2);
  const auto m7 = group_families(shard_records(6, 7));
  CHECK(m7.size() == 23);
  CHECK(std::count_if(m7.begin(), m7.end(), [](const auto& f) { return f.members.size() == 2; }) == 1);

  const std::vector<Record> single{{fingerprint(perm_poly(Graph::path(3)), 3, 2), "Bg"}};
  const auto one = group_families(single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].members == std::vector<std::string>{"Bg"});
}

TEST_CASE("grouping is order insensitive") {
  auto records = shard_records(7, 6);
  const auto reference = group_families(records);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(records.begin(), records.end(), rng);
    CHECK(group_families(records) == reference);
  }
  for (const FamilyRecord& f : reference) CHECK(std::is_sorted(f.members.begin(), f.members.end()));
}

TEST_CASE("grouping errors") {
  std::vector<Record> mixed = shard_records(5, 3);
  mixed.emplace_back(fingerprint(perm_poly(Graph::path(3)), 3, 2), "Bg");
  CHECK(code_of([&] { group_families(mixed); }) == ErrorCode::ShardViolation);

  std::vector<Record> dup = shard_records(5, 3);
  dup.push_back(dup.front());
  CHECK(code_of([&] { group_families(dup); }) == ErrorCode::DuplicateMember);
}

TEST_CASE("shard statistics") {
  const auto s87 = shard_stats(group_families(shard_records(8, 7)));
  CHECK(s87.graphs == 115);
  CHECK(s87.distinct_polys == 102);
  CHECK(s87.with_mate == 23);
  CHECK(s87.max_family == 4);
  CHECK(s87.with_mate == s87.graphs - s87.distinct_polys + s87.mate_families);

  const auto s98 = shard_stats(group_families(shard_records(9, 8)));
  CHECK(s98.graphs == 345);
  CHECK(s98.distinct_polys == 293);
  CHECK(s98.with_mate == 88);
  CHECK(s98.max_family == 5);

  const PolyFingerprint fp = fingerprint(IntPoly{{0, 0, 2, 0, 1}}, 4, 2);
  const std::vector<FamilyRecord> triple{{fp, {"a", "b", "c"}}};
  const ShardStats t = shard_stats(triple);
  CHECK(t.graphs == 3);
  CHECK(t.distinct_polys == 1);
  CHECK(t.with_mate == 3);
  CHECK(t.max_family == 3);
}

TEST_CASE("aggregation over edge shards") {
  std::vector<ShardStats> shards;
  for (EdgeCount m = 0; m <= max_edges(6); ++m) shards.push_back(shard_stats(group_families(shard_records(6, m))));
  const ShardStats total = aggregate(shards);
  CHECK(total.graphs == 156);
  CHECK(total.distinct_polys == 153);
  CHECK(total.with_mate == 6);
  CHECK(total.max_family == 2);
  CHECK_FALSE(total.m.has_value());

  shards.push_back(shards.front());
  CHECK(code_of([&] { aggregate(shards); }) == ErrorCode::ShardViolation);
  shards.pop_back();
  ShardStats other;
  other.n = 5;
  other.m = 0;
  shards.push_back(other);
  CHECK(code_of([&] { aggregate(shards); }) == ErrorCode::MixedN);
}

TEST_CASE("fraction formatting") {
  CHECK(format_fraction(6, 156) == "0.03846");
  CHECK(format_fraction(17, 1044) == "0.01628");
  CHECK(format_fraction(188, 12346) == "0.01523");
  CHECK(format_fraction(980, 274668) == "0.00357");
  CHECK(format_fraction(0, 34) == "0");
  CHECK(format_fraction(1, 200000) == "0.00001");  // exact half rounds up
  CHECK(format_fraction(1, 200001) == "0.00000");
  CHECK(format_fraction(3, 3) == "1.00000");
}
