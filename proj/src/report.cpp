#include "coperm/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <ostream>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "coperm/canonical.hpp"
#include "coperm/charpoly.hpp"
#include "coperm/enumerate.hpp"
#include "coperm/error.hpp"
#include "coperm/permanent.hpp"
#include "coperm/runfile.hpp"

namespace coperm {

namespace {

struct Unit {
  int n = 0;
  EdgeCount m = 0;
  const std::vector<Graph>* graphs = nullptr;  // ingest mode; builtin otherwise
};

using ShardKey = std::pair<int, EdgeCount>;

std::map<ShardKey, std::vector<Graph>> bucket_input(const RunConfig& config) {
  std::map<ShardKey, std::vector<Graph>> buckets;
  std::map<ShardKey, std::unordered_set<Graph, GraphHash>> seen;
  GraphStream::ingest(*config.input).for_each([&](const Graph& g) {
    if (g.order() < config.n_min || g.order() > config.n_max) return;
    const ShardKey key{g.order(), edge_count(g)};
    if (config.edges && key.second != *config.edges) return;
    if (config.dedup && !seen[key].insert(canonical_form(g)).second) return;
    buckets[key].push_back(g);
  });
  return buckets;
}

void for_each_graph(const Unit& unit, const std::function<void(const Graph&)>& visit) {
  if (unit.graphs) {
    for (const Graph& g : *unit.graphs) visit(g);
  } else {
    enumerate_by_edges(unit.n, unit.m).for_each(visit);
  }
}

bool wants_perm(PolyKind k) { return k != PolyKind::Char; }
bool wants_char(PolyKind k) { return k != PolyKind::Perm; }

ShardResult process_shard(const Unit& unit, const RunConfig& config, bool keep_families) {
  ShardResult result;
  result.n = unit.n;
  result.m = unit.m;
  const bool perm = wants_perm(config.kind);
  const bool chr = wants_char(config.kind);
  const bool both = perm && chr;

  FamilyGrouper perm_groups;
  FamilyGrouper char_groups;
  std::unordered_map<std::string, std::string> perm_of;
  for_each_graph(unit, [&](const Graph& g) {
    std::string g6 = to_graph6(g);
    if (perm) {
      PolyFingerprint fp = fingerprint(perm_poly(g, config.arith), unit.n, unit.m);
      if (both) perm_of.emplace(g6, fp.bytes());
      perm_groups.add(std::move(fp), g6);
    }
    if (chr) char_groups.add(fingerprint(char_poly(g, config.arith), unit.n, unit.m), g6);
  });

  if (perm) {
    std::vector<FamilyRecord> families = perm_groups.finish();
    result.perm = shard_stats(families);
    result.perm->n = unit.n;
    result.perm->m = unit.m;
    if (keep_families) result.perm_families = std::move(families);
  }
  if (chr) {
    std::vector<FamilyRecord> families = char_groups.finish();
    result.chr = shard_stats(families);
    result.chr->n = unit.n;
    result.chr->m = unit.m;
    if (both) {
      for (const FamilyRecord& f : families) {
        if (f.members.size() < 2) continue;
        std::set<std::string> classes;
        for (const std::string& g6 : f.members) classes.insert(perm_of.at(g6));
        if (classes.size() > 1) result.split.push_back({f, classes.size()});
      }
    }
    if (keep_families) result.char_families = std::move(families);
  }
  return result;
}

std::string shard_name(const Unit& u) {
  return "shard n=" + std::to_string(u.n) + " m=" + std::to_string(u.m);
}

void write_stats_row(std::ostream& out, const ShardStats& s, bool per_edge) {
  out << s.n << '\t';
  if (per_edge) out << s.m.value_or(0) << '\t';
  out << s.graphs << '\t' << s.distinct_polys << '\t' << s.with_mate << '\t';
  if (!per_edge) out << format_fraction(s.with_mate, s.graphs) << '\t';
  out << s.max_family << '\n';
}

std::string join_members(const std::vector<std::string>& members) {
  std::string out;
  for (const std::string& m : members) {
    if (!out.empty()) out += ',';
    out += m;
  }
  return out;
}

}  // namespace

PolyKind parse_kind(std::string_view text) {
  if (text == "perm") return PolyKind::Perm;
  if (text == "char") return PolyKind::Char;
  if (text == "both") return PolyKind::Both;
  throw Error(ErrorCode::InvalidArgument, "unknown kind '" + std::string(text) + "'");
}

ShardStats OrderResult::total(PolyKind kind) const {
  std::vector<ShardStats> parts;
  for (const ShardResult& s : shards) {
    const auto& stats = kind == PolyKind::Char ? s.chr : s.perm;
    if (stats) parts.push_back(*stats);
  }
  ShardStats t = aggregate(parts);
  t.n = n;
  return t;
}

std::vector<OrderResult> run_pipeline(const RunConfig& config, bool keep_families) {
  if (config.n_min > config.n_max) throw Error(ErrorCode::InvalidArgument, "empty n range");

  std::map<ShardKey, std::vector<Graph>> buckets;
  std::vector<Unit> units;
  if (config.input) {
    buckets = bucket_input(config);
    for (const auto& [key, graphs] : buckets) units.push_back({key.first, key.second, &graphs});
  } else {
    for (int n = config.n_min; n <= config.n_max; ++n) {
      // Validates n and m before any work is scheduled.
      GraphStream::builtin(n, config.edges);
      if (config.edges) {
        units.push_back({n, *config.edges, nullptr});
      } else {
        for (EdgeCount m = 0; m <= max_edges(n); ++m) units.push_back({n, m, nullptr});
      }
    }
  }

  std::vector<ShardResult> results(units.size());
  std::vector<std::exception_ptr> errors(units.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= units.size() || failed.load()) return;
      try {
        results[i] = process_shard(units[i], config, keep_families);
      } catch (...) {
        errors[i] = std::current_exception();
        failed.store(true);
      }
    }
  };
  {
    const unsigned workers = std::max(1u, std::min<unsigned>(config.workers, units.size()));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.code(), shard_name(units[i]) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::Internal, shard_name(units[i]) + ": " + e.what());
    }
  }

  std::vector<OrderResult> out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (out.empty() || out.back().n != units[i].n) out.push_back({units[i].n, {}});
    out.back().shards.push_back(std::move(results[i]));
  }
  if (!config.input) {
    // Every requested order gets a row even when it has no shards.
    for (int n = config.n_min; n <= config.n_max; ++n) {
      if (std::none_of(out.begin(), out.end(), [n](const OrderResult& r) { return r.n == n; })) {
        out.push_back({n, {}});
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  }
  return out;
}

void cmd_table(const RunConfig& config, std::ostream& out) {
  if (config.kind == PolyKind::Both) {
    throw Error(ErrorCode::InvalidArgument, "table takes --kind perm or char; use compare for both");
  }
  const auto orders = run_pipeline(config, false);
  if (config.per_edge) {
    out << "n\tm\tgraphs\tpolys\twith_mate\tmax_family\n";
    for (const OrderResult& r : orders) {
      for (const ShardResult& s : r.shards) {
        write_stats_row(out, config.kind == PolyKind::Char ? *s.chr : *s.perm, true);
      }
    }
  } else {
    out << "n\tgraphs\tpolys\twith_mate\tfraction\tmax_family\n";
    for (const OrderResult& r : orders) write_stats_row(out, r.total(config.kind), false);
  }
}

void cmd_mates(const RunConfig& config, std::ostream& out) {
  if (config.kind == PolyKind::Both) {
    throw Error(ErrorCode::InvalidArgument, "mates takes --kind perm or char");
  }
  const auto orders = run_pipeline(config, true);
  out << "n\tm\tsize\tpolynomial\tmembers\n";
  for (const OrderResult& r : orders) {
    for (const ShardResult& s : r.shards) {
      const auto& families = config.kind == PolyKind::Char ? s.char_families : s.perm_families;
      for (const FamilyRecord& f : families) {
        if (f.members.size() < 2) continue;
        out << s.n << '\t' << s.m << '\t' << f.members.size() << '\t' << to_string(f.fingerprint.polynomial())
            << '\t' << join_members(f.members) << '\n';
      }
    }
  }
}

void cmd_compare(const RunConfig& config, std::ostream& out) {
  RunConfig both = config;
  both.kind = PolyKind::Both;
  const auto orders = run_pipeline(both, false);
  out << "n\tgraphs\tchar_polys\tchar_with_mate\tchar_fraction\tchar_max_family"
         "\tperm_polys\tperm_with_mate\tperm_fraction\tperm_max_family\n";
  for (const OrderResult& r : orders) {
    const ShardStats c = r.total(PolyKind::Char);
    const ShardStats p = r.total(PolyKind::Perm);
    out << r.n << '\t' << c.graphs << '\t' << c.distinct_polys << '\t' << c.with_mate << '\t'
        << format_fraction(c.with_mate, c.graphs) << '\t' << c.max_family << '\t' << p.distinct_polys << '\t'
        << p.with_mate << '\t' << format_fraction(p.with_mate, p.graphs) << '\t' << p.max_family << '\n';
  }
  out << "# cospectral families not sharing a permanental polynomial\n";
  out << "n\tm\tsize\tperm_classes\tchar_polynomial\tmembers\n";
  for (const OrderResult& r : orders) {
    for (const ShardResult& s : r.shards) {
      for (const SplitFamily& f : s.split) {
        out << s.n << '\t' << s.m << '\t' << f.cospectral.members.size() << '\t' << f.perm_classes << '\t'
            << to_string(f.cospectral.fingerprint.polynomial()) << '\t' << join_members(f.cospectral.members)
            << '\n';
      }
    }
  }
}

void cmd_poly(std::string_view graph6, PolyKind kind, ArithMode arith, std::ostream& out) {
  Graph g;
  try {
    g = parse_graph6(graph6);
  } catch (const Error& e) {
    throw Error(ErrorCode::Decode, e.what());
  }
  auto emit = [&](const char* name, const IntPoly& p) {
    out << name << '\t' << to_string(p) << '\t' << coefficient_string(p) << '\n';
  };
  if (wants_perm(kind)) emit("perm", perm_poly(g, arith));
  if (wants_char(kind)) emit("char", char_poly(g, arith));
}

std::vector<std::filesystem::path> cmd_fingerprint(const RunConfig& config, const std::filesystem::path& out,
                                                   unsigned runs) {
  if (config.kind == PolyKind::Both) {
    throw Error(ErrorCode::InvalidArgument, "fingerprint takes --kind perm or char");
  }
  if (runs == 0) throw Error(ErrorCode::InvalidArgument, "--runs must be positive");
  const auto orders = run_pipeline(config, true);
  std::vector<const ShardResult*> shards;
  for (const OrderResult& r : orders)
    for (const ShardResult& s : r.shards) shards.push_back(&s);
  if (shards.size() != 1) {
    throw Error(ErrorCode::ShardViolation, "fingerprint needs exactly one (n, m) shard, selected " +
                                               std::to_string(shards.size()));
  }
  const ShardResult& shard = *shards.front();
  const auto& families = config.kind == PolyKind::Char ? shard.char_families : shard.perm_families;

  std::vector<std::vector<RunRecord>> split(runs);
  std::size_t i = 0;
  for (const FamilyRecord& f : families)
    for (const std::string& g6 : f.members) split[i++ % runs].push_back({f.fingerprint, g6});

  std::vector<std::filesystem::path> paths;
  for (unsigned r = 0; r < runs; ++r) {
    std::filesystem::path p = out;
    if (runs > 1) p += "." + std::to_string(r);
    persist_fingerprints(shard.n, shard.m, std::move(split[r]), p);
    paths.push_back(p);
  }
  return paths;
}

void cmd_merge(const std::vector<std::filesystem::path>& runs, std::ostream& out) {
  const std::vector<FamilyRecord> families = merge_sorted_runs(runs);
  out << "n\tm\tsize\tpolynomial\tmembers\n";
  for (const FamilyRecord& f : families) {
    out << f.fingerprint.n() << '\t' << f.fingerprint.m() << '\t' << f.members.size() << '\t'
        << to_string(f.fingerprint.polynomial()) << '\t' << join_members(f.members) << '\n';
  }
  if (!families.empty()) {
    out << "# n\tm\tgraphs\tpolys\twith_mate\tmax_family\n";
    write_stats_row(out, shard_stats(families), true);
  }
}

}  // namespace coperm
