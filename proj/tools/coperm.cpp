#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "coperm/enumerate.hpp"
#include "coperm/error.hpp"
#include "coperm/report.hpp"

namespace {

using coperm::Error;
using coperm::ErrorCode;

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

// "7" or "0-8".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dash = text.find('-', 1);
  if (dash == std::string::npos) {
    const int n = parse_int(text, "--n");
    return {n, n};
  }
  return {parse_int(std::string_view(text).substr(0, dash), "--n"),
          parse_int(std::string_view(text).substr(dash + 1), "--n")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permanental and characteristic polynomial census of small graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string n_text;
  std::optional<int> edges;
  std::string kind_text = "perm";
  std::string input;
  std::string output;
  unsigned workers = 1;
  bool widened = false;
  bool dedup = false;

  app.add_option("--n", n_text, "vertex count or range, e.g. 7 or 0-8");
  app.add_option("--edges", edges, "restrict to graphs with this many edges");
  app.add_option("--kind", kind_text, "perm, char or both")->check(CLI::IsMember({"perm", "char", "both"}));
  app.add_option("--in", input, "graph6 input file instead of the builtin generator");
  app.add_option("--out", output, "output path (stdout when omitted)");
  app.add_option("--workers", workers, "worker threads")->envname("COPERM_WORKERS")->check(CLI::PositiveNumber);
  app.add_flag("--widened", widened, "arbitrary-precision arithmetic instead of 128-bit");
  app.add_flag("--dedup", dedup, "canonicalize ingested graphs and drop isomorphic repeats");

  auto* enumerate = app.add_subcommand("enumerate", "write graphs as graph6");
  std::optional<std::uint64_t> expect;
  enumerate->add_option("--expect", expect, "fail unless exactly this many graphs are produced");

  auto* poly = app.add_subcommand("poly", "polynomials of one graph6 word");
  std::string graph6;
  poly->add_option("graph6", graph6, "graph6 word")->required();

  auto* table = app.add_subcommand("table", "census table, one row per n");
  bool per_edge = false;
  table->add_flag("--per-edge", per_edge, "one row per edge count");

  auto* mates = app.add_subcommand("mates", "families of size >= 2 with their polynomial");
  auto* compare = app.add_subcommand("compare", "characteristic vs permanental census");

  auto* fingerprint = app.add_subcommand("fingerprint", "write one shard's fingerprints as run files");
  unsigned runs = 1;
  fingerprint->add_option("--runs", runs, "number of run files to split the shard into");

  auto* merge = app.add_subcommand("merge", "merge sorted run files into families");
  std::vector<std::string> run_paths;
  merge->add_option("runs", run_paths, "run files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    coperm::RunConfig config;
    config.kind = coperm::parse_kind(kind_text);
    config.edges = edges;
    config.workers = workers;
    config.arith = widened ? coperm::ArithMode::Widened : coperm::ArithMode::Fixed128;
    config.dedup = dedup;
    config.per_edge = per_edge;
    if (!input.empty()) config.input = input;
    if (!n_text.empty()) {
      std::tie(config.n_min, config.n_max) = parse_range(n_text);
    } else if (config.input) {
      config.n_min = 0;
      config.n_max = coperm::Graph::kMaxVertices;
    } else if (!poly->parsed() && !merge->parsed()) {
      throw Error(ErrorCode::InvalidArgument, "--n is required with the builtin generator");
    }

    std::ofstream file;
    if (!output.empty() && !fingerprint->parsed()) {
      file.open(output);
      if (!file) throw Error(ErrorCode::Io, "cannot create " + output);
    }
    std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

    if (enumerate->parsed()) {
      if (config.n_min != config.n_max && !config.input) {
        throw Error(ErrorCode::InvalidArgument, "enumerate takes a single --n");
      }
      coperm::GraphStream stream = config.input ? coperm::ingest_graph6(*config.input)
                                                : coperm::GraphStream::builtin(config.n_min, config.edges);
      if (expect) stream.expect_count(*expect);
      coperm::write_graph6(stream, out);
    } else if (poly->parsed()) {
      coperm::cmd_poly(graph6, config.kind, config.arith, out);
    } else if (table->parsed()) {
      coperm::cmd_table(config, out);
    } else if (mates->parsed()) {
      coperm::cmd_mates(config, out);
    } else if (compare->parsed()) {
      coperm::cmd_compare(config, out);
    } else if (fingerprint->parsed()) {
      if (output.empty()) throw Error(ErrorCode::InvalidArgument, "fingerprint requires --out");
      for (const auto& p : coperm::cmd_fingerprint(config, output, runs)) std::cout << p.string() << '\n';
    } else if (merge->parsed()) {
      coperm::cmd_merge({run_paths.begin(), run_paths.end()}, out);
    }
    out.flush();
  } catch (const Error& e) {
    std::cerr << "coperm: " << e.what() << '\n';
    return coperm::exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "coperm: internal error: " << e.what() << '\n';
    return 5;
  }
  return 0;
}
