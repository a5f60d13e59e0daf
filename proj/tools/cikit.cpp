// cikit: chaotic-iteration toolkit command line.
//
// Exit codes: 0 success; 1 domain failure (a verifier check fails, a
// function lacks a required chaos certificate, a stream frame is malformed);
// 2 usage or input-format errors (bad flags, missing files, malformed truth
// tables or hex).

#include <CLI11.hpp>

#include <clocale>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cikit/avalanche.hpp"
#include "cikit/enumerate.hpp"
#include "cikit/iterate.hpp"
#include "cikit/iteration_graph.hpp"
#include "cikit/keyed_hash.hpp"
#include "cikit/metric.hpp"
#include "cikit/truth_table.hpp"
#include "cikit/verify.hpp"

namespace {

// Invocation-level problems (exit 2) as opposed to domain failures (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> parse_hex_bytes(const std::string& hex, const std::string& what) {
  if (hex.size() % 2 != 0)
    throw UsageError(what + ": hex string must have an even number of digits");
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw UsageError(what + ": invalid hex digit '" + std::string(1, c) + "'");
  };
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string& s = buf.str();
  return {s.begin(), s.end()};
}

cikit::UpdateFunction load_update(const std::string& ref) {
  if (ref.rfind("neg:", 0) == 0) {
    try {
      return cikit::make_negation(std::stoi(ref.substr(4)));
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad negation arity: ") + e.what());
    }
  }
  std::ifstream in(ref, std::ios::binary);
  if (!in) throw UsageError("cannot open truth table file: " + ref);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return cikit::parse_truth_table(buf.str());
  } catch (const cikit::TruthTableError& e) {
    throw UsageError(ref + ": " + e.what());
  }
}

// Strategy syntax: comma-separated terms. Plain integers form a unary
// strategy ("1,2,1"); '+'-joined indices or '-' (empty set) form a subset
// strategy ("1+3,-,2").
cikit::Strategy parse_strategy(int n_cells, const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) items.push_back(item);
  if (items.empty()) throw UsageError("strategy: no terms given");

  bool subset = false;
  for (const auto& it : items)
    if (it == "-" || it.find('+') != std::string::npos) subset = true;

  try {
    std::vector<cikit::StrategyTerm> terms;
    for (const auto& it : items) {
      if (!subset) {
        terms.push_back(cikit::StrategyTerm::unary(std::stoi(it)));
        continue;
      }
      cikit::StateVector mask(n_cells);
      if (it != "-") {
        std::istringstream parts(it);
        std::string part;
        while (std::getline(parts, part, '+')) mask.set(std::stoi(part), true);
      }
      terms.push_back(cikit::StrategyTerm::subset(std::move(mask)));
    }
    return cikit::Strategy(n_cells, std::move(terms),
                           subset ? cikit::TermKind::subset : cikit::TermKind::unary);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("strategy: ") + e.what());
  }
}

struct HashArgs {
  std::string k1_hex, k2_hex;
  std::uint64_t rounds = 256;
  std::string path;
};

int run_hash(const HashArgs& args) {
  const cikit::HmacSha256 inner;
  const cikit::HashKey key{parse_hex_bytes(args.k1_hex, "--k1"),
                           parse_hex_bytes(args.k2_hex, "--k2"), args.rounds};
  const auto message = read_file_bytes(args.path);
  std::cout << cikit::chaotic_hash(inner, key, message).to_hex() << '\n';
  return 0;
}

struct StreamArgs {
  std::string k1_hex, k2_hex;
  int frame_bits = 256;
  std::string framing = "fixed";
  std::string path;
};

int run_stream_hash(const StreamArgs& args) {
  if (args.frame_bits % 8 != 0 || args.frame_bits < 8 || args.frame_bits > 256)
    throw UsageError("--frame-bits must be a multiple of 8 in [8, 256]");
  const cikit::HmacSha256 inner(args.frame_bits);
  const cikit::HashKey key{parse_hex_bytes(args.k1_hex, "--k1"),
                           parse_hex_bytes(args.k2_hex, "--k2"), 0};

  std::ifstream file;
  std::istream* in = &std::cin;
  if (args.path != "-") {
    file.open(args.path, std::ios::binary);
    if (!file) throw UsageError("cannot open file: " + args.path);
    in = &file;
  }

  const std::size_t frame_bytes = static_cast<std::size_t>(args.frame_bits) / 8;
  cikit::StreamHashSession session(inner, key);
  std::vector<char> buffer;
  std::size_t frame_index = 0;

  for (;;) {
    if (args.framing == "length-prefixed") {
      std::uint8_t len[4];
      in->read(reinterpret_cast<char*>(len), 4);
      if (in->gcount() == 0 && in->eof()) break;
      if (in->gcount() != 4)
        throw DomainError("frame " + std::to_string(frame_index) + ": truncated length prefix");
      const std::uint32_t declared = (std::uint32_t{len[0]} << 24) |
                                     (std::uint32_t{len[1]} << 16) |
                                     (std::uint32_t{len[2]} << 8) | len[3];
      if (declared != frame_bytes)
        throw DomainError("frame " + std::to_string(frame_index) + ": length " +
                          std::to_string(declared) + " does not match frame size " +
                          std::to_string(frame_bytes));
    }
    buffer.resize(frame_bytes);
    in->read(buffer.data(), static_cast<std::streamsize>(frame_bytes));
    const auto got = static_cast<std::size_t>(in->gcount());
    if (got == 0 && in->eof() && args.framing == "fixed") break;
    if (got != frame_bytes)
      throw DomainError("frame " + std::to_string(frame_index) + ": frame-size mismatch (got " +
                        std::to_string(got) + " of " + std::to_string(frame_bytes) + " bytes)");
    const auto& digest = session.push_frame(
        {reinterpret_cast<const std::uint8_t*>(buffer.data()), buffer.size()});
    std::cout << digest.to_hex() << '\n' << std::flush;
    ++frame_index;
  }
  if (frame_index == 0) throw DomainError("empty stream: no frames to hash");
  return 0;
}

int run_analyze(const std::string& table_path, bool require_chaotic) {
  const auto f = load_update(table_path);
  const auto graph = cikit::build_gamma(f);
  const auto sccs = cikit::count_sccs(graph);
  const bool chaotic = sccs == 1;
  std::cout << "chaotic=" << (chaotic ? "true" : "false") << " scc=" << sccs
            << " vertices=" << graph.vertex_count() << " arcs=" << graph.arc_count() << '\n';
  if (require_chaotic && !chaotic)
    throw DomainError("update function is not chaotic (iteration graph has " +
                      std::to_string(sccs) + " components)");
  return 0;
}

int run_enumerate(int n, unsigned threads) {
  std::function<void(std::uint64_t, std::uint64_t)> progress;
  if (n >= 3)
    progress = [](std::uint64_t done, std::uint64_t total) {
      std::fprintf(stderr, "progress done=%llu total=%llu\n",
                   static_cast<unsigned long long>(done),
                   static_cast<unsigned long long>(total));
    };
  const auto count = cikit::enumerate_chaotic(n, threads, progress);
  std::cout << "N=" << count.arity << " total=" << count.total << " chaotic=" << count.chaotic
            << '\n';
  return 0;
}

struct TrajectoryArgs {
  std::string function;
  std::string x0_hex;
  std::string strategy;
  std::uint64_t steps = 0;
};

int run_trajectory(const TrajectoryArgs& args) {
  const auto f = load_update(args.function);
  cikit::StateVector x0(f.arity());
  try {
    x0 = cikit::StateVector::from_hex(f.arity(), args.x0_hex);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--x0: ") + e.what());
  }
  const auto strategy = parse_strategy(f.arity(), args.strategy);
  try {
    const auto states = cikit::trajectory(f, x0, strategy, args.steps);
    std::cout << "step,state\n";
    for (std::size_t t = 0; t < states.size(); ++t)
      std::cout << t << ',' << states[t].to_hex() << '\n';
  } catch (const cikit::StrategyExhausted& e) {
    throw UsageError("--steps exceeds the strategy: " + std::string(e.what()));
  }
  return 0;
}

struct DistanceArgs {
  int n_cells = 0;
  std::string x_hex, y_hex;
  std::string s_terms, t_terms;
  int precision = cikit::kDefaultPrecision;
};

int run_distance(const DistanceArgs& args) {
  try {
    const cikit::SystemPoint x(parse_strategy(args.n_cells, args.s_terms),
                               cikit::StateVector::from_hex(args.n_cells, args.x_hex));
    const cikit::SystemPoint y(parse_strategy(args.n_cells, args.t_terms),
                               cikit::StateVector::from_hex(args.n_cells, args.y_hex));
    const auto d = cikit::distance(x, y, args.precision);
    std::cout << "n=" << d.n_cells << " precision=" << d.precision
              << " integer=" << d.integer_part << " numerator=" << d.frac_numerator
              << " denominator=" << d.denominator() << '\n';
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return 0;
}

struct AvalancheArgs {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string k1_hex = "00112233445566778899aabbccddeeff";
  std::string k2_hex = "ffeeddccbbaa99887766554433221100";
  std::uint64_t rounds = 256;
  std::size_t message_bytes = 32;
};

int run_avalanche(const AvalancheArgs& args) {
  const cikit::HmacSha256 inner;
  const cikit::HashKey key{parse_hex_bytes(args.k1_hex, "--k1"),
                           parse_hex_bytes(args.k2_hex, "--k2"), args.rounds};
  const auto stats =
      cikit::avalanche_stats(inner, key, args.trials, args.seed, args.message_bytes);
  char line[256];
  std::snprintf(line, sizeof line,
                "trials=%llu mean=%.6f stddev=%.6f min_rate=%.6f max_rate=%.6f",
                static_cast<unsigned long long>(stats.trials), stats.mean_distance,
                stats.stddev_distance, stats.min_flip_rate, stats.max_flip_rate);
  std::cout << line << '\n';
  return 0;
}

int run_verify(std::uint64_t seed) {
  std::vector<cikit::CheckReport> reports;
  reports.push_back(cikit::check_metric_laws(10000, 16, 16, seed));
  reports.push_back(cikit::check_metric_exhaustive());
  reports.push_back(cikit::check_continuity_all_n2(25, 4, seed + 1));
  reports.push_back(cikit::check_continuity_sampled_n3(1000, 25, 4, seed + 2));
  reports.push_back(cikit::check_sensitivity_f0(4, 100, 3, cikit::default_search_horizon(4),
                                                seed + 3));
  reports.push_back(cikit::check_expansiveness_f0(2, 3, 6));
  reports.push_back(cikit::check_expansiveness_f0(3, 3, 8));
  reports.push_back(cikit::check_entropy_growth(2, 8, 0.05));
  reports.push_back(cikit::check_entropy_growth(3, 8, 0.05));

  bool all_pass = true;
  for (const auto& report : reports) {
    std::cout << report.to_line() << '\n';
    all_pass = all_pass && report.pass;
  }
  if (!all_pass) throw DomainError("one or more checks failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C");
  CLI::App app{"chaotic-iteration toolkit: keyed hashing, chaos certification, and verifiers"};
  app.require_subcommand(1);

  HashArgs hash_args;
  auto* hash = app.add_subcommand("hash", "hash a file with the chaotic post-treatment");
  hash->add_option("--k1", hash_args.k1_hex, "inner-hash key (hex)")->required();
  hash->add_option("--k2", hash_args.k2_hex, "strategy seed (hex)")->required();
  hash->add_option("--rounds", hash_args.rounds, "post-treatment rounds (default 256)");
  hash->add_option("file", hash_args.path, "input file")->required();

  StreamArgs stream_args;
  auto* stream = app.add_subcommand("stream-hash", "running digest of an n-bit frame stream");
  stream->add_option("--k1", stream_args.k1_hex, "inner-hash key (hex)")->required();
  stream->add_option("--k2", stream_args.k2_hex, "strategy seed (hex)")->required();
  stream->add_option("--frame-bits", stream_args.frame_bits, "frame width (default 256)");
  stream->add_option("--framing", stream_args.framing, "fixed | length-prefixed")
      ->check(CLI::IsMember({"fixed", "length-prefixed"}));
  stream->add_option("file", stream_args.path, "input file, or - for stdin")->required();

  std::string analyze_path;
  bool require_chaotic = false;
  auto* analyze = app.add_subcommand("analyze", "chaos certificate of a truth table");
  analyze->add_option("table", analyze_path, "truth table file")->required();
  analyze->add_flag("--require-chaotic", require_chaotic,
                    "exit 1 unless the function is chaotic");

  int enum_n = 1;
  unsigned enum_threads = 0;
  auto* enumerate = app.add_subcommand("enumerate", "count chaotic update functions");
  enumerate->add_option("--n", enum_n, "arity (1..3)")->required()->check(CLI::Range(1, 3));
  enumerate->add_option("--threads", enum_threads, "worker threads (default: all cores)");

  TrajectoryArgs traj_args;
  auto* trajectory = app.add_subcommand("trajectory", "iterate a state under a strategy");
  trajectory->add_option("--f", traj_args.function, "truth table file or neg:<N>")->required();
  trajectory->add_option("--x0", traj_args.x0_hex, "initial state (hex)")->required();
  trajectory->add_option("--strategy", traj_args.strategy,
                         "terms: \"1,2,1\" (unary) or \"1+3,-,2\" (subsets)")
      ->required();
  trajectory->add_option("--steps", traj_args.steps, "number of steps")->required();

  DistanceArgs dist_args;
  auto* dist = app.add_subcommand("distance", "exact distance between two system points");
  dist->add_option("--n", dist_args.n_cells, "cell count")->required();
  dist->add_option("--x", dist_args.x_hex, "first state (hex)")->required();
  dist->add_option("--y", dist_args.y_hex, "second state (hex)")->required();
  dist->add_option("--s", dist_args.s_terms, "first unary strategy (csv)")->required();
  dist->add_option("--t", dist_args.t_terms, "second unary strategy (csv)")->required();
  dist->add_option("--precision", dist_args.precision, "strategy terms compared (default 16)");

  AvalancheArgs av_args;
  auto* avalanche = app.add_subcommand("avalanche", "single-bit avalanche statistics");
  avalanche->add_option("--trials", av_args.trials, "trials (default 1000)");
  avalanche->add_option("--seed", av_args.seed, "reproducibility seed (default 1)");
  avalanche->add_option("--k1", av_args.k1_hex, "inner-hash key (hex)");
  avalanche->add_option("--k2", av_args.k2_hex, "strategy seed (hex)");
  avalanche->add_option("--rounds", av_args.rounds, "post-treatment rounds (default 256)");
  avalanche->add_option("--message-bytes", av_args.message_bytes, "message length (default 32)");

  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "run the metric-module verifier checks");
  verify->add_option("--seed", verify_seed, "reproducibility seed (default 1)");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(hash)) return run_hash(hash_args);
    if (app.got_subcommand(stream)) return run_stream_hash(stream_args);
    if (app.got_subcommand(analyze)) return run_analyze(analyze_path, require_chaotic);
    if (app.got_subcommand(enumerate)) return run_enumerate(enum_n, enum_threads);
    if (app.got_subcommand(trajectory)) return run_trajectory(traj_args);
    if (app.got_subcommand(dist)) return run_distance(dist_args);
    if (app.got_subcommand(avalanche)) return run_avalanche(av_args);
    if (app.got_subcommand(verify)) return run_verify(verify_seed);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
