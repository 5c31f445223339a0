#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scorpion/basis.hpp"
#include "scorpion/bench.hpp"
#include "scorpion/errors.hpp"
#include "scorpion/fast_count.hpp"
#include "scorpion/generators.hpp"
#include "scorpion/graph_io.hpp"
#include "scorpion/oracle.hpp"

namespace {

using nlohmann::json;

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  long long elapsed_us() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

struct CountOptions {
  std::string file;
  std::string property;
  int ell = 1;
  int k = 0;
  std::string algo = "fast";
  long long budget = scorpion::kDefaultSubsetBudget;
  bool json_output = false;
};

struct VerifyOptions {
  std::string lemma;
  int ell = 0;
  int k = 0;
  std::uint64_t budget = scorpion::kDefaultCensusBudget;
  bool json_output = false;
};

struct GenOptions {
  std::string kind;
  int ell = 1;
  int k = 0;
  int a = 0;
  int b = 0;
  int n = 0;
  std::string p = "1/2";
  std::uint64_t seed = 0;
};

struct BenchOptions {
  int ell = 1;
  int k = 0;
  std::vector<int> sizes;
  std::string p = "1/2";
  std::uint64_t seed = 0;
  int repeats = 3;
  bool json_output = false;
};

int run_count(const CountOptions& opt) {
  std::ifstream in(opt.file);
  if (!in) {
    std::cerr << "parse error: cannot open '" << opt.file << "'\n";
    return 2;
  }

  scorpion::BigCount result;
  scorpion::BigCount budget_used = 0;
  std::string property_name;
  long long time_us = 0;

  if (opt.property == "sink") {
    const auto d = scorpion::parse_directed(in);
    const auto spec = scorpion::PropertySpec::sink();
    property_name = spec.name();
    Stopwatch watch;
    if (opt.algo == "fast") {
      result = scorpion::count_sinks_slice(d, opt.k);
    } else {
      result = scorpion::brute_count(d, opt.k, spec, opt.budget);
      budget_used = scorpion::binomial(d.vertex_count(), opt.k);
    }
    time_us = watch.elapsed_us();
  } else {
    const auto g = scorpion::parse_undirected(in);
    const auto spec = scorpion::PropertySpec::scorpion(opt.ell);
    property_name = spec.name();
    Stopwatch watch;
    if (opt.algo == "fast") {
      result = scorpion::count_scorpions(g, opt.ell, opt.k);
    } else {
      result = scorpion::brute_count(g, opt.k, spec, opt.budget);
      budget_used = scorpion::binomial(g.vertex_count(), opt.k);
    }
    time_us = watch.elapsed_us();
  }

  if (opt.json_output) {
    json record = {
        {"command", "count"},       {"file", opt.file},
        {"property", property_name}, {"k", opt.k},
        {"algo", opt.algo},          {"result", result.get_str()},
        {"time_us", time_us},        {"budget_limit", opt.budget},
        {"budget_used", budget_used.get_str()},
    };
    if (opt.property == "scorpion") record["ell"] = opt.ell;
    std::cout << record.dump() << "\n";
  } else {
    std::cout << "command: count\n"
              << "file: " << opt.file << "\n"
              << "property: " << property_name << "\n";
    if (opt.property == "scorpion") std::cout << "ell: " << opt.ell << "\n";
    std::cout << "k: " << opt.k << "\n"
              << "algo: " << opt.algo << "\n"
              << "result: " << result << "\n"
              << "time_us: " << time_us << "\n"
              << "budget_limit: " << opt.budget << "\n"
              << "budget_used: " << budget_used << "\n";
  }
  return 0;
}

int run_verify(const VerifyOptions& opt) {
  std::uint64_t census = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::string> first_counterexample;
  json details;
  std::string summary;

  Stopwatch watch;
  if (opt.lemma == "anatomy") {
    const auto report = scorpion::verify_anatomy_uniqueness(opt.ell, opt.k, opt.budget);
    census = report.census;
    counterexamples = report.counterexamples;
    first_counterexample = report.first_counterexample;
    summary = "scorpions=" + std::to_string(report.scorpions);
    details["scorpions"] = report.scorpions;
  } else if (opt.lemma == "fossil-charac") {
    const auto report = scorpion::verify_fossil_characterization(opt.ell, opt.k, opt.budget);
    census = report.census;
    counterexamples = report.counterexamples;
    first_counterexample = report.first_counterexample;
    summary = "fossils=" + std::to_string(report.fossils);
    details["fossils"] = report.fossils;
  } else if (opt.lemma == "tau") {
    const int tau = scorpion::tau_slice(opt.ell, opt.k, opt.budget);
    const int expected = opt.ell + 2;
    census = std::uint64_t{1} << (opt.k * (opt.k - 1) / 2);
    counterexamples = (tau == expected) ? 0 : 1;
    summary = "tau=" + std::to_string(tau) + " expected=" + std::to_string(expected);
    details["tau"] = tau;
    details["expected"] = expected;
  } else {
    const auto analytic = scorpion::attained_weights(opt.ell, opt.k);
    const auto brute = scorpion::brute_attained_weights(
        scorpion::PropertySpec::scorpion(opt.ell), opt.k, opt.budget);
    census = std::uint64_t{1} << (opt.k * (opt.k - 1) / 2);
    counterexamples = (analytic == brute) ? 0 : 1;
    summary = "attained=" + std::to_string(analytic.attained.size()) +
              " avoided=" + std::to_string(analytic.avoided_count());
    details["attained"] = analytic.attained;
    details["avoided"] = analytic.avoided_count();
    details["brute_attained"] = brute.attained;
  }
  const long long time_us = watch.elapsed_us();

  if (opt.json_output) {
    json record = {
        {"command", "verify"},
        {"lemma", opt.lemma},
        {"ell", opt.ell},
        {"k", opt.k},
        {"census", census},
        {"counterexamples", counterexamples},
        {"passed", counterexamples == 0},
        {"time_us", time_us},
        {"budget_limit", opt.budget},
    };
    record.update(details);
    record["first_counterexample"] =
        first_counterexample ? json(*first_counterexample) : json(nullptr);
    std::cout << record.dump() << "\n";
  } else {
    std::cout << "check " << opt.lemma << " ell=" << opt.ell << " k=" << opt.k
              << ": census=" << census << " " << summary
              << " counterexamples=" << counterexamples << " time_us=" << time_us
              << "\n";
    if (first_counterexample)
      std::cerr << "first counterexample:\n" << *first_counterexample;
  }
  return counterexamples == 0 ? 0 : 5;
}

int run_gen(const GenOptions& opt) {
  if (opt.kind == "skeleton") {
    std::cout << scorpion::serialize(scorpion::gen_skeleton(opt.ell, opt.k).first);
  } else if (opt.kind == "biclique") {
    std::cout << scorpion::serialize(scorpion::gen_augmented_biclique(opt.a, opt.b));
  } else {
    const auto p = scorpion::EdgeProbability::parse(opt.p);
    std::cout << scorpion::serialize(scorpion::random_graph(opt.n, p, opt.seed));
  }
  return 0;
}

int run_bench(const BenchOptions& opt) {
  const auto p = scorpion::EdgeProbability::parse(opt.p);
  const auto result =
      scorpion::scaling_bench(opt.ell, opt.k, opt.sizes, p, opt.seed, opt.repeats);

  if (opt.json_output) {
    json points = json::array();
    for (const auto& point : result.points)
      points.push_back({{"n", point.n},
                        {"median_us", point.median_us},
                        {"times_us", point.times_us},
                        {"count", point.count.get_str()}});
    json record = {
        {"command", "bench"}, {"ell", opt.ell},
        {"k", opt.k},         {"p", opt.p},
        {"seed", opt.seed},   {"repeats", opt.repeats},
        {"points", points},
        {"slope", result.slope ? json(*result.slope) : json(nullptr)},
    };
    std::cout << record.dump() << "\n";
  } else {
    std::cout << "command: bench\n"
              << "ell: " << opt.ell << "\n"
              << "k: " << opt.k << "\n"
              << "p: " << opt.p << "\n"
              << "seed: " << opt.seed << "\n"
              << "repeats: " << opt.repeats << "\n";
    for (const auto& point : result.points) {
      std::cout << "n=" << point.n << " median_us=" << point.median_us
                << " count=" << point.count << " times_us=";
      for (std::size_t i = 0; i < point.times_us.size(); ++i)
        std::cout << (i ? "," : "") << point.times_us[i];
      std::cout << "\n";
    }
    if (result.slope) std::cout << "slope: " << *result.slope << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact induced-subgraph counters for scorpion-type properties"};
  app.require_subcommand(1);

  CountOptions count_opt;
  auto* count_cmd = app.add_subcommand("count", "Count property subsets of a graph file");
  count_cmd->add_option("file", count_opt.file, "Edge-list graph file")->required();
  count_cmd->add_option("--property", count_opt.property, "Property to count")
      ->required()
      ->check(CLI::IsMember({"sink", "scorpion"}));
  count_cmd->add_option("--ell", count_opt.ell, "Tail length (scorpion only)");
  count_cmd->add_option("--k", count_opt.k, "Subset size")->required();
  count_cmd->add_option("--algo", count_opt.algo, "Counting algorithm")
      ->check(CLI::IsMember({"fast", "oracle"}));
  count_cmd->add_option("--budget", count_opt.budget, "Subset budget for the oracle");
  count_cmd->add_flag("--json", count_opt.json_output, "Machine-readable output");

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep all small graphs for a structural check");
  verify_cmd->add_option("--lemma", verify_opt.lemma, "Which check to run")
      ->required()
      ->check(CLI::IsMember({"anatomy", "fossil-charac", "tau", "weights"}));
  verify_cmd->add_option("--ell", verify_opt.ell, "Tail length")->required();
  verify_cmd->add_option("--k", verify_opt.k, "Slice size")->required();
  verify_cmd->add_option("--budget", verify_opt.budget, "Largest census to sweep");
  verify_cmd->add_flag("--json", verify_opt.json_output, "Machine-readable output");

  GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph to stdout");
  gen_cmd->add_option("--kind", gen_opt.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"skeleton", "biclique", "random"}));
  gen_cmd->add_option("--ell", gen_opt.ell, "Tail length (skeleton)");
  gen_cmd->add_option("--k", gen_opt.k, "Vertex count (skeleton)");
  gen_cmd->add_option("--a", gen_opt.a, "Clique side (biclique)");
  gen_cmd->add_option("--b", gen_opt.b, "Independent side (biclique)");
  gen_cmd->add_option("--n", gen_opt.n, "Vertex count (random)");
  gen_cmd->add_option("--p", gen_opt.p, "Edge probability (random)");
  gen_cmd->add_option("--seed", gen_opt.seed, "Random seed");

  BenchOptions bench_opt;
  auto* bench_cmd = app.add_subcommand("bench", "Time the scorpion counter across sizes");
  bench_cmd->add_option("--ell", bench_opt.ell, "Tail length");
  bench_cmd->add_option("--k", bench_opt.k, "Subset size")->required();
  bench_cmd->add_option("--sizes", bench_opt.sizes, "Graph sizes")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--p", bench_opt.p, "Edge probability");
  bench_cmd->add_option("--seed", bench_opt.seed, "Random seed");
  bench_cmd->add_option("--repeats", bench_opt.repeats, "Timings per size");
  bench_cmd->add_flag("--json", bench_opt.json_output, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt);
    if (gen_cmd->parsed()) return run_gen(gen_opt);
    return run_bench(bench_opt);
  } catch (const scorpion::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const scorpion::parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 3;
  } catch (const scorpion::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  }
}
