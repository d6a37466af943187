#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "minfact/io.hpp"
#include "minfact/lamination.hpp"
#include "minfact/levy.hpp"
#include "minfact/ncp.hpp"
#include "minfact/offspring.hpp"
#include "minfact/oracle.hpp"
#include "minfact/path_codec.hpp"
#include "minfact/rng.hpp"
#include "minfact/samplers.hpp"
#include "minfact/stats.hpp"
#include "minfact/tree.hpp"
#include "minfact/verify.hpp"

namespace {

using namespace minfact;
using io::json;

struct Conditioning {
  std::optional<int> K;
  std::optional<double> c;

  bool given() const { return K.has_value() || c.has_value(); }
  // floor(c sqrt n) clamped to [0, n - 1] when c is given.
  int resolve(int n) const {
    if (K) return *K;
    if (!c) throw std::invalid_argument("one of --k or --c is required");
    const int k = static_cast<int>(std::floor(*c * std::sqrt(static_cast<double>(n))));
    return std::clamp(k, 0, std::max(n - 1, 0));
  }
};

void add_conditioning(CLI::App* cmd, Conditioning& cond, const std::string& what) {
  auto* k = cmd->add_option("--k", cond.K, "number of " + what)->check(CLI::NonNegativeNumber);
  auto* c = cmd->add_option("--c", cond.c, "use floor(c sqrt n) " + what)->check(CLI::NonNegativeNumber);
  k->excludes(c);
}

void emit(const std::string& content, const std::string& out) {
  if (out.empty() || out == "-") std::cout << content;
  else io::write_file(out, content);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Factorization load_factorization(const std::string& path) {
  return io::factorization_from_json(json::parse(io::read_file(path)));
}

Lamination lamination_of(const Factorization& f, int k, bool forest) {
  if (k < 0 || k > f.n() - 1) throw std::invalid_argument("k must lie in [0, n - 1]");
  if (k == 0) return Lamination{f.n(), {}};
  if (forest) return lam_of_forest(f.n(), forest_edges(f, k));
  return lam_of_partition(partial_product_partition(f, k));
}

std::string factorization_csv(const Factorization& f) {
  std::string out = io::csv_row({"index", "a", "b"});
  for (std::size_t i = 0; i < f.factors().size(); ++i)
    out += io::csv_row({std::to_string(i + 1), std::to_string(f.factors()[i].a), std::to_string(f.factors()[i].b)});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal factorizations of the n-cycle: exact samplers, oracles and laminations"};
  app.require_subcommand(1);

  // sample
  struct {
    int n = 0;
    std::uint64_t seed = 0;
    Conditioning cond;
    std::string format = "json", out;
  } sample;
  auto* cmd_sample = app.add_subcommand("sample", "uniform minimal factorization of (1 ... n)");
  cmd_sample->add_option("--n", sample.n, "cycle length")->required()->check(CLI::PositiveNumber);
  cmd_sample->add_option("--seed", sample.seed, "random seed")->required();
  add_conditioning(cmd_sample, sample.cond, "factors in the partial product");
  cmd_sample->add_option("--format", sample.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd_sample->add_option("--out", sample.out, "output file (default stdout)");

  // sample-tree
  struct {
    int n = 0;
    std::uint64_t seed = 0;
    Conditioning cond;
    bool root_shifted = false;
    std::string out;
  } stree;
  auto* cmd_tree = app.add_subcommand("sample-tree", "alternating tree with n-K black and K+1 white vertices");
  cmd_tree->add_option("--n", stree.n, "total size")->required()->check(CLI::Range(2, 1 << 28));
  cmd_tree->add_option("--seed", stree.seed, "random seed")->required();
  add_conditioning(cmd_tree, stree.cond, "white vertices minus one");
  cmd_tree->add_flag("--root-shifted", stree.root_shifted, "use the size-biased root law (dual-tree law)");
  cmd_tree->add_option("--out", stree.out, "output file (default stdout)");

  // partial
  struct {
    std::string input, out, format = "json";
    Conditioning cond;
  } partial;
  auto* cmd_partial = app.add_subcommand("partial", "partition of a partial product of a stored factorization");
  cmd_partial->add_option("--input", partial.input, "factorization JSON")->required()->check(CLI::ExistingFile);
  add_conditioning(cmd_partial, partial.cond, "factors");
  cmd_partial->add_option("--format", partial.format, "json (partition) or csv (chords)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_partial->add_option("--out", partial.out, "output file (default stdout)");

  // render
  struct {
    std::string input, out;
    Conditioning cond;
    bool forest = false;
  } render;
  auto* cmd_render = app.add_subcommand("render", "SVG chord diagram of a partial product or stored partition");
  cmd_render->add_option("--input", render.input, "factorization or partition JSON")->required()->check(CLI::ExistingFile);
  add_conditioning(cmd_render, render.cond, "factors (factorization input)");
  cmd_render->add_flag("--forest", render.forest, "draw the transposition chords instead of the partition polygons");
  cmd_render->add_option("--out", render.out, "output SVG (default stdout)");

  // frames
  struct {
    std::string input, dir;
    double c_min = 0.0, c_max = 5.0;
    int count = 10;
    bool forest = false;
  } frames;
  auto* cmd_frames = app.add_subcommand("frames", "SVG frames over a sweep of c");
  cmd_frames->add_option("--input", frames.input, "factorization JSON")->required()->check(CLI::ExistingFile);
  cmd_frames->add_option("--c-min", frames.c_min, "first c")->check(CLI::NonNegativeNumber);
  cmd_frames->add_option("--c-max", frames.c_max, "last c")->check(CLI::NonNegativeNumber);
  cmd_frames->add_option("--count", frames.count, "number of frames")->check(CLI::PositiveNumber);
  cmd_frames->add_flag("--forest", frames.forest, "draw the transposition chords");
  cmd_frames->add_option("--out-dir", frames.dir, "output directory")->required();

  // params
  struct {
    std::optional<double> m;
    std::optional<int> n, K;
  } params;
  auto* cmd_params = app.add_subcommand("params", "offspring parameters for a mean, or the pair for (n, K)");
  auto* opt_m = cmd_params->add_option("--m", params.m, "mean")->check(CLI::PositiveNumber);
  auto* opt_n = cmd_params->add_option("--n", params.n, "total size")->check(CLI::Range(2, 1 << 30));
  auto* opt_K = cmd_params->add_option("--k", params.K, "white vertices minus one")->check(CLI::PositiveNumber);
  opt_m->excludes(opt_n)->excludes(opt_K);
  opt_n->needs(opt_K);
  opt_K->needs(opt_n);

  // levy
  struct {
    double c = 1.0;
    int points = 1001;
    std::uint64_t seed = 0;
    std::string mode = "discrete", what = "bridge", out;
    int n = 10000;
  } levy;
  auto* cmd_levy = app.add_subcommand("levy", "Levy bridge, its excursion or its lamination chords");
  cmd_levy->add_option("--c", levy.c, "drift parameter")->check(CLI::PositiveNumber);
  cmd_levy->add_option("--points", levy.points, "grid points on [0, 1]")->check(CLI::Range(2, 1 << 24));
  cmd_levy->add_option("--seed", levy.seed, "random seed")->required();
  cmd_levy->add_option("--mode", levy.mode, "discrete or rejection")->check(CLI::IsMember({"discrete", "rejection"}));
  cmd_levy->add_option("--n", levy.n, "tree size of the discrete mode")->check(CLI::Range(2, 1 << 28));
  cmd_levy->add_option("--output", levy.what, "bridge, excursion or chords")
      ->check(CLI::IsMember({"bridge", "excursion", "chords"}));
  cmd_levy->add_option("--out", levy.out, "output CSV (default stdout)");

  // stats
  StatsConfig stats;
  std::string stats_out;
  std::optional<int> stats_K;
  auto* cmd_stats = app.add_subcommand("stats", "Monte Carlo chord, Hausdorff and first-gap statistics");
  cmd_stats->add_option("--n", stats.n, "cycle length")->required()->check(CLI::Range(2, 1 << 28));
  cmd_stats->add_option("--seed", stats.seed, "random seed")->required();
  auto* sk = cmd_stats->add_option("--k", stats_K, "factors in the partial product")->check(CLI::PositiveNumber);
  auto* sc = cmd_stats->add_option("--c", stats.c, "use floor(c sqrt n) factors")->check(CLI::PositiveNumber);
  sk->excludes(sc);
  cmd_stats->add_option("--samples", stats.samples, "number of samples")->check(CLI::PositiveNumber);
  cmd_stats->add_option("--max-gap", stats.max_gap, "last histogram bin before the tail")->check(CLI::PositiveNumber);
  cmd_stats->add_option("--out", stats_out, "output CSV (default stdout)");

  // verify
  struct {
    std::string suite;
    verify::Options opts;
    bool skip_n8 = false;
  } ver;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  cmd_verify->add_option("suite", ver.suite, "suite name, 'all' or 'list'")->required();
  cmd_verify->add_option("--n", ver.opts.n, "size override")->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--seed", ver.opts.seed, "seed of the statistical suites");
  cmd_verify->add_flag("--skip-n8", ver.skip_n8, "counts: stop at n = 7");

  // enumerate
  struct {
    int n = 0;
    std::string what = "factorizations", out;
  } en;
  auto* cmd_enum = app.add_subcommand("enumerate", "exhaustive lists for small n");
  cmd_enum->add_option("--n", en.n, "size")->required()->check(CLI::Range(1, 8));
  cmd_enum->add_option("--what", en.what, "factorizations, partitions or trees")
      ->check(CLI::IsMember({"factorizations", "partitions", "trees"}));
  cmd_enum->add_option("--out", en.out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_sample) {
      RngStream rng(sample.seed);
      const auto f = sample_min_factorization(sample.n, rng);
      if (sample.format == "csv") {
        emit(factorization_csv(f), sample.out);
      } else {
        json j = io::to_json(f);
        j["seed"] = sample.seed;
        if (sample.cond.given()) {
          const int k = sample.cond.resolve(sample.n);
          j["k"] = k;
          if (k >= 1) j["partial"] = io::to_json(partial_product_partition(f, k));
        }
        emit(dump(j), sample.out);
      }
    } else if (*cmd_tree) {
      const int K = stree.cond.resolve(stree.n);
      if (K < 1 || K > stree.n - 1) throw std::invalid_argument("K must lie in [1, n - 1]");
      RngStream rng(stree.seed);
      const auto t = sample_conditioned_tree(stree.n, K, stree.root_shifted, rng);
      json j = io::to_json(t);
      j["seed"] = stree.seed;
      j["K"] = K;
      j["root_shifted"] = stree.root_shifted;
      j["code"] = io::to_json(encode_phi(t));
      if (stree.root_shifted) j["partition"] = io::to_json(partition_of_tree(t));
      emit(dump(j), stree.out);
    } else if (*cmd_partial) {
      const auto f = load_factorization(partial.input);
      const int k = partial.cond.resolve(f.n());
      if (k < 1 || k > f.n() - 1) throw std::invalid_argument("k must lie in [1, n - 1]");
      const auto p = partial_product_partition(f, k);
      emit(partial.format == "csv" ? io::chords_csv(lam_of_partition(p)) : dump(io::to_json(p)), partial.out);
    } else if (*cmd_render) {
      const json j = json::parse(io::read_file(render.input));
      Lamination lam;
      if (j.contains("factors")) {
        const auto f = io::factorization_from_json(j);
        lam = lamination_of(f, render.cond.given() ? render.cond.resolve(f.n()) : 0, render.forest);
      } else if (j.contains("blocks")) {
        lam = lam_of_partition(io::ncp_from_json(j));
      } else {
        throw std::invalid_argument("input holds neither a factorization nor a partition");
      }
      emit(io::render_svg(lam), render.out);
    } else if (*cmd_frames) {
      if (frames.c_max < frames.c_min) throw std::invalid_argument("--c-max must be at least --c-min");
      const auto f = load_factorization(frames.input);
      std::filesystem::create_directories(frames.dir);
      for (int i = 0; i < frames.count; ++i) {
        const double c = frames.count == 1 ? frames.c_min
                                           : frames.c_min + (frames.c_max - frames.c_min) * i / (frames.count - 1);
        const int k = Conditioning{std::nullopt, c}.resolve(f.n());
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04d.svg", i);
        io::write_file((std::filesystem::path(frames.dir) / name).string(),
                       io::render_svg(lamination_of(f, k, frames.forest)));
      }
    } else if (*cmd_params) {
      json j;
      if (params.m) {
        j = io::to_json(solve_params(*params.m));
      } else if (params.n) {
        const int n = *params.n, K = *params.K;
        if (K > n - 1) throw std::invalid_argument("K must lie in [1, n - 1]");
        j["schema"] = io::kSchemaVersion;
        j["n"] = n;
        j["K"] = K;
        j["black"] = io::to_json(solve_params(static_cast<double>(K + 1) / (n - K)));
        j["white"] = io::to_json(solve_params(static_cast<double>(n - K) / (K + 1)));
      } else {
        throw std::invalid_argument("params needs --m or both --n and --k");
      }
      std::cout << dump(j);
    } else if (*cmd_levy) {
      RngStream rng(levy.seed);
      BridgeOptions bo;
      bo.mode = levy.mode == "discrete" ? BridgeMode::discrete : BridgeMode::rejection;
      bo.n = levy.n;
      const auto res = levy_bridge(uniform_grid(static_cast<std::size_t>(levy.points)), levy.c, rng, bo);
      if (levy.what == "bridge") emit(io::path_csv(res.path), levy.out);
      else if (levy.what == "excursion") emit(io::path_csv(vervaat_continuous(res.path)), levy.out);
      else emit(io::chords_csv(lam_of_excursion(vervaat_continuous(res.path), ExcursionMode::cadlag)), levy.out);
    } else if (*cmd_stats) {
      if (stats_K) stats.K = *stats_K;
      emit(run_stats(stats), stats_out);
    } else if (*cmd_verify) {
      ver.opts.include_n8 = !ver.skip_n8;
      if (ver.suite == "list") {
        json j = json::array();
        for (const auto& s : verify::suites())
          j.push_back({{"suite", s.name}, {"criterion", s.criterion}, {"summary", s.summary}});
        std::cout << dump(j);
        return 0;
      }
      std::vector<std::string> names;
      if (ver.suite == "all") {
        for (const auto& s : verify::suites()) names.push_back(s.name);
      } else {
        names.push_back(ver.suite);
      }
      json report = json::array();
      bool pass = true;
      for (const auto& name : names) {
        const auto r = verify::run_suite(name, ver.opts);
        pass = pass && r.pass;
        report.push_back({{"suite", r.suite}, {"criterion", r.criterion}, {"pass", r.pass},
                          {"seconds", r.seconds}, {"details", r.details}});
      }
      json out = {{"schema", io::kSchemaVersion}, {"pass", pass}, {"suites", report}};
      std::cout << dump(out);
      return pass ? 0 : 1;
    } else if (*cmd_enum) {
      json arr = json::array();
      if (en.what == "factorizations") {
        for (const auto& f : oracle::enumerate_factorizations(en.n)) arr.push_back(io::to_json(f));
      } else if (en.what == "partitions") {
        for (const auto& p : oracle::enumerate_noncrossing_partitions(en.n)) arr.push_back(io::to_json(p));
      } else {
        for (const auto& t : oracle::enumerate_plane_trees(en.n)) arr.push_back(io::to_json(t));
      }
      emit(dump(json{{"schema", io::kSchemaVersion}, {"n", en.n}, {"what", en.what}, {"count", arr.size()},
                     {"items", arr}}),
           en.out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
