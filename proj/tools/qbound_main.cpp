// Command-line front end: evaluate criteria and concurrence bounds on a
// state, sweep parameter grids to CSV, build witness operators.

#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qbound/errors.hpp"
#include "qbound/io.hpp"
#include "qbound/states.hpp"

namespace {

using namespace qbound;

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitBadInput = 2;

struct GridAxis {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  std::vector<double> points() const {
    // Index-based so the k-th value carries one rounding, not k accumulated
    // ones; the slack keeps the endpoint when the span is an exact multiple.
    const long count =
        static_cast<long>(std::floor((stop - start) / step + 1e-6)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (long k = 0; k < count; ++k) out.push_back(start + k * step);
    return out;
  }
};

GridAxis parse_grid(const std::string& text) {
  GridAxis axis;
  std::istringstream is(text);
  std::string tok;
  std::vector<std::string> parts;
  while (std::getline(is, tok, ':')) parts.push_back(tok);
  if (parts.size() != 4) {
    throw PreconditionError("--grid expects param:start:stop:step, got " + text);
  }
  axis.param = parts[0];
  axis.start = std::stod(parts[1]);
  axis.stop = std::stod(parts[2]);
  axis.step = std::stod(parts[3]);
  if (axis.step <= 0.0 || axis.stop < axis.start) {
    throw PreconditionError("--grid range is empty or step is non-positive");
  }
  return axis;
}

struct StateOptions {
  std::string family;
  std::string state_path;
  int d = 3;
  double fidelity = 1.0;
  double a = 0.5;
  double p = 1.0;
  double alpha = 2.0;
  std::uint64_t seed = 1;
  int rank = 1;
  std::vector<double> mu;
};

void add_state_flags(CLI::App* cmd, StateOptions& opt) {
  cmd->add_option("--family", opt.family,
                  "state family: isotropic | horodecki_a | horodecki_noisy | "
                  "alpha_family | max_entangled | product | random_ginibre | "
                  "pure_schmidt");
  cmd->add_option("--state", opt.state_path, "path to a state JSON file");
  cmd->add_option("--d", opt.d, "local dimension for square families");
  cmd->add_option("--F", opt.fidelity, "isotropic fidelity");
  cmd->add_option("--a", opt.a, "bound-entangled family parameter");
  cmd->add_option("--p", opt.p, "white-noise mixing weight");
  cmd->add_option("--alpha", opt.alpha, "alpha-family parameter");
  cmd->add_option("--seed", opt.seed, "RNG seed for random families");
  cmd->add_option("--rank", opt.rank, "rank for random_ginibre");
  cmd->add_option("--mu", opt.mu,
                  "Schmidt coefficients for pure_schmidt (comma separated)")
      ->delimiter(',');
}

StateSpec spec_from_options(const StateOptions& opt) {
  StateSpec spec;
  spec.family = parse_family(opt.family);
  spec.d = opt.d;
  spec.fidelity = opt.fidelity;
  spec.a = opt.a;
  spec.p = opt.p;
  spec.alpha = opt.alpha;
  spec.seed = opt.seed;
  spec.rank = opt.rank;
  spec.mu = opt.mu;
  if (spec.family == StateFamily::pure_schmidt && spec.mu.empty()) {
    throw PreconditionError("pure_schmidt requires --mu");
  }
  return spec;
}

BipartiteDensity resolve_state(const StateOptions& opt) {
  if (!opt.state_path.empty()) {
    return load_state_file(opt.state_path);
  }
  if (opt.family.empty()) {
    throw PreconditionError("either --family or --state is required");
  }
  return make_state(spec_from_options(opt));
}

int cmd_eval(const StateOptions& opt, bool roof, int restarts,
             std::uint64_t seed, const std::string& out_path) {
  const BipartiteDensity state = resolve_state(opt);
  const CriteriaReport criteria = evaluate_criteria(state);
  const ConcurrenceBound bound = lower_bound(state);

  std::optional<RoofEstimate> estimate;
  if (roof) {
    RoofSettings settings;
    settings.restarts = restarts;
    settings.seed = seed;
    estimate = roof_upper(state, settings);
  }
  const nlohmann::json j =
      report_to_json(criteria, bound, estimate ? &*estimate : nullptr);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write file: " + out_path);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

struct SweepRow {
  std::vector<double> params;
  CriteriaReport criteria;
  ConcurrenceBound bound;
  std::optional<RoofEstimate> roof;
};

void apply_param(StateSpec& spec, const std::string& name, double value) {
  if (name == "F") {
    spec.fidelity = value;
  } else if (name == "a") {
    spec.a = value;
  } else if (name == "p") {
    spec.p = value;
  } else if (name == "alpha") {
    spec.alpha = value;
  } else if (name == "d") {
    spec.d = static_cast<int>(value);
  } else {
    throw PreconditionError("unknown sweep parameter: " + name);
  }
}

int cmd_sweep(const StateOptions& opt, const std::vector<std::string>& grids,
              bool roof, int restarts, std::uint64_t seed,
              const std::string& out_path) {
  if (opt.family.empty()) {
    throw PreconditionError("sweep requires --family");
  }
  if (grids.empty() || grids.size() > 2) {
    throw PreconditionError("sweep requires one or two --grid axes");
  }
  if (out_path.empty()) {
    throw PreconditionError("sweep requires --out");
  }
  std::vector<GridAxis> axes;
  for (const auto& g : grids) axes.push_back(parse_grid(g));

  // Row-major enumeration over the grid; one task per point.
  std::vector<std::vector<double>> points;
  const auto first = axes[0].points();
  if (axes.size() == 1) {
    for (double v : first) points.push_back({v});
  } else {
    const auto second = axes[1].points();
    for (double v0 : first) {
      for (double v1 : second) points.push_back({v0, v1});
    }
  }
  if (points.empty()) {
    throw PreconditionError("sweep grid is empty");
  }

  const StateSpec base = spec_from_options(opt);
  std::vector<SweepRow> rows(points.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= points.size() || failed.load()) break;
      try {
        StateSpec spec = base;
        for (size_t ax = 0; ax < axes.size(); ++ax) {
          apply_param(spec, axes[ax].param, points[idx][ax]);
        }
        const BipartiteDensity state = make_state(spec);
        SweepRow& row = rows[idx];
        row.params = points[idx];
        row.criteria = evaluate_criteria(state);
        row.bound = lower_bound(state);
        if (roof) {
          RoofSettings settings;
          settings.restarts = restarts;
          // Decorrelated but reproducible per-point stream.
          settings.seed = seed + 0x9e3779b97f4a7c15ULL * (idx + 1);
          row.roof = roof_upper(state, settings);
        }
      } catch (const std::exception& e) {
        std::scoped_lock lock(error_mutex);
        if (!failed.exchange(true)) first_error = e.what();
      }
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const size_t thread_count = std::min<size_t>(hw, points.size());
  std::vector<std::thread> threads;
  for (size_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failed.load()) {
    throw PreconditionError(first_error);
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write file: " + out_path);
  out << "family";
  for (const auto& ax : axes) out << "," << ax.param;
  out << ",ccnr_value,enhanced_f,ppt_min_eigenvalue,lower_bound";
  if (roof) out << ",roof_upper";
  out << "\n";
  for (const auto& row : rows) {
    out << opt.family;
    for (double v : row.params) out << "," << format_double(v);
    out << "," << format_double(row.criteria.ccnr_value) << ","
        << format_double(row.criteria.f_value) << ","
        << format_double(row.criteria.ppt_min_eigenvalue) << ","
        << format_double(row.bound.lower_bound);
    if (roof) out << "," << format_double(row.roof->upper_value);
    out << "\n";
  }
  if (!out) throw NumericError("write failed: " + out_path);
  return kExitOk;
}

int cmd_witness(const StateOptions& opt, const std::string& out_path) {
  if (out_path.empty()) {
    throw PreconditionError("witness requires --out");
  }
  const BipartiteDensity state = resolve_state(opt);
  const WitnessOperator w = build_witness(state);
  save_witness_file(out_path, w);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Separability criteria, analytical concurrence lower bounds, witness "
      "construction and convex-roof upper bounds for bipartite states"};
  app.require_subcommand(1);

  StateOptions eval_opt, sweep_opt, witness_opt;
  bool eval_roof = false, sweep_roof = false;
  int eval_restarts = 20, sweep_restarts = 20;
  std::uint64_t eval_seed = 1, sweep_seed = 1;
  std::string eval_out, sweep_out, witness_out;
  std::vector<std::string> sweep_grids;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one state, JSON to stdout");
  add_state_flags(eval, eval_opt);
  eval->add_flag("--roof", eval_roof, "also run the convex-roof upper bound");
  eval->add_option("--restarts", eval_restarts, "roof optimizer restarts");
  eval->add_option("--out", eval_out, "write JSON here instead of stdout");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep a parameter grid to CSV");
  add_state_flags(sweep, sweep_opt);
  sweep->add_option("--grid", sweep_grids, "param:start:stop:step (repeat for 2-D)")
      ->expected(-1);
  sweep->add_flag("--roof", sweep_roof, "add a roof_upper column");
  sweep->add_option("--restarts", sweep_restarts, "roof optimizer restarts");
  sweep->add_option("--out", sweep_out, "output CSV path")->required();

  CLI::App* witness = app.add_subcommand("witness", "build a witness, write JSON");
  add_state_flags(witness, witness_opt);
  witness->add_option("--out", witness_out, "output witness path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (eval->parsed()) {
      // --seed doubles as the random-family seed and the roof seed.
      eval_seed = eval_opt.seed;
      return cmd_eval(eval_opt, eval_roof, eval_restarts, eval_seed, eval_out);
    }
    if (sweep->parsed()) {
      sweep_seed = sweep_opt.seed;
      return cmd_sweep(sweep_opt, sweep_grids, sweep_roof, sweep_restarts,
                       sweep_seed, sweep_out);
    }
    if (witness->parsed()) {
      return cmd_witness(witness_opt, witness_out);
    }
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitBadInput;
}
