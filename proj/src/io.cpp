#include "qbound/io.hpp"

#include <charconv>
#include <fstream>

#include <nlohmann/json.hpp>

#include "qbound/errors.hpp"

namespace qbound {

using nlohmann::json;

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

json matrix_to_json(const ComplexMatrix& x) {
  json arr = json::array();
  for (long i = 0; i < x.rows(); ++i) {
    for (long j = 0; j < x.cols(); ++j) {
      arr.push_back({{"re", x(i, j).real()}, {"im", x(i, j).imag()}});
    }
  }
  return arr;
}

ComplexMatrix matrix_from_json(const json& arr, long rows, long cols,
                               const char* what) {
  if (!arr.is_array() || static_cast<long>(arr.size()) != rows * cols) {
    throw PreconditionError(std::string(what) + ": matrix array has wrong length");
  }
  ComplexMatrix x(rows, cols);
  long k = 0;
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j, ++k) {
      const json& e = arr.at(k);
      if (!e.contains("re") || !e.contains("im")) {
        throw PreconditionError(std::string(what) +
                                ": matrix entries must be {re, im} objects");
      }
      x(i, j) = Complex(e.at("re").get<double>(), e.at("im").get<double>());
    }
  }
  return x;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw PreconditionError("cannot open file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw PreconditionError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw PreconditionError("cannot write file: " + path);
  }
  out << j.dump(2) << "\n";
  if (!out) {
    throw NumericError("write failed: " + path);
  }
}

BipartiteDims dims_from_json(const json& j, const char* what) {
  if (!j.contains("dims") || !j.at("dims").is_array() || j.at("dims").size() != 2) {
    throw PreconditionError(std::string(what) + ": missing or malformed dims [m, n]");
  }
  const int m = j.at("dims").at(0).get<int>();
  const int n = j.at("dims").at(1).get<int>();
  return {m, n};
}

}  // namespace

json state_to_json(const BipartiteDensity& s) {
  return json{{"dims", {s.dims().m, s.dims().n}},
              {"matrix", matrix_to_json(s.rho())}};
}

BipartiteDensity state_from_json(const json& j) {
  const BipartiteDims dims = dims_from_json(j, "state file");
  if (dims.m < 1 || dims.n < 1) {
    throw PreconditionError("state file: dims must be positive");
  }
  if (!j.contains("matrix")) {
    throw PreconditionError("state file: missing matrix");
  }
  const long d = dims.total();
  ComplexMatrix rho = matrix_from_json(j.at("matrix"), d, d, "state file");
  return BipartiteDensity(dims, std::move(rho));
}

void save_state_file(const std::string& path, const BipartiteDensity& s) {
  write_json_file(path, state_to_json(s));
}

BipartiteDensity load_state_file(const std::string& path) {
  return state_from_json(load_json_file(path));
}

json witness_to_json(const WitnessOperator& w) {
  return json{{"dims", {w.dims.m, w.dims.n}},
              {"w_raw", matrix_to_json(w.w_raw)},
              {"w_hermitian", matrix_to_json(w.w_hermitian)},
              {"metadata",
               {{"source_state_hash", w.source_state_hash},
                {"degenerate", w.degenerate},
                {"expectation", w.achieved_expectation},
                {"trace_norm", w.trace_norm_value}}}};
}

WitnessOperator witness_from_json(const json& j) {
  WitnessOperator w;
  w.dims = dims_from_json(j, "witness file");
  const long d = w.dims.total();
  w.w_raw = matrix_from_json(j.at("w_raw"), d, d, "witness file");
  w.w_hermitian = matrix_from_json(j.at("w_hermitian"), d, d, "witness file");
  const json& meta = j.at("metadata");
  w.source_state_hash = meta.at("source_state_hash").get<std::string>();
  w.degenerate = meta.at("degenerate").get<bool>();
  w.achieved_expectation = meta.at("expectation").get<double>();
  w.trace_norm_value = meta.at("trace_norm").get<double>();
  return w;
}

void save_witness_file(const std::string& path, const WitnessOperator& w) {
  write_json_file(path, witness_to_json(w));
}

WitnessOperator load_witness_file(const std::string& path) {
  return witness_from_json(load_json_file(path));
}

namespace {

const char* verdict_name(Verdict v) {
  return v == Verdict::entangled ? "entangled" : "undecided";
}

}  // namespace

json criteria_to_json(const CriteriaReport& r) {
  return json{
      {"ppt",
       {{"min_eigenvalue", r.ppt_min_eigenvalue},
        {"verdict", verdict_name(r.ppt_verdict)}}},
      {"ccnr",
       {{"value", r.ccnr_value}, {"verdict", verdict_name(r.ccnr_verdict)}}},
      {"enhanced",
       {{"f_value", r.f_value}, {"verdict", verdict_name(r.enhanced_verdict)}}},
      {"nonlinear_witness",
       {{"value", r.nonlinear_witness_value},
        {"verdict", verdict_name(r.nonlinear_verdict)},
        {"assumption", "tau = R(rho - rho_A (x) rho_B)"}}}};
}

json bound_to_json(const ConcurrenceBound& b) {
  return json{{"f_value", b.f_value},
              {"scale_factor", b.scale_factor},
              {"lower_bound", b.lower_bound},
              {"clamped", b.clamped}};
}

json roof_to_json(const RoofEstimate& e) {
  json ensemble = json::array();
  for (const auto& [p, psi] : e.best_ensemble) {
    json vec = json::array();
    for (long i = 0; i < psi.size(); ++i) {
      vec.push_back({{"re", psi(i).real()}, {"im", psi(i).imag()}});
    }
    ensemble.push_back({{"probability", p}, {"state", vec}});
  }
  return json{{"upper_value", e.upper_value},
              {"ensemble_size", e.ensemble_size},
              {"restarts_used", e.restarts_used},
              {"converged", e.converged},
              {"best_ensemble", ensemble}};
}

json report_to_json(const CriteriaReport& r, const ConcurrenceBound& b,
                    const RoofEstimate* roof) {
  json out{{"criteria", criteria_to_json(r)}, {"bound", bound_to_json(b)}};
  if (roof != nullptr) {
    out["roof"] = roof_to_json(*roof);
  }
  return out;
}

}  // namespace qbound
