#pragma once

// Command-line front end: curve, turning, sweep and profile subcommands.
// Kept in a header so the test suite can drive it in-process.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grover_gme/grover_gme.hpp"

namespace grover_gme::cli {

enum ExitCode : int { kOk = 0, kInvalidConfig = 2, kIoFailure = 3, kOracleResource = 4 };

class IoError : public Error {
 public:
  using Error::Error;
};

/// Shortest round-trip-safe text for a double (17 significant digits).
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_optional(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string{};
}

/// Expands a preset name: product, ghz, w, dicke:<w>.
inline MarkedSet preset_marked_set(const std::string& name, int n) {
  if (name == "product") return MarkedSet::product(n);
  if (name == "ghz") return MarkedSet::ghz(n);
  if (name == "w") return MarkedSet::w_state(n);
  if (name.rfind("dicke:", 0) == 0) {
    const std::string rest = name.substr(6);
    std::size_t used = 0;
    int w = -1;
    try {
      w = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw InvalidInput("bad dicke preset '" + name + "'");
    return MarkedSet::dicke(n, w);
  }
  throw InvalidInput("unknown preset '" + name + "' (product, ghz, w, dicke:<w>)");
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// Parses "a..b" into the inclusive list a, a+1, ..., b.
inline std::vector<int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InvalidInput("n range must look like a..b");
  int lo = 0;
  int hi = 0;
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    lo = std::stoi(text.substr(0, dots), &used_lo);
    hi = std::stoi(text.substr(dots + 2), &used_hi);
    if (used_lo != dots || used_hi != text.size() - dots - 2) throw InvalidInput("");
  } catch (const std::exception&) {
    throw InvalidInput("n range must look like a..b, got '" + text + "'");
  }
  if (lo < 1 || hi < lo) throw InvalidInput("n range needs 1 <= a <= b");
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n) ns.push_back(n);
  return ns;
}

struct RunConfig {
  std::string subcommand;
  int n = 0;
  std::string preset;
  std::string weights;
  std::string bits;
  std::string mode = "exact";
  std::string out;
  std::string format = "csv";
  int grid = 2048;
  std::string n_range;

  /// Marked set for qubit count `qubits`, from whichever of preset, weights
  /// or bits was given.
  MarkedSet marked_set(int qubits) const {
    if (!preset.empty()) return preset_marked_set(preset, qubits);
    if (!weights.empty()) {
      std::vector<int> ws;
      for (const auto& item : split_list(weights)) {
        try {
          std::size_t used = 0;
          ws.push_back(std::stoi(item, &used));
          if (used != item.size()) throw InvalidInput("");
        } catch (const std::exception&) {
          throw InvalidInput("bad weight '" + item + "'");
        }
      }
      return MarkedSet::from_weights(qubits, ws);
    }
    std::vector<int> ws;
    for (const auto& b : split_list(bits)) {
      if (static_cast<int>(b.size()) != qubits || b.find_first_not_of("01") != std::string::npos) {
        throw InvalidInput("bitstring '" + b + "' is not " + std::to_string(qubits) + " binary digits");
      }
      ws.push_back(static_cast<int>(std::count(b.begin(), b.end(), '1')));
    }
    return MarkedSet::from_weights(qubits, ws);
  }

  oracle::MarkedBits marked_bits() const {
    if (!bits.empty()) {
      const auto list = split_list(bits);
      return oracle::MarkedBits::from_bitstrings(n, list);
    }
    return oracle::MarkedBits::from_marked_set(marked_set(n));
  }
};

inline nlohmann::json weights_json(const MarkedSet& marked) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : marked.classes()) {
    // integer when exact (below 2^53), otherwise the double
    if (c < 9007199254740992.0) {
      arr.push_back({{"weight", w}, {"count", static_cast<std::uint64_t>(c)}});
    } else {
      arr.push_back({{"weight", w}, {"count", c}});
    }
  }
  return arr;
}

/// Writes `text` to `path`, or to `out` when path is empty.
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("write to '" + path + "' failed");
}

inline void require_json_path(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") throw InvalidInput("format must be csv or json");
  if (cfg.format == "json" && cfg.out.empty()) {
    throw InvalidInput("--format json writes a sidecar next to --out; give --out");
  }
}

inline int cmd_curve(const RunConfig& cfg, std::ostream& out) {
  require_json_path(cfg);
  const MarkedSet marked = cfg.marked_set(cfg.n);
  const GroverSchedule sched = make_schedule(marked);
  const BMax bm = b_max(marked);
  const double turning = turning_theta_from_b_max(bm.value);

  std::ostringstream csv;
  csv << "k,ratio,theta_k,gme_exact,gme_asymptotic,alpha_star\n";
  double peak = 0.0;
  auto row = [&](const GmePoint& p) {
    csv << p.k << ',' << format_double(p.ratio) << ',' << format_double(p.theta_k) << ','
        << format_optional(p.gme_exact) << ',' << format_optional(p.gme_asymptotic) << ','
        << format_optional(p.alpha_star) << '\n';
  };

  if (cfg.mode == "oracle") {
    const oracle::MarkedBits bits = cfg.marked_bits();
    oracle::DenseState state = oracle::DenseState::uniform(cfg.n);
    for (std::int64_t k = 0; k <= sched.k_opt; ++k) {
      if (k > 0) state = oracle::grover_step(std::move(state), bits);
      GmePoint p;
      p.k = k;
      p.ratio = sched.k_opt == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(sched.k_opt);
      p.theta_k = theta_k(sched, k);
      p.gme_exact = oracle::oracle_gme(state, false).gme;
      peak = std::max(peak, *p.gme_exact);
      row(p);
    }
  } else {
    CurveMode mode;
    if (cfg.mode == "exact") {
      mode = CurveMode::exact;
    } else if (cfg.mode == "asymptotic") {
      mode = CurveMode::asymptotic;
    } else if (cfg.mode == "both") {
      mode = CurveMode::both;
    } else {
      throw InvalidInput("mode must be exact, asymptotic, both or oracle");
    }
    const GmeCurve curve = gme_curve(marked, mode);
    for (const auto& p : curve.points) row(p);
    peak = curve.peak_gme;
  }

  emit(cfg.out, csv.str(), out);
  if (cfg.format == "json") {
    nlohmann::json side = {
        {"n", cfg.n},
        {"weights", weights_json(marked)},
        {"k_opt", sched.k_opt},
        {"theta", sched.theta},
        {"turning_theta", turning},
        {"turning_k", 2.0 / std::numbers::pi * turning * static_cast<double>(sched.k_opt)},
        {"turning_k_ratio", 2.0 / std::numbers::pi * turning},
        {"peak_gme", peak},
        {"mode", cfg.mode},
    };
    emit(cfg.out + ".json", side.dump(2) + "\n", out);
  }
  return kOk;
}

inline int cmd_turning(const RunConfig& cfg, std::ostream& out) {
  const MarkedSet marked = cfg.marked_set(cfg.n);
  const BMax bm = b_max(marked);
  const double turning = turning_theta_from_b_max(bm.value);
  const double s = std::sin(turning);
  std::ostringstream rec;
  rec << "n: " << cfg.n << '\n'
      << "marked: " << marked.describe() << '\n'
      << "b_max: " << format_double(bm.value) << '\n'
      << "b_max_alpha: " << format_double(bm.alpha_star) << '\n'
      << "turning_theta: " << format_double(turning) << '\n'
      << "turning_k_ratio: " << format_double(2.0 / std::numbers::pi * turning) << '\n'
      << "peak_gme: " << format_double(s * s) << '\n';
  if (marked.n() <= 120 && marked.count() < std::ldexp(1.0, marked.n())) {
    const GroverSchedule sched = make_schedule(marked);
    rec << "k_opt: " << sched.k_opt << '\n'
        << "turning_k: "
        << format_double(2.0 / std::numbers::pi * turning * static_cast<double>(sched.k_opt))
        << '\n';
  }
  out << rec.str();
  return kOk;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  require_json_path(cfg);
  if (!cfg.bits.empty()) throw InvalidInput("sweep needs --preset or --weights, not --bits");
  const std::vector<int> ns = parse_n_range(cfg.n_range);
  const SweepReport report =
      scale_invariance_sweep([&](int n) { return cfg.marked_set(n); }, ns);

  std::ostringstream csv;
  csv << "n,b_max,turning_theta,turning_k_ratio,peak_gme,final_gme\n";
  for (const auto& r : report.rows) {
    csv << r.n << ',' << format_double(r.b_max) << ',' << format_double(r.turning_theta) << ','
        << format_double(r.turning_ratio) << ',' << format_double(r.peak_gme) << ','
        << format_double(r.final_gme) << '\n';
  }
  emit(cfg.out, csv.str(), out);
  out << "b_max_spread: " << format_double(report.b_max_spread) << '\n'
      << "final_gme_spread: " << format_double(report.final_gme_spread) << '\n'
      << "scale_invariant: " << (report.scale_invariant ? "true" : "false") << '\n';
  if (cfg.format == "json") {
    nlohmann::json side = {
        {"family", cfg.preset.empty() ? cfg.weights : cfg.preset},
        {"n_range", cfg.n_range},
        {"b_max_spread", report.b_max_spread},
        {"final_gme_spread", report.final_gme_spread},
        {"scale_invariant", report.scale_invariant},
    };
    emit(cfg.out + ".json", side.dump(2) + "\n", out);
  }
  return kOk;
}

inline int cmd_profile(const RunConfig& cfg, std::ostream& out) {
  if (cfg.grid < 2) throw InvalidInput("--grid needs at least 2 points");
  const MarkedSet marked = cfg.marked_set(cfg.n);
  const auto grid = uniform_alpha_grid(static_cast<std::size_t>(cfg.grid));
  std::ostringstream csv;
  csv << "alpha,A,B,g\n";
  for (const auto& r : ab_profile(marked, grid)) {
    csv << format_double(r.alpha) << ',' << format_double(r.a) << ',' << format_double(r.b) << ','
        << format_double(r.g) << '\n';
  }
  emit(cfg.out, csv.str(), out);
  return kOk;
}

inline void add_marked_options(CLI::App* sub, RunConfig& cfg, bool needs_n) {
  auto* n_opt = sub->add_option("--n", cfg.n, "number of qubits")->check(CLI::PositiveNumber);
  if (needs_n) n_opt->required();
  auto* p = sub->add_option("--preset", cfg.preset, "product | ghz | w | dicke:<w>");
  auto* w = sub->add_option("--weights", cfg.weights, "comma-separated Hamming weights");
  auto* b = sub->add_option("--bits", cfg.bits, "comma-separated marked bitstrings");
  p->excludes(w)->excludes(b);
  w->excludes(b);
}

/// Runs the CLI and returns the process exit code. Diagnostics go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Geometric measure of entanglement along Grover's search"};
  app.require_subcommand(1);

  auto* curve = app.add_subcommand("curve", "GME for every iteration k = 0..k_opt");
  add_marked_options(curve, cfg, true);
  curve->add_option("--mode", cfg.mode, "exact | asymptotic | both | oracle")
      ->check(CLI::IsMember({"exact", "asymptotic", "both", "oracle"}));
  curve->add_option("--out", cfg.out, "output CSV path (stdout when omitted)");
  curve->add_option("--format", cfg.format, "csv | json (json adds <out>.json)")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* turning = app.add_subcommand("turning", "turning point of the asymptotic curve");
  add_marked_options(turning, cfg, true);

  auto* sweep = app.add_subcommand("sweep", "B_max and turning point across a range of n");
  add_marked_options(sweep, cfg, false);
  sweep->add_option("--n-range", cfg.n_range, "inclusive range a..b")->required();
  sweep->add_option("--out", cfg.out, "output CSV path (stdout when omitted)");
  sweep->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* profile = app.add_subcommand("profile", "A(alpha), B(alpha), g(alpha) on [0, pi]");
  add_marked_options(profile, cfg, true);
  profile->add_option("--grid", cfg.grid, "number of alpha samples");
  profile->add_option("--out", cfg.out, "output CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidConfig;
  }

  try {
    if (cfg.preset.empty() && cfg.weights.empty() && cfg.bits.empty()) {
      throw InvalidInput("give one of --preset, --weights, --bits");
    }
    if (*curve) {
      cfg.subcommand = "curve";
      return cmd_curve(cfg, out);
    }
    if (*turning) {
      cfg.subcommand = "turning";
      return cmd_turning(cfg, out);
    }
    if (*sweep) {
      cfg.subcommand = "sweep";
      return cmd_sweep(cfg, out);
    }
    cfg.subcommand = "profile";
    return cmd_profile(cfg, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kOracleResource;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
}

}  // namespace grover_gme::cli
