#include "hpe/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hpe/errors.hpp"
#include "hpe/initial.hpp"
#include "hpe/snapshot.hpp"

namespace hpe {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0' || errno == ERANGE)
    throw ValidationError(key, "not a number: '" + value + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  const double x = parse_number(key, value);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x) throw ValidationError(key, "not an integer: '" + value + "'");
  return i;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool cfl_set = false, dtmax_set = false;

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("empty key or value", lineno);

    if (key == "nx") cfg.nx = parse_int(key, value);
    else if (key == "ny") cfg.ny = parse_int(key, value);
    else if (key == "nz") cfg.nz = parse_int(key, value);
    else if (key == "h") cfg.params.h = parse_number(key, value);
    else if (key == "f0") cfg.params.f0 = parse_number(key, value);
    else if (key == "eps") cfg.params.eps = parse_number(key, value);
    else if (key == "cfl") { cfg.params.cfl = parse_number(key, value); cfl_set = true; }
    else if (key == "dt_max") { cfg.params.dt_max = parse_number(key, value); dtmax_set = true; }
    else if (key == "dt_min") cfg.controls.dt_min = parse_number(key, value);
    else if (key == "t_end") cfg.params.t_end = parse_number(key, value);
    else if (key == "seed") cfg.params.seed = static_cast<unsigned long>(parse_number(key, value));
    else if (key == "scheme") {
      if (value == "cnab2") cfg.controls.scheme = Scheme::ImexCnab2;
      else if (value == "imex_euler") cfg.controls.scheme = Scheme::ImexEuler;
      else throw ValidationError(key, "unknown scheme '" + value + "'");
    } else if (key == "ic") {
      if (value == "heat_mode") cfg.ic = InitialConditionKind::HeatMode;
      else if (value == "taylor_green_like") cfg.ic = InitialConditionKind::TaylorGreenLike;
      else if (value == "random_bandlimited") cfg.ic = InitialConditionKind::RandomBandlimited;
      else if (value.rfind("snapshot:", 0) == 0) {
        cfg.ic = InitialConditionKind::Snapshot;
        cfg.ic_snapshot_path = value.substr(9);
        if (cfg.ic_snapshot_path.empty()) throw ValidationError(key, "empty snapshot path");
      } else throw ValidationError(key, "unknown initial condition '" + value + "'");
    }
    else if (key == "ic_decay") cfg.ic_decay = parse_number(key, value);
    else if (key == "ic_amplitude") cfg.ic_amplitude = parse_number(key, value);
    else if (key == "diag_cadence") cfg.diag_cadence = parse_int(key, value);
    else if (key == "snapshot_cadence") cfg.snapshot_cadence = parse_int(key, value);
    else if (key == "growth_ceiling") cfg.growth_ceiling = parse_number(key, value);
    else if (key == "maxprin_c") cfg.maxprin_c = parse_number(key, value);
    else if (key == "out_dir") cfg.out_dir = value;
    else throw ParseError("unknown key '" + key + "'", lineno);
  }

  // Range validation (grid counts are re-checked by the Grid constructor).
  if (!(cfg.params.h > 0.0)) throw ValidationError("h", "must be positive");
  if (!(cfg.params.eps >= 0.0)) throw ValidationError("eps", "must be nonnegative");
  if (!(cfg.params.cfl > 0.0 && cfg.params.cfl <= 1.0))
    throw ValidationError("cfl", "must lie in (0, 1]");
  if (!(cfg.params.dt_max > 0.0)) throw ValidationError("dt_max", "must be positive");
  if (!(cfg.params.t_end > 0.0)) throw ValidationError("t_end", "must be positive");
  if (!(cfg.controls.dt_min > 0.0 && cfg.controls.dt_min < cfg.params.dt_max))
    throw ValidationError("dt_min", "must satisfy 0 < dt_min < dt_max");
  if (cfg.diag_cadence < 1) throw ValidationError("diag_cadence", "must be >= 1");
  if (cfg.snapshot_cadence < 0) throw ValidationError("snapshot_cadence", "must be >= 0");
  if (!(cfg.growth_ceiling > 0.0)) throw ValidationError("growth_ceiling", "must be positive");
  (void)cfl_set;
  (void)dtmax_set;
  cfg.controls.cfl = cfg.params.cfl;
  cfg.controls.dt_max = cfg.params.dt_max;
  Grid check = cfg.grid();
  (void)check;
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  RunConfig cfg = parse_config(buf.str());
  if (cfg.ic == InitialConditionKind::Snapshot &&
      !std::filesystem::exists(cfg.ic_snapshot_path))
    throw ValidationError("ic", "snapshot path does not exist: " + cfg.ic_snapshot_path);
  return cfg;
}

State initial_state(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  switch (cfg.ic) {
    case InitialConditionKind::HeatMode: return heat_mode_state(g);
    case InitialConditionKind::TaylorGreenLike: return taylor_green_like_state(g);
    case InitialConditionKind::RandomBandlimited:
      return random_bandlimited_state(g, cfg.params.seed, cfg.ic_decay, cfg.ic_amplitude);
    case InitialConditionKind::Snapshot: return read_snapshot(cfg.ic_snapshot_path);
  }
  throw ValidationError("ic", "unreachable");
}

}  // namespace hpe
