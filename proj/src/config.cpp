#include "tdks/config.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace tdks {

namespace {

using Member = std::variant<int RunConfig::*, long RunConfig::*,
                            double RunConfig::*, bool RunConfig::*,
                            std::string RunConfig::*>;

struct SchemaEntry {
  const char* key;
  Member member;
};

// The schema is the single source of truth: parsing, overrides,
// serialization and hashing all walk this table.
const std::vector<SchemaEntry>& schema() {
  static const std::vector<SchemaEntry> entries = {
      {"grid.n_points", &RunConfig::grid_n_points},
      {"grid.dx", &RunConfig::grid_dx},
      {"ions.count", &RunConfig::ions_count},
      {"ions.spacing", &RunConfig::ions_spacing},
      {"ions.softening", &RunConfig::ions_softening},
      {"ground.n_orbitals", &RunConfig::ground_n_orbitals},
      {"ground.occupancy", &RunConfig::ground_occupancy},
      {"ground.dtau", &RunConfig::ground_dtau},
      {"ground.mixing", &RunConfig::ground_mixing},
      {"ground.tolerance", &RunConfig::ground_tolerance},
      {"ground.max_iterations", &RunConfig::ground_max_iterations},
      {"ground.init_half_width", &RunConfig::ground_init_half_width},
      {"ground.n_extra_states", &RunConfig::ground_n_extra_states},
      {"time.dt", &RunConfig::time_dt},
      {"time.t_end", &RunConfig::time_t_end},
      {"time.post_pulse", &RunConfig::time_post_pulse},
      {"time.frozen", &RunConfig::time_frozen},
      {"time.checkpoint_every", &RunConfig::time_checkpoint_every},
      {"drive.kind", &RunConfig::drive_kind},
      {"laser.a0", &RunConfig::laser_a0},
      {"laser.frequency", &RunConfig::laser_frequency},
      {"laser.n_cycles", &RunConfig::laser_n_cycles},
      {"kick.strength", &RunConfig::kick_strength},
      {"absorber.width_fraction", &RunConfig::absorber_width_fraction},
      {"absorber.strength", &RunConfig::absorber_strength},
      {"absorber.order", &RunConfig::absorber_order},
      {"tsurff.surface_fraction", &RunConfig::tsurff_surface_fraction},
      {"tsurff.stride", &RunConfig::tsurff_stride},
      {"spectrum.k_min", &RunConfig::spectrum_k_min},
      {"spectrum.k_max", &RunConfig::spectrum_k_max},
      {"spectrum.dk", &RunConfig::spectrum_dk},
      {"spectrum.e_min", &RunConfig::spectrum_e_min},
      {"linresp.t_record", &RunConfig::linresp_t_record},
      {"linresp.pad_factor", &RunConfig::linresp_pad_factor},
      {"linresp.align_window", &RunConfig::linresp_align_window},
      {"linresp.align_fraction", &RunConfig::linresp_align_fraction},
      {"linresp.omega_max", &RunConfig::linresp_omega_max},
      {"modes.omega_a", &RunConfig::modes_omega_a},
      {"modes.omega_b", &RunConfig::modes_omega_b},
      {"gabor.sigma", &RunConfig::gabor_sigma},
      {"gabor.center_start", &RunConfig::gabor_center_start},
      {"gabor.center_stop", &RunConfig::gabor_center_stop},
      {"gabor.center_spacing", &RunConfig::gabor_center_spacing},
      {"gabor.dk", &RunConfig::gabor_dk},
      {"scan.amplitudes", &RunConfig::scan_amplitudes},
      {"scan.ati_energy", &RunConfig::scan_ati_energy},
      {"scan.plasmon_energy", &RunConfig::scan_plasmon_energy},
      {"scan.ati_window_fraction", &RunConfig::scan_ati_window_fraction},
      {"scan.plasmon_window_fraction", &RunConfig::scan_plasmon_window_fraction},
      {"output.dir", &RunConfig::output_dir},
  };
  return entries;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* type) {
  throw std::invalid_argument("config: key '" + key + "' expects " + type +
                              ", got '" + value + "'");
}

void assign(RunConfig& c, const SchemaEntry& entry, const std::string& key,
            const std::string& value) {
  if (auto pm = std::get_if<int RunConfig::*>(&entry.member)) {
    try {
      size_t used = 0;
      const long v = std::stol(value, &used);
      if (used != value.size() || v < INT_MIN || v > INT_MAX)
        bad_value(key, value, "an integer");
      c.*(*pm) = static_cast<int>(v);
    } catch (const std::invalid_argument&) {
      bad_value(key, value, "an integer");
    } catch (const std::out_of_range&) {
      bad_value(key, value, "an integer");
    }
  } else if (auto pm2 = std::get_if<long RunConfig::*>(&entry.member)) {
    try {
      size_t used = 0;
      const long v = std::stol(value, &used);
      if (used != value.size()) bad_value(key, value, "an integer");
      c.*(*pm2) = v;
    } catch (const std::invalid_argument&) {
      bad_value(key, value, "an integer");
    } catch (const std::out_of_range&) {
      bad_value(key, value, "an integer");
    }
  } else if (auto pm3 = std::get_if<double RunConfig::*>(&entry.member)) {
    try {
      size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size() || !std::isfinite(v)) bad_value(key, value, "a number");
      c.*(*pm3) = v;
    } catch (const std::invalid_argument&) {
      bad_value(key, value, "a number");
    } catch (const std::out_of_range&) {
      bad_value(key, value, "a number");
    }
  } else if (auto pm4 = std::get_if<bool RunConfig::*>(&entry.member)) {
    if (value == "true" || value == "1")
      c.*(*pm4) = true;
    else if (value == "false" || value == "0")
      c.*(*pm4) = false;
    else
      bad_value(key, value, "true/false");
  } else {
    c.*std::get<std::string RunConfig::*>(entry.member) = value;
  }
}

std::string render(const RunConfig& c, const SchemaEntry& entry) {
  char buf[64];
  if (auto pm = std::get_if<int RunConfig::*>(&entry.member)) {
    std::snprintf(buf, sizeof buf, "%d", c.*(*pm));
    return buf;
  }
  if (auto pm2 = std::get_if<long RunConfig::*>(&entry.member)) {
    std::snprintf(buf, sizeof buf, "%ld", c.*(*pm2));
    return buf;
  }
  if (auto pm3 = std::get_if<double RunConfig::*>(&entry.member)) {
    std::snprintf(buf, sizeof buf, "%.17g", c.*(*pm3));
    return buf;
  }
  if (auto pm4 = std::get_if<bool RunConfig::*>(&entry.member))
    return c.*(*pm4) ? "true" : "false";
  return c.*std::get<std::string RunConfig::*>(entry.member);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

RunConfig default_config() { return {}; }

void apply_override(RunConfig& config, const std::string& key,
                    const std::string& value) {
  for (const auto& entry : schema())
    if (key == entry.key) {
      assign(config, entry, key, value);
      return;
    }
  throw std::invalid_argument("config: unknown key '" + key + "'");
}

void apply_override(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("config: override '" + assignment +
                                "' is not of the form key=value");
  apply_override(config, trim(assignment.substr(0, eq)),
                 trim(assignment.substr(eq + 1)));
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not of the form key = value");
    apply_override(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), std::move(base));
}

std::string serialize_config(const RunConfig& config) {
  std::string out;
  for (const auto& entry : schema()) {
    out += entry.key;
    out += " = ";
    out += render(config, entry);
    out += '\n';
  }
  return out;
}

std::uint64_t config_hash(const RunConfig& config) {
  return fnv1a(serialize_config(config));
}

std::uint64_t ground_config_hash(const RunConfig& config) {
  std::string out;
  for (const auto& entry : schema()) {
    const std::string key = entry.key;
    if (key.rfind("grid.", 0) == 0 || key.rfind("ions.", 0) == 0 ||
        key.rfind("ground.", 0) == 0) {
      out += key;
      out += " = ";
      out += render(config, entry);
      out += '\n';
    }
  }
  return fnv1a(out);
}

double surface_position(const RunConfig& c) {
  return c.tsurff_surface_fraction * c.grid_n_points * c.grid_dx;
}

double laser_period(const RunConfig& c) {
  return 2.0 * M_PI / c.laser_frequency;
}

double pulse_duration(const RunConfig& c) {
  return 2.0 * M_PI * c.laser_n_cycles / c.laser_frequency;
}

double default_post_pulse(const RunConfig& c) {
  if (c.time_post_pulse >= 0.0) return c.time_post_pulse;
  return surface_position(c) / std::sqrt(2.0 * c.spectrum_e_min);
}

std::vector<double> scan_amplitude_list(const RunConfig& c) {
  std::vector<double> out;
  std::istringstream in(c.scan_amplitudes);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (...) {
      used = 0;
    }
    if (used != item.size() || !(v > 0.0))
      throw std::invalid_argument("config: key 'scan.amplitudes' has bad entry '" +
                                  item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw std::invalid_argument("config: key 'scan.amplitudes' is empty");
  return out;
}

void validate_config(const RunConfig& c) {
  auto require = [](bool ok, const char* key, const char* what) {
    if (!ok)
      throw std::invalid_argument(std::string("config: key '") + key + "' " + what);
  };
  require(c.grid_n_points >= 4 && c.grid_n_points % 2 == 0, "grid.n_points",
          "must be even and >= 4");
  require(c.grid_dx > 0.0, "grid.dx", "must be positive");
  require(c.ions_count >= 1, "ions.count", "must be >= 1");
  require(c.ions_spacing > 0.0, "ions.spacing", "must be positive");
  require(c.ions_softening > 0.0, "ions.softening", "must be positive");
  require(c.ground_n_orbitals >= 1, "ground.n_orbitals", "must be >= 1");
  require(c.ground_occupancy > 0.0, "ground.occupancy", "must be positive");
  require(c.ground_dtau > 0.0, "ground.dtau", "must be positive");
  require(c.ground_mixing > 0.0 && c.ground_mixing <= 1.0, "ground.mixing",
          "must lie in (0, 1]");
  require(c.ground_tolerance > 0.0, "ground.tolerance", "must be positive");
  require(c.ground_max_iterations > 0, "ground.max_iterations", "must be positive");
  require(c.ground_n_extra_states >= 0, "ground.n_extra_states", "must be >= 0");
  require(2.0 * c.ground_init_half_width < c.grid_n_points * c.grid_dx,
          "ground.init_half_width", "must fit inside the box");
  require(c.time_dt > 0.0, "time.dt", "must be positive");
  require(c.time_checkpoint_every >= 0, "time.checkpoint_every", "must be >= 0");
  require(c.drive_kind == "none" || c.drive_kind == "pulse" || c.drive_kind == "kick",
          "drive.kind", "must be none, pulse or kick");
  if (c.drive_kind == "pulse") {
    require(c.laser_a0 >= 0.0, "laser.a0", "must be >= 0");
    require(c.laser_frequency > 0.0, "laser.frequency", "must be positive");
    require(c.laser_n_cycles >= 1, "laser.n_cycles", "must be >= 1");
    if (c.time_t_end > 0.0)
      require(c.time_t_end >= pulse_duration(c), "time.t_end",
              "must cover the whole pulse");
  }
  if (c.drive_kind == "kick")
    require(c.kick_strength >= 0.0, "kick.strength", "must be >= 0");
  require(c.absorber_width_fraction > 0.0 && c.absorber_width_fraction < 0.5,
          "absorber.width_fraction", "must lie in (0, 0.5)");
  require(c.absorber_strength >= 0.0, "absorber.strength", "must be >= 0");
  require(c.absorber_order >= 1, "absorber.order", "must be >= 1");
  require(c.tsurff_surface_fraction > 0.0 && c.tsurff_surface_fraction < 0.5,
          "tsurff.surface_fraction", "must lie in (0, 0.5)");
  require(c.tsurff_stride >= 1, "tsurff.stride", "must be >= 1");
  // Flux through an absorbing region is lost before it is counted.
  const double interior = 0.5 * c.grid_n_points * c.grid_dx *
                          (1.0 - 2.0 * c.absorber_width_fraction);
  require(surface_position(c) < interior, "tsurff.surface_fraction",
          "places the surfaces inside the absorber");
  require(c.spectrum_k_max > c.spectrum_k_min, "spectrum.k_max",
          "must exceed spectrum.k_min");
  require(c.spectrum_dk > 0.0, "spectrum.dk", "must be positive");
  require(c.spectrum_e_min > 0.0, "spectrum.e_min", "must be positive");
  require(c.linresp_t_record > 0.0, "linresp.t_record", "must be positive");
  require(c.linresp_pad_factor >= 1, "linresp.pad_factor", "must be >= 1");
  require(c.linresp_align_window > 0.0, "linresp.align_window", "must be positive");
  require(c.linresp_align_fraction > 0.0 && c.linresp_align_fraction <= 1.0,
          "linresp.align_fraction", "must lie in (0, 1]");
  require(c.linresp_omega_max > 0.0, "linresp.omega_max", "must be positive");
  require(c.modes_omega_a > 0.0, "modes.omega_a", "must be positive");
  require(c.modes_omega_b > 0.0, "modes.omega_b", "must be positive");
  require(c.gabor_sigma >= 0.0, "gabor.sigma", "must be >= 0");
  require(c.gabor_center_spacing >= 0.0, "gabor.center_spacing", "must be >= 0");
  require(c.gabor_dk >= 0.0, "gabor.dk", "must be >= 0");
  require(c.scan_ati_window_fraction > 0.0, "scan.ati_window_fraction",
          "must be positive");
  require(c.scan_plasmon_window_fraction > 0.0, "scan.plasmon_window_fraction",
          "must be positive");
  require(!c.output_dir.empty(), "output.dir", "must not be empty");
}

}  // namespace tdks
