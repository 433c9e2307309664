#include "tdks/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace tdks {

namespace {

constexpr std::uint32_t kFormatVersion = 1;
constexpr std::uint32_t kEndianTag = 0x01020304u;

template <class T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T read_pod(std::istream& in, const char* what) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw std::invalid_argument(std::string("file: truncated reading ") + what);
  return v;
}

void write_header(std::ostream& out, const char magic[8], std::uint64_t hash) {
  out.write(magic, 8);
  write_pod(out, kFormatVersion);
  write_pod(out, kEndianTag);
  write_pod(out, hash);
}

std::uint64_t read_header(std::istream& in, const char magic[8]) {
  char m[8];
  in.read(m, 8);
  if (!in || std::memcmp(m, magic, 8) != 0)
    throw std::invalid_argument("file: wrong magic (not the expected format)");
  const auto version = read_pod<std::uint32_t>(in, "version");
  if (version != kFormatVersion)
    throw std::invalid_argument("file: unsupported format version " +
                                std::to_string(version));
  const auto endian = read_pod<std::uint32_t>(in, "endianness");
  if (endian != kEndianTag)
    throw std::invalid_argument("file: endianness mismatch");
  return read_pod<std::uint64_t>(in, "config hash");
}

template <class Scalar>
void write_array(std::ostream& out, const Scalar* data, std::size_t count) {
  out.write(reinterpret_cast<const char*>(data), count * sizeof(Scalar));
}

template <class Scalar>
void read_array(std::istream& in, Scalar* data, std::size_t count, const char* what) {
  in.read(reinterpret_cast<char*>(data), count * sizeof(Scalar));
  if (!in) throw std::invalid_argument(std::string("file: truncated reading ") + what);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("file: cannot write '" + path + "'");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("file: cannot open '" + path + "'");
  return in;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const RunConfig& config,
               const std::vector<CsvColumn>& columns,
               const std::vector<std::string>& extra_comments) {
  if (columns.empty()) throw std::invalid_argument("csv: no columns");
  const auto rows = columns.front().values.size();
  for (const auto& col : columns)
    if (col.values.size() != rows)
      throw std::invalid_argument("csv: column '" + col.name + "' has odd length");

  std::ofstream out(path);
  if (!out) throw std::runtime_error("file: cannot write '" + path + "'");
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(config_hash(config)));
  out << "# config_hash = " << hash << "\n";
  for (const auto& line : extra_comments) out << "# " << line << "\n";
  std::istringstream cfg(serialize_config(config));
  std::string line;
  while (std::getline(cfg, line)) out << "# " << line << "\n";

  for (std::size_t c = 0; c < columns.size(); ++c)
    out << (c ? "," : "") << columns[c].name;
  out << "\n";
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c)
      out << (c ? "," : "") << format_double(columns[c].values[r]);
    out << "\n";
  }
  if (!out) throw std::runtime_error("file: write failed for '" + path + "'");
}

void write_checkpoint(const std::string& path, const RunConfig& config,
                      const CheckpointData& data) {
  auto out = open_out(path);
  write_header(out, "TDKSCKP\0", config_hash(config));
  write_pod(out, data.time);
  write_pod(out, data.alpha);
  write_pod(out, static_cast<std::int64_t>(data.step_count));
  write_pod(out, data.occupancy);
  write_pod(out, static_cast<std::int64_t>(data.phi.rows()));
  write_pod(out, static_cast<std::int64_t>(data.phi.cols()));
  write_array(out, data.phi.data(), static_cast<std::size_t>(data.phi.size()));
  if (!out) throw std::runtime_error("file: write failed for '" + path + "'");
}

CheckpointData read_checkpoint(const std::string& path, const RunConfig& config) {
  auto in = open_in(path);
  const auto hash = read_header(in, "TDKSCKP\0");
  if (hash != config_hash(config))
    throw std::invalid_argument(
        "checkpoint: config does not match the one it was written with");
  CheckpointData data;
  data.time = read_pod<double>(in, "time");
  data.alpha = read_pod<double>(in, "alpha");
  data.step_count = static_cast<long>(read_pod<std::int64_t>(in, "step count"));
  data.occupancy = read_pod<double>(in, "occupancy");
  const auto rows = read_pod<std::int64_t>(in, "rows");
  const auto cols = read_pod<std::int64_t>(in, "cols");
  if (rows < 1 || cols < 1 || rows > (1 << 24) || cols > (1 << 16))
    throw std::invalid_argument("checkpoint: implausible orbital shape");
  data.phi.resize(rows, cols);
  read_array(in, data.phi.data(), static_cast<std::size_t>(rows * cols), "orbitals");
  return data;
}

void write_ground_state(const std::string& path, const RunConfig& config,
                        const GroundStateFile& data) {
  auto out = open_out(path);
  write_header(out, "TDKSGST\0", ground_config_hash(config));
  write_pod(out, data.occupancy);
  write_pod(out, static_cast<std::int64_t>(data.phi.rows()));
  write_pod(out, static_cast<std::int64_t>(data.phi.cols()));
  write_array(out, data.phi.data(), static_cast<std::size_t>(data.phi.size()));
  write_pod(out, static_cast<std::int64_t>(data.energies.size()));
  write_array(out, data.energies.data(), static_cast<std::size_t>(data.energies.size()));
  if (!out) throw std::runtime_error("file: write failed for '" + path + "'");
}

namespace {

GroundStateFile read_ground_state_impl(std::istream& in) {
  GroundStateFile data;
  data.occupancy = read_pod<double>(in, "occupancy");
  const auto rows = read_pod<std::int64_t>(in, "rows");
  const auto cols = read_pod<std::int64_t>(in, "cols");
  if (rows < 1 || cols < 1 || rows > (1 << 24) || cols > (1 << 16))
    throw std::invalid_argument("ground state file: implausible orbital shape");
  data.phi.resize(rows, cols);
  read_array(in, data.phi.data(), static_cast<std::size_t>(rows * cols), "orbitals");
  const auto ne = read_pod<std::int64_t>(in, "level count");
  if (ne < 0 || ne > (1 << 16))
    throw std::invalid_argument("ground state file: implausible level count");
  data.energies.resize(ne);
  read_array(in, data.energies.data(), static_cast<std::size_t>(ne), "energies");
  return data;
}

}  // namespace

GroundStateFile read_ground_state(const std::string& path, const RunConfig& config) {
  auto in = open_in(path);
  const auto hash = read_header(in, "TDKSGST\0");
  if (hash != ground_config_hash(config))
    throw std::invalid_argument(
        "ground state file: grid/ions/ground settings do not match");
  return read_ground_state_impl(in);
}

bool ground_state_matches(const std::string& path, const RunConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  try {
    return read_header(in, "TDKSGST\0") == ground_config_hash(config);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

void write_surface_record(const std::string& path, const RunConfig& config,
                          const SurfaceRecord& rec) {
  auto out = open_out(path);
  write_header(out, "TDKSSRF\0", config_hash(config));
  write_pod(out, rec.x_surface);
  write_pod(out, rec.dt);
  write_pod(out, static_cast<std::int64_t>(rec.n_samples()));
  write_pod(out, static_cast<std::int64_t>(rec.n_orbitals));
  const auto ns = static_cast<std::size_t>(rec.n_samples());
  write_array(out, rec.t.data(), ns);
  write_array(out, rec.a.data(), ns);
  write_array(out, rec.alpha.data(), ns);
  for (const auto* block : {&rec.phi_r, &rec.dphi_r, &rec.phi_l, &rec.dphi_l})
    write_array(out, block->data(), static_cast<std::size_t>(block->size()));
  if (!out) throw std::runtime_error("file: write failed for '" + path + "'");
}

SurfaceRecord read_surface_record(const std::string& path) {
  auto in = open_in(path);
  (void)read_header(in, "TDKSSRF\0");
  SurfaceRecord rec;
  rec.x_surface = read_pod<double>(in, "surface position");
  rec.dt = read_pod<double>(in, "dt");
  const auto ns = read_pod<std::int64_t>(in, "sample count");
  const auto no = read_pod<std::int64_t>(in, "orbital count");
  if (ns < 2 || no < 1 || ns > (1ll << 32) || no > (1 << 16))
    throw std::invalid_argument("surface record: implausible shape");
  rec.n_orbitals = static_cast<int>(no);
  rec.t.resize(ns);
  rec.a.resize(ns);
  rec.alpha.resize(ns);
  read_array(in, rec.t.data(), static_cast<std::size_t>(ns), "times");
  read_array(in, rec.a.data(), static_cast<std::size_t>(ns), "vector potential");
  read_array(in, rec.alpha.data(), static_cast<std::size_t>(ns), "alpha");
  for (auto* block : {&rec.phi_r, &rec.dphi_r, &rec.phi_l, &rec.dphi_l}) {
    block->resize(ns, no);
    read_array(in, block->data(), static_cast<std::size_t>(ns * no), "surface values");
  }
  return rec;
}

SurfaceRecord truncate_record(const SurfaceRecord& rec, double t_max) {
  int n = 0;
  while (n < rec.n_samples() && rec.t[n] <= t_max + 1e-9) ++n;
  if (n < 2) throw std::invalid_argument("surface record: truncation leaves nothing");
  if (n == rec.n_samples()) return rec;
  SurfaceRecord out;
  out.x_surface = rec.x_surface;
  out.dt = rec.dt;
  out.n_orbitals = rec.n_orbitals;
  out.t = rec.t.head(n);
  out.a = rec.a.head(n);
  out.alpha = rec.alpha.head(n);
  out.phi_r = rec.phi_r.topRows(n);
  out.dphi_r = rec.dphi_r.topRows(n);
  out.phi_l = rec.phi_l.topRows(n);
  out.dphi_l = rec.dphi_l.topRows(n);
  return out;
}

}  // namespace tdks
