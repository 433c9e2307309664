#pragma once

#include <string>
#include <vector>

#include "tdks/config.hpp"
#include "tdks/linresp.hpp"
#include "tdks/tsurff.hpp"
#include "tdks/types.hpp"

namespace tdks {

// One CSV column: name carries the unit in brackets, e.g. "energy[au]".
struct CsvColumn {
  std::string name;
  Eigen::ArrayXd values;
};

// Deterministic CSV: '#'-prefixed header comments (config + hash), then the
// column row, then %.17g-rendered data.  Identical input bytes in, identical
// file bytes out.
void write_csv(const std::string& path, const RunConfig& config,
               const std::vector<CsvColumn>& columns,
               const std::vector<std::string>& extra_comments = {});

std::string format_double(double v);  // the %.17g rendering used everywhere

// Saved propagation state; resuming from it continues bit-identically.
struct CheckpointData {
  double time = 0.0;
  double alpha = 0.0;
  long step_count = 0;
  double occupancy = 2.0;
  OrbitalMatrix phi;
};

void write_checkpoint(const std::string& path, const RunConfig& config,
                      const CheckpointData& data);
CheckpointData read_checkpoint(const std::string& path, const RunConfig& config);

// Ground-state cache: real orbitals plus their energies.
struct GroundStateFile {
  double occupancy = 2.0;
  RealOrbitalMatrix phi;
  Eigen::VectorXd energies;
};

void write_ground_state(const std::string& path, const RunConfig& config,
                        const GroundStateFile& data);
// Requires the stored grid/ions/ground keys to match `config`.
GroundStateFile read_ground_state(const std::string& path, const RunConfig& config);
bool ground_state_matches(const std::string& path, const RunConfig& config);

void write_surface_record(const std::string& path, const RunConfig& config,
                          const SurfaceRecord& record);
SurfaceRecord read_surface_record(const std::string& path);

// Drop all samples later than t_max; the record of a shorter run.
SurfaceRecord truncate_record(const SurfaceRecord& record, double t_max);

}  // namespace tdks
