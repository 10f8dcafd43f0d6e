#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "boltzkit/field.hpp"

namespace boltzkit {

/// Flat binary container for phase-space fields and trajectories.
///
/// Layout (little-endian):
///   bytes 0..7   magic "KINFLD01"
///   u32          format version (currently 1)
///   u32          d_x (0 = homogeneous, 1 = slab)
///   u32          n_x
///   u32          n (velocity points per axis)
///   f64          R (velocity half-width)
///   f64          L (slab length; 0 when d_x = 0)
///   u32          n_t (number of time slices)
///   f64          t0
///   f64          dt (0 when n_t = 1)
///   payload      n_t * n_x * n^3 f64 samples, time-major, then x, then
///                lexicographic velocity order
struct TrajectoryHeader {
    std::uint32_t d_x = 0;
    std::uint32_t n_x = 1;
    std::uint32_t n = 0;
    double extent = 0.0;
    double length = 0.0;
    std::uint32_t n_t = 1;
    double t0 = 0.0;
    double dt = 0.0;
};

void write_trajectory(const std::string& path, std::span<const SlabField> traj,
                      double t0, double dt);

struct LoadedTrajectory {
    TrajectoryHeader header;
    std::vector<SlabField> fields;
};

LoadedTrajectory read_trajectory(const std::string& path);

/// Single-slice convenience wrappers (n_t = 1, t0 = 0).
void write_field(const std::string& path, const SlabField& f);
void write_field(const std::string& path, const VelocityField& f);
SlabField read_slab_field(const std::string& path);
VelocityField read_velocity_field(const std::string& path);

/// CSV emitter: header row first, data rows with doubles rendered as %.17g
/// (round-trip exact), and a trailing '#' metadata block. Writing the
/// metadata closes the file.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, std::span<const std::string> columns);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(std::span<const double> values);
    void raw_row(const std::string& line);

    /// Appends "# key=value" lines and closes the stream. Call last.
    void finish(const std::map<std::string, std::string>& metadata);

  private:
    struct Impl;
    Impl* impl_;
};

/// %.17g rendering used across all text outputs.
std::string format_double(double v);

/// Small-grid CSV dump of a velocity field: vx,vy,vz,value rows.
void write_field_csv(const std::string& path, const VelocityField& f,
                     const std::map<std::string, std::string>& metadata);

}  // namespace boltzkit
