#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "cyclight/sim/types.hpp"

namespace cyclight::synth {

/// Hourly per-lane demand, 24 entries per incoming lane. Counts are
/// vehicles per hour and may be fractional after ingestion (car counts are
/// halved, bidirectional bike counts split per direction).
class CountProfile {
  public:
    static constexpr int kHours = 24;

    double count(sim::LaneId lane, int hour) const { return counts_[lane][hour]; }
    void set_count(sim::LaneId lane, int hour, double c);

    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

    /// Hash over the counts only, part of trace identities.
    std::uint64_t hash() const;

    void save_csv(const std::filesystem::path& path) const;
    static CountProfile load_csv(const std::filesystem::path& path);

  private:
    std::array<std::array<double, kHours>, sim::kNumLanes> counts_{};
    std::string provenance_;
};

/// Build a profile from raw counter rows (CSV: counter,hour,count) with
/// counters car_dir1, car_dir2 and bike_bidir. Directional car counts are
/// halved onto the single simulated car lane, the bidirectional bike count
/// splits evenly per direction, and both axes reuse the same boulevard
/// profile: car_dir1 -> {N_car, E_car}, car_dir2 -> {S_car, W_car},
/// bike_bidir/2 -> every bike lane.
CountProfile ingest_counts(const std::filesystem::path& raw_csv);

/// True when the file's header is the raw counter format handled by
/// ingest_counts, false for the lane profile format.
bool is_raw_counter_file(const std::filesystem::path& path);

/// Arrivals per second for the lane at simulation time t (hour = floor(t/3600)).
double lambda_at(const CountProfile& profile, sim::LaneId lane, int t_s);

}  // namespace cyclight::synth
