#include "cyclight/synth/counts.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "cyclight/errors.hpp"
#include "cyclight/util/fnv.hpp"

namespace cyclight::synth {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_count(const std::string& s, const std::string& context) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || v < 0 || !std::isfinite(v)) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw IngestError("bad count value '" + s + "' " + context);
    }
}

int parse_hour(const std::string& s, const std::string& context) {
    int h = -1;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), h);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || h < 0 ||
        h >= CountProfile::kHours) {
        throw IngestError("bad hour '" + s + "' " + context);
    }
    return h;
}

std::string list_missing_hours(const std::array<bool, CountProfile::kHours>& seen) {
    std::string out;
    for (int h = 0; h < CountProfile::kHours; ++h) {
        if (!seen[h]) {
            if (!out.empty()) out += ",";
            out += std::to_string(h);
        }
    }
    return out;
}

}  // namespace

void CountProfile::set_count(sim::LaneId lane, int hour, double c) {
    if (lane < 0 || lane >= sim::kNumLanes || hour < 0 || hour >= kHours || c < 0) {
        throw IngestError("count out of range");
    }
    counts_[lane][hour] = c;
}

std::uint64_t CountProfile::hash() const {
    Fnv1a h;
    for (int lane = 0; lane < sim::kNumLanes; ++lane) {
        for (int hour = 0; hour < kHours; ++hour) {
            h.add(counts_[lane][hour]);
        }
    }
    return h.value();
}

void CountProfile::save_csv(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw IngestError("cannot write profile file: " + path.string());
    if (!provenance_.empty()) out << "# " << provenance_ << "\n";
    out << "lane_id,hour,count\n";
    for (int lane = 0; lane < sim::kNumLanes; ++lane) {
        for (int hour = 0; hour < kHours; ++hour) {
            out << sim::lane_name(lane) << "," << hour << "," << counts_[lane][hour] << "\n";
        }
    }
}

CountProfile CountProfile::load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open profile file: " + path.string());
    CountProfile profile;
    std::array<std::array<bool, kHours>, sim::kNumLanes> seen{};
    std::string line;
    bool header_done = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_done) {
            if (line != "lane_id,hour,count") {
                throw IngestError("unexpected profile header: " + line);
            }
            header_done = true;
            continue;
        }
        const auto fields = split_csv(line);
        const std::string context = "at " + path.string() + ":" + std::to_string(line_no);
        if (fields.size() != 3) throw IngestError("expected 3 fields " + context);
        sim::LaneId lane;
        try {
            lane = sim::parse_lane(fields[0]);
        } catch (const TraceError& e) {
            throw IngestError(std::string(e.what()) + " " + context);
        }
        const int hour = parse_hour(fields[1], context);
        profile.counts_[lane][hour] = parse_count(fields[2], context);
        seen[lane][hour] = true;
    }
    for (int lane = 0; lane < sim::kNumLanes; ++lane) {
        const auto missing = list_missing_hours(seen[lane]);
        if (!missing.empty()) {
            throw IngestError("profile lane " + std::string(sim::lane_name(lane)) +
                              " missing hours: " + missing);
        }
    }
    return profile;
}

bool is_raw_counter_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open counts file: " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        return line == "counter,hour,count";
    }
    return false;
}

CountProfile ingest_counts(const std::filesystem::path& raw_csv) {
    std::ifstream in(raw_csv);
    if (!in) throw IngestError("cannot open counts file: " + raw_csv.string());

    static constexpr const char* kCounters[] = {"car_dir1", "car_dir2", "bike_bidir"};
    std::map<std::string, std::array<double, CountProfile::kHours>> values;
    std::map<std::string, std::array<bool, CountProfile::kHours>> seen;

    std::string line;
    bool header_done = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_done) {
            if (line != "counter,hour,count") {
                throw IngestError("unexpected counter header: " + line);
            }
            header_done = true;
            continue;
        }
        const auto fields = split_csv(line);
        const std::string context = "at " + raw_csv.string() + ":" + std::to_string(line_no);
        if (fields.size() != 3) throw IngestError("expected 3 fields " + context);
        const std::string& counter = fields[0];
        if (std::find(std::begin(kCounters), std::end(kCounters), counter) ==
            std::end(kCounters)) {
            throw IngestError("unknown counter '" + counter + "' " + context);
        }
        const int hour = parse_hour(fields[1], context);
        values[counter][hour] = parse_count(fields[2], context);
        seen[counter][hour] = true;
    }
    for (const char* counter : kCounters) {
        const auto missing = list_missing_hours(seen[counter]);
        if (!missing.empty()) {
            throw IngestError(std::string("counter ") + counter +
                              " missing hours: " + missing);
        }
    }

    using sim::Approach;
    using sim::LaneKind;
    CountProfile profile;
    for (int hour = 0; hour < CountProfile::kHours; ++hour) {
        const double dir1_car = values["car_dir1"][hour] / 2.0;  // two real lanes -> one
        const double dir2_car = values["car_dir2"][hour] / 2.0;
        const double bike = values["bike_bidir"][hour] / 2.0;  // even directional split
        profile.set_count(sim::lane_id(Approach::N, LaneKind::Car), hour, dir1_car);
        profile.set_count(sim::lane_id(Approach::E, LaneKind::Car), hour, dir1_car);
        profile.set_count(sim::lane_id(Approach::S, LaneKind::Car), hour, dir2_car);
        profile.set_count(sim::lane_id(Approach::W, LaneKind::Car), hour, dir2_car);
        for (int a = 0; a < sim::kNumApproaches; ++a) {
            profile.set_count(sim::lane_id(static_cast<Approach>(a), LaneKind::Bike), hour,
                              bike);
        }
    }
    profile.set_provenance(
        "ingested from " + raw_csv.filename().string() +
        "; mapping: car_dir1/2->{N_car,E_car}, car_dir2/2->{S_car,W_car}, "
        "bike_bidir/2->each bike lane");
    return profile;
}

double lambda_at(const CountProfile& profile, sim::LaneId lane, int t_s) {
    const int hour = (t_s / 3600) % CountProfile::kHours;
    return profile.count(lane, hour) / 3600.0;
}

}  // namespace cyclight::synth
