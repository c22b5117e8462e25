#include "cyclight/metrics/summary.hpp"

#include <fstream>

#include <json.hpp>

#include "cyclight/errors.hpp"

namespace cyclight::metrics {

int attribute_hour(const sim::VehicleRecord& record) {
    return std::min(static_cast<int>(record.spawn_time_s / 3600), 23);
}

RunSummary summarize(const eval::RunResult& run) {
    RunSummary s;
    s.controller = run.controller;
    s.trace_id = run.trace_id;
    for (const sim::VehicleRecord& rec : run.records) {
        HourlyStats& hour = s.hours[static_cast<std::size_t>(attribute_hour(rec))];
        if (rec.kind == sim::LaneKind::Bike) {
            ++hour.n_bikes;
            hour.wait_bike_sum += rec.waiting_time_s;
        } else {
            ++hour.n_cars;
            hour.wait_car_sum += rec.waiting_time_s;
        }
    }
    double window_bike_sum = 0;
    double window_car_sum = 0;
    for (int h = 0; h < 24; ++h) {
        const HourlyStats& hour = s.hours[static_cast<std::size_t>(h)];
        s.total_vehicles += hour.n_all();
        s.total_wait_sum += hour.wait_all_sum();
        if (h >= kWindowFirstHour && h <= kWindowLastHour) {
            s.window_wait_sum += hour.wait_all_sum();
            s.window_n_bikes += hour.n_bikes;
            s.window_n_cars += hour.n_cars;
            window_bike_sum += hour.wait_bike_sum;
            window_car_sum += hour.wait_car_sum;
        }
    }
    if (s.window_n_bikes > 0) s.window_mean_bike = window_bike_sum / s.window_n_bikes;
    if (s.window_n_cars > 0) s.window_mean_car = window_car_sum / s.window_n_cars;
    if (s.total_vehicles > 0) s.daily_mean_wait = s.total_wait_sum / s.total_vehicles;
    return s;
}

RatioTable compare(const RunSummary& baseline, const std::vector<RunSummary>& others) {
    if (!baseline.daily_mean_wait || *baseline.daily_mean_wait <= 0) {
        throw ComparisonError("baseline run has no usable daily mean waiting time");
    }
    RatioTable table;
    table.baseline = baseline.controller;
    table.trace_id = baseline.trace_id;
    table.rows.push_back(RatioRow{baseline.controller, *baseline.daily_mean_wait, 1.0});
    for (const RunSummary& other : others) {
        if (other.trace_id != baseline.trace_id) {
            throw ComparisonError("run " + other.controller + " used trace " + other.trace_id +
                                  ", baseline used " + baseline.trace_id);
        }
        const double mean = other.daily_mean_wait.value_or(0.0);
        table.rows.push_back(
            RatioRow{other.controller, mean, mean / *baseline.daily_mean_wait});
    }
    return table;
}

void write_run_log(const std::filesystem::path& path,
                   const std::vector<sim::VehicleRecord>& records) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write run log: " + path.string());
    out << "id,vtype,spawn_time_s,depart_time_s,waiting_time_s\n";
    for (const sim::VehicleRecord& rec : records) {
        out << rec.id << "," << (rec.kind == sim::LaneKind::Bike ? "bike" : "car") << ","
            << rec.spawn_time_s << ",";
        if (rec.depart_time_s >= 0) out << rec.depart_time_s;
        out << "," << rec.waiting_time_s << "\n";
    }
}

void write_summary_csv(const std::filesystem::path& path, const RunSummary& summary) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write summary: " + path.string());
    out << "hour,n_bikes,n_cars,mean_wait_bike_s,mean_wait_car_s,mean_wait_all_s\n";
    auto field = [&out](const std::optional<double>& v) {
        if (v) out << *v;
    };
    for (int h = 0; h < 24; ++h) {
        const HourlyStats& hour = summary.hours[static_cast<std::size_t>(h)];
        out << h << "," << hour.n_bikes << "," << hour.n_cars << ",";
        field(hour.mean_bike());
        out << ",";
        field(hour.mean_car());
        out << ",";
        field(hour.mean_all());
        out << "\n";
    }
}

namespace {

nlohmann::json optional_to_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace

void write_summary_json(const std::filesystem::path& path, const RunSummary& summary) {
    nlohmann::json j;
    j["controller"] = summary.controller;
    j["trace_id"] = summary.trace_id;
    j["window"] = {
        {"first_hour", kWindowFirstHour},
        {"last_hour", kWindowLastHour},
        {"wait_sum_s", summary.window_wait_sum},
        {"n_bikes", summary.window_n_bikes},
        {"n_cars", summary.window_n_cars},
        {"mean_wait_bike_s", optional_to_json(summary.window_mean_bike)},
        {"mean_wait_car_s", optional_to_json(summary.window_mean_car)},
    };
    j["daily"] = {
        {"vehicles", summary.total_vehicles},
        {"wait_sum_s", summary.total_wait_sum},
        {"mean_wait_s", optional_to_json(summary.daily_mean_wait)},
    };
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write summary json: " + path.string());
    out << j.dump(2) << "\n";
}

void write_ratios_json(const std::filesystem::path& path, const RatioTable& table) {
    nlohmann::json j;
    j["baseline"] = table.baseline;
    j["trace_id"] = table.trace_id;
    j["rows"] = nlohmann::json::array();
    for (const RatioRow& row : table.rows) {
        j["rows"].push_back({{"controller", row.controller},
                             {"daily_mean_wait_s", row.daily_mean_wait},
                             {"ratio_vs_baseline", row.ratio_vs_baseline}});
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write ratios json: " + path.string());
    out << j.dump(2) << "\n";
}

}  // namespace cyclight::metrics
