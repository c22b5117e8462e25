#pragma once

#include <stdexcept>
#include <string>

namespace cyclight {

/// Invalid layout, vehicle or experiment configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A spawn was requested with a destination the lane cannot legally reach.
struct RouteError : std::runtime_error {
    explicit RouteError(const std::string& what) : std::runtime_error(what) {}
};

/// Count data could not be ingested (missing hours, bad rows, unknown counters).
struct IngestError : std::runtime_error {
    explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

/// A traffic trace references unknown lanes or is malformed.
struct TraceError : std::runtime_error {
    explicit TraceError(const std::string& what) : std::runtime_error(what) {}
};

/// Run summaries from different traces were compared.
struct ComparisonError : std::runtime_error {
    explicit ComparisonError(const std::string& what) : std::runtime_error(what) {}
};

/// Training produced a non-finite loss or similar numerical failure.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclight
