#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nfl/table_function.hpp"

namespace nfl {

/// Peaks of one table: points whose neighbors (by input index) are all
/// strictly higher, i.e. local minima of the value sequence. Endpoints
/// count when their single neighbor is strictly higher.
struct LandscapeReport {
  std::string source;  // file name or label
  int n = 0;
  int m = 0;
  std::int64_t peak_count = 0;
  double peak_fraction = 0.0;  // peak_count / 2^n
};

/// Aggregate over several tables.
struct LandscapeSummary {
  std::vector<LandscapeReport> reports;
  double mean_peak_count = 0.0;
  double mean_peak_fraction = 0.0;
};

std::int64_t count_peaks(std::span<const std::uint64_t> values);
std::int64_t count_peaks(const TableFunction& t);

LandscapeReport landscape_report(const TableFunction& t,
                                 const std::string& source);

/// Loads each file and reports per-file counts plus means. Unreadable or
/// corrupt files raise errors naming the file.
LandscapeSummary landscape_report(
    const std::vector<std::filesystem::path>& files);

/// Expected peak fraction of an interior point of an iid-uniform table with
/// m output bits: sum over v of (1/Y) * ((Y-1-v)/Y)^2 where Y = 2^m.
double expected_peak_fraction(int m);

}  // namespace nfl
