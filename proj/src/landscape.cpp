#include "nfl/landscape.hpp"

#include <stdexcept>

#include "nfl/table_io.hpp"

namespace nfl {

std::int64_t count_peaks(std::span<const std::uint64_t> values) {
  const std::size_t count = values.size();
  if (count < 2)
    throw std::invalid_argument("peak counting needs at least two values");
  std::int64_t peaks = 0;
  if (values[1] > values[0]) ++peaks;
  for (std::size_t i = 1; i + 1 < count; ++i)
    if (values[i - 1] > values[i] && values[i + 1] > values[i]) ++peaks;
  if (values[count - 2] > values[count - 1]) ++peaks;
  return peaks;
}

std::int64_t count_peaks(const TableFunction& t) {
  validate(t);
  if (t.n < 2)
    throw std::invalid_argument("peak counting needs at least a 2-bit domain");
  return count_peaks(std::span<const std::uint64_t>(t.values));
}

LandscapeReport landscape_report(const TableFunction& t,
                                 const std::string& source) {
  LandscapeReport report;
  report.source = source;
  report.n = t.n;
  report.m = t.m;
  report.peak_count = count_peaks(t);
  report.peak_fraction = static_cast<double>(report.peak_count) /
                         static_cast<double>(t.values.size());
  return report;
}

LandscapeSummary landscape_report(
    const std::vector<std::filesystem::path>& files) {
  if (files.empty())
    throw std::invalid_argument("at least one table file required");
  LandscapeSummary summary;
  summary.reports.reserve(files.size());
  for (const auto& file : files)
    summary.reports.push_back(
        landscape_report(load_table(file), file.string()));
  double count_sum = 0.0;
  double fraction_sum = 0.0;
  for (const LandscapeReport& r : summary.reports) {
    count_sum += static_cast<double>(r.peak_count);
    fraction_sum += r.peak_fraction;
  }
  summary.mean_peak_count = count_sum / static_cast<double>(files.size());
  summary.mean_peak_fraction =
      fraction_sum / static_cast<double>(files.size());
  return summary;
}

double expected_peak_fraction(int m) {
  if (m < 1 || m > 62)
    throw std::invalid_argument("output width must lie in [1, 62]");
  // Sum over v of (1/Y)((Y-1-v)/Y)^2 = (sum of k^2 for k < Y) / Y^3
  //                                  = (Y-1)(2Y-1) / (6 Y^2).
  const double y = static_cast<double>(std::int64_t{1} << m);
  return (y - 1.0) * (2.0 * y - 1.0) / (6.0 * y * y);
}

}  // namespace nfl
