#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace antwalk::experiment {

inline constexpr int kSchemaVersion = 1;

/// Shortest text that reads back to the same double; never locale dependent.
std::string format_double(double value);

/// Comma-separated writer; fields are never quoted, so names must not contain
/// commas.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::span<const std::string> header);

  CsvWriter& field(std::string_view text);
  CsvWriter& field(double value);
  CsvWriter& field(std::uint64_t value);
  CsvWriter& field(std::int64_t value);
  CsvWriter& field(std::uint32_t value) { return field(static_cast<std::uint64_t>(value)); }
  CsvWriter& field(int value) { return field(static_cast<std::int64_t>(value)); }
  CsvWriter& field(bool value) { return field(static_cast<std::uint64_t>(value ? 1 : 0)); }
  void end_row();

  std::size_t columns() const noexcept { return columns_; }

 private:
  void separator();

  std::ofstream out_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
};

/// Writes `doc` with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

/// Mean, sd and quantiles 0.05 / 0.25 / 0.5 / 0.75 / 0.95; null when empty.
nlohmann::ordered_json describe(const std::vector<double>& values);

/// Opening fields shared by every summary.json.
nlohmann::ordered_json summary_header(std::string_view command,
                                      const nlohmann::ordered_json& config, std::uint64_t seed);

}  // namespace antwalk::experiment
