#include "antwalk/experiment/output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "antwalk/stats.hpp"

namespace antwalk::experiment {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer, end);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::span<const std::string> header)
    : out_(path, std::ios::binary), columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const auto& name : header) field(name);
  end_row();
}

void CsvWriter::separator() {
  if (in_row_ == columns_) throw std::logic_error("CsvWriter: too many fields in row");
  if (in_row_++ != 0) out_.put(',');
}

CsvWriter& CsvWriter::field(std::string_view text) {
  separator();
  out_ << text;
  return *this;
}

CsvWriter& CsvWriter::field(double value) { return field(std::string_view(format_double(value))); }

CsvWriter& CsvWriter::field(std::uint64_t value) {
  return field(std::string_view(std::to_string(value)));
}

CsvWriter& CsvWriter::field(std::int64_t value) {
  return field(std::string_view(std::to_string(value)));
}

void CsvWriter::end_row() {
  if (in_row_ != columns_) throw std::logic_error("CsvWriter: row has missing fields");
  out_.put('\n');
  in_row_ = 0;
  if (!out_) throw std::runtime_error("CsvWriter: write failed");
}

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::ordered_json describe(const std::vector<double>& values) {
  if (values.empty()) return nullptr;
  nlohmann::ordered_json j;
  j["count"] = values.size();
  j["mean"] = mean(values);
  j["sd"] = sample_sd(values);
  j["min"] = quantile(values, 0.0);
  j["q05"] = quantile(values, 0.05);
  j["q25"] = quantile(values, 0.25);
  j["median"] = quantile(values, 0.5);
  j["q75"] = quantile(values, 0.75);
  j["q95"] = quantile(values, 0.95);
  j["max"] = quantile(values, 1.0);
  return j;
}

nlohmann::ordered_json summary_header(std::string_view command,
                                      const nlohmann::ordered_json& config, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = config;
  return j;
}

}  // namespace antwalk::experiment
