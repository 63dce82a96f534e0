#pragma once

// Batch file formats: job input (CSV or line-delimited JSON) and result output.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <quartic/solve.hpp>

namespace quartic::cli {

enum class Format { Csv, Jsonl };

/// .csv selects CSV; .jsonl, .ndjson and .json select JSON lines. Anything
/// else is decided by the first non-blank character of the content.
std::optional<Format> format_from_extension(const std::string& path);
Format sniff_format(const std::string& content);
std::optional<Format> parse_format_name(const std::string& name);

struct JobOptions {
  std::optional<bool> polish;
  std::optional<double> tol;
};

struct JobRecord {
  std::string id;
  std::array<double, 5> coeffs{};  // e4 first
  JobOptions options;
};

struct ParseError {
  std::string id;
  std::string message;
};

using ParsedLine = std::variant<JobRecord, ParseError>;

/// One entry per non-blank input line (a CSV header line excluded). Malformed
/// lines become ParseError entries; ids must be unique within the batch.
std::vector<ParsedLine> parse_jobs(const std::string& content, Format format);

struct ResultRecord {
  std::string id;
  std::string classification;
  std::vector<std::pair<double, int>> real_roots;
  std::vector<std::pair<double, double>> complex_pairs;
  std::string branch;
  double max_residual = 0.0;
  std::optional<bool> oracle_agreement;
  std::int64_t time_ns = 0;
  std::optional<std::string> error;
};

ResultRecord make_result(const std::string& id, const SolveReport<double>& report, std::int64_t time_ns);
ResultRecord make_error(const std::string& id, const std::string& message);

std::string classification_label(const RootSet<double>& roots);

std::string to_jsonl(const ResultRecord& record);
std::string csv_header();
std::string to_csv(const ResultRecord& record);

}  // namespace quartic::cli
