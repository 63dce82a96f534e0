#include "records.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

namespace quartic::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<double> parse_number(const std::string& field) {
  const std::string t = trim(field);
  if (t.empty()) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool all_finite(const std::array<double, 5>& c) {
  return std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); });
}

ParsedLine parse_csv_line(const std::string& line, std::size_t line_no) {
  const auto fields = split_csv(line);
  const std::string id = fields.empty() || fields[0].empty() ? "line " + std::to_string(line_no) : fields[0];
  if (fields.size() != 6) {
    return ParseError{id, "expected 6 fields (id,e4,e3,e2,e1,e0), got " + std::to_string(fields.size())};
  }
  JobRecord job{id, {}, {}};
  for (std::size_t k = 0; k < 5; ++k) {
    const auto v = parse_number(fields[k + 1]);
    if (!v) return ParseError{id, "malformed coefficient '" + fields[k + 1] + "'"};
    job.coeffs[k] = *v;
  }
  if (!all_finite(job.coeffs)) return ParseError{id, "non-finite coefficient"};
  return job;
}

ParsedLine parse_json_line(const std::string& line, std::size_t line_no) {
  const std::string fallback_id = "line " + std::to_string(line_no);
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return ParseError{fallback_id, "malformed JSON record"};

  std::string id = fallback_id;
  if (j.contains("id")) {
    const auto& jid = j["id"];
    if (jid.is_string()) {
      id = jid.get<std::string>();
    } else if (jid.is_number()) {
      id = jid.dump();
    } else {
      return ParseError{fallback_id, "id must be a string or number"};
    }
  } else {
    return ParseError{fallback_id, "missing id"};
  }

  if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].size() != 5) {
    return ParseError{id, "coeffs must be an array of 5 numbers"};
  }
  JobRecord job{id, {}, {}};
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& v = j["coeffs"][k];
    if (!v.is_number()) return ParseError{id, "coeffs must be an array of 5 numbers"};
    job.coeffs[k] = v.get<double>();
  }
  if (!all_finite(job.coeffs)) return ParseError{id, "non-finite coefficient"};

  if (j.contains("options")) {
    const auto& opts = j["options"];
    if (!opts.is_object()) return ParseError{id, "options must be an object"};
    if (opts.contains("polish")) {
      if (!opts["polish"].is_boolean()) return ParseError{id, "options.polish must be a boolean"};
      job.options.polish = opts["polish"].get<bool>();
    }
    if (opts.contains("tol")) {
      if (!opts["tol"].is_number() || !(opts["tol"].get<double>() > 0.0)) {
        return ParseError{id, "options.tol must be a positive number"};
      }
      job.options.tol = opts["tol"].get<double>();
    }
  }
  return job;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::optional<Format> format_from_extension(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return std::nullopt;
  const std::string ext = lower(path.substr(dot + 1));
  if (ext == "csv") return Format::Csv;
  if (ext == "jsonl" || ext == "ndjson" || ext == "json") return Format::Jsonl;
  return std::nullopt;
}

Format sniff_format(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  return first != std::string::npos && content[first] == '{' ? Format::Jsonl : Format::Csv;
}

std::optional<Format> parse_format_name(const std::string& name) {
  const std::string n = lower(name);
  if (n == "csv") return Format::Csv;
  if (n == "jsonl") return Format::Jsonl;
  return std::nullopt;
}

std::vector<ParsedLine> parse_jobs(const std::string& content, Format format) {
  std::vector<ParsedLine> out;
  std::set<std::string> seen;
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;

    if (format == Format::Csv && first_content_line) {
      first_content_line = false;
      // Header: the first coefficient column is not a number.
      const auto fields = split_csv(line);
      if (fields.size() >= 2 && !parse_number(fields[1]) && !fields[1].empty() &&
          std::isalpha(static_cast<unsigned char>(fields[1][0]))) {
        continue;
      }
    }
    first_content_line = false;

    ParsedLine parsed = format == Format::Csv ? parse_csv_line(line, line_no) : parse_json_line(line, line_no);
    if (auto* job = std::get_if<JobRecord>(&parsed)) {
      if (!seen.insert(job->id).second) parsed = ParseError{job->id, "duplicate id"};
    }
    out.push_back(std::move(parsed));
  }
  return out;
}

std::string classification_label(const RootSet<double>& roots) {
  if (roots.classification == Classification::Degenerate) {
    return "Degenerate(" + std::string(to_string(roots.degenerate)) + ")";
  }
  return std::string(to_string(roots.classification));
}

ResultRecord make_result(const std::string& id, const SolveReport<double>& report, std::int64_t time_ns) {
  ResultRecord r;
  r.id = id;
  r.classification = classification_label(report.roots);
  for (const auto& root : report.roots.real_roots) r.real_roots.emplace_back(root.value, root.multiplicity);
  for (const auto& pair : report.roots.complex_pairs) r.complex_pairs.emplace_back(pair.re, pair.im);
  r.branch = std::string(to_string(report.branch));
  r.max_residual = report.max_residual;
  r.time_ns = time_ns;
  return r;
}

ResultRecord make_error(const std::string& id, const std::string& message) {
  ResultRecord r;
  r.id = id;
  r.error = message;
  return r;
}

std::string to_jsonl(const ResultRecord& record) {
  nlohmann::ordered_json j;
  j["id"] = record.id;
  if (record.error) {
    j["error"] = *record.error;
    return j.dump();
  }
  j["class"] = record.classification;
  j["real_roots"] = nlohmann::ordered_json::array();
  for (const auto& [value, mult] : record.real_roots) j["real_roots"].push_back({value, mult});
  j["complex_pairs"] = nlohmann::ordered_json::array();
  for (const auto& [re, im] : record.complex_pairs) j["complex_pairs"].push_back({re, im});
  j["branch"] = record.branch;
  j["max_residual"] = record.max_residual;
  if (record.oracle_agreement) j["oracle_agreement"] = *record.oracle_agreement;
  j["time_ns"] = record.time_ns;
  return j.dump();
}

std::string csv_header() { return "id,class,real_roots,complex_pairs,branch,max_residual,time_ns,error"; }

std::string to_csv(const ResultRecord& record) {
  std::string out = csv_escape(record.id) + ",";
  if (record.error) return out + ",,,,,," + csv_escape(*record.error);
  out += record.classification + ",";
  for (std::size_t i = 0; i < record.real_roots.size(); ++i) {
    if (i) out += ';';
    out += format_double(record.real_roots[i].first) + ":" + std::to_string(record.real_roots[i].second);
  }
  out += ",";
  for (std::size_t i = 0; i < record.complex_pairs.size(); ++i) {
    if (i) out += ';';
    out += format_double(record.complex_pairs[i].first) + ":" + format_double(record.complex_pairs[i].second);
  }
  out += "," + record.branch + "," + format_double(record.max_residual) + "," + std::to_string(record.time_ns) + ",";
  return out;
}

}  // namespace quartic::cli
