#pragma once

// Text formats.
//
// Dataset: one interval per line, `id label begin finish`, columns separated
// by tabs or spaces. Utilities: `label value`. In both, lines starting with
// `#` are comments and blank lines are skipped.

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <vector>

#include "huipm/error.hpp"
#include "huipm/model.hpp"

namespace huipm::io {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline bool skippable(const std::vector<std::string_view>& fields) {
  return fields.empty() || fields.front().front() == '#';
}

[[noreturn]] inline void fail(std::size_t line_no, const std::string& msg) {
  throw DataError("line " + std::to_string(line_no) + ": " + msg);
}

inline std::uint64_t parse_uint(std::string_view s, std::size_t line_no, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line_no, std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

inline double parse_real(std::string_view s, std::size_t line_no) {
  // from_chars for double is missing on older libstdc++.
  std::string tmp(s);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tmp, &used);
  } catch (const std::exception&) {
    fail(line_no, "invalid utility value '" + tmp + "'");
  }
  if (used != tmp.size()) fail(line_no, "invalid utility value '" + tmp + "'");
  return v;
}

}  // namespace detail

inline ESequenceDataset parse_dataset(std::istream& in) {
  std::map<SequenceId, std::vector<EventInterval>> groups;
  std::set<std::tuple<SequenceId, Label, Time, Time>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = detail::split_fields(line);
    if (detail::skippable(fields)) continue;
    if (fields.size() != 4) detail::fail(line_no, "expected 4 columns (id label begin finish), got " + std::to_string(fields.size()));
    const auto id = detail::parse_uint(fields[0], line_no, "sequence id");
    if (id == 0) detail::fail(line_no, "sequence id must be positive");
    const Label label(fields[1]);
    const auto b = detail::parse_uint(fields[2], line_no, "begin time");
    const auto f = detail::parse_uint(fields[3], line_no, "finish time");
    if (b >= f) detail::fail(line_no, "begin " + std::to_string(b) + " >= finish " + std::to_string(f));
    if (!seen.emplace(id, label, b, f).second) detail::fail(line_no, "duplicate interval (" + label + ", " + std::to_string(b) + ", " + std::to_string(f) + ") in sequence " + std::to_string(id));
    groups[id].emplace_back(label, b, f);
  }
  ESequenceDataset d;
  for (auto& [id, intervals] : groups) d.sequences.emplace_back(id, std::move(intervals));
  return d;
}

inline ESequenceDataset parse_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file " + path);
  return parse_dataset(in);
}

inline UtilityTable parse_utilities(std::istream& in) {
  UtilityTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = detail::split_fields(line);
    if (detail::skippable(fields)) continue;
    if (fields.size() != 2) detail::fail(line_no, "expected 2 columns (label value)");
    const Label label(fields[0]);
    const double v = detail::parse_real(fields[1], line_no);
    if (!(v >= 0.0)) detail::fail(line_no, "external utility of " + label + " must be >= 0");
    if (table.contains(label)) detail::fail(line_no, "duplicate label " + label);
    table.set(label, v);
  }
  return table;
}

inline UtilityTable parse_utilities_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open utilities file " + path);
  return parse_utilities(in);
}

inline void write_dataset(std::ostream& out, const ESequenceDataset& d) {
  out << "# id\tlabel\tbegin\tfinish\n";
  for (const auto& s : d.sequences)
    for (const auto& e : s.intervals()) out << s.id() << '\t' << e.label << '\t' << e.begin << '\t' << e.finish << '\n';
}

inline void write_utilities(std::ostream& out, const UtilityTable& t) {
  out << "# label\tutility\n";
  std::ostringstream num;
  num.precision(17);
  for (const auto& [label, value] : t.entries()) {
    num.str({});
    num << value;
    out << label << '\t' << num.str() << '\n';
  }
}

}  // namespace huipm::io
