#pragma once

// File formats:
//   code          JSON {"name", "n", "k", "rows": ["0101...", ...]}
//   distribution  CSV "weight,count", zero rows omitted
//   pairs         one "ra;rb" per line
//   neighbors     JSON lines {"base": name, "supp": [1-based ints]}
//   classes       JSON report with 1-based permutation images

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sdcode/circulant.hpp"
#include "sdcode/code.hpp"
#include "sdcode/equivalence.hpp"
#include "sdcode/errors.hpp"
#include "sdcode/neighbors.hpp"
#include "sdcode/weights.hpp"

namespace sdcode {

using json = nlohmann::ordered_json;

namespace detail {

inline std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of `needle` at or after `from`, 0 if absent.
inline std::size_t line_of_token(std::string_view text, std::string_view needle, std::size_t from = 0) {
  const auto at = text.find(needle, from);
  return at == std::string_view::npos ? 0 : line_of(text, at);
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
}

inline BitVector parse_bits(std::string_view s, std::size_t length, std::size_t line, const std::string& what) {
  if (s.size() != length) {
    throw ParseError(what + " has " + std::to_string(s.size()) + " symbols, expected " + std::to_string(length), line);
  }
  if (s.find_first_not_of("01") != std::string_view::npos) throw ParseError(what + " contains a symbol other than 0/1", line);
  return BitVector::parse(s);
}

}  // namespace detail

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path, 0);
  out << text;
}

// ---- codes

inline json code_to_json(const NamedCode& c) {
  json rows = json::array();
  for (const auto& r : c.code.rows()) rows.push_back(r.to_string());
  return json{{"name", c.name}, {"n", c.code.length()}, {"k", c.code.dimension()}, {"rows", rows}};
}

inline std::string format_code(const NamedCode& c) { return code_to_json(c).dump(1) + "\n"; }

// Rows need not be in echelon form; a declared k must match their rank.
inline NamedCode parse_code(std::string_view text) {
  const json j = detail::parse_json(text);
  if (!j.is_object()) throw ParseError("code file must hold a JSON object", 1);
  auto field_line = [&](const char* key) { return detail::line_of_token(text, std::string("\"") + key + "\""); };
  for (const char* key : {"n", "rows"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", 1);
  }
  if (!j["n"].is_number_unsigned()) throw ParseError("\"n\" must be a non-negative integer", field_line("n"));
  const auto n = j["n"].get<std::size_t>();
  if (n == 0 || n > kMaxLength) {
    throw ParseError("length " + std::to_string(n) + " outside 1.." + std::to_string(kMaxLength), field_line("n"));
  }
  if (!j["rows"].is_array()) throw ParseError("\"rows\" must be an array", field_line("rows"));
  const std::size_t rows_at = text.find("\"rows\"");
  std::vector<BitVector> rows;
  std::size_t cursor = rows_at;
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    const auto& r = j["rows"][i];
    if (!r.is_string()) throw ParseError("row " + std::to_string(i + 1) + " is not a string", field_line("rows"));
    const auto s = r.get<std::string>();
    const auto at = text.find("\"" + s + "\"", cursor);
    const std::size_t line = at == std::string_view::npos ? field_line("rows") : detail::line_of(text, at);
    if (at != std::string_view::npos) cursor = at + s.size() + 2;
    rows.push_back(detail::parse_bits(s, n, line, "row " + std::to_string(i + 1)));
  }
  NamedCode out;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string", field_line("name"));
    out.name = j["name"].get<std::string>();
  }
  out.code = LinearCode::from_rows(rows, n);
  if (j.contains("k")) {
    if (!j["k"].is_number_unsigned() || j["k"].get<std::size_t>() != out.code.dimension()) {
      throw ParseError("declared k does not match the rank " + std::to_string(out.code.dimension()) + " of the rows",
                       field_line("k"));
    }
  }
  return out;
}

inline NamedCode read_code_file(const std::string& path) {
  try {
    return parse_code(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

// ---- distributions

inline std::string format_distribution(const Distribution& d) {
  std::string out = "weight,count\n";
  for (std::size_t w = 0; w <= d.n; ++w) {
    if (d[w]) out += std::to_string(w) + "," + std::to_string(d[w]) + "\n";
  }
  return out;
}

inline Distribution parse_distribution(std::string_view text, std::size_t n) {
  Distribution d(n);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "weight,count") throw ParseError("expected header weight,count", no);
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    std::size_t w = 0, used = 0;
    unsigned long long count = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("comma");
      w = std::stoul(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("weight");
      const auto tail = line.substr(comma + 1);
      count = std::stoull(tail, &used);
      if (used != tail.size()) throw std::invalid_argument("count");
    } catch (const std::exception&) {
      throw ParseError("malformed row \"" + line + "\"", no);
    }
    if (w > n) throw ParseError("weight " + std::to_string(w) + " exceeds length " + std::to_string(n), no);
    d.counts[w] = count;
  }
  if (!header) throw ParseError("empty distribution file", 0);
  return d;
}

// ---- circulant pairs

inline std::string format_pairs(std::span<const CirculantPair> pairs) {
  std::string out;
  for (const auto& p : pairs) out += p.ra.to_string() + ";" + p.rb.to_string() + "\n";
  return out;
}

inline std::vector<CirculantPair> parse_pairs(std::string_view text) {
  std::vector<CirculantPair> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto semi = line.find(';');
    if (semi == std::string::npos) throw ParseError("expected ra;rb", no);
    const auto a = line.substr(0, semi), b = line.substr(semi + 1);
    if (a.empty() || a.size() > 32) throw ParseError("block size must be 1..32", no);
    CirculantPair p{a.size(), detail::parse_bits(a, a.size(), no, "ra"), detail::parse_bits(b, a.size(), no, "rb")};
    out.push_back(std::move(p));
  }
  return out;
}

// ---- neighbor descriptors

inline std::string format_descriptor(const NeighborDescriptor& d) {
  json j{{"base", d.base}, {"supp", d.support}};
  if (!d.name.empty()) j["name"] = d.name;
  return j.dump() + "\n";
}

inline std::vector<NeighborDescriptor> parse_descriptors(std::string_view text) {
  std::vector<NeighborDescriptor> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what(), no);
    }
    if (!j.is_object() || !j.contains("base") || !j["base"].is_string() || !j.contains("supp") || !j["supp"].is_array()) {
      throw ParseError("expected {\"base\": string, \"supp\": [ints]}", no);
    }
    NeighborDescriptor d;
    d.base = j["base"].get<std::string>();
    for (const auto& v : j["supp"]) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) throw ParseError("support entries are 1-based integers", no);
      d.support.push_back(v.get<std::size_t>());
    }
    std::sort(d.support.begin(), d.support.end());
    if (std::adjacent_find(d.support.begin(), d.support.end()) != d.support.end()) {
      throw ParseError("repeated support coordinate", no);
    }
    if (j.contains("name") && j["name"].is_string()) d.name = j["name"].get<std::string>();
    out.push_back(std::move(d));
  }
  return out;
}

// 1-based comma list such as "4,8,9".
inline std::vector<std::size_t> parse_index_list(std::string_view s) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto end = std::min(s.find(',', pos), s.size());
    const auto item = std::string(s.substr(pos, end - pos));
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || v == 0) throw ArgumentError("bad coordinate \"" + item + "\"");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

// ---- classification report

inline json classification_report(std::span<const std::string> names, std::span<const EquivalenceClass> classes) {
  json out = json::array();
  for (const auto& cls : classes) {
    json members = json::array(), perms = json::array();
    for (std::size_t m = 0; m < cls.members.size(); ++m) {
      members.push_back(names[cls.members[m]]);
      json img = json::array();
      for (auto p : cls.certificates[m]) img.push_back(p + 1);
      perms.push_back(img);
    }
    out.push_back({{"representative", names[cls.representative]}, {"members", members}, {"permutations", perms}});
  }
  return json{{"class_count", classes.size()}, {"classes", out}};
}

}  // namespace sdcode
