#pragma once

// Registry of the published codes: four-circulant pairs, neighbor supports
// and subtraction pairs, resolved by name into LinearCode values.

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdcode/circulant.hpp"
#include "sdcode/code.hpp"
#include "sdcode/families.hpp"
#include "sdcode/io.hpp"
#include "sdcode/neighbors.hpp"

namespace sdcode {

struct PaperCode {
  enum class Kind { circulant, neighbor, subtraction };
  std::string name;
  Kind kind = Kind::circulant;
  CirculantPair pair;                  // circulant
  std::string base;                    // neighbor, subtraction
  std::vector<std::size_t> support;    // neighbor, 1-based
  std::size_t coord_i = 0, coord_j = 0;  // subtraction, 1-based
  std::size_t d = 0;
  std::optional<Family> family;
  std::optional<std::int64_t> beta, gamma;
};

class PaperData {
 public:
  static PaperData parse(std::string_view text) {
    PaperData p;
    p.doc_ = detail::parse_json(text);
    try {
      for (const auto& e : p.doc_.at("four_circulant")) {
        PaperCode c;
        c.name = e.at("name").get<std::string>();
        const auto ra = e.at("ra").get<std::string>(), rb = e.at("rb").get<std::string>();
        c.pair = {e.at("block").get<std::size_t>(), BitVector::parse(ra), BitVector::parse(rb)};
        p.fill_common(c, e);
        p.add(std::move(c));
      }
      for (const auto& e : p.doc_.at("neighbors")) {
        PaperCode c;
        c.kind = PaperCode::Kind::neighbor;
        c.name = e.at("name").get<std::string>();
        c.base = e.at("base").get<std::string>();
        c.support = e.at("supp").get<std::vector<std::size_t>>();
        p.fill_common(c, e);
        p.add(std::move(c));
      }
      for (const auto& e : p.doc_.at("subtractions")) {
        PaperCode c;
        c.kind = PaperCode::Kind::subtraction;
        c.name = e.at("name").get<std::string>();
        c.base = e.at("base").get<std::string>();
        const auto ij = e.at("coords").get<std::vector<std::size_t>>();
        if (ij.size() != 2) throw ParseError("subtraction " + c.name + " needs two coordinates", 0);
        c.coord_i = ij[0];
        c.coord_j = ij[1];
        p.fill_common(c, e);
        p.add(std::move(c));
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("paper data: ") + e.what(), 0);
    }
    return p;
  }

  PaperData() = default;
  PaperData(const PaperData& o) : doc_(o.doc_), entries_(o.entries_), order_(o.order_) {}
  PaperData& operator=(const PaperData& o) {
    doc_ = o.doc_;
    entries_ = o.entries_;
    order_ = o.order_;
    cache_.clear();
    return *this;
  }

  const json& document() const noexcept { return doc_; }
  const std::vector<std::string>& names() const noexcept { return order_; }
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }

  const PaperCode& entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw ArgumentError("unknown code name " + name);
    return it->second;
  }

  std::vector<std::string> table(const std::string& id) const {
    const auto& t = doc_.at("tables");
    if (!t.contains(id)) throw ArgumentError("unknown table " + id);
    return t.at(id).get<std::vector<std::string>>();
  }

  // Builds the code, resolving bases recursively. Thread-safe.
  LinearCode build(const std::string& name) const { return build(name, 0); }

 private:
  LinearCode build(const std::string& name, std::size_t depth) const {
    if (depth > entries_.size()) throw ParseError("cyclic base references at " + name, 0);
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    }
    const auto& e = entry(name);
    LinearCode code;
    switch (e.kind) {
      case PaperCode::Kind::circulant:
        code = build_four_circulant(e.pair);
        break;
      case PaperCode::Kind::neighbor:
        code = neighbor(build(e.base, depth + 1), e.support);
        break;
      case PaperCode::Kind::subtraction:
        code = subtract_coordinates(build(e.base, depth + 1), e.coord_i, e.coord_j);
        break;
    }
    std::lock_guard lock(mutex_);
    cache_.emplace(name, code);
    return code;
  }

  static void fill_common(PaperCode& c, const json& e) {
    c.d = e.value("d", std::size_t{0});
    if (e.contains("family")) {
      const auto f = e.at("family").get<std::string>();
      for (auto fam : {Family::W60_1, Family::W60_2, Family::W58_1, Family::W58_2}) {
        if (to_string(fam) == f) c.family = fam;
      }
      if (!c.family) throw ParseError("unknown family " + f + " for " + c.name, 0);
    }
    if (e.contains("beta")) c.beta = e.at("beta").get<std::int64_t>();
    if (e.contains("gamma")) c.gamma = e.at("gamma").get<std::int64_t>();
    if (!c.family && c.beta) c.family = Family::W60_1;
  }

  void add(PaperCode c) {
    if (entries_.count(c.name)) throw ParseError("duplicate code name " + c.name, 0);
    order_.push_back(c.name);
    entries_.emplace(c.name, std::move(c));
  }

  json doc_;
  std::map<std::string, PaperCode> entries_;
  std::vector<std::string> order_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, LinearCode> cache_;
};

}  // namespace sdcode
