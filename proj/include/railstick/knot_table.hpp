#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "railstick/error.hpp"
#include "railstick/invariants.hpp"
#include "railstick/pd.hpp"

#ifndef RAILSTICK_DATA_DIR
#define RAILSTICK_DATA_DIR "data"
#endif

namespace railstick {

/// Directory holding knots.txt and catalog.json; RAILSTICK_DATA overrides.
inline std::string data_dir() {
  if (const char* env = std::getenv("RAILSTICK_DATA"); env && *env) return env;
  return RAILSTICK_DATA_DIR;
}

/// Parses "low:c0,c1,..." into a Laurent polynomial.
inline IntLaurent parse_coeffs(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("bad polynomial field: " + text);
  int e = std::stoi(text.substr(0, colon));
  IntLaurent out;
  std::stringstream ss(text.substr(colon + 1));
  std::string c;
  while (std::getline(ss, c, ',')) out += IntLaurent(std::stoll(c), e++);
  return out;
}

struct KnotEntry {
  std::string name;
  std::string kind;  // knot | link
  int components = 1;
  PDCode pd;
  std::optional<IntLaurent> jones;      // reference value, t for knots and t^(1/2) for links
  std::optional<IntLaurent> alexander;  // reference value
  std::optional<long long> det;
  std::optional<int> stick;
  std::optional<int> lattice_stick;
  std::vector<std::string> flags;
  std::string alias;

  bool has_flag(const std::string& f) const {
    for (const auto& x : flags)
      if (x == f) return true;
    return false;
  }
  KnotoidMap diagram() const { return from_pd(pd); }
};

class KnotTable {
 public:
  static KnotTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open knot table " + path);
    KnotTable t;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      KnotEntry e;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, '\t')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw InputError("bad knot table field: " + field);
        const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "name") e.name = val;
        else if (key == "kind") e.kind = val;
        else if (key == "components") e.components = std::stoi(val);
        else if (key == "pd") e.pd = parse_pd(val);
        else if (key == "jones") e.jones = parse_coeffs(val);
        else if (key == "alexander") e.alexander = parse_coeffs(val);
        else if (key == "det") e.det = std::stoll(val);
        else if (key == "s") e.stick = std::stoi(val);
        else if (key == "scl") e.lattice_stick = std::stoi(val);
        else if (key == "alias") e.alias = val;
        else if (key == "flags") {
          std::stringstream fs(val);
          std::string f;
          while (std::getline(fs, f, ',')) e.flags.push_back(f);
        }
      }
      if (e.name.empty()) throw InputError("knot table line without a name");
      t.index_[e.name] = t.entries_.size();
      if (!e.alias.empty()) t.alias_[e.alias] = e.name;
      t.entries_.push_back(std::move(e));
    }
    return t;
  }

  static const KnotTable& shipped() {
    static const KnotTable table = load(data_dir() + "/knots.txt");
    return table;
  }

  const std::vector<KnotEntry>& entries() const { return entries_; }

  const KnotEntry* find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      auto a = alias_.find(name);
      if (a == alias_.end()) return nullptr;
      it = index_.find(a->second);
    }
    return &entries_[it->second];
  }
  const KnotEntry& get(const std::string& name) const {
    const KnotEntry* e = find(name);
    if (!e) throw InputError("unknown knot or link: " + name);
    return *e;
  }

  /// Invariant tuple of every entry, computed once.
  const std::vector<InvariantTuple>& tuples() const {
    std::call_once(*tuples_once_, [this] {
      for (const auto& e : entries_) tuples_.push_back(invariant_tuple(e.diagram()));
    });
    return tuples_;
  }

  /// Names whose invariant tuple matches; empty when unidentified.
  std::vector<std::string> identify(const InvariantTuple& t) const {
    std::vector<std::string> out;
    const auto& all = tuples();
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (all[i] == t) out.push_back(entries_[i].name);
    return out;
  }

 private:
  std::vector<KnotEntry> entries_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::string> alias_;
  mutable std::vector<InvariantTuple> tuples_;
  mutable std::shared_ptr<std::once_flag> tuples_once_ = std::make_shared<std::once_flag>();
};

}  // namespace railstick
