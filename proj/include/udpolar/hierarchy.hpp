#pragma once

// Relation hierarchy used to order a head's dependents during binarization.
// A smaller level-id sits higher in the binary tree.

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "udpolar/error.hpp"
#include "udpolar/text.hpp"

namespace udpolar {

struct LevelEntry {
  std::string_view label;
  int level;
};

// The stock table, including the refined conj-* / *-sent labels.
inline constexpr std::array<LevelEntry, 44> kDefaultHierarchy{{
    {"conj-sent", 0},     {"advcl-sent", 1},   {"advmod-sent", 2},
    {"case", 10},         {"mark", 10},        {"expl", 10},
    {"discourse", 10},    {"nsubj", 20},       {"csubj", 20},
    {"nsubj:pass", 20},   {"conj-vp", 25},     {"ccomp", 30},
    {"advcl", 30},        {"advmod", 30},      {"nmod", 30},
    {"nmod:tmod", 30},    {"nmod:npmod", 30},  {"nmod:poss", 30},
    {"xcomp", 40},        {"aux", 40},         {"aux:pass", 40},
    {"obl", 50},          {"obl:tmod", 50},    {"obl:npmod", 50},
    {"cop", 50},          {"det", 55},         {"det:predet", 55},
    {"acl", 60},          {"acl:relcl", 60},   {"appos", 60},
    {"conj", 60},         {"conj-np", 60},     {"conj-adj", 60},
    {"obj", 60},          {"iobj", 60},        {"cc", 70},
    {"amod", 75},         {"nummod", 75},      {"compound", 80},
    {"compound:prt", 80}, {"fixed", 80},       {"conj-n", 90},
    {"conj-vb", 90},      {"flat", 100},
}};

inline constexpr int kDefaultUnknownLevel = 45;

class RelationHierarchy {
 public:
  RelationHierarchy() = default;

  static RelationHierarchy defaults() {
    RelationHierarchy h;
    for (const auto& e : kDefaultHierarchy) h.levels_.emplace(e.label, e.level);
    return h;
  }

  // Reads "label<TAB>level" rows. A row "@default<TAB>N" sets the level used
  // for labels absent from the table; '#' starts a comment line.
  static RelationHierarchy parse(std::string_view content,
                                 std::string_view source = "<hierarchy>") {
    RelationHierarchy h;
    std::size_t lineno = 0;
    for (auto raw : text::split_lines(content)) {
      ++lineno;
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      auto cols = text::split(line, '\t');
      auto where = std::string(source) + ":" + std::to_string(lineno);
      if (cols.size() != 2) throw LoadError(where + ": expected label<TAB>level-id");
      auto label = std::string(text::trim(cols[0]));
      auto level = text::parse_int(text::trim(cols[1]));
      if (label.empty() || !level) throw LoadError(where + ": malformed row");
      if (label == "@default") {
        h.unknown_level_ = *level;
        continue;
      }
      if (!h.levels_.emplace(label, *level).second)
        throw LoadError(where + ": duplicate label '" + label + "'");
    }
    return h;
  }

  static RelationHierarchy load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open hierarchy file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
  }

  // Exact label first, then the universal part of a subtyped label
  // ("obl:agent" -> "obl"), then the configured default.
  int level(std::string_view label) const {
    if (auto it = levels_.find(std::string(label)); it != levels_.end())
      return it->second;
    if (auto colon = label.find(':'); colon != std::string_view::npos) {
      if (auto it = levels_.find(std::string(label.substr(0, colon)));
          it != levels_.end())
        return it->second;
    }
    return unknown_level_;
  }

  bool contains(std::string_view label) const {
    return levels_.count(std::string(label)) != 0;
  }

  void set(std::string label, int level) { levels_[std::move(label)] = level; }
  int unknown_level() const noexcept { return unknown_level_; }
  void set_unknown_level(int level) noexcept { unknown_level_ = level; }

  const std::map<std::string, int>& entries() const noexcept { return levels_; }

  // One "label<TAB>level" row per entry, sorted by level then label.
  std::string to_text() const {
    std::multimap<int, std::string> by_level;
    for (const auto& [label, level] : levels_) by_level.emplace(level, label);
    std::string out;
    for (const auto& [level, label] : by_level)
      out += label + '\t' + std::to_string(level) + '\n';
    out += "@default\t" + std::to_string(unknown_level_) + '\n';
    return out;
  }

  friend bool operator==(const RelationHierarchy&,
                         const RelationHierarchy&) = default;

 private:
  std::map<std::string, int> levels_;
  int unknown_level_ = kDefaultUnknownLevel;
};

}  // namespace udpolar
