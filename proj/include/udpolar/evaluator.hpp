#pragma once

// Token/sentence accuracy and per-label precision/recall/F1 of predicted
// marks against gold marks.

#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udpolar/error.hpp"
#include "udpolar/polarity.hpp"
#include "udpolar/polarizer.hpp"
#include "udpolar/text.hpp"

namespace udpolar {

struct ScoredToken {
  std::string form;
  std::string upos;
  Mark mark;  // empty: unscored

  friend bool operator==(const ScoredToken&, const ScoredToken&) = default;
};

struct GoldSentence {
  std::string id;
  std::vector<ScoredToken> tokens;

  friend bool operator==(const GoldSentence&, const GoldSentence&) = default;
};

inline bool is_key_token(std::string_view upos) {
  static constexpr std::string_view kKey[] = {"NOUN", "PROPN", "VERB", "ADJ",
                                              "ADV",  "DET",   "NUM"};
  for (auto k : kKey)
    if (upos == k) return true;
  return false;
}

// Token-per-line TSV, blank line between sentences:
//   sent_id  form  upos  mark
// "_" as mark leaves a token unscored. A block that opens with
// "# sent_id = X" takes X as its id; its first column is then the token id
// (the layout `polarize --format tsv` writes).
inline std::vector<GoldSentence> parse_gold(std::string_view content) {
  std::vector<GoldSentence> out;
  std::optional<GoldSentence> cur;
  bool header = false;
  auto flush = [&] {
    if (cur && !cur->tokens.empty()) out.push_back(std::move(*cur));
    cur.reset();
    header = false;
  };
  std::size_t lineno = 0;
  for (auto raw : text::split_lines(content)) {
    ++lineno;
    auto line = text::trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      constexpr std::string_view kId = "# sent_id =";
      if (line.substr(0, kId.size()) == kId) {
        flush();
        cur = GoldSentence{std::string(text::trim(line.substr(kId.size()))), {}};
        header = true;
      }
      continue;
    }
    auto cols = text::split(raw, '\t');
    if (cols.size() != 4)
      throw ParseError("expected 4 tab-separated columns, got " + std::to_string(cols.size()),
                       lineno);
    const std::string first(text::trim(cols[0]));
    if (!cur) cur = GoldSentence{first, {}};
    if (!header && cur->id != first) {
      flush();
      cur = GoldSentence{first, {}};
    }
    ScoredToken tok{std::string(cols[1]), std::string(text::trim(cols[2])), std::nullopt};
    auto m = text::trim(cols[3]);
    if (m != "_") {
      tok.mark = parse_polarity(m);
      if (!tok.mark) throw ParseError("unknown mark '" + std::string(m) + "'", lineno);
    }
    cur->tokens.push_back(std::move(tok));
  }
  flush();
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<GoldSentence> load_gold(const std::string& path) {
  return parse_gold(read_text_file(path));
}

inline GoldSentence to_scored(const AnnotatedSentence& s) {
  GoldSentence g{s.sent_id, {}};
  for (const auto& t : s.tokens) g.tokens.push_back({t.token.form, t.token.upos, t.mark});
  return g;
}

// Tokens left out of scoring: sentence id -> 1-based positions.
class Exclusions {
 public:
  // "sent_id<TAB>position<TAB>form[<TAB>note]"; '#' starts a comment.
  static Exclusions parse(std::string_view content) {
    Exclusions ex;
    std::size_t lineno = 0;
    for (auto raw : text::split_lines(content)) {
      ++lineno;
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      auto cols = text::split(line, '\t');
      if (cols.size() < 3) throw ParseError("expected sent_id, position, form", lineno);
      auto pos = text::parse_int(cols[1]);
      if (!pos || *pos < 1) throw ParseError("bad token position", lineno);
      ex.add(std::string(cols[0]), static_cast<std::size_t>(*pos), std::string(cols[2]));
    }
    return ex;
  }
  static Exclusions load(const std::string& path) { return parse(read_text_file(path)); }

  void add(std::string sentence, std::size_t position, std::string form = {}) {
    entries_[{std::move(sentence), position}] = std::move(form);
  }
  bool excluded(const std::string& sentence, std::size_t position) const {
    return entries_.count({sentence, position}) != 0;
  }
  // Form recorded for an entry; empty when none was given.
  const std::string* form(const std::string& sentence, std::size_t position) const {
    auto it = entries_.find({sentence, position});
    return it == entries_.end() ? nullptr : &it->second;
  }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::pair<std::string, std::size_t>, std::string> entries_;
};

inline std::size_t label_index(Polarity p) { return static_cast<std::size_t>(p); }

struct LabelScore {
  std::size_t tp = 0, fp = 0, fn = 0;
  std::optional<double> precision, recall, f1;  // empty: undefined
};

struct Scores {
  std::size_t tokens = 0, correct = 0;
  std::size_t sentences = 0, sentences_correct = 0;
  std::array<std::array<std::size_t, 3>, 3> confusion{};  // [gold][pred]
  std::optional<double> token_accuracy, sentence_accuracy;
  std::array<LabelScore, 3> labels;
  std::optional<double> macro_precision, macro_recall, macro_f1;
};

struct EvalReport {
  Scores all;
  Scores key;
};

namespace detail {

inline std::optional<double> percent(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

inline std::optional<double> mean(const std::array<LabelScore, 3>& ls,
                                  std::optional<double> LabelScore::*field) {
  double sum = 0;
  int n = 0;
  for (const auto& l : ls)
    if (l.*field) {
      sum += *(l.*field);
      ++n;
    }
  if (n == 0) return std::nullopt;
  return sum / n;
}

inline void check_aligned(const GoldSentence& pred, const GoldSentence& gold) {
  if (pred.tokens.size() != gold.tokens.size())
    throw AlignmentError(gold.id, "prediction has " + std::to_string(pred.tokens.size()) +
                                      " tokens, gold has " + std::to_string(gold.tokens.size()));
}

}  // namespace detail

inline Scores score(const std::vector<GoldSentence>& pred, const std::vector<GoldSentence>& gold,
                    bool key_only, const Exclusions* exclusions = nullptr) {
  if (pred.size() != gold.size())
    throw AlignmentError(gold.size() > pred.size() ? gold[pred.size()].id
                                                   : pred[gold.size()].id,
                         "prediction has " + std::to_string(pred.size()) +
                             " sentences, gold has " + std::to_string(gold.size()));
  Scores s;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& g = gold[i];
    const auto& p = pred[i];
    detail::check_aligned(p, g);
    bool all_right = true;
    for (std::size_t j = 0; j < g.tokens.size(); ++j) {
      const auto& gt = g.tokens[j];
      const auto& pt = p.tokens[j];
      if (!gt.mark || gt.upos == "PUNCT") continue;
      if (key_only && !is_key_token(gt.upos)) continue;
      if (exclusions && exclusions->excluded(g.id, j + 1)) continue;
      ++s.tokens;
      const bool hit = pt.mark == gt.mark;
      if (hit) ++s.correct;
      all_right = all_right && hit;
      // An unscored prediction for a scored gold token counts as a miss.
      if (pt.mark)
        ++s.confusion[label_index(*gt.mark)][label_index(*pt.mark)];
      else
        ++s.labels[label_index(*gt.mark)].fn;
    }
    ++s.sentences;
    if (all_right) ++s.sentences_correct;
  }
  for (std::size_t l = 0; l < 3; ++l) {
    auto& ls = s.labels[l];
    ls.tp = s.confusion[l][l];
    for (std::size_t k = 0; k < 3; ++k) {
      if (k == l) continue;
      ls.fp += s.confusion[k][l];
      ls.fn += s.confusion[l][k];
    }
    ls.precision = detail::percent(ls.tp, ls.tp + ls.fp);
    ls.recall = detail::percent(ls.tp, ls.tp + ls.fn);
    ls.f1 = detail::percent(2 * ls.tp, 2 * ls.tp + ls.fp + ls.fn);
  }
  s.token_accuracy = detail::percent(s.correct, s.tokens);
  s.sentence_accuracy = detail::percent(s.sentences_correct, s.sentences);
  s.macro_precision = detail::mean(s.labels, &LabelScore::precision);
  s.macro_recall = detail::mean(s.labels, &LabelScore::recall);
  s.macro_f1 = detail::mean(s.labels, &LabelScore::f1);
  return s;
}

inline std::optional<double> token_accuracy(const std::vector<GoldSentence>& pred,
                                            const std::vector<GoldSentence>& gold,
                                            bool key_only) {
  return score(pred, gold, key_only).token_accuracy;
}

inline std::optional<double> sentence_accuracy(const std::vector<GoldSentence>& pred,
                                               const std::vector<GoldSentence>& gold,
                                               bool key_only) {
  return score(pred, gold, key_only).sentence_accuracy;
}

inline std::array<LabelScore, 3> prf_per_label(const std::vector<GoldSentence>& pred,
                                               const std::vector<GoldSentence>& gold,
                                               bool key_only) {
  return score(pred, gold, key_only).labels;
}

inline EvalReport evaluate(const std::vector<GoldSentence>& pred,
                           const std::vector<GoldSentence>& gold,
                           const Exclusions* exclusions = nullptr) {
  return {score(pred, gold, false, exclusions), score(pred, gold, true, exclusions)};
}

// ----- reporting -----------------------------------------------------------

inline std::string format_value(std::optional<double> v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *v);
  return buf;
}

namespace detail {

inline std::string pad(std::string s, std::size_t width, bool right = true) {
  if (s.size() >= width) return s;
  return right ? std::string(width - s.size(), ' ') + s : s + std::string(width - s.size(), ' ');
}

}  // namespace detail

using NamedReport = std::pair<std::string, EvalReport>;

// Accuracy table (one row per system) followed by one robustness block per
// system: 3 labels x (P, R, F1) for all tokens and for key tokens.
inline std::string format_report(const std::vector<NamedReport>& systems) {
  using detail::pad;
  std::size_t w = 6;
  for (const auto& [name, r] : systems) w = std::max(w, name.size());
  std::string out;
  out += "Accuracy (%)\n";
  out += pad("system", w, false) + " | " + pad("token/all", 10) + pad("token/key", 11) +
         " | " + pad("sent/all", 10) + pad("sent/key", 10) + "\n";
  for (const auto& [name, r] : systems) {
    out += pad(name, w, false) + " | " + pad(format_value(r.all.token_accuracy), 10) +
           pad(format_value(r.key.token_accuracy), 11) + " | " +
           pad(format_value(r.all.sentence_accuracy), 10) +
           pad(format_value(r.key.sentence_accuracy), 10) + "\n";
  }
  for (const auto& [name, r] : systems) {
    for (const auto* variant : {&r.all, &r.key}) {
      out += "\nRobustness: " + name + (variant == &r.all ? " (all tokens)" : " (key tokens)") +
             "\n";
      out += pad("", 6, false) + pad("P", 8) + pad("R", 8) + pad("F1", 8) + "\n";
      for (Polarity p : kAllPolarities) {
        const auto& ls = variant->labels[label_index(p)];
        out += pad(std::string(to_name(p)), 6, false) + pad(format_value(ls.precision), 8) +
               pad(format_value(ls.recall), 8) + pad(format_value(ls.f1), 8) + "\n";
      }
      out += pad("macro", 6, false) + pad(format_value(variant->macro_precision), 8) +
             pad(format_value(variant->macro_recall), 8) +
             pad(format_value(variant->macro_f1), 8) + "  (extension)\n";
    }
  }
  return out;
}

inline std::string format_report(const EvalReport& r, const std::string& name = "udpolar") {
  return format_report(std::vector<NamedReport>{{name, r}});
}

// "key=value" lines, one figure per line.
inline std::string format_dump(const EvalReport& r) {
  std::string out;
  auto put = [&](const std::string& k, const std::string& v) { out += k + "=" + v + "\n"; };
  for (const auto& [tag, s] : {std::pair<std::string, const Scores*>{"all", &r.all},
                               std::pair<std::string, const Scores*>{"key", &r.key}}) {
    put(tag + ".tokens", std::to_string(s->tokens));
    put(tag + ".tokens_correct", std::to_string(s->correct));
    put(tag + ".sentences", std::to_string(s->sentences));
    put(tag + ".sentences_correct", std::to_string(s->sentences_correct));
    put(tag + ".token_accuracy", format_value(s->token_accuracy));
    put(tag + ".sentence_accuracy", format_value(s->sentence_accuracy));
    for (Polarity p : kAllPolarities) {
      const auto& ls = s->labels[label_index(p)];
      const std::string base = tag + "." + std::string(to_name(p));
      put(base + ".tp", std::to_string(ls.tp));
      put(base + ".fp", std::to_string(ls.fp));
      put(base + ".fn", std::to_string(ls.fn));
      put(base + ".precision", format_value(ls.precision));
      put(base + ".recall", format_value(ls.recall));
      put(base + ".f1", format_value(ls.f1));
    }
    put(tag + ".macro_precision", format_value(s->macro_precision));
    put(tag + ".macro_recall", format_value(s->macro_recall));
    put(tag + ".macro_f1", format_value(s->macro_f1));
  }
  return out;
}

}  // namespace udpolar
