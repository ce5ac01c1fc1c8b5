#pragma once

// Word-level polarity knowledge: quantifier profiles, implicative verbs,
// negation words and conditional markers.

#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udpolar/binary_tree.hpp"
#include "udpolar/error.hpp"
#include "udpolar/polarity.hpp"
#include "udpolar/text.hpp"

namespace udpolar {

enum class QuantifierCategory { Universal, Negation, Exact, Existential, Other };

inline std::string_view to_name(QuantifierCategory c) noexcept {
  switch (c) {
    case QuantifierCategory::Universal: return "universal";
    case QuantifierCategory::Negation: return "negation";
    case QuantifierCategory::Exact: return "exact";
    case QuantifierCategory::Existential: return "existential";
    case QuantifierCategory::Other: return "other";
  }
  return "?";
}

inline std::optional<QuantifierCategory> parse_category(std::string_view s) {
  if (s == "universal") return QuantifierCategory::Universal;
  if (s == "negation") return QuantifierCategory::Negation;
  if (s == "exact") return QuantifierCategory::Exact;
  if (s == "existential") return QuantifierCategory::Existential;
  if (s == "other") return QuantifierCategory::Other;
  return std::nullopt;
}

// In a multi-word surface the token "n" stands for any number ("exactly n").
inline constexpr std::string_view kNumberSlot = "n";

struct QuantifierProfile {
  std::vector<std::string> surface;  // lowercase tokens
  Polarity first_arg = Polarity::Up;   // the noun phrase it restricts
  Polarity second_arg = Polarity::Up;  // the predicate
  QuantifierCategory category = QuantifierCategory::Existential;

  std::string key() const { return text::join(surface, " "); }
  friend bool operator==(const QuantifierProfile&, const QuantifierProfile&) = default;
};

// Longest-match result over a word sequence.
struct QuantifierMatch {
  const QuantifierProfile* profile = nullptr;
  std::size_t begin = 0;  // index into the searched sequence
  std::size_t end = 0;    // one past the last matched word
};

struct DefaultQuantifier {
  std::string_view surface;
  Polarity first;
  Polarity second;
  QuantifierCategory category;
};

inline constexpr std::array<DefaultQuantifier, 15> kDefaultQuantifiers{{
    {"every", Polarity::Down, Polarity::Up, QuantifierCategory::Universal},
    {"each", Polarity::Down, Polarity::Up, QuantifierCategory::Universal},
    {"all", Polarity::Down, Polarity::Up, QuantifierCategory::Universal},
    {"no", Polarity::Down, Polarity::Down, QuantifierCategory::Negation},
    {"less than", Polarity::Down, Polarity::Down, QuantifierCategory::Negation},
    {"at most", Polarity::Down, Polarity::Down, QuantifierCategory::Negation},
    {"exactly n", Polarity::Flat, Polarity::Flat, QuantifierCategory::Exact},
    {"the", Polarity::Flat, Polarity::Up, QuantifierCategory::Exact},
    {"this", Polarity::Flat, Polarity::Up, QuantifierCategory::Exact},
    {"some", Polarity::Up, Polarity::Up, QuantifierCategory::Existential},
    {"several", Polarity::Up, Polarity::Up, QuantifierCategory::Existential},
    {"a", Polarity::Up, Polarity::Up, QuantifierCategory::Existential},
    {"an", Polarity::Up, Polarity::Up, QuantifierCategory::Existential},
    {"most", Polarity::Flat, Polarity::Up, QuantifierCategory::Other},
    {"few", Polarity::Flat, Polarity::Down, QuantifierCategory::Other},
}};

inline constexpr std::array<std::string_view, 11> kDefaultDownwardOperators{
    "refuse", "forget", "fail", "deny", "decline", "regret",
    "doubt", "prohibit", "neglect", "impossible", "unable"};

inline constexpr std::array<std::string_view, 13> kDefaultNegationWords{
    "no", "not", "n't", "none", "nobody", "nothing", "never",
    "neither", "nor", "without", "at most", "less than", "than"};

inline constexpr std::array<std::string_view, 1> kDefaultConditionalWords{"if"};

enum class LexiconKind { Quantifiers, Implicatives, Negation, Conditional };

inline std::optional<LexiconKind> parse_lexicon_kind(std::string_view s) {
  if (s == "quantifiers") return LexiconKind::Quantifiers;
  if (s == "implicatives") return LexiconKind::Implicatives;
  if (s == "negation") return LexiconKind::Negation;
  if (s == "conditional") return LexiconKind::Conditional;
  return std::nullopt;
}

class Lexicon {
 public:
  static Lexicon defaults() {
    Lexicon lex;
    for (const auto& q : kDefaultQuantifiers) {
      QuantifierProfile p;
      for (auto tok : text::split(q.surface, ' ')) p.surface.emplace_back(tok);
      p.first_arg = q.first;
      p.second_arg = q.second;
      p.category = q.category;
      lex.quantifiers_.emplace(p.key(), std::move(p));
    }
    for (auto w : kDefaultDownwardOperators) lex.implicatives_.emplace(w, true);
    for (auto w : kDefaultNegationWords) lex.negation_words_.emplace(w);
    for (auto w : kDefaultConditionalWords) lex.conditional_words_.emplace(w);
    return lex;
  }

  // ----- lookups --------------------------------------------------------

  const std::map<std::string, QuantifierProfile>& quantifiers() const noexcept {
    return quantifiers_;
  }
  const std::map<std::string, bool>& implicatives() const noexcept {
    return implicatives_;
  }
  const std::set<std::string>& negation_words() const noexcept {
    return negation_words_;
  }
  const std::set<std::string>& conditional_words() const noexcept {
    return conditional_words_;
  }

  // Single-word (or space-joined phrase) lookup; case-insensitive.
  // Partitives "Q of the" take Q's profile.
  const QuantifierProfile* lookup_determiner(std::string_view phrase) const {
    const std::string key = text::lower(phrase);
    if (auto it = quantifiers_.find(key); it != quantifiers_.end()) return &it->second;
    auto toks = text::split(key, ' ');
    if (toks.size() >= 3 && toks[toks.size() - 2] == "of") {
      auto def = quantifiers_.find(std::string(toks.back()));
      if (def != quantifiers_.end() && def->second.category == QuantifierCategory::Exact) {
        toks.resize(toks.size() - 2);
        return lookup_determiner(text::join(toks, " "));
      }
    }
    return nullptr;
  }

  // Longest quantifier whose last word is words[last].
  QuantifierMatch match_ending_at(std::span<const Word* const> words,
                                  std::size_t last) const {
    QuantifierMatch best;
    for (const auto& [key, p] : quantifiers_) {
      const std::size_t len = p.surface.size();
      if (len > last + 1) continue;
      const std::size_t begin = last + 1 - len;
      if (!matches(p, words, begin)) continue;
      if (best.profile == nullptr || len > best.end - best.begin)
        best = {&p, begin, last + 1};
    }
    if (best.profile != nullptr && best.profile->category == QuantifierCategory::Exact &&
        best.end - best.begin == 1 && last >= 2 && text::lower(words[last - 1]->form) == "of") {
      if (auto outer = match_ending_at(words, last - 2); outer.profile != nullptr)
        return {outer.profile, outer.begin, last + 1};
    }
    return best;
  }

  // Longest quantifier anywhere in `words`; earliest wins a tie.
  QuantifierMatch find_quantifier(std::span<const Word* const> words) const {
    QuantifierMatch best;
    for (std::size_t begin = 0; begin < words.size(); ++begin) {
      for (const auto& [key, p] : quantifiers_) {
        const std::size_t len = p.surface.size();
        if (begin + len > words.size() || !matches(p, words, begin)) continue;
        if (best.profile == nullptr || len > best.end - best.begin)
          best = {&p, begin, begin + len};
      }
    }
    return best;
  }

  bool is_downward_operator(std::string_view lemma) const {
    auto it = implicatives_.find(text::lower(lemma));
    return it != implicatives_.end() && it->second;
  }

  bool is_negation_word(std::string_view word) const {
    return negation_words_.count(text::lower(word)) != 0;
  }

  bool is_conditional_word(std::string_view word) const {
    return conditional_words_.count(text::lower(word)) != 0;
  }

  // ----- loading --------------------------------------------------------

  // Adds one file's entries. Entries from earlier files of the same kind
  // must not repeat; entries that replace a built-in default are fine.
  void merge(LexiconKind kind, std::string_view content, const std::string& source) {
    std::size_t lineno = 0;
    for (auto raw : text::split_lines(content)) {
      ++lineno;
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      const std::string where = source + ":" + std::to_string(lineno);
      auto cols = text::split(line, '\t');
      for (auto& c : cols) c = text::trim(c);
      switch (kind) {
        case LexiconKind::Quantifiers: {
          if (cols.size() != 4)
            throw LoadError(where + ": expected surface<TAB>first<TAB>second<TAB>category");
          auto first = parse_mark_name(cols[1]);
          auto second = parse_mark_name(cols[2]);
          auto category = parse_category(cols[3]);
          if (cols[0].empty() || !first || !second || !category)
            throw LoadError(where + ": malformed quantifier row");
          const bool negation = *category == QuantifierCategory::Negation;
          const bool down_down = *first == Polarity::Down && *second == Polarity::Down;
          if (negation != down_down)
            throw LoadError(where + ": category 'negation' requires down/down and vice versa");
          QuantifierProfile p;
          for (auto tok : text::split(text::lower(cols[0]), ' '))
            if (!tok.empty()) p.surface.emplace_back(tok);
          p.first_arg = *first;
          p.second_arg = *second;
          p.category = *category;
          claim("quantifier", p.key(), where);
          quantifiers_[p.key()] = std::move(p);
          break;
        }
        case LexiconKind::Implicatives: {
          if (cols.size() != 2 || cols[0].empty() ||
              (cols[1] != "downward" && cols[1] != "upward"))
            throw LoadError(where + ": expected lemma<TAB>downward|upward");
          auto lemma = text::lower(cols[0]);
          claim("implicative", lemma, where);
          implicatives_[lemma] = cols[1] == "downward";
          break;
        }
        case LexiconKind::Negation:
        case LexiconKind::Conditional: {
          if (cols.size() != 1) throw LoadError(where + ": expected one word per line");
          auto word = text::lower(cols[0]);
          const bool neg = kind == LexiconKind::Negation;
          claim(neg ? "negation" : "conditional", word, where);
          (neg ? negation_words_ : conditional_words_).insert(word);
          break;
        }
      }
    }
  }

  void merge_file(LexiconKind kind, const std::string& path) {
    merge(kind, read_file(path), path);
  }

  // Infers the kind of an unprefixed file from its column count: four
  // columns are quantifiers, two are implicatives. Word lists need a prefix.
  static LexiconKind infer_kind(std::string_view content, const std::string& source) {
    for (auto raw : text::split_lines(content)) {
      auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      auto cols = text::split(line, '\t').size();
      if (cols == 4) return LexiconKind::Quantifiers;
      if (cols == 2) return LexiconKind::Implicatives;
      break;
    }
    throw LoadError(source + ": cannot tell the lexicon kind; use "
                             "negation:PATH or conditional:PATH for word lists");
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open lexicon file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  static std::optional<Polarity> parse_mark_name(std::string_view s) {
    if (s == "up") return Polarity::Up;
    if (s == "down") return Polarity::Down;
    if (s == "flat") return Polarity::Flat;
    return std::nullopt;
  }

  static bool is_number(const Word& w) {
    if (w.upos == "NUM") return true;
    return !w.form.empty() &&
           w.form.find_first_not_of("0123456789.,") == std::string::npos;
  }

  static bool matches(const QuantifierProfile& p, std::span<const Word* const> words,
                      std::size_t begin) {
    for (std::size_t i = 0; i < p.surface.size(); ++i) {
      const Word& w = *words[begin + i];
      if (p.surface.size() > 1 && p.surface[i] == kNumberSlot) {
        if (!is_number(w)) return false;
      } else if (text::lower(w.form) != p.surface[i]) {
        return false;
      }
    }
    return true;
  }

  void claim(std::string_view table, const std::string& key, const std::string& where) {
    auto [it, inserted] = sources_.emplace(std::string(table) + "/" + key, where);
    if (!inserted)
      throw LoadError("duplicate " + std::string(table) + " entry '" + key +
                      "' in " + it->second + " and " + where);
  }

  std::map<std::string, QuantifierProfile> quantifiers_;
  std::map<std::string, bool> implicatives_;
  std::set<std::string> negation_words_;
  std::set<std::string> conditional_words_;
  std::map<std::string, std::string> sources_;  // user-supplied entries only
};

// Each path is "KIND:PATH" (quantifiers, implicatives, negation, conditional)
// or a bare path whose kind is inferred from its columns.
inline Lexicon load_lexicon(std::span<const std::string> paths) {
  Lexicon lex = Lexicon::defaults();
  for (const auto& spec : paths) {
    std::string path = spec;
    std::optional<LexiconKind> kind;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
      if (auto k = parse_lexicon_kind(std::string_view(spec).substr(0, colon))) {
        kind = k;
        path = spec.substr(colon + 1);
      }
    }
    const std::string content = Lexicon::read_file(path);
    lex.merge(kind ? *kind : Lexicon::infer_kind(content, path), content, path);
  }
  return lex;
}

inline Lexicon load_lexicon(std::initializer_list<std::string> paths) {
  std::vector<std::string> v(paths);
  return load_lexicon(std::span<const std::string>(v));
}

}  // namespace udpolar
