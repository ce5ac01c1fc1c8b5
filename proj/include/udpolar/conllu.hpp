#pragma once

// CoNLL-U reading and writing. Only basic-tree token lines are kept:
// multiword ranges ("3-4") and empty nodes ("5.1") are skipped, and the DEPS
// column is carried through verbatim but never interpreted.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "udpolar/error.hpp"
#include "udpolar/text.hpp"

namespace udpolar {

struct Token {
  int id = 0;
  std::string form;
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;
  std::string deprel;
  std::string deps = "_";
  std::string misc = "_";

  // Lowercased lemma, or lowercased form when the lemma column is empty.
  std::string key() const {
    return text::lower(lemma.empty() || lemma == "_" ? form : lemma);
  }
  bool is_punct() const { return upos == "PUNCT" || deprel == "punct"; }

  friend bool operator==(const Token&, const Token&) = default;
};

// A child edge as seen from its head.
struct Child {
  std::string_view deprel;
  const Token* token;
};

class DependencyGraph {
 public:
  // Validates the tree invariants; throws ValidationError naming `sent_id`.
  DependencyGraph(std::vector<Token> tokens, std::string text = {},
                  std::string sent_id = {})
      : tokens_(std::move(tokens)), text_(std::move(text)),
        sent_id_(std::move(sent_id)) {
    std::sort(tokens_.begin(), tokens_.end(),
              [](const Token& a, const Token& b) { return a.id < b.id; });
    if (text_.empty()) {
      std::vector<std::string_view> forms;
      for (const auto& t : tokens_) forms.push_back(t.form);
      text_ = text::join(forms, " ");
    }
    validate();
  }

  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  const std::string& text() const noexcept { return text_; }
  const std::string& sent_id() const noexcept { return sent_id_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  const Token* find(int id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &tokens_[it->second];
  }
  const Token& at(int id) const {
    const Token* t = find(id);
    if (t == nullptr)
      throw Error("no token with id " + std::to_string(id) + " in sentence " +
                  sent_id_);
    return *t;
  }

  const Token& root() const { return tokens_[root_]; }

  // Dependents of `head_id` in ascending id order.
  std::vector<Child> children(int head_id) const {
    std::vector<Child> out;
    for (const auto& t : tokens_)
      if (t.head == head_id) out.push_back({t.deprel, &t});
    return out;
  }

  bool has_child(int head_id, std::string_view deprel) const {
    return std::any_of(tokens_.begin(), tokens_.end(), [&](const Token& t) {
      return t.head == head_id && t.deprel == deprel;
    });
  }

 private:
  void validate() {
    const std::string name = sent_id_.empty() ? text_ : sent_id_;
    if (tokens_.empty()) throw ValidationError(name, "no tokens");
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.id < 1)
        throw ValidationError(name, "token id " + std::to_string(t.id) + " < 1");
      if (!index_.emplace(t.id, i).second)
        throw ValidationError(name, "duplicate token id " + std::to_string(t.id));
    }
    std::optional<std::size_t> root;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      const std::string where = "token " + std::to_string(t.id);
      if (t.head < 0) throw ValidationError(name, where + " has negative head");
      if (t.head == t.id) throw ValidationError(name, where + " heads itself");
      if (t.deprel.empty() || t.deprel == "_")
        throw ValidationError(name, where + " has no relation");
      if (t.head == 0) {
        if (root) throw ValidationError(name, "more than one root");
        root = i;
      } else if (!index_.count(t.head)) {
        throw ValidationError(name, where + " points at missing head " +
                                        std::to_string(t.head));
      }
    }
    if (!root) throw ValidationError(name, "no root token");
    root_ = *root;
    // Every token must reach the root within size() steps.
    for (const auto& t : tokens_) {
      int cur = t.id;
      std::size_t steps = 0;
      while (cur != 0) {
        if (++steps > tokens_.size())
          throw ValidationError(name, "cycle through token " +
                                          std::to_string(t.id));
        cur = tokens_[index_.at(cur)].head;
      }
    }
  }

  std::vector<Token> tokens_;
  std::string text_;
  std::string sent_id_;
  std::unordered_map<int, std::size_t> index_;
  std::size_t root_ = 0;
};

inline const Token& graph_root(const DependencyGraph& g) { return g.root(); }

inline std::vector<Child> children_of(const DependencyGraph& g,
                                      const Token& token) {
  return g.children(token.id);
}

// Outcome of reading one sentence block; exactly one of graph/error is set.
struct BlockResult {
  std::optional<DependencyGraph> graph;
  std::string error;
  std::size_t first_line = 0;

  bool ok() const noexcept { return graph.has_value(); }
};

namespace detail {

struct RawBlock {
  std::vector<Token> tokens;
  std::string text;
  std::string sent_id;
  std::size_t first_line = 0;
};

inline Token parse_token_line(std::string_view line, std::size_t lineno) {
  auto cols = text::split(line, '\t');
  if (cols.size() != 10)
    throw ParseError("expected 10 tab-separated columns, found " +
                         std::to_string(cols.size()),
                     lineno);
  auto id = text::parse_int(cols[0]);
  if (!id) throw ParseError("non-integer token id '" + std::string(cols[0]) + "'", lineno);
  auto head = text::parse_int(cols[6]);
  if (!head) throw ParseError("non-integer head '" + std::string(cols[6]) + "'", lineno);
  Token t;
  t.id = *id;
  t.form = std::string(cols[1]);
  t.lemma = std::string(cols[2]);
  t.upos = std::string(cols[3]);
  t.xpos = std::string(cols[4]);
  t.feats = std::string(cols[5]);
  t.head = *head;
  t.deprel = std::string(cols[7]);
  t.deps = std::string(cols[8]);
  t.misc = std::string(cols[9]);
  return t;
}

inline std::optional<std::string_view> comment_value(std::string_view line,
                                                     std::string_view key) {
  line.remove_prefix(1);
  line = text::trim(line);
  if (line.substr(0, key.size()) != key) return std::nullopt;
  line.remove_prefix(key.size());
  line = text::trim(line);
  if (line.empty() || line.front() != '=') return std::nullopt;
  line.remove_prefix(1);
  return text::trim(line);
}

inline bool is_skipped_id(std::string_view id) {
  return id.find('-') != std::string_view::npos ||
         id.find('.') != std::string_view::npos;
}

// Splits `input` into sentence blocks. Token-line parse errors are thrown as
// ParseError when `strict`, otherwise recorded on the block.
template <typename OnBlock>
void scan_blocks(std::string_view input, bool strict, OnBlock&& on_block) {
  const auto lines = text::split_lines(input);
  std::size_t ordinal = 0;
  std::size_t i = 0;
  while (i < lines.size()) {
    if (text::trim(lines[i]).empty()) {
      ++i;
      continue;
    }
    RawBlock block;
    block.first_line = i + 1;
    std::string error;
    for (; i < lines.size() && !text::trim(lines[i]).empty(); ++i) {
      if (!error.empty()) continue;
      std::string_view line = lines[i];
      if (line.front() == '#') {
        if (auto v = comment_value(line, "text")) block.text = std::string(*v);
        if (auto v = comment_value(line, "sent_id")) block.sent_id = std::string(*v);
        continue;
      }
      auto first_tab = line.find('\t');
      if (first_tab != std::string_view::npos &&
          is_skipped_id(line.substr(0, first_tab)))
        continue;
      if (strict) {
        block.tokens.push_back(parse_token_line(line, i + 1));
        continue;
      }
      try {
        block.tokens.push_back(parse_token_line(line, i + 1));
      } catch (const ParseError& e) {
        error = e.what();
      }
    }
    ++ordinal;
    if (block.sent_id.empty()) block.sent_id = std::to_string(ordinal);
    if (error.empty() && block.tokens.empty()) continue;  // comment-only block
    on_block(std::move(block), error);
  }
}

}  // namespace detail

// Reads every sentence block, collecting per-block failures instead of
// throwing. Never throws on arbitrary input.
inline std::vector<BlockResult> read_conllu(std::string_view input) {
  std::vector<BlockResult> out;
  detail::scan_blocks(input, false, [&](detail::RawBlock block, const std::string& error) {
    BlockResult result;
    result.first_line = block.first_line;
    if (!error.empty()) {
      result.error = error;
    } else {
      try {
        result.graph.emplace(std::move(block.tokens), std::move(block.text),
                             std::move(block.sent_id));
      } catch (const Error& e) {
        result.error = e.what();
      }
    }
    out.push_back(std::move(result));
  });
  return out;
}

// Strict variant: throws the first ParseError / ValidationError encountered.
inline std::vector<DependencyGraph> parse_conllu(std::string_view input) {
  std::vector<DependencyGraph> graphs;
  detail::scan_blocks(input, true, [&](detail::RawBlock block, const std::string&) {
    graphs.emplace_back(std::move(block.tokens), std::move(block.text),
                        std::move(block.sent_id));
  });
  return graphs;
}

inline std::string serialize_conllu(const DependencyGraph& g) {
  std::string out;
  out += "# sent_id = " + g.sent_id() + "\n";
  out += "# text = " + g.text() + "\n";
  for (const auto& t : g.tokens()) {
    out += std::to_string(t.id) + '\t' + t.form + '\t' + t.lemma + '\t' +
           t.upos + '\t' + t.xpos + '\t' + t.feats + '\t' +
           std::to_string(t.head) + '\t' + t.deprel + '\t' + t.deps + '\t' +
           t.misc + '\n';
  }
  out += '\n';
  return out;
}

inline std::string serialize_conllu(const std::vector<DependencyGraph>& graphs) {
  std::string out;
  for (const auto& g : graphs) out += serialize_conllu(g);
  return out;
}

}  // namespace udpolar
