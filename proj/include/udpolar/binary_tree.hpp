#pragma once

// Binary dependency tree: relation-labelled internal nodes over word leaves.
// Modifiers sit on the left, heads on the right spine. Nodes live in one
// arena and refer to each other by index, so trees copy and compare as values.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udpolar/error.hpp"
#include "udpolar/polarity.hpp"
#include "udpolar/text.hpp"

namespace udpolar {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

struct Word {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  bool skip = false;  // punctuation: polarized but never scored

  std::string key() const {
    return text::lower(lemma.empty() || lemma == "_" ? form : lemma);
  }
  friend bool operator==(const Word&, const Word&) = default;
};

struct Node {
  std::string relation;     // empty on leaves
  std::optional<Word> word; // set on leaves only
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  NodeId parent = kNoNode;
  Mark mark;
  int head = 0;   // token id of the word heading this constituent
  int first = 0;  // smallest token id covered
  int last = 0;   // largest token id covered

  bool is_leaf() const noexcept { return word.has_value(); }
  friend bool operator==(const Node&, const Node&) = default;
};

class BinaryDepTree {
 public:
  NodeId add_leaf(Word w) {
    Node n;
    n.head = n.first = n.last = w.id;
    n.word = std::move(w);
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  NodeId add_relation(std::string relation, NodeId left, NodeId right) {
    Node n;
    n.relation = std::move(relation);
    n.left = left;
    n.right = right;
    n.head = nodes_.at(right).head;
    n.first = std::min(nodes_.at(left).first, nodes_.at(right).first);
    n.last = std::max(nodes_.at(left).last, nodes_.at(right).last);
    nodes_.push_back(std::move(n));
    auto id = static_cast<NodeId>(nodes_.size() - 1);
    nodes_[left].parent = id;
    nodes_[right].parent = id;
    return id;
  }

  void set_root(NodeId id) { root_ = id; }
  NodeId root() const noexcept { return root_; }
  bool empty() const noexcept { return root_ == kNoNode; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  const Node& operator[](NodeId id) const { return nodes_.at(id); }
  Node& operator[](NodeId id) { return nodes_.at(id); }

  Mark mark(NodeId id) const { return nodes_.at(id).mark; }
  void set_mark(NodeId id, Polarity p) { nodes_.at(id).mark = p; }

  // Pre-order walk of the subtree under `id`.
  template <typename F>
  void visit(NodeId id, F&& f) const {
    if (id == kNoNode) return;
    std::vector<NodeId> stack{id};
    while (!stack.empty()) {
      NodeId cur = stack.back();
      stack.pop_back();
      f(cur);
      const Node& n = nodes_[cur];
      if (n.right != kNoNode) stack.push_back(n.right);
      if (n.left != kNoNode) stack.push_back(n.left);
    }
  }

  std::vector<NodeId> subtree(NodeId id) const {
    std::vector<NodeId> out;
    visit(id, [&](NodeId n) { out.push_back(n); });
    return out;
  }

  // Leaves ordered by token id, i.e. in sentence order.
  std::vector<NodeId> leaves() const {
    std::vector<NodeId> out;
    visit(root_, [&](NodeId n) {
      if (nodes_[n].is_leaf()) out.push_back(n);
    });
    std::sort(out.begin(), out.end(), [&](NodeId a, NodeId b) {
      return nodes_[a].word->id < nodes_[b].word->id;
    });
    return out;
  }

  NodeId leaf_of(int token_id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].is_leaf() && nodes_[i].word->id == token_id)
        return static_cast<NodeId>(i);
    return kNoNode;
  }

  bool is_left_child(NodeId id) const {
    NodeId p = nodes_.at(id).parent;
    return p != kNoNode && nodes_[p].left == id;
  }

  bool contains(NodeId ancestor, NodeId id) const {
    for (NodeId cur = id; cur != kNoNode; cur = nodes_[cur].parent)
      if (cur == ancestor) return true;
    return false;
  }

  // Leaf at the bottom of the right spine: the word heading `id`.
  NodeId head_leaf(NodeId id) const {
    while (!nodes_.at(id).is_leaf()) id = nodes_[id].right;
    return id;
  }

  // Words covered by `id`, in sentence order.
  std::vector<const Word*> words(NodeId id) const {
    std::vector<const Word*> out;
    visit(id, [&](NodeId n) {
      if (nodes_[n].is_leaf()) out.push_back(&*nodes_[n].word);
    });
    std::sort(out.begin(), out.end(),
              [](const Word* a, const Word* b) { return a->id < b->id; });
    return out;
  }

  bool fully_marked() const {
    bool ok = true;
    visit(root_, [&](NodeId n) { ok = ok && nodes_[n].mark.has_value(); });
    return ok;
  }

  void clear_marks() {
    for (auto& n : nodes_) n.mark.reset();
  }

  // Same shape and node values, marks ignored.
  bool same_structure(const BinaryDepTree& other) const {
    if (nodes_.size() != other.nodes_.size() || root_ != other.root_) return false;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& a = nodes_[i];
      const Node& b = other.nodes_[i];
      if (a.relation != b.relation || a.word != b.word || a.left != b.left ||
          a.right != b.right || a.parent != b.parent)
        return false;
    }
    return true;
  }

  friend bool operator==(const BinaryDepTree&, const BinaryDepTree&) = default;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

namespace detail {

inline std::string escape_atom(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ' ' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline void append_sexpr(const BinaryDepTree& t, NodeId id, std::string& out) {
  const Node& n = t[id];
  auto suffix = [&] {
    if (n.mark) out += to_ascii(*n.mark);
  };
  if (n.is_leaf()) {
    out += escape_atom(n.word->form);
    suffix();
    return;
  }
  out += '(';
  out += escape_atom(n.relation);
  suffix();
  // Children print in sentence order so the text reads like the sentence.
  NodeId a = n.left, b = n.right;
  if (t[b].first < t[a].first) std::swap(a, b);
  out += ' ';
  append_sexpr(t, a, out);
  out += ' ';
  append_sexpr(t, b, out);
  out += ')';
}

}  // namespace detail

// "(label child child)" with children in sentence order; leaves print their
// form. Each assigned mark is appended as ^, v or =.
inline std::string to_sexpression(const BinaryDepTree& tree, NodeId id) {
  std::string out;
  detail::append_sexpr(tree, id, out);
  return out;
}

inline std::string to_sexpression(const BinaryDepTree& tree) {
  return tree.empty() ? std::string{} : to_sexpression(tree, tree.root());
}

// Parsed s-expression text, used to read rendered trees back.
struct SExpr {
  std::string value;
  Mark mark;
  std::vector<SExpr> children;

  friend bool operator==(const SExpr&, const SExpr&) = default;
};

namespace detail {

class SExprReader {
 public:
  SExprReader(std::string_view text, bool marked) : s_(text), marked_(marked) {}

  SExpr read() {
    SExpr e = item();
    skip_space();
    if (pos_ != s_.size()) fail("trailing text");
    return e;
  }

 private:
  SExpr item() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == ')') fail("unexpected ')'");
    if (s_[pos_] != '(') return atom_with_mark();
    ++pos_;
    SExpr e = atom_with_mark();
    for (int i = 0; i < 2; ++i) e.children.push_back(item());
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
    ++pos_;
    return e;
  }

  SExpr atom_with_mark() {
    skip_space();
    std::string raw;
    std::vector<bool> escaped;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\\' && pos_ + 1 < s_.size()) {
        raw += s_[pos_ + 1];
        escaped.push_back(true);
        pos_ += 2;
        continue;
      }
      if (c == ' ' || c == '(' || c == ')') break;
      raw += c;
      escaped.push_back(false);
      ++pos_;
    }
    if (raw.empty()) fail("empty atom");
    SExpr e;
    if (marked_) {
      if (raw.size() < 2 || escaped.back()) fail("atom '" + raw + "' lacks a mark");
      auto m = parse_polarity(std::string_view(&raw.back(), 1));
      if (!m) fail("atom '" + raw + "' has no ^/v/= suffix");
      e.mark = m;
      raw.pop_back();
    }
    e.value = std::move(raw);
    return e;
  }

  void skip_space() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("s-expression column " + std::to_string(pos_ + 1) + ": " + what, 1);
  }

  std::string_view s_;
  bool marked_;
  std::size_t pos_ = 0;
};

inline void append_sexpr(const SExpr& e, std::string& out) {
  auto atom = [&] {
    out += escape_atom(e.value);
    if (e.mark) out += to_ascii(*e.mark);
  };
  if (e.children.empty()) {
    atom();
    return;
  }
  out += '(';
  atom();
  for (const auto& c : e.children) {
    out += ' ';
    append_sexpr(c, out);
  }
  out += ')';
}

}  // namespace detail

// `marked` selects the grammar where every atom ends in a mark suffix.
inline SExpr parse_sexpression(std::string_view text, bool marked) {
  return detail::SExprReader(text, marked).read();
}

inline std::string to_string(const SExpr& e) {
  std::string out;
  detail::append_sexpr(e, out);
  return out;
}

}  // namespace udpolar
