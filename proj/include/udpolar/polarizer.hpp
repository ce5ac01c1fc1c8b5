#pragma once

// Polarization of a binarized dependency tree.
//
// Every relation label dispatches to one of a handful of rule families. All
// families mark the head side (right child) first and the modifier side
// second, so by the time a modifier rewrites the scope it sits in, that scope
// is already fully marked. Word-level rules run last at each node.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udpolar/binary_tree.hpp"
#include "udpolar/building_blocks.hpp"
#include "udpolar/conllu.hpp"
#include "udpolar/error.hpp"
#include "udpolar/lexicon.hpp"
#include "udpolar/polarity.hpp"

namespace udpolar {

enum class RuleKind {
  Inherit,     // both sides inherit; left follows a flipped/flattened right
  Subject,     // both sides inherit; subject is left alone by the predicate
  Clause,      // modifier clause starts Up and then follows the head
  Determiner,  // quantifier profile over restrictor and scope
  Complement,  // both sides inherit; downward verbs flip their complement
};

inline std::string_view to_name(RuleKind k) noexcept {
  switch (k) {
    case RuleKind::Inherit: return "inherit";
    case RuleKind::Subject: return "subject";
    case RuleKind::Clause: return "clause";
    case RuleKind::Determiner: return "determiner";
    case RuleKind::Complement: return "complement";
  }
  return "?";
}

class RuleTable {
 public:
  static RuleTable standard() {
    RuleTable t;
    for (auto r : {"nsubj", "nsubj:pass", "csubj", "csubj:pass", "expl"})
      t.assign(r, RuleKind::Subject);
    for (auto r : {"acl", "acl:relcl", "advcl", "advcl-sent"})
      t.assign(r, RuleKind::Clause);
    for (auto r : {"det", "det:predet", "nummod", "amod"})
      t.assign(r, RuleKind::Determiner);
    for (auto r : {"obj", "iobj", "xcomp", "ccomp"})
      t.assign(r, RuleKind::Complement);
    return t;
  }

  void assign(std::string label, RuleKind kind) { rules_[std::move(label)] = kind; }

  // Exact label, then its universal part ("acl:relcl" -> "acl"), then the
  // fallback rule.
  RuleKind lookup(std::string_view label) const {
    if (auto it = rules_.find(std::string(label)); it != rules_.end()) return it->second;
    if (auto colon = label.find(':'); colon != std::string_view::npos)
      if (auto it = rules_.find(std::string(label.substr(0, colon))); it != rules_.end())
        return it->second;
    return fallback_;
  }

  RuleKind fallback() const noexcept { return fallback_; }
  const std::map<std::string, RuleKind>& entries() const noexcept { return rules_; }

 private:
  std::map<std::string, RuleKind> rules_;
  RuleKind fallback_ = RuleKind::Inherit;
};

namespace detail {

inline std::string_view base_relation(std::string_view r) {
  auto colon = r.find(':');
  return colon == std::string_view::npos ? r : r.substr(0, colon);
}

inline bool is_number_word(const Word& w) {
  if (w.upos == "NUM") return true;
  return !w.form.empty() && w.form.find_first_not_of("0123456789.,") == std::string::npos &&
         w.form.find_first_of("0123456789") != std::string::npos;
}

inline const QuantifierProfile& existential_profile() {
  static const QuantifierProfile p{{"a"}, Polarity::Up, Polarity::Up,
                                   QuantifierCategory::Existential};
  return p;
}

class PolarizationRun {
 public:
  PolarizationRun(BinaryDepTree& tree, const Lexicon& lexicon, const RuleTable& rules)
      : t_(tree), lex_(lexicon), rules_(rules), sentence_(collect_sentence(tree)) {}

  void run() {
    if (t_.empty()) return;
    visit(t_.root());
  }

 private:
  static std::vector<const Word*> collect_sentence(const BinaryDepTree& t) {
    return t.empty() ? std::vector<const Word*>{} : t.words(t.root());
  }

  Polarity mark(NodeId id) const { return *t_[id].mark; }

  void visit(NodeId id) {
    if (!t_[id].mark) t_.set_mark(id, Polarity::Up);
    if (t_[id].is_leaf()) return;
    switch (rules_.lookup(t_[id].relation)) {
      case RuleKind::Inherit: inherit(id); break;
      case RuleKind::Subject: subject(id); break;
      case RuleKind::Clause: clause(id); break;
      case RuleKind::Determiner: determiner(id); break;
      case RuleKind::Complement: complement(id); break;
    }
  }

  void inherit(NodeId id) {
    const Node& n = t_[id];
    const NodeId left = n.left, right = n.right;
    const Polarity m = mark(id);
    t_.set_mark(left, m);
    t_.set_mark(right, m);
    visit(right);
    const Polarity head = mark(right);
    visit(left);
    // The modifier follows whatever the head side turned into.
    if (m != Polarity::Flat && head == Polarity::Flat)
      equalize_subtree(t_, left);
    else if (m != Polarity::Flat && head != m)
      negate_subtree(t_, left);
    word_rules(id);
  }

  void subject(NodeId id) {
    const Node& n = t_[id];
    const NodeId left = n.left, right = n.right;
    const Polarity m = mark(id);
    t_.set_mark(left, m);
    t_.set_mark(right, m);
    visit(right);
    visit(left);
    word_rules(id);
  }

  void clause(NodeId id) {
    const Node& n = t_[id];
    const NodeId left = n.left, right = n.right;
    t_.set_mark(right, mark(id));
    t_.set_mark(left, Polarity::Up);
    visit(right);
    const Polarity head = mark(right);
    visit(left);
    if (head == Polarity::Down)
      negate_subtree(t_, left);
    else if (head == Polarity::Flat)
      equalize_subtree(t_, left);
    word_rules(id);
  }

  void complement(NodeId id) {
    const Node& n = t_[id];
    const NodeId left = n.left, right = n.right;
    const Polarity m = mark(id);
    t_.set_mark(left, m);
    t_.set_mark(right, m);
    visit(right);
    visit(left);
    const Word& verb = *t_[t_.head_leaf(right)].word;
    if (lex_.is_downward_operator(verb.key())) negate_subtree(t_, left);
    word_rules(id);
  }

  const QuantifierProfile* quantifier_for(NodeId id) const {
    const Node& n = t_[id];
    const auto rel = n.relation;
    if (rel == "det" || rel == "det:predet") {
      // Match backwards from the determiner so that split quantifiers such
      // as "all of the" are seen whole.
      const int last_id = t_[n.left].last;
      for (std::size_t i = 0; i < sentence_.size(); ++i) {
        if (sentence_[i]->id != last_id) continue;
        auto m = lex_.match_ending_at(sentence_, i);
        return m.profile ? m.profile : &existential_profile();
      }
      return &existential_profile();
    }
    const auto words = t_.words(n.left);
    return lex_.find_quantifier(words).profile;
  }

  void determiner(NodeId id) {
    const QuantifierProfile* q = quantifier_for(id);
    if (q == nullptr) {
      inherit(id);
      return;
    }
    const Node& n = t_[id];
    const NodeId left = n.left, right = n.right;
    const Polarity m = mark(id);
    t_.set_mark(left, m);
    t_.set_mark(right, compose(m, q->first_arg));
    visit(right);
    visit(left);

    // Climb to the top of the noun phrase. Restrictors ranked above the
    // determiner are not marked yet; their root mark carries the profile
    // down when they are.
    NodeId top = id;
    const int noun = n.head;
    while (t_[top].parent != kNoNode && t_[t_[top].parent].head == noun) {
      const NodeId parent = t_[top].parent;
      const NodeId restrictor = t_[parent].left;
      if (!is_function_relation(base_relation(t_[parent].relation)))
        t_.set_mark(restrictor, compose(mark(restrictor), q->first_arg));
      top = parent;
    }
    if (t_[top].parent != kNoNode) {
      if (q->second_arg == Polarity::Down)
        topdown_negation(t_, top);
      else if (q->second_arg == Polarity::Flat)
        topdown_equalization(t_, top);
    }
    word_rules(id);
  }

  // Word-level rules for the words directly under `id`.
  void word_rules(NodeId id) {
    const Node& n = t_[id];
    const NodeId left = n.left, right = n.right;
    const std::string_view rel = base_relation(n.relation);
    const Word& modifier = *t_[t_.head_leaf(left)].word;
    const bool quantifier_word = lex_.lookup_determiner(modifier.form) != nullptr;

    // Negation adverbs/prepositions and conditional markers flip the
    // constituent they attach to.
    if ((rel == "advmod" || rel == "advmod-sent" || rel == "case") &&
        lex_.is_negation_word(modifier.form) && !quantifier_word) {
      negate_subtree(t_, right);
    } else if (rel == "mark" && lex_.is_conditional_word(modifier.form)) {
      negate_subtree(t_, right);
    } else if (t_[left].is_leaf() && lex_.is_negation_word(modifier.form) &&
               !quantifier_word && is_argument(rel)) {
      // "nobody", "nothing": negative arguments scope over their clause.
      topdown_negation(t_, left);
    }

    for (NodeId child : {left, right}) {
      const Node& c = t_[child];
      if (c.is_leaf() && !c.word->skip && is_number_word(*c.word))
        number_rule(id, child);
    }
  }

  static bool is_function_relation(std::string_view rel) {
    return rel == "case" || rel == "mark" || rel == "cc" || rel == "punct" || rel == "cop" ||
           rel == "aux" || rel == "discourse";
  }

  static bool is_argument(std::string_view rel) {
    return rel == "nsubj" || rel == "csubj" || rel == "obj" || rel == "iobj" ||
           rel == "obl" || rel == "expl";
  }

  // A bare number reads as "at least n": larger numbers give stronger
  // claims, so the number itself is antitone. Negation quantifiers
  // ("less than n", "at most n") keep it monotone; "exactly n" flattens it.
  void number_rule(NodeId id, NodeId leaf) {
    std::vector<const Word*> words{&*t_[leaf].word};
    if (t_[id].right == leaf) {
      const int number = t_[leaf].word->id;
      for (NodeId cur = id; cur != kNoNode && t_[cur].head == number; cur = t_[cur].parent) {
        const auto rel = t_[cur].relation;
        if (rel == "advmod" || rel == "amod" || rel == "det" || rel == "det:predet") {
          auto more = t_.words(t_[cur].left);
          words.insert(words.end(), more.begin(), more.end());
        }
      }
      std::sort(words.begin(), words.end(),
                [](const Word* a, const Word* b) { return a->id < b->id; });
    }
    const QuantifierProfile* q = lex_.find_quantifier(words).profile;
    const Polarity m = mark(leaf);
    if (q != nullptr && q->category == QuantifierCategory::Negation) return;
    if (q != nullptr && q->category == QuantifierCategory::Exact) {
      t_.set_mark(leaf, Polarity::Flat);
      return;
    }
    t_.set_mark(leaf, flip(m));
  }

  BinaryDepTree& t_;
  const Lexicon& lex_;
  const RuleTable& rules_;
  std::vector<const Word*> sentence_;
};

}  // namespace detail

class Polarizer {
 public:
  Polarizer() : Polarizer(Lexicon::defaults(), RuleTable::standard()) {}
  Polarizer(Lexicon lexicon, RuleTable rules)
      : lexicon_(std::move(lexicon)), rules_(std::move(rules)) {}

  const Lexicon& lexicon() const noexcept { return lexicon_; }
  const RuleTable& rules() const noexcept { return rules_; }

  // Marks every node of `tree` in place. Existing marks are discarded.
  void polarize(BinaryDepTree& tree) const {
    tree.clear_marks();
    detail::PolarizationRun(tree, lexicon_, rules_).run();
  }

 private:
  Lexicon lexicon_;
  RuleTable rules_;
};

inline BinaryDepTree polarize(BinaryDepTree tree, const Lexicon& lexicon,
                              const RuleTable& rules) {
  tree.clear_marks();
  detail::PolarizationRun(tree, lexicon, rules).run();
  return tree;
}

struct AnnotatedToken {
  Token token;
  Mark mark;  // empty for unscored tokens (punctuation)
};

struct AnnotatedSentence {
  std::string sent_id;
  std::string text;
  std::vector<AnnotatedToken> tokens;
  BinaryDepTree tree;
};

inline AnnotatedSentence project_to_tokens(const BinaryDepTree& tree,
                                           const DependencyGraph& graph) {
  AnnotatedSentence out;
  out.sent_id = graph.sent_id();
  out.text = graph.text();
  out.tree = tree;
  for (const auto& token : graph.tokens()) {
    const NodeId leaf = tree.leaf_of(token.id);
    if (leaf == kNoNode)
      throw InvariantError("token " + std::to_string(token.id) + " of sentence " +
                           graph.sent_id() + " has no leaf");
    const Node& n = tree[leaf];
    if (!n.mark)
      throw InvariantError("leaf for token " + std::to_string(token.id) +
                           " of sentence " + graph.sent_id() + " is unmarked");
    out.tokens.push_back({token, n.word->skip ? Mark{} : n.mark});
  }
  return out;
}

}  // namespace udpolar
