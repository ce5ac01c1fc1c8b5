#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "udpolar/binary_tree.hpp"
#include "udpolar/conllu.hpp"
#include "udpolar/hierarchy.hpp"

namespace udpolar {

namespace detail {

inline bool has_subject(const DependencyGraph& g, int id) {
  for (const auto& c : g.children(id)) {
    std::string_view r = c.deprel;
    if (r == "nsubj" || r == "nsubj:pass" || r == "csubj" || r == "csubj:pass")
      return true;
  }
  return false;
}

inline bool has_complement(const DependencyGraph& g, int id) {
  for (const auto& c : g.children(id))
    if (c.deprel == "obj" || c.deprel == "xcomp" || c.deprel == "ccomp") return true;
  return false;
}

// Token id of the root predicate's subject, or the root itself.
inline int clause_start(const DependencyGraph& g) {
  const Token& root = g.root();
  for (const auto& c : g.children(root.id)) {
    std::string_view r = c.deprel;
    if (r == "nsubj" || r == "nsubj:pass" || r == "csubj" || r == "csubj:pass")
      return std::min(c.token->id, root.id);
  }
  return root.id;
}

}  // namespace detail

// Maps a raw UD label onto the finer labels the hierarchy distinguishes.
//   conj  -> conj-sent  both conjuncts carry their own subject
//            conj-vp    the conjunct takes an obj/xcomp/ccomp
//            conj-vb / conj-n / conj-adj by the conjunct's UPOS
//            conj-np    otherwise
//   advcl / advmod -> *-sent when attached to the root predicate ahead of
//            its subject (a sentence-level modifier)
inline std::string refine_relation(const DependencyGraph& g,
                                   std::string_view deprel, const Token& head,
                                   const Token& dependent) {
  if (deprel == "conj") {
    if (detail::has_subject(g, head.id) && detail::has_subject(g, dependent.id))
      return "conj-sent";
    if (detail::has_complement(g, dependent.id)) return "conj-vp";
    const std::string& pos = dependent.upos;
    if (pos == "VERB") return "conj-vb";
    if (pos == "NOUN" || pos == "PROPN" || pos == "PRON") return "conj-n";
    if (pos == "ADJ") return "conj-adj";
    return "conj-np";
  }
  if ((deprel == "advcl" || deprel == "advmod") && head.head == 0 &&
      dependent.id < detail::clause_start(g))
    return std::string(deprel) + "-sent";
  return std::string(deprel);
}

struct RankedChild {
  std::string relation;  // refined
  int level;
  const Token* token;
};

// Ascending level-id; equal levels keep sentence order.
inline std::vector<RankedChild> sort_children(std::vector<RankedChild> children) {
  std::sort(children.begin(), children.end(),
            [](const RankedChild& a, const RankedChild& b) {
              if (a.level != b.level) return a.level < b.level;
              return a.token->id < b.token->id;
            });
  return children;
}

class Binarizer {
 public:
  Binarizer(const DependencyGraph& graph, const RelationHierarchy& hierarchy)
      : graph_(graph), hierarchy_(hierarchy) {}

  BinaryDepTree run() {
    tree_ = BinaryDepTree{};
    tree_.set_root(compose(graph_.root()));
    return std::move(tree_);
  }

 private:
  // The highest-ranked dependent becomes the outermost relation; the head
  // word ends up as the innermost right leaf.
  NodeId compose(const Token& head) {
    std::vector<RankedChild> ranked;
    for (const auto& c : graph_.children(head.id)) {
      auto rel = refine_relation(graph_, c.deprel, head, *c.token);
      int level = hierarchy_.level(rel);
      ranked.push_back({std::move(rel), level, c.token});
    }
    ranked = sort_children(std::move(ranked));

    NodeId node = tree_.add_leaf(Word{head.id, head.form, head.lemma,
                                      head.upos, head.is_punct()});
    for (auto it = ranked.rbegin(); it != ranked.rend(); ++it) {
      NodeId modifier = compose(*it->token);
      node = tree_.add_relation(it->relation, modifier, node);
    }
    return node;
  }

  const DependencyGraph& graph_;
  const RelationHierarchy& hierarchy_;
  BinaryDepTree tree_;
};

inline BinaryDepTree binarize(const DependencyGraph& graph,
                              const RelationHierarchy& hierarchy) {
  return Binarizer(graph, hierarchy).run();
}

inline BinaryDepTree binarize(const DependencyGraph& graph) {
  static const RelationHierarchy defaults = RelationHierarchy::defaults();
  return binarize(graph, defaults);
}

}  // namespace udpolar
