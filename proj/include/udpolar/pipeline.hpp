#pragma once

// CoNLL-U graph -> binary tree -> marks -> tokens, singly or in batches.

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "udpolar/binarizer.hpp"
#include "udpolar/conllu.hpp"
#include "udpolar/hierarchy.hpp"
#include "udpolar/lexicon.hpp"
#include "udpolar/polarizer.hpp"

namespace udpolar {

class Pipeline {
 public:
  Pipeline()
      : Pipeline(RelationHierarchy::defaults(), Lexicon::defaults(), RuleTable::standard()) {}
  Pipeline(RelationHierarchy hierarchy, Lexicon lexicon, RuleTable rules = RuleTable::standard())
      : hierarchy_(std::move(hierarchy)), polarizer_(std::move(lexicon), std::move(rules)) {}

  const RelationHierarchy& hierarchy() const noexcept { return hierarchy_; }
  const Polarizer& polarizer() const noexcept { return polarizer_; }

  AnnotatedSentence run(const DependencyGraph& graph) const {
    BinaryDepTree tree = binarize(graph, hierarchy_);
    polarizer_.polarize(tree);
    return project_to_tokens(tree, graph);
  }

  // Results come back in input order whatever the worker count. The first
  // exception (by input position) is rethrown after all workers finish.
  std::vector<AnnotatedSentence> run_batch(const std::vector<DependencyGraph>& graphs,
                                           unsigned jobs = 1) const {
    std::vector<AnnotatedSentence> out(graphs.size());
    std::vector<std::exception_ptr> errors(graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
        try {
          out[i] = run(graphs[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(graphs.size())));
    if (jobs <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    return out;
  }

 private:
  RelationHierarchy hierarchy_;
  Polarizer polarizer_;
};

inline AnnotatedSentence polarize_graph(const DependencyGraph& graph) {
  static const Pipeline pipeline;
  return pipeline.run(graph);
}

}  // namespace udpolar
