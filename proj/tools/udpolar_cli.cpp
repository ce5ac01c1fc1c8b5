// udpolar: polarize CoNLL-U input, evaluate against gold marks, render trees.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "udpolar/udpolar.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAlignment = 2;

struct Options {
  std::string input;  // empty: stdin
  std::string format = "inline";
  bool ascii = false;
  std::vector<std::string> lexicon;
  std::string hierarchy;
  std::string gold;
  std::string pred;
  std::string exclude;
  bool key_only = false;
  bool lenient = false;
  bool dump = false;
  unsigned jobs = 1;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return udpolar::read_text_file(path);
}

udpolar::Pipeline make_pipeline(const Options& o) {
  auto hierarchy = o.hierarchy.empty() ? udpolar::RelationHierarchy::defaults()
                                       : udpolar::RelationHierarchy::load(o.hierarchy);
  auto lexicon = udpolar::load_lexicon(std::span<const std::string>(o.lexicon));
  return udpolar::Pipeline(std::move(hierarchy), std::move(lexicon));
}

// Strict mode stops on the first bad block; lenient mode reports and skips it.
std::vector<udpolar::DependencyGraph> read_graphs(const Options& o) {
  const std::string text = read_input(o.input);
  if (!o.lenient) return udpolar::parse_conllu(text);
  std::vector<udpolar::DependencyGraph> graphs;
  for (auto& block : udpolar::read_conllu(text)) {
    if (block.ok())
      graphs.push_back(std::move(*block.graph));
    else
      std::cerr << "udpolar: skipped sentence at line " << block.first_line << ": "
                << block.error << "\n";
  }
  return graphs;
}

std::vector<udpolar::AnnotatedSentence> annotate(const Options& o) {
  const auto pipeline = make_pipeline(o);
  return pipeline.run_batch(read_graphs(o), o.jobs);
}

int cmd_polarize(const Options& o, udpolar::OutputFormat format) {
  for (const auto& s : annotate(o)) std::cout << udpolar::render(s, format, o.ascii);
  return kExitOk;
}

int cmd_eval(const Options& o) {
  const auto gold = udpolar::load_gold(o.gold);
  std::vector<udpolar::GoldSentence> pred;
  if (!o.pred.empty()) {
    pred = udpolar::load_gold(o.pred);
  } else {
    for (const auto& s : annotate(o)) pred.push_back(udpolar::to_scored(s));
  }
  std::optional<udpolar::Exclusions> ex;
  if (!o.exclude.empty()) ex = udpolar::Exclusions::load(o.exclude);
  const auto report = udpolar::evaluate(pred, gold, ex ? &*ex : nullptr);
  if (o.dump) {
    std::cout << udpolar::format_dump(report);
  } else if (o.key_only) {
    std::cout << "token accuracy (key): " << udpolar::format_value(report.key.token_accuracy)
              << "\nsentence accuracy (key): "
              << udpolar::format_value(report.key.sentence_accuracy) << "\n";
  } else {
    std::cout << udpolar::format_report(report);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotonicity polarity marking over Universal Dependencies parses"};
  app.require_subcommand(1);
  Options o;

  auto add_pipeline_flags = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "CoNLL-U file (default: stdin)");
    sub->add_option("--lexicon", o.lexicon,
                    "extra lexicon file, optionally KIND:PATH "
                    "(quantifiers, implicatives, negation, conditional); repeatable")
        ->allow_extra_args(false);
    sub->add_option("--hierarchy", o.hierarchy, "relation hierarchy file")->check(CLI::ExistingFile);
    sub->add_flag("--lenient", o.lenient, "skip invalid sentences instead of failing");
    sub->add_option("--jobs,-j", o.jobs, "parallel sentence workers")->check(CLI::Range(1u, 256u));
  };

  auto* polarize = app.add_subcommand("polarize", "annotate every token with its polarity");
  add_pipeline_flags(polarize);
  polarize->add_option("--format,-f", o.format, "output format")
      ->check(CLI::IsMember({"inline", "tsv", "sexpr", "dot"}));
  polarize->add_flag("--ascii", o.ascii, "write ^ v = instead of arrows");

  auto* eval = app.add_subcommand("eval", "score predictions against gold marks");
  add_pipeline_flags(eval);
  eval->add_option("--gold", o.gold, "gold TSV")->required();
  eval->add_option("--pred", o.pred, "predicted TSV (default: polarize the input)");
  eval->add_option("--exclude", o.exclude, "tokens to leave out of scoring");
  eval->add_flag("--key-only", o.key_only, "print key-token accuracy only");
  eval->add_flag("--dump", o.dump, "key=value output");

  auto* render = app.add_subcommand("render", "write polarized trees as Graphviz DOT");
  add_pipeline_flags(render);
  render->add_flag("--ascii", o.ascii, "write ^ v = instead of arrows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*polarize) return cmd_polarize(o, *udpolar::parse_format(o.format));
    if (*eval) return cmd_eval(o);
    if (*render) return cmd_polarize(o, udpolar::OutputFormat::Dot);
  } catch (const udpolar::AlignmentError& e) {
    std::cerr << "udpolar: " << e.what() << "\n";
    return kExitAlignment;
  } catch (const std::exception& e) {
    std::cerr << "udpolar: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
