#pragma once

// Text renderings of annotated sentences: inline marks, TSV, marked
// s-expressions and Graphviz DOT.

#include <string>
#include <string_view>

#include "udpolar/binary_tree.hpp"
#include "udpolar/polarity.hpp"
#include "udpolar/polarizer.hpp"

namespace udpolar {

enum class OutputFormat { Inline, Tsv, Sexpr, Dot };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "inline") return OutputFormat::Inline;
  if (s == "tsv") return OutputFormat::Tsv;
  if (s == "sexpr") return OutputFormat::Sexpr;
  if (s == "dot") return OutputFormat::Dot;
  return std::nullopt;
}

inline std::string mark_text(Polarity p, bool ascii) {
  return ascii ? std::string(1, to_ascii(p)) : std::string(to_arrow(p));
}

// "All↑ dogs↓ eat↑ food↑"; unscored tokens print bare.
inline std::string render_inline(const AnnotatedSentence& s, bool ascii = false) {
  std::string out;
  for (const auto& t : s.tokens) {
    if (!out.empty()) out += ' ';
    out += t.token.form;
    if (t.mark) out += mark_text(*t.mark, ascii);
  }
  out += '\n';
  return out;
}

// "# sent_id = ..." then id, form, upos, mark ("_" when unscored), then a
// blank line.
inline std::string render_tsv(const AnnotatedSentence& s) {
  std::string out = "# sent_id = " + s.sent_id + "\n";
  for (const auto& t : s.tokens) {
    out += std::to_string(t.token.id) + '\t' + t.token.form + '\t' + t.token.upos + '\t';
    out += t.mark ? std::string(to_name(*t.mark)) : "_";
    out += '\n';
  }
  out += '\n';
  return out;
}

inline std::string render_sexpr(const AnnotatedSentence& s) {
  return to_sexpression(s.tree) + '\n';
}

namespace detail {

inline std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// One digraph; left edge emitted before right edge.
inline std::string render_dot(const AnnotatedSentence& s, bool ascii = false) {
  const BinaryDepTree& t = s.tree;
  std::string out = "digraph \"" + detail::dot_escape(s.sent_id) + "\" {\n";
  out += "  node [shape=box, fontname=\"Helvetica\"];\n";
  t.visit(t.root(), [&](NodeId id) {
    const Node& n = t[id];
    std::string label = n.is_leaf() ? n.word->form : n.relation;
    if (n.mark) label += " " + mark_text(*n.mark, ascii);
    out += "  n" + std::to_string(id) + " [label=\"" + detail::dot_escape(label) + "\"";
    if (n.is_leaf()) out += ", shape=ellipse";
    out += "];\n";
  });
  t.visit(t.root(), [&](NodeId id) {
    const Node& n = t[id];
    if (n.is_leaf()) return;
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(n.left) + " [label=\"L\"];\n";
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(n.right) + " [label=\"R\"];\n";
  });
  out += "}\n";
  return out;
}

inline std::string render(const AnnotatedSentence& s, OutputFormat f, bool ascii = false) {
  switch (f) {
    case OutputFormat::Inline: return render_inline(s, ascii);
    case OutputFormat::Tsv: return render_tsv(s);
    case OutputFormat::Sexpr: return render_sexpr(s);
    case OutputFormat::Dot: return render_dot(s, ascii);
  }
  return {};
}

}  // namespace udpolar
