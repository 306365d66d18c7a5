#include "cuntz/cli/render.hpp"

#include <set>
#include <sstream>

#include "cuntz/serialize.hpp"

namespace cuntz::cli {

namespace {

std::string node_id(char side, const MultiIndex& w) {
  return std::string(1, side) + "_" + (w.empty() ? std::string("root") : w.to_string());
}

// Internal nodes of the tree whose leaves are `code`, parents first.
std::set<MultiIndex> internal_nodes(const std::vector<MultiIndex>& code) {
  std::set<MultiIndex> nodes;
  for (const auto& leaf : code)
    for (std::size_t k = 0; k < leaf.size(); ++k) nodes.insert(leaf.prefix(k));
  return nodes;
}

void dot_tree(std::ostream& out, char side, const std::string& label,
              const std::vector<MultiIndex>& leaves) {
  out << "  subgraph cluster_" << label << " {\n";
  out << "    label=\"" << label << "\";\n";
  const auto internal = internal_nodes(leaves);
  for (const auto& node : internal)
    out << "    " << node_id(side, node) << " [shape=point];\n";
  for (const auto& leaf : leaves)
    out << "    " << node_id(side, leaf) << " [shape=box,label=\""
        << (leaf.empty() ? std::string("e") : leaf.to_string()) << "\"];\n";
  for (const auto& node : internal)
    for (int i = 1; i <= 2; ++i)
      out << "    " << node_id(side, node) << " -> " << node_id(side, node.child(i))
          << ";\n";
  out << "  }\n";
}

std::string bracket(const MultiIndex& node, const std::set<MultiIndex>& internal) {
  if (!internal.count(node)) return node.empty() ? "e" : node.to_string();
  return "[" + bracket(node.child(1), internal) + " " +
         bracket(node.child(2), internal) + "]";
}

}  // namespace

std::string render_dot(const TableUnitary& w) {
  const TreePair tp = tree_pair(w);
  std::ostringstream out;
  out << "digraph tree_pair {\n";
  out << "  edge [arrowhead=none];\n";
  dot_tree(out, 'd', "domain", tp.domain_leaves);
  dot_tree(out, 'r', "range", tp.range_leaves);
  for (std::size_t k = 0; k < tp.domain_leaves.size(); ++k)
    out << "  " << node_id('d', tp.domain_leaves[k]) << " -> "
        << node_id('r', tp.range_leaves[tp.pairing[k]])
        << " [style=dashed,constraint=false,arrowhead=normal];\n";
  out << "}\n";
  return out.str();
}

std::string render_ascii(const TableUnitary& w) {
  const TreePair tp = tree_pair(w);
  const MultiIndex root(2);
  std::ostringstream out;
  out << "domain: " << bracket(root, internal_nodes(tp.domain_leaves)) << "\n";
  out << "range:  " << bracket(root, internal_nodes(tp.range_leaves)) << "\n";
  for (std::size_t k = 0; k < tp.domain_leaves.size(); ++k) {
    const auto& from = tp.domain_leaves[k];
    const auto& to = tp.range_leaves[tp.pairing[k]];
    out << "  " << (from.empty() ? std::string("e") : from.to_string()) << " -> "
        << (to.empty() ? std::string("e") : to.to_string()) << "\n";
  }
  return out.str();
}

std::string render_pl(const TableUnitary& w) { return to_json(to_pl_map(w)).dump(); }

}  // namespace cuntz::cli
