#pragma once

#include <string>

#include "diairesis/division_tree.hpp"

namespace diairesis {

// Graphviz rendering of a division tree. Node ids are the phi bit strings;
// labels show the phi code and either the split predicate or the leaf
// members; edges carry their decision bit. Nodes and edges are emitted in
// lexicographic phi order, so equal trees give byte-identical output.
inline std::string to_dot(const DiaireticTree& tree) {
  std::string out = "digraph diairesis {\n";
  const auto nodes = tree.nodes();
  for (const DiaireticNode* node : nodes) {
    std::string payload;
    if (node->is_leaf()) {
      for (std::uint32_t m : node->extent.members()) {
        if (!payload.empty()) payload += ' ';
        payload += tree.table().item_id(m);
      }
    } else {
      payload = *node->split_predicate;
    }
    out += "  \"" + node->phi.bits() + "\" [label=\"" + node->phi.bits() + " |";
    if (!payload.empty()) out += " " + payload;
    out += "\"];\n";
  }
  for (const DiaireticNode* node : nodes) {
    if (node->is_leaf()) continue;
    out += "  \"" + node->phi.bits() + "\" -> \"" + node->negative->phi.bits() +
           "\" [label=\"0\"];\n";
    out += "  \"" + node->phi.bits() + "\" -> \"" + node->positive->phi.bits() +
           "\" [label=\"1\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace diairesis
