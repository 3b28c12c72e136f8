#include "lsc/dot.hpp"

namespace lsc {

namespace {

void node_line(std::string& nodes, int id, const std::string& label) {
  nodes += "  n" + std::to_string(id) + " [label=\"" + label + "\"];\n";
}

void edge_line(std::string& edges, int from, int to) {
  edges += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
}

void walk(const Term& t, int parent, int& counter, std::string& nodes,
          std::string& edges) {
  int id = counter++;
  if (parent >= 0) edge_line(edges, parent, id);
  switch (t.kind()) {
    case Term::Kind::var:
      node_line(nodes, id, t.var_name());
      return;
    case Term::Kind::abs: {
      node_line(nodes, id, "λ");
      int leaf = counter++;
      node_line(nodes, leaf, t.binder());
      edge_line(edges, id, leaf);
      walk(t.body(), id, counter, nodes, edges);
      return;
    }
    case Term::Kind::scaled:
      node_line(nodes, id, t.scale().str());
      walk(t.left(), id, counter, nodes, edges);
      walk(t.right(), id, counter, nodes, edges);
      return;
  }
}

}  // namespace

std::string to_dot(const Term& t) {
  std::string nodes, edges;
  int counter = 0;
  walk(t, -1, counter, nodes, edges);
  return "digraph term {\n" + nodes + edges + "}\n";
}

}  // namespace lsc
