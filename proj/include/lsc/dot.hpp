#pragma once

#include <string>

#include "lsc/term.hpp"

namespace lsc {

// Graphviz rendering of the syntactic tree. Nodes are numbered in preorder;
// an abstraction is a "λ" node whose first (left) edge points to its binder
// leaf and second edge to its body; a scaled node is labeled with the
// canonical scale text. Output is byte-deterministic.
std::string to_dot(const Term& t);

}  // namespace lsc
