#pragma once

// Zig-zag diagrams: a bullet per basis vector, a-edges drawn "/" (southwest),
// b-edges drawn "\" (southeast).

#include <string>
#include <vector>

#include "kv4/kmodule.hpp"

namespace kv4 {

struct DiagramLayout {
  struct Node {
    std::string label;
    int row = 0;
    int col = 0;
  };
  struct Edge {
    std::size_t from, to;
    bool dotted = false;  // one of several targets of the same basis vector
  };
  std::vector<Node> nodes;
  std::vector<Edge> a_edges, b_edges;
};

/// Rows are path depths from the generators; an a-edge moves one column left,
/// a b-edge one column right. Columns with several targets become dotted
/// edges. Throws NotDiagrammable for entries outside {0, 1} or a cyclic action graph.
DiagramLayout layout_zigzag(const KModule& m);
std::string render_ascii(const DiagramLayout& d);
std::string render_dot(const DiagramLayout& d);

}  // namespace kv4
