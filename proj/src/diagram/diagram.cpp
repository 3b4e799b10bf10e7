#include "kv4/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "kv4/error.hpp"

namespace kv4 {

namespace {

void collect(const Matrix& act, std::vector<DiagramLayout::Edge>& out) {
  for (std::size_t j = 0; j < act.cols(); ++j) {
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < act.rows(); ++i) {
      if (act(i, j) > 1) throw Error(ErrorCode::NotDiagrammable, "entry " + std::to_string(act(i, j)) + " outside {0, 1}");
      if (act(i, j)) targets.push_back(i);
    }
    for (std::size_t t : targets) out.push_back({j, t, targets.size() > 1});
  }
}

}  // namespace

DiagramLayout layout_zigzag(const KModule& m) {
  const std::size_t n = m.dim();
  DiagramLayout d;
  collect(m.a(), d.a_edges);
  collect(m.b(), d.b_edges);

  // Depth by longest path; more than n relaxation rounds means a cycle.
  std::vector<int> depth(n, 0);
  for (std::size_t round = 0;; ++round) {
    bool changed = false;
    for (const auto* edges : {&d.a_edges, &d.b_edges})
      for (const auto& e : *edges)
        if (depth[e.to] < depth[e.from] + 1) {
          depth[e.to] = depth[e.from] + 1;
          changed = true;
        }
    if (!changed) break;
    if (round > n) throw Error(ErrorCode::NotDiagrammable, "action graph has a cycle");
  }

  // Columns from the solid edges, one connected component at a time.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (const auto& e : d.a_edges)
    if (!e.dotted) adj[e.from].push_back({e.to, -1}), adj[e.to].push_back({e.from, +1});
  for (const auto& e : d.b_edges)
    if (!e.dotted) adj[e.from].push_back({e.to, +1}), adj[e.to].push_back({e.from, -1});
  std::vector<std::optional<int>> col(n);
  int next_free = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (col[s]) continue;
    std::map<std::size_t, int> comp{{s, 0}};
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto [w, step] : adj[v])
        if (!comp.count(w)) {
          comp[w] = comp[v] + step;
          queue.push_back(w);
        }
    }
    int lo = 0, hi = 0;
    for (auto [v, c] : comp) lo = std::min(lo, c), hi = std::max(hi, c);
    for (auto [v, c] : comp) col[v] = c - lo + next_free;
    next_free += hi - lo + 2;
  }
  for (std::size_t i = 0; i < n; ++i) d.nodes.push_back({"v" + std::to_string(i), depth[i], *col[i]});
  return d;
}

std::string render_ascii(const DiagramLayout& d) {
  int rows = 0, cols = 0;
  for (const auto& v : d.nodes) rows = std::max(rows, v.row + 1), cols = std::max(cols, v.col + 1);
  std::vector<std::string> grid(rows > 0 ? 2 * rows - 1 : 0, std::string(cols > 0 ? 2 * cols - 1 : 0, ' '));
  std::ostringstream extra;
  for (const auto& v : d.nodes) grid[2 * v.row][2 * v.col] = '*';
  auto draw = [&](const DiagramLayout::Edge& e, int step, char glyph, const char* name) {
    const auto& s = d.nodes[e.from];
    const auto& t = d.nodes[e.to];
    if (!e.dotted && t.row == s.row + 1 && t.col == s.col + step)
      grid[2 * s.row + 1][2 * s.col + step] = glyph;
    else
      extra << name << (e.dotted ? " (dotted)" : "") << ": " << s.label << " -> " << t.label << "\n";
  };
  for (const auto& e : d.a_edges) draw(e, -1, '/', "a");
  for (const auto& e : d.b_edges) draw(e, +1, '\\', "b");
  std::ostringstream out;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  out << extra.str();
  return out.str();
}

std::string render_dot(const DiagramLayout& d) {
  std::ostringstream out;
  out << "digraph module {\n  node [shape=point];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    out << "  " << d.nodes[i].label << " [pos=\"" << d.nodes[i].col << "," << -d.nodes[i].row << "!\"];\n";
  auto edges = [&](const std::vector<DiagramLayout::Edge>& es, const char* name) {
    for (const auto& e : es) {
      out << "  " << d.nodes[e.from].label << " -> " << d.nodes[e.to].label << " [label=\"" << name << "\"";
      if (e.dotted) out << ", style=dotted";
      out << "];\n";
    }
  };
  edges(d.a_edges, "a");
  edges(d.b_edges, "b");
  out << "}\n";
  return out.str();
}

}  // namespace kv4
