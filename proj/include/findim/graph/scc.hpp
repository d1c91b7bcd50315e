#pragma once

#include <algorithm>
#include <vector>

namespace findim::graph {

/// Tarjan's algorithm without recursion. Components come out in reverse topological order:
/// every edge leaving a component points into a component listed earlier.
inline std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& successors) {
  const int n = static_cast<int>(successors.size());
  std::vector<int> number(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<int>> components;
  int counter = 0;

  struct Frame {
    int vertex;
    std::size_t next_edge;
  };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (number[root] != -1) continue;
    frames.push_back({root, 0});
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int v = f.vertex;
      if (f.next_edge < successors[v].size()) {
        const int w = successors[v][f.next_edge++];
        if (number[w] == -1) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], number[w]);
        }
        continue;
      }
      if (low[v] == number[v]) {
        std::vector<int> component;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        components.push_back(std::move(component));
      }
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return components;
}

/// True for components that carry a cycle: more than one vertex, or a self-loop.
inline bool is_cyclic(const std::vector<int>& component, const std::vector<std::vector<int>>& successors) {
  if (component.size() > 1) return true;
  const int v = component.front();
  return std::find(successors[v].begin(), successors[v].end(), v) != successors[v].end();
}

} // namespace findim::graph
