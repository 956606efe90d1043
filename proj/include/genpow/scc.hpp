#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace genpow {

// Tarjan's strongly connected components, iterative so deep digraphs do not
// exhaust the call stack. Returns the component id of each vertex; ids are in
// reverse topological order of the condensation.
inline std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<std::size_t>>& out_arcs,
                                                              std::size_t* count = nullptr) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  const std::size_t n = out_arcs.size();
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call; // (vertex, next arc position)
  std::size_t counter = 0, components = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0 && index[v] == unset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (pos < out_arcs[v].size()) {
        auto w = out_arcs[v][pos++];
        if (index[w] == unset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      auto finished = v;
      call.pop_back();
      if (!call.empty()) {
        auto parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  if (count) *count = components;
  return comp;
}

inline bool is_strongly_connected(const std::vector<std::vector<std::size_t>>& out_arcs) {
  std::size_t count = 0;
  strongly_connected_components(out_arcs, &count);
  return count <= 1;
}

} // namespace genpow
