#include "dra2dpa/scc.hpp"

#include <algorithm>

namespace dra2dpa {

namespace {

// Iterative Tarjan; recursion depth would be a liability on the larger
// appearance-record outputs.
struct TarjanState {
  std::uint32_t index = 0;
  std::uint32_t lowlink = 0;
  bool on_stack = false;
  bool visited = false;
};

struct TarjanRun {
  const Dts& dts;
  const std::vector<bool>* mask;  // optional state filter
  std::vector<TarjanState> node;
  std::vector<StateId> stack;
  std::uint32_t next_index = 0;
  std::vector<std::vector<StateId>> components;

  explicit TarjanRun(const Dts& dts, const std::vector<bool>* mask)
      : dts(dts), mask(mask), node(dts.num_states()) {}

  bool allowed(StateId s) const { return !mask || (*mask)[s]; }

  void explore(StateId root) {
    struct Frame {
      StateId state;
      Letter next_letter;
    };
    std::vector<Frame> call_stack;
    call_stack.push_back({root, 0});
    enter(root);

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const StateId v = frame.state;
      if (frame.next_letter < dts.alphabet_size()) {
        const StateId w = dts.succ(v, frame.next_letter++);
        if (w == kNoState || !allowed(w)) continue;
        if (!node[w].visited) {
          enter(w);
          call_stack.push_back({w, 0});
        } else if (node[w].on_stack) {
          node[v].lowlink = std::min(node[v].lowlink, node[w].index);
        }
        continue;
      }
      if (node[v].lowlink == node[v].index) {
        std::vector<StateId> component;
        for (;;) {
          const StateId w = stack.back();
          stack.pop_back();
          node[w].on_stack = false;
          component.push_back(w);
          if (w == v) break;
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const StateId parent = call_stack.back().state;
        node[parent].lowlink = std::min(node[parent].lowlink, node[v].lowlink);
      }
    }
  }

  void enter(StateId s) {
    node[s].visited = true;
    node[s].index = node[s].lowlink = next_index++;
    node[s].on_stack = true;
    stack.push_back(s);
  }
};

}  // namespace

SccDecomposition scc_decompose(const Dts& dts) {
  SccDecomposition result;
  result.component_of.assign(dts.num_states(), SccDecomposition::kNoComponent);
  if (dts.num_states() == 0) return result;

  TarjanRun run(dts, nullptr);
  run.explore(dts.initial);

  // Tarjan emits components in reverse topological order.
  result.components = std::move(run.components);
  std::reverse(result.components.begin(), result.components.end());
  for (std::size_t c = 0; c < result.components.size(); ++c)
    for (StateId s : result.components[c])
      result.component_of[s] = static_cast<std::int32_t>(c);
  return result;
}

std::vector<std::vector<StateId>> subgraph_sccs(const Dts& dts,
                                                const std::vector<bool>& present) {
  TarjanRun run(dts, &present);
  for (StateId s = 0; s < dts.num_states(); ++s)
    if (present[s] && !run.node[s].visited) run.explore(s);
  std::reverse(run.components.begin(), run.components.end());
  return std::move(run.components);
}

bool is_transient(std::span<const StateId> scc, const Dts& dts) {
  if (scc.size() != 1) return false;
  const StateId s = scc.front();
  for (Letter a = 0; a < dts.alphabet_size(); ++a)
    if (dts.succ(s, a) == s) return false;
  return true;
}

bool is_bottom(const SccDecomposition& sccs, std::size_t component,
               const Dts& dts) {
  for (StateId s : sccs.components[component]) {
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const StateId t = dts.succ(s, a);
      if (t != kNoState &&
          sccs.component_of[t] != static_cast<std::int32_t>(component))
        return false;
    }
  }
  return true;
}

}  // namespace dra2dpa
