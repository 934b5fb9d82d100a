#include "specwl/pebble.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "specwl/furer.hpp"

namespace specwl {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int bump(int v) { return v >= kInf ? kInf : v + 1; }

// Edge-component partition of CC_F(S): components as sorted edge-index lists
// plus the reverse edge -> component map.
struct Partition {
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of;
};

Partition partition_at(const Graph& g, const std::vector<int>& seps) {
  Partition p;
  p.comps = connected_components_after_separation(g, seps);
  p.comp_of.assign(g.m(), -1);
  for (int i = 0; i < (int)p.comps.size(); i++)
    for (int e : p.comps[i]) p.comp_of[e] = i;
  return p;
}

// True iff the component is a simple path whose endpoint set is exactly
// {u, y}. Componenthood already gives connectivity through interior
// vertices, so the degree profile suffices.
bool path_between(const Graph& g, const std::vector<int>& comp, int u, int y) {
  std::map<int, int> deg;
  for (int e : comp) {
    deg[g.edges[e].first]++;
    deg[g.edges[e].second]++;
  }
  auto du = deg.find(u), dy = deg.find(y);
  if (du == deg.end() || dy == deg.end()) return false;
  if (du->second != 1 || dy->second != 1) return false;
  for (auto& [w, d] : deg)
    if (w != u && w != y && d != 2) return false;
  return true;
}

struct PairInfo {
  Partition part;
  std::vector<char> is_path;  // per component of the two-pebble partition
};

struct Move {
  int y;
  std::vector<int> nexts;  // deduped successors over non-winning replies
  bool contracting;        // every non-winning reply strictly shrinks Q's edges
};

struct GameSpace {
  Graph g;
  std::vector<Partition> part1;                  // pebble alone at u
  std::map<std::pair<int, int>, PairInfo> part2;  // both pebbles, u < y
  std::vector<std::pair<int, std::vector<int>>> states;  // (u, selected comps)
  std::map<std::pair<int, std::vector<int>>, int> ids;
  std::vector<std::vector<Move>> moves;
  std::vector<std::vector<int>> initial;  // per u0: states after the initial split
};

// Duplicator responses to placing the transient pebble at y: every selected
// component is replaced by an odd-size subset of its fragments in the
// two-pebble partition; unselected components contribute nothing. fn
// receives the sorted fragment ids of the response.
template <class Fn>
void for_each_reply(const Partition& pu, const Partition& puy,
                    const std::vector<int>& q, Fn&& fn) {
  std::vector<std::vector<int>> frags(pu.comps.size());
  for (int j = 0; j < (int)puy.comps.size(); j++)
    frags[pu.comp_of[puy.comps[j][0]]].push_back(j);
  std::vector<std::vector<std::vector<int>>> options;
  for (int c : q) {
    auto& f = frags[c];
    if (f.size() > 31) throw std::logic_error("pebble: fragment overflow");
    std::vector<std::vector<int>> opt;
    for (uint32_t mask = 1; mask < (1u << f.size()); mask++) {
      if (__builtin_popcount(mask) % 2 == 0) continue;
      std::vector<int> pick;
      for (int b = 0; b < (int)f.size(); b++)
        if (mask >> b & 1) pick.push_back(f[b]);
      opt.push_back(std::move(pick));
    }
    options.push_back(std::move(opt));
  }
  std::vector<int> idx(options.size(), 0);
  for (;;) {
    std::vector<int> reply;
    for (int i = 0; i < (int)options.size(); i++)
      reply.insert(reply.end(), options[i][idx[i]].begin(),
                   options[i][idx[i]].end());
    std::sort(reply.begin(), reply.end());
    fn(reply);
    int i = 0;
    while (i < (int)options.size()) {
      if (++idx[i] < (int)options[i].size()) break;
      idx[i++] = 0;
    }
    if (i == (int)options.size()) break;
  }
}

// Removing the old pebble merges fragments into CC_F({y}); a merged
// component stays selected iff it absorbed an odd number of selected ones.
std::vector<int> merge_next(const Partition& puy, const Partition& py,
                            const std::vector<int>& reply) {
  std::vector<char> parity(py.comps.size(), 0);
  for (int j : reply) parity[py.comp_of[puy.comps[j][0]]] ^= 1;
  std::vector<int> q;
  for (int k = 0; k < (int)parity.size(); k++)
    if (parity[k]) q.push_back(k);
  return q;
}

std::vector<int> selected_edges(const Partition& p, const std::vector<int>& q) {
  std::vector<int> e;
  for (int c : q) e.insert(e.end(), p.comps[c].begin(), p.comps[c].end());
  std::sort(e.begin(), e.end());
  return e;
}

bool strict_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int intern(GameSpace& S, int u, std::vector<int> q) {
  if (q.size() % 2 == 0) throw std::logic_error("pebble: even selection reached");
  auto key = std::make_pair(u, std::move(q));
  auto it = S.ids.find(key);
  if (it != S.ids.end()) return it->second;
  int id = (int)S.states.size();
  S.states.push_back(key);
  S.ids.emplace(std::move(key), id);
  return id;
}

GameSpace build_space(const Graph& base) {
  if (base.n < 2) throw InputError("pebble game needs at least 2 vertices");
  if (!base.connected()) throw InputError("pebble game: base must be connected");
  // 16 admits doubled_path(2), the canonical two-round win.
  int cap = cap_vertices(16);
  if (base.n > cap)
    throw CapError("pebble game: base exceeds cap of " + std::to_string(cap) +
                   " vertices");

  GameSpace S;
  S.g = base;
  for (int u = 0; u < base.n; u++) S.part1.push_back(partition_at(base, {u}));
  for (int u = 0; u < base.n; u++)
    for (int y = u + 1; y < base.n; y++) {
      PairInfo info;
      info.part = partition_at(base, {u, y});
      for (auto& comp : info.part.comps)
        info.is_path.push_back(path_between(base, comp, u, y));
      S.part2.emplace(std::make_pair(u, y), std::move(info));
    }

  // Initial placement splits the whole edge set into CC_F({u0}); the
  // duplicator keeps any odd subset of the components.
  S.initial.resize(base.n);
  for (int u0 = 0; u0 < base.n; u0++) {
    int cc = (int)S.part1[u0].comps.size();
    if (cc > 31) throw std::logic_error("pebble: fragment overflow");
    for (uint32_t mask = 1; mask < (1u << cc); mask++) {
      if (__builtin_popcount(mask) % 2 == 0) continue;
      std::vector<int> q;
      for (int c = 0; c < cc; c++)
        if (mask >> c & 1) q.push_back(c);
      S.initial[u0].push_back(intern(S, u0, std::move(q)));
    }
  }

  for (int sid = 0; sid < (int)S.states.size(); sid++) {
    auto [u, q] = S.states[sid];
    auto cur_edges = selected_edges(S.part1[u], q);
    std::vector<Move> mv;
    for (int y = 0; y < base.n; y++) {
      if (y == u) continue;
      auto& info = S.part2.at({std::min(u, y), std::max(u, y)});
      Move m{y, {}, true};
      for_each_reply(S.part1[u], info.part, q, [&](const std::vector<int>& reply) {
        bool win = false;
        for (int j : reply) win = win || info.is_path[j];
        if (win) return;
        auto nq = merge_next(info.part, S.part1[y], reply);
        if (!strict_subset(selected_edges(S.part1[y], nq), cur_edges))
          m.contracting = false;
        m.nexts.push_back(intern(S, y, std::move(nq)));
      });
      std::sort(m.nexts.begin(), m.nexts.end());
      m.nexts.erase(std::unique(m.nexts.begin(), m.nexts.end()), m.nexts.end());
      mv.push_back(std::move(m));
    }
    S.moves.push_back(std::move(mv));
  }
  return S;
}

// Minimax rounds-to-win per state; restricted limits the spoiler to moves
// whose replies all contract (win-now moves qualify vacuously), which is the
// strategy shape the trace promises.
std::vector<int> run_vi(const GameSpace& S, bool restricted) {
  std::vector<int> value(S.states.size(), kInf);
  for (bool changed = true; changed;) {
    changed = false;
    for (int sid = 0; sid < (int)S.states.size(); sid++) {
      int best = kInf;
      for (const Move& m : S.moves[sid]) {
        if (restricted && !m.contracting) continue;
        int worst = 0;
        for (int next : m.nexts) worst = std::max(worst, bump(value[next]));
        best = std::min(best, worst);
      }
      if (best < value[sid]) {
        value[sid] = best;
        changed = true;
      }
    }
  }
  return value;
}

// min over initial placements of the duplicator's best initial response.
std::pair<int, int> game_value(const GameSpace& S, const std::vector<int>& value) {
  int best = kInf, best_u0 = -1;
  for (int u0 = 0; u0 < S.g.n; u0++) {
    int worst = 0;
    for (int sid : S.initial[u0]) worst = std::max(worst, value[sid]);
    if (worst < best) {
      best = worst;
      best_u0 = u0;
    }
  }
  return {best, best_u0};
}

std::vector<std::vector<int>> edge_lists(const Graph& g, const Partition& p,
                                         const std::vector<int>& q) {
  std::vector<std::vector<int>> out;
  for (int c : q) out.push_back(p.comps[c]);
  (void)g;
  return out;
}

TraceNode build_node(const GameSpace& S, const std::vector<int>& value, int sid) {
  const auto& [u, q] = S.states[sid];
  TraceNode node;
  node.pebble = u;
  node.selected = edge_lists(S.g, S.part1[u], q);
  node.value = value[sid];
  if (node.value >= kInf) throw std::logic_error("pebble: trace hit losing state");

  int pick = -1;
  for (const Move& m : S.moves[sid]) {
    if (!m.contracting) continue;
    int worst = 0;
    for (int next : m.nexts) worst = std::max(worst, bump(value[next]));
    if (worst == node.value) {
      pick = m.y;
      break;
    }
  }
  if (pick < 0) throw std::logic_error("pebble: no contracting optimal move");
  node.move = pick;

  auto& info = S.part2.at({std::min(u, pick), std::max(u, pick)});
  for_each_reply(S.part1[u], info.part, q, [&](const std::vector<int>& reply) {
    TraceReply tr;
    tr.selected = edge_lists(S.g, info.part, reply);
    int path_comp = -1;
    for (int j : reply)
      if (info.is_path[j] && path_comp < 0) path_comp = j;
    if (path_comp >= 0) {
      tr.winning_path = info.part.comps[path_comp];
    } else {
      int next = S.ids.at({pick, merge_next(info.part, S.part1[pick], reply)});
      if (value[next] >= node.value && node.value > 0)
        throw std::logic_error("pebble: trace value not decreasing");
      tr.next = std::make_unique<TraceNode>(build_node(S, value, next));
    }
    node.replies.push_back(std::move(tr));
  });
  return node;
}

}  // namespace

GameOutcome solve_simplified_game(const Graph& base, int max_steps) {
  if (max_steps < 0) throw InputError("max_steps must be >= 0");
  GameSpace S = build_space(base);
  auto value = run_vi(S, false);
  auto [t, u0] = game_value(S, value);
  (void)u0;
  GameOutcome out;
  if (t <= max_steps) out.spoiler_wins_in = t;
  return out;
}

GameTrace game_trace(const Graph& base) {
  GameSpace S = build_space(base);
  auto full = run_vi(S, false);
  auto [t, full_u0] = game_value(S, full);
  (void)full_u0;
  if (t >= kInf) throw InputError("game_trace: spoiler cannot win on this base");

  // A winning strategy with strictly contracted non-terminal states exists;
  // the restricted game must therefore match the unrestricted value.
  auto value = run_vi(S, true);
  auto [rt, u0] = game_value(S, value);
  if (rt != t) throw std::logic_error("pebble: contracted strategy lost rounds");

  GameTrace trace;
  trace.wins_in = t;
  trace.first_move = u0;
  for (int sid : S.initial[u0]) trace.roots.push_back(build_node(S, value, sid));
  return trace;
}

}  // namespace specwl
