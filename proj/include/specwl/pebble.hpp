#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "specwl/graph.hpp"

namespace specwl {

// Simplified pebble game on a connected base graph F. Components are frozen
// sorted lists of edge indices into base.edges; the duplicator's selection Q
// keeps an odd number of components of CC_F(pebbled vertices) at all times.
// One round = place the transient pebble, swap, remove. Spoiler wins the
// round when a selected component is a simple path whose endpoints are
// exactly the two pebbled vertices.

struct GameOutcome {
  // Rounds the spoiler needs (0 = wins within the first round); empty when
  // the duplicator survives past max_steps.
  std::optional<int> spoiler_wins_in;
};

// Exact minimax value by value iteration over the interned state graph.
// Requires base connected with 2..12 vertices (cap overridable).
GameOutcome solve_simplified_game(const Graph& base, int max_steps);

struct TraceNode;

struct TraceReply {
  std::vector<std::vector<int>> selected;        // Q after the split response
  std::optional<std::vector<int>> winning_path;  // pebble-to-pebble path component
  std::unique_ptr<TraceNode> next;               // present iff no win this round
};

struct TraceNode {
  int pebble;                              // persistent pebble entering the round
  std::vector<std::vector<int>> selected;  // Q at the round boundary
  int value;                               // rounds still needed from here
  int move;                                // spoiler's transient placement
  std::vector<TraceReply> replies;         // every legal duplicator response
};

struct GameTrace {
  int wins_in;
  int first_move;                   // spoiler's initial placement
  std::vector<TraceNode> roots;     // one per duplicator response to the initial split
};

// Optimal spoiler strategy tree; throws InputError when the spoiler cannot
// win. Every branch wins within wins_in rounds, and every non-terminal node
// strictly contracts the selected edge set along each reply.
GameTrace game_trace(const Graph& base);

}  // namespace specwl
