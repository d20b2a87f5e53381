#ifndef MHL_DOMAINS_HPP
#define MHL_DOMAINS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mhl/core.hpp"

namespace mhl {

// ---------------------------------------------------------------- n-puzzle

enum class PuzzleHeuristic { RR, MD, REDUCTION, SPIRAL, ROW_BY_ROW_2 };

// Sliding-tile puzzle, blank-moves operator semantics: "d" swaps the blank
// with the tile directly below it and is undefined when the blank is in the
// last row.  State: row-major sequence of n*n tile numbers, 0 = blank.
// The canonical goal has tiles 1..n*n-1 in row-major order, blank last;
// random_goal switches generate_goal to a random permutation goal.
DomainSpec npuzzle_domain(int n, PuzzleHeuristic h = PuzzleHeuristic::RR,
                          bool random_goal = false);

State npuzzle_canonical_goal(int n);

// Reachability via permutation parity adjusted by the blank's row distance.
bool npuzzle_solvable(const State& s, const State& g);

// Uniformly random state solvable to the canonical goal (rejection sampling).
State npuzzle_random_solvable(int n, Rng& rng);

// Derived quantities of the row-by-row placement order, 1-indexed coords.
struct PuzzleInfo {
    int placed = 0;      // tiles placed so far, 0..n*n-1
    int next_tile = 0;   // 0 when s == g
    int target_row = 0, target_col = 0; // goal location of next tile
    int tile_row = 0, tile_col = 0;     // current location of next tile
    int blank_row = 0, blank_col = 0;
};

PuzzleInfo puzzle_info(const State& s, const State& g, int n);

// --------------------------------------------------- missionaries/cannibals

// m missionaries and m cannibals cross with a 1-2 person boat; cannibals may
// never outnumber missionaries on a bank that has any missionaries.
// State: {missionaries on start bank, cannibals on start bank, boat side}
// with boat side 0 = start, 1 = target.
DomainSpec cannibals_domain(int m);

// ------------------------------------------------------------------ stones

// k white and k black stones on a strip of 2k+1 cells with one empty cell.
// Operators move the stone at offset -3..+3 from the empty cell into it.
// State: cells with 0 = empty, 1 = white, 2 = black; goal is all white left
// of all black with the empty cell between the blocks.
DomainSpec stones_domain(int k);

// ------------------------------------------------------------------- hanoi

// Towers of Hanoi with r rings and 3 pegs; goal = all rings on peg 1.
// State: s[i] = peg (0..2) of ring i, ring 0 smallest.
DomainSpec hanoi_domain(int r);

// -------------------------------------------------------------------- grid

struct Wall {
    bool horizontal = true; // horizontal: lies between row `index` and index+1
    int index = 0;
    int from = 0, to = 0;   // inclusive span along the wall
    int gap = 0;            // passable cell within the span
};

struct GridSpec {
    int width = 0, height = 0;
    std::vector<Wall> walls;
};

// Axis-parallel walls of random span, each with one random gap.
GridSpec grid_random_walls(int width, int height, int count, Rng& rng);

// State: {x, y}, 0-based.  Operators N,S,E,W; undefined across walls or off
// the board.  Heuristic: Manhattan distance to the goal cell.  Throws
// DisconnectedGrid if the wall spec separates the grid.
DomainSpec grid_domain(const GridSpec& spec,
                       std::optional<std::pair<int, int>> fixed_goal = std::nullopt);

} // namespace mhl

#endif
