#include "mhl/domains.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <memory>
#include <numeric>
#include <unordered_set>

namespace mhl {

// ---------------------------------------------------------------- n-puzzle

namespace {

// op ids fixed across all puzzle sizes so macro sets transfer between them
enum PuzzleOp { OP_U = 0, OP_D = 1, OP_L = 2, OP_R = 3 };

int find_tile(const State& s, int t) {
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] == t) return i;
    return -1;
}

// placement order = goal positions visited when "placing" tiles; the blank's
// goal cell (last row-major cell) is excluded
std::vector<int> row_major_order(int n) {
    std::vector<int> order(n * n - 1);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// first row, then last column, then second row, then second-to-last column...
std::vector<int> reduction_order(int n) {
    std::vector<int> order;
    int top = 0, right = n - 1;
    while (top <= n - 1 && right >= 0) {
        for (int c = 0; c <= right; ++c) order.push_back(top * n + c);
        ++top;
        if (top > n - 1) break;
        for (int r = top; r <= n - 1; ++r) order.push_back(r * n + right);
        --right;
        if (right < 0) break;
    }
    order.erase(std::remove(order.begin(), order.end(), n * n - 1), order.end());
    return order;
}

// clockwise spiral from the outside in
std::vector<int> spiral_order(int n) {
    std::vector<int> order;
    int top = 0, bottom = n - 1, left = 0, right = n - 1;
    while (top <= bottom && left <= right) {
        for (int c = left; c <= right; ++c) order.push_back(top * n + c);
        ++top;
        for (int r = top; r <= bottom; ++r) order.push_back(r * n + right);
        --right;
        if (top <= bottom)
            for (int c = right; c >= left; --c) order.push_back(bottom * n + c);
        --bottom;
        if (left <= right)
            for (int r = bottom; r >= top; --r) order.push_back(r * n + left);
        ++left;
    }
    order.erase(std::remove(order.begin(), order.end(), n * n - 1), order.end());
    return order;
}

HValue rr_style_h(const State& s, const State& g, int n,
                  const std::vector<int>& order, bool with_blank_term) {
    int placed = 0;
    while (placed < static_cast<int>(order.size()) && s[order[placed]] == g[order[placed]])
        ++placed;
    if (placed == static_cast<int>(order.size())) return 0; // all tiles placed => s == g
    int target = order[placed];
    int tile = g[target];
    int cur = find_tile(s, tile);
    int blank = find_tile(s, 0);
    long long n2 = static_cast<long long>(n) * n;
    long long dist_target = std::abs(target / n - cur / n) + std::abs(target % n - cur % n);
    long long dist_blank = std::abs(blank / n - cur / n) + std::abs(blank % n - cur % n);
    HValue h = 4 * n2 * ((n2 - 1) - placed) + 2 * n * dist_target;
    if (with_blank_term) h += dist_blank;
    return h;
}

HValue md_h(const State& s, const State& g, int n) {
    std::vector<int> goal_pos(n * n);
    for (int i = 0; i < n * n; ++i) goal_pos[g[i]] = i;
    HValue h = 0;
    for (int i = 0; i < n * n; ++i) {
        if (s[i] == 0) continue;
        int j = goal_pos[s[i]];
        h += std::abs(i / n - j / n) + std::abs(i % n - j % n);
    }
    return h;
}

} // namespace

State npuzzle_canonical_goal(int n) {
    State g(n * n);
    std::iota(g.begin(), g.end() - 1, 1);
    g.back() = 0;
    return g;
}

PuzzleInfo puzzle_info(const State& s, const State& g, int n) {
    PuzzleInfo info;
    auto order = row_major_order(n);
    int placed = 0;
    while (placed < static_cast<int>(order.size()) && s[order[placed]] == g[order[placed]])
        ++placed;
    info.placed = placed;
    int blank = find_tile(s, 0);
    info.blank_row = blank / n + 1;
    info.blank_col = blank % n + 1;
    if (placed == static_cast<int>(order.size())) return info;
    int target = order[placed];
    info.next_tile = g[target];
    info.target_row = target / n + 1;
    info.target_col = target % n + 1;
    int cur = find_tile(s, info.next_tile);
    info.tile_row = cur / n + 1;
    info.tile_col = cur % n + 1;
    return info;
}

DomainSpec npuzzle_domain(int n, PuzzleHeuristic heuristic, bool random_goal) {
    if (n < 3) throw InvalidParameter("npuzzle requires N >= 3");
    DomainSpec d;
    d.name = "npuzzle";
    d.parameter = n;
    d.op_names = {"u", "d", "l", "r"};
    d.reverse_of = {OP_D, OP_U, OP_R, OP_L};

    d.apply = [n](OperatorId op, const State& s) -> std::optional<State> {
        int blank = find_tile(s, 0);
        int row = blank / n, col = blank % n;
        int other;
        switch (op) {
            case OP_U: if (row == 0) return std::nullopt; other = blank - n; break;
            case OP_D: if (row == n - 1) return std::nullopt; other = blank + n; break;
            case OP_L: if (col == 0) return std::nullopt; other = blank - 1; break;
            case OP_R: if (col == n - 1) return std::nullopt; other = blank + 1; break;
            default: return std::nullopt;
        }
        State t = s;
        std::swap(t[blank], t[other]);
        return t;
    };

    switch (heuristic) {
        case PuzzleHeuristic::RR: {
            auto order = std::make_shared<std::vector<int>>(row_major_order(n));
            d.heuristic = [n, order](const State& s, const State& g) {
                return rr_style_h(s, g, n, *order, true);
            };
            break;
        }
        case PuzzleHeuristic::ROW_BY_ROW_2: {
            auto order = std::make_shared<std::vector<int>>(row_major_order(n));
            d.heuristic = [n, order](const State& s, const State& g) {
                return rr_style_h(s, g, n, *order, false);
            };
            break;
        }
        case PuzzleHeuristic::REDUCTION: {
            auto order = std::make_shared<std::vector<int>>(reduction_order(n));
            d.heuristic = [n, order](const State& s, const State& g) {
                return rr_style_h(s, g, n, *order, true);
            };
            break;
        }
        case PuzzleHeuristic::SPIRAL: {
            auto order = std::make_shared<std::vector<int>>(spiral_order(n));
            d.heuristic = [n, order](const State& s, const State& g) {
                return rr_style_h(s, g, n, *order, true);
            };
            break;
        }
        case PuzzleHeuristic::MD:
            d.heuristic = [n](const State& s, const State& g) { return md_h(s, g, n); };
            break;
    }

    if (random_goal) {
        d.generate_goal = [n](Rng& rng) {
            State g(n * n);
            std::iota(g.begin(), g.end() - 1, 1);
            g.back() = 0;
            for (int i = n * n - 2; i > 0; --i)
                std::swap(g[i], g[rng.below_int(i + 1)]);
            return g;
        };
    } else {
        d.generate_goal = [n](Rng&) { return npuzzle_canonical_goal(n); };
    }
    return d;
}

bool npuzzle_solvable(const State& s, const State& g) {
    int n2 = static_cast<int>(s.size());
    int n = 1;
    while (n * n < n2) ++n;
    // permutation parity of the mapping s -> g over all cells (incl. blank)
    std::vector<int> pos_in_g(n2);
    for (int i = 0; i < n2; ++i) pos_in_g[g[i]] = i;
    std::vector<int> perm(n2);
    for (int i = 0; i < n2; ++i) perm[i] = pos_in_g[s[i]];
    std::vector<bool> seen(n2, false);
    int transpositions = 0;
    for (int i = 0; i < n2; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    int bs = find_tile(s, 0), bg = find_tile(g, 0);
    int blank_dist = std::abs(bs / n - bg / n) + std::abs(bs % n - bg % n);
    return (transpositions + blank_dist) % 2 == 0;
}

State npuzzle_random_solvable(int n, Rng& rng) {
    State g = npuzzle_canonical_goal(n);
    State s(n * n);
    std::iota(s.begin(), s.end(), 0);
    for (;;) {
        for (int i = n * n - 1; i > 0; --i)
            std::swap(s[i], s[rng.below_int(i + 1)]);
        if (npuzzle_solvable(s, g)) return s;
    }
}

// --------------------------------------------------- missionaries/cannibals

DomainSpec cannibals_domain(int m) {
    if (m < 3) throw InvalidParameter("cannibals requires M >= 3");
    DomainSpec d;
    d.name = "cannibals";
    d.parameter = m;
    // cargo (missionaries, cannibals) x direction; '>' = start->target
    d.op_names = {"1m>", "2m>", "1c>", "2c>", "1m1c>",
                  "1m<", "2m<", "1c<", "2c<", "1m1c<"};
    d.reverse_of = {5, 6, 7, 8, 9, 0, 1, 2, 3, 4};
    static const int cargo_m[5] = {1, 2, 0, 0, 1};
    static const int cargo_c[5] = {0, 0, 1, 2, 1};

    auto bank_safe = [](int mm, int cc) { return mm == 0 || mm >= cc; };

    d.apply = [m, bank_safe](OperatorId op, const State& s) -> std::optional<State> {
        int dm = cargo_m[op % 5], dc = cargo_c[op % 5];
        bool forward = op < 5;
        if ((s[2] == 0) != forward) return std::nullopt;
        int sm = s[0], sc = s[1];
        if (forward) {
            if (sm < dm || sc < dc) return std::nullopt;
            sm -= dm; sc -= dc;
        } else {
            if (m - sm < dm || m - sc < dc) return std::nullopt;
            sm += dm; sc += dc;
        }
        if (!bank_safe(sm, sc) || !bank_safe(m - sm, m - sc)) return std::nullopt;
        return State{sm, sc, forward ? 1 : 0};
    };

    d.heuristic = [](const State& s, const State&) -> HValue {
        HValue h = s[0] + s[1];
        if (h == 0 && s[2] == 0) h = 1; // boat still on the start bank
        return h;
    };

    d.generate_goal = [](Rng&) { return State{0, 0, 1}; };
    return d;
}

// ------------------------------------------------------------------ stones

DomainSpec stones_domain(int k) {
    if (k < 2) throw InvalidParameter("stones requires K >= 2");
    DomainSpec d;
    d.name = "stones";
    d.parameter = k;
    d.op_names = {"-3", "-2", "-1", "+1", "+2", "+3"};
    d.reverse_of = {3 + 2, 3 + 1, 3 + 0, 2, 1, 0}; // -o undoes +o
    static const int offsets[6] = {-3, -2, -1, 1, 2, 3};
    int len = 2 * k + 1;

    d.apply = [len](OperatorId op, const State& s) -> std::optional<State> {
        int empty = 0;
        while (s[empty] != 0) ++empty;
        int src = empty + offsets[op];
        if (src < 0 || src >= len) return std::nullopt;
        State t = s;
        std::swap(t[empty], t[src]);
        return t;
    };

    d.heuristic = [](const State& s, const State& g) -> HValue {
        HValue h = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != 0 && s[i] != g[i]) ++h;
        return h;
    };

    d.generate_goal = [k, len](Rng&) {
        State g(len, 2);
        for (int i = 0; i < k; ++i) g[i] = 1;
        g[k] = 0;
        return g;
    };
    return d;
}

// ------------------------------------------------------------------- hanoi

DomainSpec hanoi_domain(int r) {
    if (r < 1) throw InvalidParameter("hanoi requires R >= 1");
    DomainSpec d;
    d.name = "hanoi";
    d.parameter = r;
    d.op_names = {"12", "13", "21", "23", "31", "32"};
    d.reverse_of = {2, 4, 0, 5, 1, 3};
    static const int peg_from[6] = {0, 0, 1, 1, 2, 2};
    static const int peg_to[6] = {1, 2, 0, 2, 0, 1};

    d.apply = [r](OperatorId op, const State& s) -> std::optional<State> {
        int from = peg_from[op], to = peg_to[op];
        int moving = -1;
        for (int i = 0; i < r; ++i)
            if (s[i] == from) { moving = i; break; }
        if (moving < 0) return std::nullopt;
        for (int i = 0; i < moving; ++i)
            if (s[i] == to) return std::nullopt; // smaller ring already on top
        State t = s;
        t[moving] = to;
        return t;
    };

    d.heuristic = [r](const State& s, const State&) -> HValue {
        HValue h = 0;
        for (int i = 0; i < r; ++i)
            if (s[i] != 0) ++h;
        return h;
    };

    d.generate_goal = [r](Rng&) { return State(r, 0); };
    return d;
}

// -------------------------------------------------------------------- grid

namespace {

long long edge_key(int x1, int y1, int x2, int y2, int w) {
    long long a = static_cast<long long>(y1) * w + x1;
    long long b = static_cast<long long>(y2) * w + x2;
    if (a > b) std::swap(a, b);
    return a * 1000000007LL + b;
}

} // namespace

GridSpec grid_random_walls(int width, int height, int count, Rng& rng) {
    GridSpec spec{width, height, {}};
    for (int i = 0; i < count; ++i) {
        Wall w;
        w.horizontal = rng.below(2) == 0;
        int cross = w.horizontal ? height - 1 : width - 1;
        int along = w.horizontal ? width : height;
        if (cross < 1 || along < 2) continue;
        w.index = rng.below_int(cross);
        int a = rng.below_int(along), b = rng.below_int(along);
        w.from = std::min(a, b);
        w.to = std::max(a, b);
        if (w.to == w.from) w.to = std::min(along - 1, w.from + 1);
        w.gap = w.from + rng.below_int(w.to - w.from + 1);
        spec.walls.push_back(w);
    }
    return spec;
}

DomainSpec grid_domain(const GridSpec& spec,
                       std::optional<std::pair<int, int>> fixed_goal) {
    if (spec.width < 1 || spec.height < 1)
        throw InvalidParameter("grid dimensions must be >= 1");
    int w = spec.width, h = spec.height;
    auto blocked = std::make_shared<std::unordered_set<long long>>();
    for (const Wall& wall : spec.walls) {
        for (int t = wall.from; t <= wall.to; ++t) {
            if (t == wall.gap) continue;
            if (wall.horizontal)
                blocked->insert(edge_key(t, wall.index, t, wall.index + 1, w));
            else
                blocked->insert(edge_key(wall.index, t, wall.index + 1, t, w));
        }
    }

    // connectivity check: every cell reachable from (0,0)
    {
        std::vector<bool> seen(static_cast<std::size_t>(w) * h, false);
        std::deque<std::pair<int, int>> queue{{0, 0}};
        seen[0] = true;
        std::size_t reached = 1;
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            const int dx[4] = {0, 0, 1, -1};
            const int dy[4] = {-1, 1, 0, 0};
            for (int i = 0; i < 4; ++i) {
                int nx = x + dx[i], ny = y + dy[i];
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                if (blocked->count(edge_key(x, y, nx, ny, w))) continue;
                std::size_t idx = static_cast<std::size_t>(ny) * w + nx;
                if (seen[idx]) continue;
                seen[idx] = true;
                ++reached;
                queue.push_back({nx, ny});
            }
        }
        if (reached != static_cast<std::size_t>(w) * h)
            throw DisconnectedGrid("wall spec separates the grid");
    }

    DomainSpec d;
    d.name = "grid";
    d.parameter = w;
    d.op_names = {"N", "S", "E", "W"};
    d.reverse_of = {1, 0, 3, 2};

    d.apply = [w, h, blocked](OperatorId op, const State& s) -> std::optional<State> {
        static const int dx[4] = {0, 0, 1, -1};
        static const int dy[4] = {-1, 1, 0, 0};
        int nx = s[0] + dx[op], ny = s[1] + dy[op];
        if (nx < 0 || nx >= w || ny < 0 || ny >= h) return std::nullopt;
        if (blocked->count(edge_key(s[0], s[1], nx, ny, w))) return std::nullopt;
        return State{nx, ny};
    };

    d.heuristic = [](const State& s, const State& g) -> HValue {
        return std::abs(s[0] - g[0]) + std::abs(s[1] - g[1]);
    };

    if (fixed_goal) {
        auto [gx, gy] = *fixed_goal;
        d.generate_goal = [gx, gy](Rng&) { return State{gx, gy}; };
    } else {
        d.generate_goal = [w, h](Rng& rng) {
            return State{rng.below_int(w), rng.below_int(h)};
        };
    }
    return d;
}

} // namespace mhl
