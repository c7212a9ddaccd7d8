#include "gbc/grundy.hpp"

#include <algorithm>
#include <string>

#include "gbc/b_chromatic.hpp"

namespace gbc {

Coloring first_fit(const Graph& g, const std::vector<Vertex>& order) {
    if (static_cast<int>(order.size()) != g.n())
        throw NotAPermutation("order has " + std::to_string(order.size()) +
                              " entries, graph has " + std::to_string(g.n()));
    std::vector<bool> seen(g.n(), false);
    for (Vertex v : order) {
        if (v < 0 || v >= g.n() || seen[v])
            throw NotAPermutation("order is not a permutation of the vertices");
        seen[v] = true;
    }
    std::vector<int> colors(g.n(), 0);
    std::vector<bool> taken;
    for (Vertex v : order) {
        taken.assign(g.degree(v) + 2, false);
        for (Vertex u : g.neighbors(v)) {
            int cu = colors[u];
            if (cu > 0 && cu < static_cast<int>(taken.size())) taken[cu] = true;
        }
        int c = 1;
        while (taken[c]) ++c;
        colors[v] = c;
    }
    return Coloring(colors);
}

namespace {

// feas[v][c]: a relaxed necessary condition for v to carry color c in a
// greedy witness -- the colors 1..c-1 can be matched to distinct neighbors
// that are themselves relaxed-feasible.  Sound as a prune, not exact.
std::vector<std::vector<char>> feasibility_table(const Graph& g, int gmax) {
    std::vector<std::vector<char>> feas(g.n(), std::vector<char>(gmax + 1, 0));
    for (Vertex v = 0; v < g.n(); ++v) feas[v][1] = 1;
    std::vector<int> match;   // neighbor slot -> color, 0 = free
    std::vector<bool> visited;
    for (int c = 2; c <= gmax; ++c) {
        for (Vertex v = 0; v < g.n(); ++v) {
            if (g.degree(v) < c - 1) continue;
            const auto& nbrs = g.neighbors(v);
            match.assign(nbrs.size(), 0);
            // Kuhn's matching: colors 1..c-1 into feasible neighbors.
            auto augment = [&](auto&& self, int color) -> bool {
                for (size_t i = 0; i < nbrs.size(); ++i) {
                    if (visited[i] || !feas[nbrs[i]][color]) continue;
                    visited[i] = true;
                    if (match[i] == 0 || self(self, match[i])) {
                        match[i] = color;
                        return true;
                    }
                }
                return false;
            };
            bool ok = true;
            for (int color = c - 1; color >= 1 && ok; --color) {
                visited.assign(nbrs.size(), false);
                ok = augment(augment, color);
            }
            feas[v][c] = ok;
        }
    }
    return feas;
}

struct WitnessSearch {
    const Graph& g;
    const std::vector<std::vector<char>>& feas;
    std::vector<int> assigned; // vertex -> color, 0 = unassigned

    WitnessSearch(const Graph& graph, const std::vector<std::vector<char>>& table)
        : g(graph), feas(table), assigned(graph.n(), 0) {}

    bool neighbor_has_color(Vertex v, int c) const {
        for (Vertex u : g.neighbors(v))
            if (assigned[u] == c) return true;
        return false;
    }

    // Demands are processed LIFO; each frame either finds the color already
    // present or branches over candidate neighbors in ascending id order.
    bool satisfy(std::vector<std::pair<Vertex, int>>& demands) {
        if (demands.empty()) return true;
        auto [v, c] = demands.back();
        demands.pop_back();
        if (neighbor_has_color(v, c)) {
            if (satisfy(demands)) return true;
            demands.emplace_back(v, c);
            return false;
        }
        for (Vertex u : g.neighbors(v)) {
            if (assigned[u] != 0 || !feas[u][c]) continue;
            if (neighbor_has_color(u, c)) continue; // would break properness
            assigned[u] = c;
            size_t pushed = 0;
            for (int d = 1; d < c; ++d, ++pushed) demands.emplace_back(u, d);
            if (satisfy(demands)) return true;
            demands.resize(demands.size() - pushed);
            assigned[u] = 0;
        }
        demands.emplace_back(v, c);
        return false;
    }
};

std::vector<Vertex> order_from_assignment(const Graph& g, const std::vector<int>& assigned) {
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.n(); ++v)
        if (assigned[v] != 0) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return assigned[a] < assigned[b]; });
    for (Vertex v = 0; v < g.n(); ++v)
        if (assigned[v] == 0) order.push_back(v);
    return order;
}

} // namespace

GrundyAtLeastResult grundy_at_least(const Graph& g, int target, int limit) {
    if (target < 1) throw BadParameters("target color count must be >= 1");
    if (g.n() > limit)
        throw SearchLimitExceeded("grundy search on " + std::to_string(g.n()) +
                                  " vertices exceeds limit " + std::to_string(limit));
    GrundyAtLeastResult result;
    if (g.n() == 0) return result;
    if (target == 1) {
        result.holds = true;
        result.order.resize(g.n());
        for (Vertex v = 0; v < g.n(); ++v) result.order[v] = v;
        return result;
    }
    if (target > g.max_degree() + 1) return result;
    auto feas = feasibility_table(g, target);
    WitnessSearch search(g, feas);
    for (Vertex root = 0; root < g.n(); ++root) {
        if (!feas[root][target]) continue;
        search.assigned[root] = target;
        std::vector<std::pair<Vertex, int>> demands;
        for (int d = 1; d < target; ++d) demands.emplace_back(root, d);
        if (search.satisfy(demands)) {
            result.holds = true;
            result.order = order_from_assignment(g, search.assigned);
            return result;
        }
        search.assigned[root] = 0;
    }
    return result;
}

GrundyNumberResult grundy_number(const Graph& g, int limit) {
    if (g.n() == 0) throw EmptyGraph("grundy number of the empty graph");
    if (g.n() > limit)
        throw SearchLimitExceeded("grundy search on " + std::to_string(g.n()) +
                                  " vertices exceeds limit " + std::to_string(limit));
    int upper = std::min(g.max_degree() + 1, 2 * m_of(g));
    for (int target = upper; target >= 1; --target) {
        auto attempt = grundy_at_least(g, target, limit);
        if (attempt.holds) return {target, std::move(attempt.order)};
    }
    return {0, {}}; // unreachable for n >= 1
}

WitnessDecomposition witness_decomposition(const Graph& g, const Coloring& c) {
    auto validity = is_grundy_valid(g, c);
    if (!validity.valid) throw NotGrundyValid("coloring is not Grundy-valid");

    WitnessDecomposition w;
    w.base_coloring = c;
    w.level_of.assign(g.n(), 0);
    int k = c.k();
    for (Vertex v = 0; v < g.n(); ++v)
        if (c.color(v) == k) {
            w.root = v;
            break;
        }
    w.levels.push_back({w.root});
    w.level_of[w.root] = 1;

    if (k >= 2) {
        std::vector<Vertex> second;
        for (int color = 1; color < k; ++color)
            for (Vertex u : g.neighbors(w.root))
                if (c.color(u) == color) {
                    second.push_back(u);
                    break;
                }
        std::sort(second.begin(), second.end());
        for (Vertex u : second) w.level_of[u] = 2;
        w.levels.push_back(std::move(second));
    }

    // Each level demands, for every member u and color d < c(u), a color-d
    // neighbor somewhere in the decomposition built so far; unmet demands
    // recruit the lowest-id neighbor of that color into the next level.
    while (true) {
        const auto& current = w.levels.back();
        std::vector<Vertex> next;
        for (Vertex u : current) {
            for (int d = 1; d < c.color(u); ++d) {
                Vertex candidate = -1;
                bool satisfied = false;
                for (Vertex x : g.neighbors(u)) {
                    if (c.color(x) != d) continue;
                    if (w.level_of[x] != 0) {
                        satisfied = true;
                        break;
                    }
                    if (candidate < 0) candidate = x;
                }
                if (!satisfied) {
                    // Grundy validity guarantees a neighbor of every color
                    // below c(u).
                    next.push_back(candidate);
                    w.level_of[candidate] = static_cast<int>(w.levels.size()) + 1;
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        w.levels.push_back(std::move(next));
    }

    // Children: next-level neighbors with a strictly smaller color.
    w.children.assign(g.n(), {});
    for (Vertex u = 0; u < g.n(); ++u) {
        int lu = w.level_of[u];
        if (lu == 0) continue;
        for (Vertex v : g.neighbors(u))
            if (w.level_of[v] == lu + 1 && c.color(v) < c.color(u))
                w.children[u].push_back(v);
    }
    return w;
}

std::optional<LemmaViolation> check_cactus_child_lemma(const Graph& g,
                                                       const WitnessDecomposition& w) {
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto& ch = w.children[v];
        if (ch.size() < 2) continue;
        int max_level = w.level_of[v] + 1;
        Vertex escaped = -1;
        for (Vertex child : ch) {
            bool escapes = false;
            for (Vertex x : g.neighbors(child)) {
                if (x == v) continue;
                if (w.level_of[x] == 0 || w.level_of[x] > max_level) continue;
                if (std::binary_search(ch.begin(), ch.end(), x)) continue;
                escapes = true;
                break;
            }
            if (!escapes) continue;
            if (escaped >= 0) return LemmaViolation{v, escaped, child};
            escaped = child;
        }
    }
    return std::nullopt;
}

} // namespace gbc
