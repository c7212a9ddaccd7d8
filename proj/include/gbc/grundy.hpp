#ifndef GBC_GRUNDY_HPP
#define GBC_GRUNDY_HPP

#include <optional>
#include <vector>

#include "gbc/coloring.hpp"
#include "gbc/graph.hpp"

namespace gbc {

// Default cap on exact Grundy search; families with structure (trees,
// cacti) can raise it through the limit parameter.
constexpr int kDefaultGrundyLimit = 20;

// Greedy coloring under the given visiting order: each vertex receives the
// least color absent from its already-colored neighbors.
Coloring first_fit(const Graph& g, const std::vector<Vertex>& order);

struct GrundyAtLeastResult {
    bool holds = false;
    std::vector<Vertex> order; // realizes >= g colors when holds
};

// Decides Gamma(G) >= g by backtracking construction of a greedy witness
// structure (a partial proper coloring where every vertex of color c has
// assigned neighbors of all colors below c).
GrundyAtLeastResult grundy_at_least(const Graph& g, int target,
                                    int limit = kDefaultGrundyLimit);

struct GrundyNumberResult {
    int k = 0;
    std::vector<Vertex> order; // first_fit(order) uses exactly k colors
};

// Exact Grundy number; iterates downward from min(maxdeg+1, 2 m(G)).
GrundyNumberResult grundy_number(const Graph& g, int limit = kDefaultGrundyLimit);

// Leveled subgraph extracted from a Grundy coloring: L_1 holds one vertex
// of the top color, L_2 one neighbor per color below it, and each later
// level holds the vertices recruited to satisfy the color demands of the
// previous one.  Ties always break toward the lowest vertex id.
struct WitnessDecomposition {
    Vertex root = -1;
    std::vector<std::vector<Vertex>> levels; // levels[i] = L_{i+1}
    std::vector<std::vector<Vertex>> children; // per vertex of G, ascending
    std::vector<int> level_of;               // 1-based level, 0 when absent
    Coloring base_coloring;

    int t() const { return static_cast<int>(levels.size()); }
    bool contains(Vertex v) const { return level_of[v] != 0; }
};

WitnessDecomposition witness_decomposition(const Graph& g, const Coloring& c);

// On cactus inputs, at most one child of any vertex may have neighbors
// inside the decomposition beyond its parent and siblings.  Returns the
// offending (parent, child, child) triple if violated.
struct LemmaViolation {
    Vertex parent, first_child, second_child;
};
std::optional<LemmaViolation> check_cactus_child_lemma(const Graph& g,
                                                       const WitnessDecomposition& w);

} // namespace gbc

#endif
