#ifndef GBC_B_CHROMATIC_HPP
#define GBC_B_CHROMATIC_HPP

#include <optional>
#include <vector>

#include "gbc/coloring.hpp"
#include "gbc/graph.hpp"

namespace gbc {

constexpr int kDefaultBLimit = 20;
constexpr int kTreeBLimit = 32;

// m(G) = max k such that the k-th largest degree is at least k-1.
int m_of(const Graph& g);

// Searches for a color-dominating coloring with exactly k colors: every
// class must contain a vertex adjacent to all other classes.
std::optional<Coloring> try_b_coloring(const Graph& g, int k);

struct BNumberResult {
    int b = 0;
    Coloring certificate;
};

// Exact b-chromatic number, searching k downward from m(G).
BNumberResult b_number(const Graph& g, int limit = kDefaultBLimit);

// Dense vertices, pivot test per the tree characterization: a pivoted tree
// has exactly m dense vertices plus a distinguished non-dense vertex whose
// dense neighborhood structure blocks the usual m-coloring.
struct PivotReport {
    int m = 0;
    std::vector<Vertex> dense;          // degree >= m-1, ascending
    std::optional<Vertex> pivot;        // first pivot in id order
    bool is_pivoted = false;
};
PivotReport is_pivoted_tree(const Graph& t);

// b(T) for trees: non-pivoted trees have b = m with the dominator search
// restricted to dense vertices; pivoted trees fall back to the exact
// search (m-1 <= b <= m).
BNumberResult b_of_tree(const Graph& t, int limit = kTreeBLimit);

struct BMonotoneReport {
    bool monotone = true;
    std::vector<Vertex> counterexample;  // induced subgraph with larger b
    int counterexample_b = 0;
};

// Checks b(H) <= b(G) over all induced subgraphs; enumerates subsets in
// decreasing size and reports the first violation.
BMonotoneReport is_b_monotone(const Graph& g, int limit = 14);

// Computes both sides of Gamma(G) <= 2 m(G).
struct GammaVsM {
    int gamma = 0;
    int m = 0;
    bool holds = false;
};
GammaVsM verify_gamma_le_2m(const Graph& g, int grundy_limit = kDefaultGrundyLimit);

} // namespace gbc

#endif
