#ifndef GBC_GRAPH_HPP
#define GBC_GRAPH_HPP

#include <bitset>
#include <optional>
#include <utility>
#include <vector>

#include "gbc/errors.hpp"

namespace gbc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

constexpr int kBitsetCap = 128;

// Simple undirected graph on vertices 0..n-1.  Adjacency lists are kept
// sorted; a bitset mirror is maintained for n <= 128 to make induced
// 4-subset scans and common-neighbor queries cheap.  Immutable after
// construction, safe to share across threads.
class Graph {
public:
    Graph() : n_(0) {}

    int n() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(Vertex u, Vertex v) const;
    bool has_bitsets() const { return !bits_.empty(); }
    const std::bitset<kBitsetCap>& neighbor_bits(Vertex v) const { return bits_[v]; }

    // Sorted list of edges (u, v) with u < v.
    std::vector<Edge> edges() const;

    int max_degree() const;

    friend Graph build_graph(int n, const std::vector<Edge>& edge_list);

private:
    int n_;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::bitset<kBitsetCap>> bits_; // empty when n > kBitsetCap
};

// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
Graph build_graph(int n, const std::vector<Edge>& edge_list);

// Subgraph induced by S together with the old->new index map (new ids
// follow the ascending order of S).
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> vertices;        // new id -> old id, ascending
    std::vector<int> old_to_new;         // old id -> new id, -1 if absent
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

// Non-increasing degree sequence.
std::vector<int> degree_sequence(const Graph& g);

// Length of a shortest cycle; std::nullopt for forests.
std::optional<int> girth(const Graph& g);

inline bool girth_at_least(const Graph& g, int bound) {
    auto gi = girth(g);
    return !gi.has_value() || *gi >= bound;
}

// Blocks (maximal 2-connected subgraphs or bridge edges) as vertex sets,
// plus the articulation vertices.
struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> articulation_vertices;
};
BlockDecomposition block_decomposition(const Graph& g);

// True iff every block is a single edge or a (chordless) cycle.
bool is_cactus(const Graph& g);

// True iff no 4 vertices induce K4 minus an edge or C4.  On failure the
// witness holds a violating 4-set.
struct ForbiddenSubgraphReport {
    bool free = true;
    std::vector<Vertex> witness; // 4 vertices when !free
};
ForbiddenSubgraphReport is_k4e_c4_free(const Graph& g);

// Connectivity helpers shared by several modules.
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

} // namespace gbc

#endif
