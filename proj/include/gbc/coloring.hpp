#ifndef GBC_COLORING_HPP
#define GBC_COLORING_HPP

#include <optional>
#include <vector>

#include "gbc/graph.hpp"

namespace gbc {

// Total coloring, 1-based color values.  Construction rejects values < 1
// and gaps (every color 1..k must be used), so k always equals the class
// count.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors);

    int k() const { return k_; }
    int size() const { return static_cast<int>(colors_.size()); }
    int color(Vertex v) const { return colors_[v]; }
    const std::vector<int>& values() const { return colors_; }

    // Vertices of one class, ascending.
    std::vector<Vertex> color_class(int c) const;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

struct ProperReport {
    bool proper = true;
    std::optional<Edge> violating_edge;
};
ProperReport is_proper(const Graph& g, const Coloring& c);

struct GrundyReport {
    bool valid = true;
    std::optional<Edge> violating_edge;       // set when not even proper
    Vertex vertex = -1;                        // vertex missing a color
    int missing_color = 0;
};
GrundyReport is_grundy_valid(const Graph& g, const Coloring& c);

// Domination witness: for every color c one vertex of that class whose
// closed neighborhood meets every class.
struct BValidReport {
    bool valid = true;
    std::vector<Vertex> witness;               // index c-1 -> vertex, when valid
    int missing_class = 0;                     // class with no dominating vertex
    std::optional<Edge> violating_edge;        // set when not even proper
};
BValidReport is_b_valid(const Graph& g, const Coloring& c);

} // namespace gbc

#endif
