#include "gbc/coloring.hpp"

#include <algorithm>
#include <string>

namespace gbc {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] < 1)
            throw GapInColors("vertex " + std::to_string(v) + " has color " +
                              std::to_string(colors_[v]) + " < 1");
        k_ = std::max(k_, colors_[v]);
    }
    std::vector<bool> used(k_ + 1, false);
    for (int c : colors_) used[c] = true;
    for (int c = 1; c <= k_; ++c)
        if (!used[c]) throw GapInColors("color " + std::to_string(c) + " unused");
}

std::vector<Vertex> Coloring::color_class(int c) const {
    std::vector<Vertex> out;
    for (size_t v = 0; v < colors_.size(); ++v)
        if (colors_[v] == c) out.push_back(static_cast<Vertex>(v));
    return out;
}

namespace {

void require_total(const Graph& g, const Coloring& c) {
    if (c.size() != g.n())
        throw IncompleteColoring("coloring covers " + std::to_string(c.size()) +
                                 " vertices, graph has " + std::to_string(g.n()));
}

} // namespace

ProperReport is_proper(const Graph& g, const Coloring& c) {
    require_total(g, c);
    ProperReport report;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v && c.color(u) == c.color(v)) {
                report.proper = false;
                report.violating_edge = Edge{u, v};
                return report;
            }
    return report;
}

GrundyReport is_grundy_valid(const Graph& g, const Coloring& c) {
    require_total(g, c);
    GrundyReport report;
    auto proper = is_proper(g, c);
    if (!proper.proper) {
        report.valid = false;
        report.violating_edge = proper.violating_edge;
        return report;
    }
    std::vector<bool> seen;
    for (Vertex v = 0; v < g.n(); ++v) {
        int cv = c.color(v);
        if (cv == 1) continue;
        seen.assign(cv, false);
        for (Vertex u : g.neighbors(v))
            if (c.color(u) < cv) seen[c.color(u)] = true;
        for (int d = 1; d < cv; ++d)
            if (!seen[d]) {
                report.valid = false;
                report.vertex = v;
                report.missing_color = d;
                return report;
            }
    }
    return report;
}

BValidReport is_b_valid(const Graph& g, const Coloring& c) {
    require_total(g, c);
    BValidReport report;
    auto proper = is_proper(g, c);
    if (!proper.proper) {
        report.valid = false;
        report.violating_edge = proper.violating_edge;
        return report;
    }
    int k = c.k();
    report.witness.assign(k, -1);
    std::vector<bool> seen;
    for (Vertex v = 0; v < g.n(); ++v) {
        int cv = c.color(v);
        if (report.witness[cv - 1] >= 0) continue;
        seen.assign(k + 1, false);
        int distinct = 0;
        for (Vertex u : g.neighbors(v))
            if (!seen[c.color(u)]) {
                seen[c.color(u)] = true;
                ++distinct;
            }
        if (distinct == k - 1 && !seen[cv]) report.witness[cv - 1] = v;
    }
    for (int cls = 1; cls <= k; ++cls)
        if (report.witness[cls - 1] < 0) {
            report.valid = false;
            report.missing_class = cls;
            report.witness.clear();
            return report;
        }
    return report;
}

} // namespace gbc
