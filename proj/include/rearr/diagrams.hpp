#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rearr/permutation.hpp"

namespace rearr {

// Vertex of the reality-and-desire diagram: element 0..n+1 with a side.
// Element 0 only has a plus side and n+1 only a minus side.
struct DiagramVertex {
    int element;
    bool plus;
    std::string label() const;
    auto operator<=>(const DiagramVertex&) const = default;
};

struct RealityDesireDiagram {
    int n = 0;
    // reality_edges[i] joins +pi(i) and -pi(i+1), i = 0..n (gap i).
    std::vector<std::pair<DiagramVertex, DiagramVertex>> reality_edges;
    std::vector<std::pair<DiagramVertex, DiagramVertex>> desire_edges;
    // Lengths in reality edges, in traversal order.
    std::vector<int> cycles;
    // Gap indices of each cycle; filled only when requested.
    std::vector<std::vector<int>> cycle_gaps;

    std::string to_dot() const;
};

RealityDesireDiagram build_rd_diagram(const Permutation& pi, const Permutation& sigma,
                                      bool keep_cycle_gaps = false);
int cycle_count(const RealityDesireDiagram& g);
int odd_cycle_count(const RealityDesireDiagram& g);

// Cycle lengths only, without materializing edges. Hot path for the metrics.
std::vector<int> rd_cycle_lengths(const Permutation& pi, const Permutation& sigma);

struct PermutationGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

PermutationGraph build_permutation_graph(const Permutation& pi);

struct AlgebraicCycles {
    std::vector<std::vector<int>> cycles;
};

AlgebraicCycles algebraic_cycles(const Permutation& pi);

}  // namespace rearr
