#include "rearr/diagrams.hpp"

#include <sstream>

#include "rearr/errors.hpp"

namespace rearr {

std::string DiagramVertex::label() const {
    if (element == 0) return "0";
    return (plus ? "+" : "-") + std::to_string(element);
}

namespace {

// Successor of gap i in the alternating traversal: leave reality edge i at
// -pi(i+1), follow the desire edge to +u, continue on the reality edge at +u.
template <class Fn>
void walk_cycles(const Permutation& pi, const Permutation& sigma, Fn on_cycle) {
    const int n = pi.size();
    const auto pos_pi = pi.positions();
    const auto pos_sigma = sigma.positions();
    std::vector<char> seen(n + 1, 0);
    std::vector<int> gaps;
    for (int start = 0; start <= n; ++start) {
        if (seen[start]) continue;
        gaps.clear();
        int g = start;
        do {
            seen[g] = 1;
            gaps.push_back(g);
            const int v = pi(g + 1);
            const int u = sigma(pos_sigma[v] - 1);
            g = u == 0 ? 0 : pos_pi[u];
        } while (g != start);
        on_cycle(gaps);
    }
}

}  // namespace

std::vector<int> rd_cycle_lengths(const Permutation& pi, const Permutation& sigma) {
    if (pi.size() != sigma.size()) throw LengthMismatch(pi.size(), sigma.size());
    std::vector<int> lengths;
    walk_cycles(pi, sigma, [&](const std::vector<int>& gaps) {
        lengths.push_back(static_cast<int>(gaps.size()));
    });
    return lengths;
}

RealityDesireDiagram build_rd_diagram(const Permutation& pi, const Permutation& sigma,
                                      bool keep_cycle_gaps) {
    if (pi.size() != sigma.size()) throw LengthMismatch(pi.size(), sigma.size());
    RealityDesireDiagram g;
    g.n = pi.size();
    for (int i = 0; i <= g.n; ++i) {
        g.reality_edges.push_back({{pi(i), true}, {pi(i + 1), false}});
        g.desire_edges.push_back({{sigma(i), true}, {sigma(i + 1), false}});
    }
    walk_cycles(pi, sigma, [&](const std::vector<int>& gaps) {
        g.cycles.push_back(static_cast<int>(gaps.size()));
        if (keep_cycle_gaps) g.cycle_gaps.push_back(gaps);
    });
    return g;
}

int cycle_count(const RealityDesireDiagram& g) { return static_cast<int>(g.cycles.size()); }

int odd_cycle_count(const RealityDesireDiagram& g) {
    int odd = 0;
    for (int len : g.cycles) odd += len % 2;
    return odd;
}

std::string RealityDesireDiagram::to_dot() const {
    std::ostringstream out;
    out << "graph rd {\n";
    out << "  \"0\";\n";
    for (int v = 1; v <= n; ++v) out << "  \"-" << v << "\";\n  \"+" << v << "\";\n";
    out << "  \"-" << n + 1 << "\";\n";
    for (const auto& [a, b] : reality_edges)
        out << "  \"" << a.label() << "\" -- \"" << b.label() << "\" [color=black];\n";
    for (const auto& [a, b] : desire_edges)
        out << "  \"" << a.label() << "\" -- \"" << b.label() << "\" [color=gray, style=dashed];\n";
    out << "}\n";
    return out.str();
}

PermutationGraph build_permutation_graph(const Permutation& pi) {
    PermutationGraph g;
    g.n = pi.size();
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            if (pi(i) > pi(j)) g.edges.push_back({i, j});
    return g;
}

AlgebraicCycles algebraic_cycles(const Permutation& pi) {
    AlgebraicCycles out;
    std::vector<char> seen(pi.size() + 1, 0);
    for (int start = 1; start <= pi.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int v = start; !seen[v]; v = pi(v)) {
            seen[v] = 1;
            cyc.push_back(v);
        }
        out.cycles.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace rearr
