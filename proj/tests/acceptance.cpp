// One pass/fail line per acceptance criterion. Tolerances are exact integer
// agreement throughout; each criterion also has a wall-clock limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "rearr/kernels.hpp"
#include "rearr/metrics.hpp"
#include "rearr/permutation.hpp"
#include "rearr/reductions.hpp"
#include "rearr/solvers.hpp"

using namespace rearr;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* what, double limit_ms, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms <= limit_ms;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("[%s] %s %s: %s; %.1f ms (limit %.0f ms)%s\n", pass ? "PASS" : "FAIL", id, what, o.detail.c_str(), ms,
                limit_ms, in_time ? "" : " TIMEOUT");
    std::fflush(stdout);
}

std::string count(const char* label, long long v) { return std::string(label) + "=" + std::to_string(v); }

// Random instances for the decision checks: rows are swap walks around a
// random center, so yes and no answers both occur at small d.
struct Instance {
    PermutationSet s;
    int d;
};

Instance draw(std::mt19937_64& rng, int max_n) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    const int k = 1 + static_cast<int>(rng() % 4);
    const int d = static_cast<int>(rng() % 4);
    return {oracle::random_instance(rng, n, k, static_cast<int>(rng() % 4)), d};
}

}  // namespace

int main() {
    report("AC1", "swap example", 1, [] {
        const int v = swap_distance(P({8, 5, 1, 3, 2, 7, 6, 4}), identity(8));
        return Outcome{v == 5, count("d_swap", v)};
    });

    report("AC2", "reduced permutation", 1, [] {
        const auto g = reduce_glue(P({2, 1, 4, 3, 5, 6, 9, 8, 7}));
        return Outcome{g == P({2, 1, 4, 3, 5, 8, 7, 6}), "gl=" + g.to_string()};
    });

    report("AC3", "sbm tight examples", 10, [] {
        const int a = sbm_distance_exact(P({2, 4, 3, 5, 1}), identity(5));
        const int b = sbm_distance_exact(P({2, 1, 4, 3, 6, 5}), identity(6));
        return Outcome{a == 3 && b == 3, count("d1", a) + " " + count("d2", b)};
    });

    report("AC4", "bi and swap formulas vs BFS, n<=6", 60'000, [] {
        long long mismatches = 0, checked = 0;
        for (int n = 1; n <= 6; ++n) {
            const auto& bi = oracle::distance_table(Metric::BlockInterchange, n);
            const auto& sw = oracle::distance_table(Metric::Swap, n);
            for (const auto& v : oracle::all_permutations(n)) {
                const int r = oracle::rank_of(v);
                mismatches += block_interchange_distance(P(v), identity(n)) != bi[r];
                mismatches += swap_distance(P(v), identity(n)) != sw[r];
                ++checked;
            }
        }
        return Outcome{mismatches == 0, count("permutations", checked) + " " + count("mismatches", mismatches)};
    });

    report("AC5", "transposition lower bound, n<=5", 30'000, [] {
        long long violations = 0, tight = 0;
        for (int n = 1; n <= 5; ++n) {
            const auto& t = oracle::distance_table(Metric::Transposition, n);
            for (const auto& v : oracle::all_permutations(n)) {
                const int exact = t[oracle::rank_of(v)];
                const int lb = transposition_lower_bound(P(v), identity(n));
                violations += lb > exact;
                tight += lb == exact;
                violations += is_hurdle_free(P(v)) != (lb == exact);
            }
        }
        const bool example = is_hurdle_free(P({2, 1}));
        return Outcome{violations == 0 && tight > 0 && example,
                       count("violations", violations) + " " + count("hurdle_free", tight)};
    });

    report("AC6", "d_sbm(permut_bi(s)) == d_H(s), m<=5", 10'000, [] {
        long long mismatches = 0, strings = 0;
        for (int m = 1; m <= 5; ++m)
            for (int mask = 0; mask < (1 << m); ++mask) {
                std::string bits;
                for (int i = 0; i < m; ++i) bits += (mask >> i & 1) ? '1' : '0';
                const BinaryString s(bits);
                mismatches += sbm_distance_exact(permut_bi(s), identity(2 * m)) !=
                              hamming_distance(s, BinaryString(std::string(m, '0')));
                ++strings;
            }
        return Outcome{mismatches == 0 && strings == 62, count("strings", strings) + " " + count("mismatches", mismatches)};
    });

    report("AC7", "bi additivity under union, lengths<=4", 30'000, [] {
        long long mismatches = 0, pairs = 0;
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q)
                for (const auto& a : oracle::all_permutations(p))
                    for (const auto& b : oracle::all_permutations(q)) {
                        const int u = block_interchange_distance(disjoint_union(P(a), P(b)), identity(p + q + 1));
                        mismatches += u != block_interchange_distance(P(a), identity(p)) +
                                                block_interchange_distance(P(b), identity(q));
                        ++pairs;
                    }
        return Outcome{mismatches == 0, count("pairs", pairs) + " " + count("mismatches", mismatches)};
    });

    report("AC8", "median to closest construction over S_3", 300'000, [] {
        const auto perms = oracle::all_permutations(3);
        long long mismatches = 0, triples = 0;
        for (const auto& a : perms)
            for (const auto& b : perms)
                for (const auto& c : perms) {
                    const long long total = oracle::median(PermutationSet({P(a), P(b), P(c)}), Metric::BlockInterchange).value;
                    const auto rows = median_to_closest_instance(P(a), P(b), P(c));
                    const PermutationSet inst({rows[0], rows[1], rows[2]});
                    int best = -1;
                    for (const auto& sigma : perms) {
                        const int r = radius(Metric::BlockInterchange, sixfold_union(P(sigma)), inst);
                        if (best < 0 || r < best) best = r;
                    }
                    mismatches += best != 2 * total;
                    ++triples;
                }
        return Outcome{mismatches == 0 && triples == 216, count("triples", triples) + " " + count("mismatches", mismatches)};
    });

    report("AC9", "kernel equivalence, 200 instances per metric", 600'000, [] {
        std::mt19937_64 rng(2024);
        long long mismatches = 0, bound_violations = 0, reduced = 0;
        for (Metric m : kAllMetrics)
            for (int t = 0; t < 200; ++t) {
                const auto [s, d] = draw(rng, 7);
                const bool truth = oracle::median(s, m).value <= d;
                const auto k = median_with_kernel(s, d, m);
                mismatches += k.yes != truth;
                if (k.kernel.decision == KernelDecision::Reduced) {
                    ++reduced;
                    bound_violations += k.kernel.reduced.n() > k.kernel.bound.columns ||
                                        k.kernel.reduced.k() > k.kernel.bound.rows;
                }
            }
        return Outcome{mismatches == 0 && bound_violations == 0,
                       count("mismatches", mismatches) + " " + count("bound_violations", bound_violations) + " " +
                           count("reduced", reduced)};
    });

    report("AC10", "fpt closest vs brute force, 200 instances per metric", 600'000, [] {
        std::mt19937_64 rng(4242);
        long long mismatches = 0, node_violations = 0;
        std::uint64_t max_swap_nodes = 0;
        for (Metric m : {Metric::Swap, Metric::ShortBlockMove, Metric::BlockInterchange})
            for (int t = 0; t < 200; ++t) {
                const auto [s, d] = draw(rng, 6);
                const bool truth = oracle::closest(s, m).value <= d;
                const auto r = closest_fpt(s, d, m);
                mismatches += r.witness.has_value() != truth;
                if (m == Metric::Swap) {
                    const auto bound = static_cast<std::uint64_t>(std::pow(4.0 * d, d)) + 1;
                    node_violations += r.nodes > bound;
                    max_swap_nodes = std::max(max_swap_nodes, r.nodes);
                }
            }
        return Outcome{mismatches == 0 && node_violations == 0,
                       count("mismatches", mismatches) + " " + count("node_violations", node_violations) + " " +
                           count("max_swap_nodes", static_cast<long long>(max_swap_nodes))};
    });

    report("AC11", "metric axioms, n<=5", 300'000, [] {
        // Breakpoint without boundary pairs cannot tell a permutation from its
        // reverse, so its zero-distance distinct pairs are measured, and the
        // identity axiom is asserted on the boundary variant instead.
        long long violations = 0, bp_asymmetric = 0, bp_zero_distinct = 0, pairs = 0;
        DistanceOptions boundary;
        boundary.breakpoint_boundary = true;
        for (Metric m : kAllMetrics)
            for (int n = 1; n <= 5; ++n) {
                const auto all = oracle::all_permutations(n);
                std::vector<std::vector<int>> dist(all.size(), std::vector<int>(all.size()));
                for (std::size_t i = 0; i < all.size(); ++i)
                    for (std::size_t j = 0; j < all.size(); ++j) dist[i][j] = distance(m, P(all[i]), P(all[j]));
                for (std::size_t i = 0; i < all.size(); ++i)
                    for (std::size_t j = 0; j < all.size(); ++j) {
                        ++pairs;
                        if (m == Metric::Breakpoint) {
                            violations += i == j && dist[i][j] != 0;
                            bp_zero_distinct += i != j && dist[i][j] == 0;
                            bp_asymmetric += dist[i][j] != dist[j][i];
                            violations += (distance(m, P(all[i]), P(all[j]), boundary) == 0) != (i == j);
                            continue;
                        }
                        violations += (dist[i][j] == 0) != (i == j);
                        violations += dist[i][j] != dist[j][i];
                        for (std::size_t l = 0; l < all.size(); ++l) violations += dist[i][l] > dist[i][j] + dist[j][l];
                    }
            }
        return Outcome{violations == 0, count("pairs", pairs) + " " + count("violations", violations) + " " +
                                            count("bp_asymmetric_pairs", bp_asymmetric) + " " +
                                            count("bp_zero_distance_distinct_pairs", bp_zero_distinct)};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
