#include "rearr/solvers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rearr/errors.hpp"

namespace rearr {

long long total_distance(Metric metric, const Permutation& z, const PermutationSet& s, const DistanceOptions& opts) {
    long long total = 0;
    for (const auto& r : s.rows()) total += distance(metric, z, r, opts);
    return total;
}

int radius(Metric metric, const Permutation& z, const PermutationSet& s, const DistanceOptions& opts) {
    int worst = 0;
    for (const auto& r : s.rows()) worst = std::max(worst, distance(metric, z, r, opts));
    return worst;
}

namespace {

void check_cap(int n) {
    if (n > kBruteForceCap)
        throw SearchBudgetExceeded("brute force capped at n=" + std::to_string(kBruteForceCap) +
                                   ", got n=" + std::to_string(n));
}

template <class Score>
std::pair<Permutation, long long> enumerate_best(int n, Score score) {
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i + 1;
    std::vector<int> best = cur;
    long long best_score = -1;
    do {
        const long long sc = score(cur);
        if (best_score < 0 || sc < best_score) {
            best_score = sc;
            best = cur;
        }
    } while (std::next_permutation(cur.begin(), cur.end()));
    return {Permutation(std::move(best)), best_score};
}

}  // namespace

MedianResult median_brute_force(const PermutationSet& s, Metric metric, const DistanceOptions& opts) {
    check_cap(s.n());
    auto [w, total] = enumerate_best(s.n(), [&](const std::vector<int>& c) {
        return total_distance(metric, Permutation(c), s, opts);
    });
    MedianResult out{w, total, true};
    if (total_distance(metric, out.witness, s, opts) != out.total) throw std::logic_error("median total mismatch");
    return out;
}

ClosestResult closest_brute_force(const PermutationSet& s, Metric metric, const DistanceOptions& opts) {
    check_cap(s.n());
    auto [w, rad] = enumerate_best(s.n(), [&](const std::vector<int>& c) {
        return static_cast<long long>(radius(metric, Permutation(c), s, opts));
    });
    ClosestResult out{w, static_cast<int>(rad), true};
    if (radius(metric, out.witness, s, opts) != out.radius) throw std::logic_error("closest radius mismatch");
    return out;
}

// ---------------------------------------------------------------------------
// Bounded search tree

namespace {

class ClosestSearch {
public:
    ClosestSearch(const PermutationSet& s, int d, Metric metric, const FptOptions& opts)
        : s_(s), d_(d), metric_(metric), opts_(opts) {
        for (const auto& m : enumerate_moves(metric, s[0])) universe_.push_back(m);
    }

    std::optional<Permutation> run() {
        // Triangle inequality: every row must be within 2d of the first.
        const auto& z = s_[0];
        auto dist = distances(z);
        for (int i = 0; i < s_.k(); ++i)
            if (dist[i] > 2 * d_) return std::nullopt;
        return search(z, dist, d_);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::vector<int> distances(const Permutation& z) {
        std::vector<int> out;
        for (const auto& r : s_.rows()) out.push_back(distance(metric_, z, r, opts_.distance));
        return out;
    }

    std::optional<Permutation> search(const Permutation& z, const std::vector<int>& dist, int budget) {
        if (++nodes_ > opts_.node_budget)
            throw SearchBudgetExceeded("closest search exceeded " + std::to_string(opts_.node_budget) + " nodes");
        int violating = -1;
        for (int i = 0; i < s_.k(); ++i)
            if (dist[i] > d_) {
                violating = i;
                break;
            }
        if (violating < 0) return z;
        if (budget == 0) return std::nullopt;
        if (auto it = failed_.find(z.vec()); it != failed_.end() && it->second >= budget) return std::nullopt;

        for (const auto& child : children(z, violating)) {
            auto cd = distances(child);
            bool feasible = true;
            for (int v : cd) feasible = feasible && v <= budget - 1 + d_;
            if (!feasible) continue;
            if (auto found = search(child, cd, budget - 1)) return found;
        }
        auto& f = failed_[z.vec()];
        f = std::max(f, budget);
        return std::nullopt;
    }

    std::vector<Permutation> children(const Permutation& z, int violating) {
        switch (metric_) {
        case Metric::Swap: return swap_children(z, s_[violating]);
        case Metric::ShortBlockMove: return sbm_children(z, violating);
        case Metric::BlockInterchange: return bi_children(z, violating);
        default: throw UnsupportedMetric("closest_fpt supports swap, sbm and bi");
        }
    }

    static void push_unique(std::vector<Permutation>& out, std::set<std::vector<int>>& seen, Permutation p) {
        if (seen.insert(p.vec()).second) out.push_back(std::move(p));
    }

    // Swaps of two positions where z and the violating row differ. The
    // one-step corrections towards the row come first, then other swaps inside
    // one cycle, then swaps joining two cycles.
    std::vector<Permutation> swap_children(const Permutation& z, const Permutation& target) {
        const int n = z.size();
        const auto zpos = z.positions();
        std::vector<int> differ;
        for (int p = 1; p <= n; ++p)
            if (z(p) != target(p)) differ.push_back(p);
        // Cycle id of each position under p -> position in z of target(p).
        std::vector<int> cycle(n + 1, 0);
        int id = 0;
        for (int p : differ) {
            if (cycle[p]) continue;
            ++id;
            for (int q = p; !cycle[q]; q = zpos[target(q)]) cycle[q] = id;
        }
        std::vector<Permutation> out;
        std::set<std::vector<int>> seen;
        auto swapped = [&](int a, int b) {
            auto v = z.vec();
            std::swap(v[a - 1], v[b - 1]);
            return Permutation(std::move(v));
        };
        for (int p : differ) push_unique(out, seen, swapped(std::min(p, zpos[target(p)]), std::max(p, zpos[target(p)])));
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t a = 0; a < differ.size(); ++a)
                for (std::size_t b = a + 1; b < differ.size(); ++b)
                    if ((cycle[differ[a]] == cycle[differ[b]]) == (pass == 0))
                        push_unique(out, seen, swapped(differ[a], differ[b]));
        return out;
    }

    // Sbm moves correcting towards the violating row first, then every sbm
    // whose window lies inside one block between split points common to z and
    // all rows.
    std::vector<Permutation> sbm_children(const Permutation& z, int violating) {
        const int n = z.size();
        std::vector<Permutation> out;
        std::set<std::vector<int>> seen;
        const auto x = relabel_pair(z, s_[violating]);
        for (const auto& m : universe_) {
            const auto& bm = std::get<BlockMove>(m.op);
            if (is_correcting(x, bm)) push_unique(out, seen, apply_move(z, m));
        }
        // split[p]: the first p entries of z are a common prefix set.
        std::vector<char> split(n + 1, 1);
        for (const auto& r : s_.rows()) {
            const auto xr = relabel_pair(z, r);
            int prefix_max = 0;
            for (int p = 1; p <= n; ++p) {
                prefix_max = std::max(prefix_max, xr(p));
                if (prefix_max != p) split[p] = 0;
            }
        }
        for (const auto& m : universe_) {
            const auto& bm = std::get<BlockMove>(m.op);
            bool inside = true;
            for (int p = bm.i; p < bm.k - 1; ++p) inside = inside && !split[p];
            if (inside) push_unique(out, seen, apply_move(z, m));
        }
        return out;
    }

    // Block-interchanges raising the cycle count towards the violating row by
    // two first, then every block-interchange that only cuts gaps which are
    // breakpoints of z with respect to some row.
    std::vector<Permutation> bi_children(const Permutation& z, int violating) {
        const int n = z.size();
        std::vector<Permutation> out;
        std::set<std::vector<int>> seen;
        const int current = block_interchange_distance(z, s_[violating]);
        std::vector<char> breakpoint(n + 1, 0);
        for (const auto& r : s_.rows()) {
            const auto pos = r.positions();
            auto at = [&](int v) { return v == 0 ? 0 : pos[v]; };
            for (int g = 0; g <= n; ++g)
                if (at(z(g + 1)) != at(z(g)) + 1) breakpoint[g] = 1;
        }
        std::vector<Permutation> rest;
        for (const auto& m : universe_) {
            const auto& op = std::get<BlockInterchangeMove>(m.op);
            const bool cuts_ok = breakpoint[op.a - 1] && breakpoint[op.b] && breakpoint[op.c - 1] && breakpoint[op.d];
            auto child = apply_move(z, m);
            const bool two_move = block_interchange_distance(child, s_[violating]) == current - 1;
            if (two_move) push_unique(out, seen, child);
            else if (cuts_ok) rest.push_back(std::move(child));
        }
        for (auto& c : rest) push_unique(out, seen, std::move(c));
        return out;
    }

    const PermutationSet& s_;
    int d_;
    Metric metric_;
    FptOptions opts_;
    std::vector<Move> universe_;
    std::map<std::vector<int>, int> failed_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

FptResult closest_fpt(const PermutationSet& s, int d, Metric metric, const FptOptions& opts) {
    if (d < 0) throw InvalidBudget(d);
    if (metric != Metric::Swap && metric != Metric::ShortBlockMove && metric != Metric::BlockInterchange)
        throw UnsupportedMetric("closest_fpt does not support " + to_string(metric) +
                                "; the parameterized complexity of this case is an open question");
    ClosestSearch search(s, d, metric, opts);
    FptResult out;
    out.witness = search.run();
    out.nodes = search.nodes();
    if (out.witness && radius(metric, *out.witness, s, opts.distance) > d)
        throw std::logic_error("closest_fpt witness exceeds the radius");
    return out;
}

// ---------------------------------------------------------------------------
// Kernel pipeline

KernelMedianDecision median_with_kernel(const PermutationSet& s, int d, Metric metric, const DistanceOptions& opts) {
    KernelMedianDecision out;
    out.kernel = kernelize_median(metric, s, d, opts.limits);
    const auto& k = out.kernel;
    switch (k.decision) {
    case KernelDecision::No: return out;
    case KernelDecision::Unresolved:
        throw SearchBudgetExceeded("kernel rule 4 could not evaluate its candidate");
    case KernelDecision::YesWitness:
        out.yes = true;
        out.witness = k.witness;
        out.total = total_distance(metric, *k.witness, s, opts);
        if (out.total > d) throw std::logic_error("kernel witness exceeds the budget");
        return out;
    case KernelDecision::Reduced: break;
    }
    const int n = k.reduced.n();
    check_cap(n);
    const unsigned long long masks = k.relabel_map.orientable ? (1ull << n) : 1ull;
    std::optional<Permutation> best;
    long long best_total = -1;
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i + 1;
    do {
        const Permutation reduced(cur);
        for (unsigned long long mask = 0; mask < masks; ++mask) {
            auto lifted = k.relabel_map.lift(reduced, mask);
            const long long total = total_distance(metric, lifted, s, opts);
            if (best_total < 0 || total < best_total) {
                best_total = total;
                best = std::move(lifted);
            }
        }
    } while (std::next_permutation(cur.begin(), cur.end()));
    if (best_total <= d) {
        out.yes = true;
        out.witness = best;
        out.total = best_total;
    }
    return out;
}

}  // namespace rearr
