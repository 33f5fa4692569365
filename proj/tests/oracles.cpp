#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <set>

namespace oracle {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int rank_of(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

namespace {

// Every neighbour of p under one move of the metric, 0-based positions.
std::vector<std::vector<int>> neighbours(Metric metric, const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<int>> out;
    auto exchange = [&](int a, int b, int c, int d) {
        // Blocks p[a..b] and p[c..d] (inclusive) trade places.
        std::vector<int> q(p.begin(), p.begin() + a);
        q.insert(q.end(), p.begin() + c, p.begin() + d + 1);
        q.insert(q.end(), p.begin() + b + 1, p.begin() + c);
        q.insert(q.end(), p.begin() + a, p.begin() + b + 1);
        q.insert(q.end(), p.begin() + d + 1, p.end());
        out.push_back(std::move(q));
    };
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c; d < n; ++d) {
                    const bool unit = a == b && c == d;
                    const bool adjacent = c == b + 1;
                    const bool short_move = adjacent && d - a + 1 <= 3;
                    switch (metric) {
                    case Metric::Swap:
                        if (unit) exchange(a, b, c, d);
                        break;
                    case Metric::BlockInterchange: exchange(a, b, c, d); break;
                    case Metric::Transposition:
                        if (adjacent) exchange(a, b, c, d);
                        break;
                    case Metric::ShortBlockMove:
                        if (short_move) exchange(a, b, c, d);
                        break;
                    case Metric::Breakpoint: break;
                    }
                }
    return out;
}

std::mutex g_mutex;
std::map<std::pair<int, int>, std::vector<int>> g_tables;

int breakpoints(const std::vector<int>& pi, const std::vector<int>& sigma) {
    std::set<std::pair<int, int>> adj;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) adj.insert(std::minmax(sigma[i], sigma[i + 1]));
    int count = 0;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) count += !adj.count(std::minmax(pi[i], pi[i + 1]));
    return count;
}

}  // namespace

const std::vector<int>& distance_table(Metric metric, int n) {
    std::lock_guard lock(g_mutex);
    auto key = std::make_pair(static_cast<int>(metric), n);
    if (auto it = g_tables.find(key); it != g_tables.end()) return it->second;
    int total = 1;
    for (int i = 2; i <= n; ++i) total *= i;
    std::vector<int> dist(total, -1);
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;
    std::queue<std::vector<int>> q;
    dist[rank_of(id)] = 0;
    q.push(id);
    while (!q.empty()) {
        auto p = q.front();
        q.pop();
        const int dp = dist[rank_of(p)];
        for (auto& nb : neighbours(metric, p)) {
            int& dn = dist[rank_of(nb)];
            if (dn < 0) {
                dn = dp + 1;
                q.push(std::move(nb));
            }
        }
    }
    return g_tables.emplace(key, std::move(dist)).first->second;
}

int distance(Metric metric, const Permutation& pi, const Permutation& sigma) {
    if (metric == Metric::Breakpoint) return breakpoints(pi.vec(), sigma.vec());
    const int n = pi.size();
    if (n == 0) return 0;
    // Rename values so that sigma becomes the identity.
    std::vector<int> where(n + 1);
    for (int i = 0; i < n; ++i) where[sigma.vec()[i]] = i + 1;
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = where[pi.vec()[i]];
    return distance_table(metric, n)[rank_of(x)];
}

namespace {

template <class Combine>
Best best_over_all(const PermutationSet& s, Metric metric, Combine combine) {
    Best best{{}, -1};
    for (const auto& c : all_permutations(s.n())) {
        const Permutation z(c);
        long long value = 0;
        for (const auto& r : s.rows()) value = combine(value, oracle::distance(metric, z, r));
        if (best.value < 0 || value < best.value) best = {c, value};
    }
    return best;
}

}  // namespace

Best median(const PermutationSet& s, Metric metric) {
    return best_over_all(s, metric, [](long long acc, int d) { return acc + d; });
}

Best closest(const PermutationSet& s, Metric metric) {
    return best_over_all(s, metric, [](long long acc, int d) { return std::max<long long>(acc, d); });
}

PermutationSet random_instance(std::mt19937_64& rng, int n, int k, int walk) {
    std::vector<int> center(n);
    for (int i = 0; i < n; ++i) center[i] = i + 1;
    std::shuffle(center.begin(), center.end(), rng);
    std::vector<Permutation> rows;
    for (int r = 0; r < k; ++r) {
        auto row = center;
        for (int s = 0; s < walk && n > 1; ++s) {
            const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            std::swap(row[a], row[b]);
        }
        rows.emplace_back(std::move(row));
    }
    return PermutationSet(std::move(rows));
}

}  // namespace oracle
