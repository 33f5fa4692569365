#include "rearr/kernels.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rearr/errors.hpp"

namespace rearr {

std::string to_string(KernelDecision d) {
    switch (d) {
    case KernelDecision::No: return "no";
    case KernelDecision::YesWitness: return "yes";
    case KernelDecision::Reduced: return "reduced";
    case KernelDecision::Unresolved: return "unresolved";
    }
    return "?";
}

Permutation RelabelMap::lift(const Permutation& reduced, unsigned long long orientation) const {
    std::vector<int> flat;
    for (int t = 1; t <= reduced.size(); ++t) {
        const auto& strip = strips[reduced(t) - 1];
        if (orientable && (orientation >> (reduced(t) - 1) & 1ull))
            flat.insert(flat.end(), strip.rbegin(), strip.rend());
        else
            flat.insert(flat.end(), strip.begin(), strip.end());
    }
    std::vector<int> out(original_n, 0);
    for (auto [col, elem] : fixed_columns) out[col - 1] = elem;
    std::size_t next = 0;
    for (int c = 0; c < original_n; ++c)
        if (out[c] == 0) {
            if (next >= flat.size()) throw std::logic_error("relabel map does not cover the universe");
            out[c] = flat[next++];
        }
    return Permutation(std::move(out));
}

SizeBound kernel_size_bound(Metric metric, int d) {
    const long long D = d;
    switch (metric) {
    case Metric::Swap:
    case Metric::Breakpoint: return {2 * D, 4 * D * D + D};
    case Metric::BlockInterchange: return {8 * D, 16 * D * D + D};
    case Metric::Transposition: return {6 * D, 12 * D * D + D};
    case Metric::ShortBlockMove: return {18 * D * D + 9 * D + 1, 36 * D * D * D + 18 * D * D + 3 * D};
    }
    return {0, 0};
}

namespace {

using Row = std::vector<int>;

struct Working {
    std::vector<Row> rows;  // over labels 1..n'
    RelabelMap map;

    int n() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

Working start_working(const PermutationSet& s) {
    Working w;
    for (const auto& r : s.rows()) w.rows.push_back(r.vec());
    w.map.original_n = s.n();
    for (int v = 1; v <= s.n(); ++v) w.map.strips.push_back({v});
    return w;
}

// Drop label x from every row and renumber the labels above it.
void drop_label(Working& w, int x) {
    for (auto& r : w.rows) {
        r.erase(std::remove(r.begin(), r.end(), x), r.end());
        for (int& v : r)
            if (v > x) --v;
    }
    w.map.strips.erase(w.map.strips.begin() + (x - 1));
}

struct Verdict {
    KernelDecision decision;
    std::optional<Permutation> witness;
};

// ---------------------------------------------------------------------------
// Rules 1-3 and 5 in their column form (swap).

std::optional<RuleApplication> swap_column_rules(const Working& w, int d) {
    const int n = w.n();
    std::map<int, std::vector<int>> heavy_columns;  // element -> heavy columns
    std::vector<std::map<int, int>> counts(n);
    for (int c = 0; c < n; ++c)
        for (const auto& r : w.rows) ++counts[c][r[c]];
    for (int c = 0; c < n; ++c)
        if (static_cast<int>(counts[c].size()) > d + 1)
            return RuleApplication{"R1", "column " + std::to_string(c + 1) + " holds " +
                                             std::to_string(counts[c].size()) + " distinct elements > d+1"};
    for (int c = 0; c < n; ++c) {
        int frequent = 0;
        for (auto [x, cnt] : counts[c]) frequent += cnt >= d + 1;
        if (frequent >= 2)
            return RuleApplication{"R2", "column " + std::to_string(c + 1) + " has " + std::to_string(frequent) +
                                             " elements occurring at least d+1 times"};
    }
    for (int c = 0; c < n; ++c)
        for (auto [x, cnt] : counts[c])
            if (cnt > d) heavy_columns[x].push_back(c + 1);
    for (const auto& [x, cols] : heavy_columns)
        if (cols.size() >= 2)
            return RuleApplication{"R3", "element " + std::to_string(x) + " is heavy in columns " +
                                             std::to_string(cols[0]) + " and " + std::to_string(cols[1])};
    std::map<int, int> light;
    for (int c = 0; c < n; ++c)
        for (auto [x, cnt] : counts[c])
            if (cnt <= d) light[x] += cnt;
    for (auto [x, sum] : light)
        if (sum > 2 * d)
            return RuleApplication{"R5", "element " + std::to_string(x) + " has " + std::to_string(sum) +
                                             " light occurrences > 2d"};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rules 1-3 and 5 on oriented successors (block-interchange, transposition,
// sbm). Each row gives every element exactly one successor, so each
// disagreement with the solution's successor costs a distinct row.

std::optional<RuleApplication> successor_rules(const Working& w, int d) {
    const int n = w.n();
    // succ[x][y]: rows in which y follows x; 0 and n+1 are the sentinels.
    std::vector<std::map<int, int>> succ(n + 1);
    std::vector<std::map<int, int>> pred(n + 2);
    for (const auto& r : w.rows) {
        for (int i = 0; i <= n; ++i) {
            const int x = i == 0 ? 0 : r[i - 1];
            const int y = i == n ? n + 1 : r[i];
            ++succ[x][y];
            ++pred[y][x];
        }
    }
    for (int x = 0; x <= n; ++x)
        if (static_cast<int>(succ[x].size()) > d + 1)
            return RuleApplication{"R1", "element " + std::to_string(x) + " has " +
                                             std::to_string(succ[x].size()) + " distinct successors > d+1"};
    for (int x = 0; x <= n; ++x) {
        int frequent = 0;
        for (auto [y, cnt] : succ[x]) frequent += cnt >= d + 1;
        if (frequent >= 2)
            return RuleApplication{"R2", "element " + std::to_string(x) + " has " + std::to_string(frequent) +
                                             " successors occurring at least d+1 times"};
    }
    for (int y = 1; y <= n + 1; ++y) {
        int heavy = 0;
        for (auto [x, cnt] : pred[y]) heavy += cnt > d;
        if (heavy >= 2)
            return RuleApplication{"R3", "element " + std::to_string(y) + " is a heavy successor of " +
                                             std::to_string(heavy) + " elements"};
    }
    for (int x = 0; x <= n; ++x) {
        int sum = 0;
        for (auto [y, cnt] : succ[x])
            if (cnt <= d) sum += cnt;
        if (sum > 2 * d)
            return RuleApplication{"R5", "element " + std::to_string(x) + " has " + std::to_string(sum) +
                                             " light successor occurrences > 2d"};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Breakpoint rules on unordered adjacencies between strips. A solution gives
// every strip at most two neighbours, and every row adjacency to any other
// strip is a breakpoint of that row.

std::optional<RuleApplication> breakpoint_rules(const Working& w, int d) {
    const int n = w.n();
    std::vector<std::map<int, int>> nb(n + 1);
    for (const auto& r : w.rows)
        for (int i = 0; i + 1 < n; ++i) {
            ++nb[r[i]][r[i + 1]];
            ++nb[r[i + 1]][r[i]];
        }
    for (int x = 1; x <= n; ++x)
        if (static_cast<int>(nb[x].size()) > d + 2)
            return RuleApplication{"R1", "element " + std::to_string(x) + " has " + std::to_string(nb[x].size()) +
                                             " distinct neighbours > d+2"};
    for (int x = 1; x <= n; ++x) {
        int frequent = 0;
        for (auto [y, cnt] : nb[x]) frequent += cnt >= d + 1;
        if (frequent >= 3)
            return RuleApplication{"R2", "element " + std::to_string(x) + " has " + std::to_string(frequent) +
                                             " neighbours occurring at least d+1 times"};
    }
    // Heavy adjacencies all belong to the solution, which is a path.
    std::vector<int> parent(n + 1);
    for (int x = 0; x <= n; ++x) parent[x] = x;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 1; x <= n; ++x)
        for (auto [y, cnt] : nb[x])
            if (x < y && cnt > d) {
                const int a = find(x), b = find(y);
                if (a == b)
                    return RuleApplication{"R3", "heavy adjacencies close a cycle at {" + std::to_string(x) + "," +
                                                     std::to_string(y) + "}"};
                parent[a] = b;
            }
    for (int x = 1; x <= n; ++x) {
        int heavy = 0, light = 0;
        for (auto [y, cnt] : nb[x]) (cnt > d ? heavy : light) += cnt > d ? 1 : cnt;
        if (light > (3 - heavy) * d)
            return RuleApplication{"R5", "element " + std::to_string(x) + " has " + std::to_string(light) +
                                             " light adjacency occurrences > " + std::to_string(3 - heavy) + "d"};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rule 4: a row occurring at least d+1 times must be the solution.

std::vector<int> adjacency_key(const Permutation& p) {
    // Same key for p and its reverse.
    std::vector<int> fwd = p.vec(), rev(fwd.rbegin(), fwd.rend());
    return std::min(fwd, rev);
}

std::optional<Verdict> rule4(const PermutationSet& s, int d, Metric metric, const SearchLimits& limits,
                             std::vector<RuleApplication>& log) {
    std::map<std::vector<int>, std::pair<int, int>> occurrences;  // key -> (count, first row)
    for (int i = 0; i < s.k(); ++i) {
        auto key = metric == Metric::Breakpoint ? adjacency_key(s[i]) : s[i].vec();
        auto& [count, first] = occurrences.try_emplace(key, 0, i).first->second;
        ++count;
    }
    for (int i = 0; i < s.k(); ++i) {
        auto key = metric == Metric::Breakpoint ? adjacency_key(s[i]) : s[i].vec();
        const auto [count, first] = occurrences[key];
        if (first != i || count < d + 1) continue;
        const auto& candidate = s[first];
        try {
            DistanceOptions opts;
            opts.limits = limits;
            long long total = 0;
            for (const auto& r : s.rows()) total += distance(metric, candidate, r, opts);
            const std::string ev = "row " + std::to_string(first + 1) + " occurs " + std::to_string(count) +
                                   " times (threshold d+1 = " + std::to_string(d + 1) +
                                   "); its total distance is " + std::to_string(total);
            log.push_back({"R4", ev});
            if (total <= d) return Verdict{KernelDecision::YesWitness, candidate};
            return Verdict{KernelDecision::No, std::nullopt};
        } catch (const SearchBudgetExceeded& e) {
            log.push_back({"R4", "row " + std::to_string(first + 1) + " candidate unresolved: " + e.what()});
            return Verdict{KernelDecision::Unresolved, std::nullopt};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rule 6 variants. Each returns the number of eliminated elements.

int remove_homogeneous_columns(Working& w, std::vector<int>& column_origin, std::vector<RuleApplication>& log) {
    int removed = 0;
    for (int c = w.n(); c >= 1; --c) {
        const int x = w.rows.front()[c - 1];
        bool homogeneous = std::all_of(w.rows.begin(), w.rows.end(), [&](const Row& r) { return r[c - 1] == x; });
        if (!homogeneous) continue;
        const int original_col = column_origin[c - 1];
        const int original_elem = w.map.strips[x - 1].front();
        w.map.fixed_columns.push_back({original_col, original_elem});
        column_origin.erase(column_origin.begin() + (c - 1));
        drop_label(w, x);
        ++removed;
    }
    if (removed) {
        std::sort(w.map.fixed_columns.begin(), w.map.fixed_columns.end());
        log.push_back({"R6", "removed " + std::to_string(removed) + " homogeneous columns"});
    }
    return removed;
}

// Contract x -> y when y follows x in every row.
int contract_oriented(Working& w, std::vector<RuleApplication>& log) {
    int merged = 0;
    while (true) {
        const int n = w.n();
        int found = 0;
        for (int x = 1; x <= n && !found; ++x) {
            int y = -1;
            bool universal = true;
            for (const auto& r : w.rows) {
                const int p = static_cast<int>(std::find(r.begin(), r.end(), x) - r.begin());
                const int next = p + 1 < n ? r[p + 1] : 0;
                if (y == -1) y = next;
                if (next == 0 || next != y) {
                    universal = false;
                    break;
                }
            }
            if (universal) {
                auto& strip = w.map.strips[x - 1];
                const auto& tail = w.map.strips[y - 1];
                strip.insert(strip.end(), tail.begin(), tail.end());
                drop_label(w, y);
                found = 1;
            }
        }
        if (!found) break;
        ++merged;
    }
    if (merged) log.push_back({"R6", "contracted " + std::to_string(merged) + " universal adjacencies"});
    return merged;
}

// Contract every unordered adjacency shared by all rows into strips; the
// strips lose their orientation, so the reduced instance is scored by lifting.
int contract_unordered(Working& w, const PermutationSet& original, std::vector<RuleApplication>& log) {
    const int n = original.n();
    std::map<std::pair<int, int>, int> count;
    for (const auto& r : original.rows())
        for (int i = 1; i < n; ++i) ++count[std::minmax(r(i), r(i + 1))];
    std::vector<std::vector<int>> link(n + 1);
    int universal = 0;
    for (auto [pair, cnt] : count)
        if (cnt == original.k()) {
            link[pair.first].push_back(pair.second);
            link[pair.second].push_back(pair.first);
            ++universal;
        }
    if (!universal) return 0;
    // Strips are paths in the universal-adjacency graph, read off row 1.
    const auto& r0 = original[0];
    std::vector<int> strip_of(n + 1, 0);
    std::vector<std::vector<int>> strips;
    for (int i = 1; i <= n; ++i) {
        const int v = r0(i);
        const bool joins_prev = i > 1 && std::count(link[v].begin(), link[v].end(), r0(i - 1));
        if (!joins_prev) strips.emplace_back();
        strips.back().push_back(v);
    }
    // Label strips by smallest original element for a stable universe.
    std::sort(strips.begin(), strips.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    for (std::size_t s = 0; s < strips.size(); ++s)
        for (int v : strips[s]) strip_of[v] = static_cast<int>(s) + 1;
    w.rows.clear();
    for (const auto& r : original.rows()) {
        Row row;
        for (int i = 1; i <= n; ++i)
            if (i == 1 || strip_of[r(i)] != strip_of[r(i - 1)]) row.push_back(strip_of[r(i)]);
        w.rows.push_back(std::move(row));
    }
    w.map.strips = std::move(strips);
    w.map.orientable = true;
    log.push_back({"R6", "contracted " + std::to_string(universal) + " universal adjacencies into strips"});
    return universal;
}

// Interval rule: in every run of at least 6d+2 homogeneous columns delete the
// (3d+1)th column until the run is 6d+1 long.
int shrink_homogeneous_runs(Working& w, std::vector<int>& column_origin, int d, std::vector<RuleApplication>& log) {
    int removed = 0;
    while (true) {
        const int n = w.n();
        int run_start = -1, target = -1;
        for (int c = 0; c <= n && target < 0; ++c) {
            bool homogeneous = c < n && std::all_of(w.rows.begin(), w.rows.end(),
                                                    [&](const Row& r) { return r[c] == w.rows.front()[c]; });
            if (homogeneous) {
                if (run_start < 0) run_start = c;
            } else {
                if (run_start >= 0 && c - run_start >= 6 * d + 2) target = run_start + 3 * d;
                run_start = -1;
            }
        }
        if (target < 0) break;
        const int x = w.rows.front()[target];
        w.map.fixed_columns.push_back({column_origin[target], w.map.strips[x - 1].front()});
        column_origin.erase(column_origin.begin() + target);
        drop_label(w, x);
        ++removed;
    }
    if (removed) {
        std::sort(w.map.fixed_columns.begin(), w.map.fixed_columns.end());
        log.push_back({"interval", "deleted " + std::to_string(removed) + " middle homogeneous columns"});
    }
    return removed;
}

long long heterogeneous_columns(const Working& w) {
    long long count = 0;
    for (int c = 0; c < w.n(); ++c)
        count += !std::all_of(w.rows.begin(), w.rows.end(),
                              [&](const Row& r) { return r[c] == w.rows.front()[c]; });
    return count;
}

KernelOutcome run_kernel(Metric metric, const PermutationSet& s, int d, const SearchLimits& limits) {
    if (d < 0) throw InvalidBudget(d);
    KernelOutcome out;
    out.bound = kernel_size_bound(metric, d);
    out.reduced_d = d;
    auto& log = out.applied_rules;
    Working w = start_working(s);
    std::vector<int> column_origin(s.n());
    for (int c = 0; c < s.n(); ++c) column_origin[c] = c + 1;

    auto rules_1_to_5 = [&]() -> std::optional<RuleApplication> {
        switch (metric) {
        case Metric::Swap: return swap_column_rules(w, d);
        case Metric::Breakpoint: return breakpoint_rules(w, d);
        default: return successor_rules(w, d);
        }
    };
    auto finish = [&](KernelDecision decision, std::optional<Permutation> witness) {
        out.decision = decision;
        out.witness = std::move(witness);
        // A decided instance leaves nothing to solve.
        if (decision == KernelDecision::Reduced) {
            std::vector<Permutation> rows;
            for (const auto& r : w.rows) rows.emplace_back(r);
            out.reduced = PermutationSet(std::move(rows));
        }
        out.relabel_map = w.map;
        return out;
    };

    if (auto verdict = rule4(s, d, metric, limits, log)) return finish(verdict->decision, verdict->witness);

    bool first_pass = true;
    while (true) {
        if (auto hit = rules_1_to_5()) {
            log.push_back(*hit);
            return finish(KernelDecision::No, std::nullopt);
        }
        if (!first_pass) break;
        first_pass = false;
        int changed = 0;
        switch (metric) {
        case Metric::Swap: changed = remove_homogeneous_columns(w, column_origin, log); break;
        case Metric::Breakpoint: changed = contract_unordered(w, s, log); break;
        case Metric::BlockInterchange:
        case Metric::Transposition: changed = contract_oriented(w, log); break;
        case Metric::ShortBlockMove: {
            const long long het = heterogeneous_columns(w);
            if (het > 3LL * d) {
                log.push_back({"heterogeneous", std::to_string(het) + " heterogeneous columns > 3d"});
                return finish(KernelDecision::No, std::nullopt);
            }
            changed = shrink_homogeneous_runs(w, column_origin, d, log);
            break;
        }
        }
        if (!changed) break;
    }

    if (w.n() == 0) {
        // Everything was forced; the lifted empty permutation is the solution.
        Permutation lifted = w.map.lift(Permutation());
        DistanceOptions opts;
        opts.limits = limits;
        long long total = 0;
        for (const auto& r : s.rows()) total += distance(metric, lifted, r, opts);
        log.push_back({"empty", "reduced universe is empty; lifted total " + std::to_string(total)});
        return finish(total <= d ? KernelDecision::YesWitness : KernelDecision::No,
                      total <= d ? std::optional<Permutation>(lifted) : std::nullopt);
    }
    if (w.n() > out.bound.columns || static_cast<long long>(w.rows.size()) > out.bound.rows) {
        log.push_back({"size-bound", std::to_string(w.n()) + " columns x " + std::to_string(w.rows.size()) +
                                         " rows exceeds " + std::to_string(out.bound.columns) + " x " +
                                         std::to_string(out.bound.rows)});
        return finish(KernelDecision::No, std::nullopt);
    }
    return finish(KernelDecision::Reduced, std::nullopt);
}

}  // namespace

KernelOutcome kernelize_swap_median(const PermutationSet& s, int d, const SearchLimits& limits) {
    return run_kernel(Metric::Swap, s, d, limits);
}
KernelOutcome kernelize_breakpoint_median(const PermutationSet& s, int d, const SearchLimits& limits) {
    return run_kernel(Metric::Breakpoint, s, d, limits);
}
KernelOutcome kernelize_bi_median(const PermutationSet& s, int d, const SearchLimits& limits) {
    return run_kernel(Metric::BlockInterchange, s, d, limits);
}
KernelOutcome kernelize_transposition_median(const PermutationSet& s, int d, const SearchLimits& limits) {
    return run_kernel(Metric::Transposition, s, d, limits);
}
KernelOutcome kernelize_sbm_median(const PermutationSet& s, int d, const SearchLimits& limits) {
    return run_kernel(Metric::ShortBlockMove, s, d, limits);
}
KernelOutcome kernelize_median(Metric metric, const PermutationSet& s, int d, const SearchLimits& limits) {
    return run_kernel(metric, s, d, limits);
}

}  // namespace rearr
