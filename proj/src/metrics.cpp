#include "rearr/metrics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "rearr/diagrams.hpp"
#include "rearr/errors.hpp"

namespace rearr {

std::string to_string(Metric m) {
    switch (m) {
    case Metric::Breakpoint: return "bp";
    case Metric::Swap: return "swap";
    case Metric::BlockInterchange: return "bi";
    case Metric::Transposition: return "transposition";
    case Metric::ShortBlockMove: return "sbm";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view name) {
    for (Metric m : kAllMetrics)
        if (to_string(m) == name) return m;
    return std::nullopt;
}

std::string Move::to_string() const {
    return std::visit(
        [](const auto& op) -> std::string {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, SwapMove>)
                return "swap(" + std::to_string(op.i) + "," + std::to_string(op.j) + ")";
            else if constexpr (std::is_same_v<T, BlockMove>)
                return "t(" + std::to_string(op.i) + "," + std::to_string(op.j) + "," + std::to_string(op.k) + ")";
            else
                return "bi([" + std::to_string(op.a) + ".." + std::to_string(op.b) + "],[" +
                       std::to_string(op.c) + ".." + std::to_string(op.d) + "])";
        },
        op);
}

Permutation MoveSequence::finish() const {
    Permutation p = start;
    for (const auto& m : moves) p = apply_move(p, m);
    return p;
}

// ---------------------------------------------------------------------------
// Moves

namespace {

using State = std::vector<int>;

void apply_block_move(State& s, int i, int j, int k) {
    std::rotate(s.begin() + (i - 1), s.begin() + (j - 1), s.begin() + (k - 1));
}

void apply_bi(State& s, int a, int b, int c, int d) {
    State out;
    out.reserve(s.size());
    out.insert(out.end(), s.begin(), s.begin() + (a - 1));
    out.insert(out.end(), s.begin() + (c - 1), s.begin() + d);
    out.insert(out.end(), s.begin() + b, s.begin() + (c - 1));
    out.insert(out.end(), s.begin() + (a - 1), s.begin() + b);
    out.insert(out.end(), s.begin() + d, s.end());
    s = std::move(out);
}

[[noreturn]] void out_of_range(const Move& m, int n) {
    throw IndexOutOfRange("move " + m.to_string() + " out of range for n=" + std::to_string(n));
}

int inversions(const State& s) {
    int c = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) c += s[a] > s[b];
    return c;
}

}  // namespace

bool is_sbm(const BlockMove& m) { return m.i < m.j && m.j < m.k && m.k - m.i <= 3; }

Permutation apply_move(const Permutation& pi, const Move& m) {
    const int n = pi.size();
    State s = pi.vec();
    std::visit(
        [&](const auto& op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, SwapMove>) {
                if (!(1 <= op.i && op.i < op.j && op.j <= n)) out_of_range(m, n);
                std::swap(s[op.i - 1], s[op.j - 1]);
            } else if constexpr (std::is_same_v<T, BlockMove>) {
                if (!(1 <= op.i && op.i < op.j && op.j < op.k && op.k <= n + 1)) out_of_range(m, n);
                if (m.metric == Metric::ShortBlockMove && !is_sbm(op)) out_of_range(m, n);
                apply_block_move(s, op.i, op.j, op.k);
            } else {
                if (!(1 <= op.a && op.a <= op.b && op.b < op.c && op.c <= op.d && op.d <= n)) out_of_range(m, n);
                apply_bi(s, op.a, op.b, op.c, op.d);
            }
        },
        m.op);
    return Permutation(std::move(s));
}

std::vector<Move> enumerate_moves(Metric metric, const Permutation& pi) {
    const int n = pi.size();
    std::vector<Move> out;
    switch (metric) {
    case Metric::Breakpoint: throw NoMoveSet();
    case Metric::Swap:
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out.push_back(Move::swap(i, j));
        break;
    case Metric::Transposition:
    case Metric::ShortBlockMove:
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n + 1; ++k) {
                    if (metric == Metric::ShortBlockMove && k - i > 3) break;
                    out.push_back({metric, BlockMove{i, j, k}});
                }
        break;
    case Metric::BlockInterchange:
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    for (int d = c; d <= n; ++d) out.push_back(Move::block_interchange(a, b, c, d));
        break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form metrics

int breakpoint_distance(const Permutation& pi, const Permutation& sigma, bool include_boundary) {
    if (pi.size() != sigma.size()) throw LengthMismatch(pi.size(), sigma.size());
    const int n = pi.size();
    // Unordered pair {a,b} is an adjacency of sigma iff their positions differ by one.
    const auto pos = sigma.positions();
    auto adjacent_in_sigma = [&](int a, int b) {
        int pa = (a == 0) ? 0 : pos[a];
        int pb = (b == 0) ? 0 : pos[b];
        return std::abs(pa - pb) == 1;
    };
    int lo = include_boundary ? 0 : 1;
    int hi = include_boundary ? n : n - 1;
    int count = 0;
    for (int i = lo; i <= hi; ++i)
        if (!adjacent_in_sigma(pi(i), pi(i + 1))) ++count;
    return count;
}

int swap_distance(const Permutation& pi, const Permutation& sigma) {
    const auto x = relabel_pair(pi, sigma);
    return x.size() - static_cast<int>(algebraic_cycles(x).cycles.size());
}

int block_interchange_distance(const Permutation& pi, const Permutation& sigma) {
    const auto cycles = rd_cycle_lengths(pi, sigma);
    return (pi.size() + 1 - static_cast<int>(cycles.size())) / 2;
}

int transposition_lower_bound(const Permutation& pi, const Permutation& sigma) {
    const auto cycles = rd_cycle_lengths(pi, sigma);
    int odd = 0;
    for (int c : cycles) odd += c % 2;
    const int gap = pi.size() + 1 - odd;
    if (gap % 2 != 0) throw std::logic_error("odd-cycle parity violated");
    return gap / 2;
}

SbmBounds sbm_bounds(const Permutation& pi) {
    const int inv = inversion_count(pi);
    return {(inv + 1) / 2, inv};
}

// ---------------------------------------------------------------------------
// Exact transposition distance

namespace {

struct VectorHash {
    std::size_t operator()(const State& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};

// Admissible bound for sorting s by transpositions: max of the odd-cycle
// bound and a third of the breakpoints.
int transposition_heuristic(const State& s, std::vector<int>& pos, std::vector<char>& seen) {
    const int n = static_cast<int>(s.size());
    auto at = [&](int i) { return i <= 0 ? 0 : (i > n ? n + 1 : s[i - 1]); };
    pos.assign(n + 2, 0);
    for (int i = 1; i <= n; ++i) pos[s[i - 1]] = i;
    pos[n + 1] = n + 1;
    seen.assign(n + 1, 0);
    int odd = 0, breakpoints = 0;
    for (int g = 0; g <= n; ++g) breakpoints += at(g + 1) != at(g) + 1;
    for (int start = 0; start <= n; ++start) {
        if (seen[start]) continue;
        int len = 0, g = start;
        do {
            seen[g] = 1;
            ++len;
            const int u = at(g + 1) - 1;
            g = u == 0 ? 0 : pos[u];
        } while (g != start);
        odd += len % 2;
    }
    return std::max((n + 1 - odd) / 2, (breakpoints + 2) / 3);
}

class TranspositionSearch {
public:
    TranspositionSearch(std::uint64_t budget) : budget_(budget) {}

    int solve(const State& root) {
        int bound = heuristic(root);
        while (true) {
            next_bound_ = std::numeric_limits<int>::max();
            visited_.clear();
            State s = root;
            if (dfs(s, 0, bound)) return bound;
            bound = next_bound_;
        }
    }

private:
    int heuristic(const State& s) { return transposition_heuristic(s, pos_, seen_); }

    bool dfs(State& s, int g, int bound) {
        const int h = heuristic(s);
        if (g + h > bound) {
            next_bound_ = std::min(next_bound_, g + h);
            return false;
        }
        if (h == 0) return true;
        if (++nodes_ > budget_)
            throw SearchBudgetExceeded("transposition search exceeded " + std::to_string(budget_) + " nodes");
        auto [it, inserted] = visited_.try_emplace(s, g);
        if (!inserted) {
            if (it->second <= g) return false;
            it->second = g;
        }
        // Optimal sorting never needs to cut an adjacency, so cuts are
        // restricted to breakpoint gaps.
        const int n = static_cast<int>(s.size());
        std::vector<int> cuts;
        for (int gap = 0; gap <= n; ++gap) {
            const int left = gap == 0 ? 0 : s[gap - 1];
            const int right = gap == n ? n + 1 : s[gap];
            if (right != left + 1) cuts.push_back(gap);
        }
        const int c = static_cast<int>(cuts.size());
        for (int x = 0; x < c; ++x)
            for (int y = x + 1; y < c; ++y)
                for (int z = y + 1; z < c; ++z) {
                    const int i = cuts[x] + 1, j = cuts[y] + 1, k = cuts[z] + 1;
                    apply_block_move(s, i, j, k);
                    const bool found = dfs(s, g + 1, bound);
                    // Undo: the inverse of t(i,j,k) is t(i,i+k-j,k).
                    apply_block_move(s, i, i + k - j, k);
                    if (found) return true;
                }
        return false;
    }

    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int next_bound_ = 0;
    std::unordered_map<State, int, VectorHash> visited_;
    std::vector<int> pos_;
    std::vector<char> seen_;
};

std::mutex g_transposition_mutex;
std::unordered_map<State, int, VectorHash> g_transposition_memo;

}  // namespace

int transposition_distance_exact(const Permutation& pi, const Permutation& sigma, const SearchLimits& limits) {
    const auto x = relabel_pair(pi, sigma);
    if (x.size() > limits.max_length)
        throw SearchBudgetExceeded("transposition search capped at n=" + std::to_string(limits.max_length) +
                                   ", got n=" + std::to_string(x.size()));
    // Gluing adjacencies preserves the transposition distance.
    const State key = reduce_glue(x).vec();
    if (key.empty()) return 0;
    {
        std::lock_guard lock(g_transposition_mutex);
        if (auto it = g_transposition_memo.find(key); it != g_transposition_memo.end()) return it->second;
    }
    const int d = TranspositionSearch(limits.node_budget).solve(key);
    std::lock_guard lock(g_transposition_mutex);
    g_transposition_memo.emplace(key, d);
    return d;
}

bool is_hurdle_free(const Permutation& pi, const SearchLimits& limits) {
    const auto id = Permutation::identity(std::max(1, pi.size()));
    if (pi.empty()) return true;
    return transposition_distance_exact(pi, id, limits) == transposition_lower_bound(pi, id);
}

// ---------------------------------------------------------------------------
// Exact short-block-move distance

namespace {

std::mutex g_sbm_mutex;
std::unordered_map<State, int, VectorHash> g_sbm_memo;

// Relative order of s, as a permutation of 1..|s|.
State pattern_of(const State& s) {
    State sorted = s;
    std::sort(sorted.begin(), sorted.end());
    State out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin()) + 1;
    return out;
}

// Correcting moves of s towards the identity: hops first, then skips.
std::vector<BlockMove> correcting_moves(const State& s) {
    std::vector<BlockMove> out;
    const int n = static_cast<int>(s.size());
    for (int p = 0; p + 2 < n; ++p) {
        const int a = s[p], b = s[p + 1], c = s[p + 2];
        if (a > b && a > c) out.push_back({p + 1, p + 2, p + 4});
        if (c < a && c < b) out.push_back({p + 1, p + 3, p + 4});
    }
    for (int p = 0; p + 1 < n; ++p)
        if (s[p] > s[p + 1]) out.push_back({p + 1, p + 2, p + 3});
    return out;
}

class SbmSearch {
public:
    SbmSearch(const SearchLimits& limits) : limits_(limits) {}

    // Distance of an arbitrary state, summing over its components.
    int state_distance(const State& s) {
        int total = 0, start = 0, prefix_max = 0;
        const int n = static_cast<int>(s.size());
        for (int i = 0; i < n; ++i) {
            prefix_max = std::max(prefix_max, s[i]);
            if (prefix_max == i + 1) {
                if (i > start) total += component_distance(pattern_of(State(s.begin() + start, s.begin() + i + 1)));
                start = i + 1;
            }
        }
        return total;
    }

private:
    int component_distance(const State& p) {
        {
            std::lock_guard lock(g_sbm_mutex);
            if (auto it = g_sbm_memo.find(p); it != g_sbm_memo.end()) return it->second;
        }
        if (static_cast<int>(p.size()) > limits_.max_length)
            throw SearchBudgetExceeded("sbm component of length " + std::to_string(p.size()) +
                                       " exceeds cap " + std::to_string(limits_.max_length));
        if (++nodes_ > limits_.node_budget)
            throw SearchBudgetExceeded("sbm search exceeded " + std::to_string(limits_.node_budget) + " nodes");
        const int inv = inversions(p);
        const int lower = (inv + 1) / 2;
        int best = inv;
        for (const auto& m : correcting_moves(p)) {
            State child = p;
            apply_block_move(child, m.i, m.j, m.k);
            const int child_inv = inv - (m.k - m.i - 1);
            if (1 + (child_inv + 1) / 2 >= best) continue;
            best = std::min(best, 1 + state_distance(child));
            if (best == lower) break;
        }
        std::lock_guard lock(g_sbm_mutex);
        g_sbm_memo.emplace(p, best);
        return best;
    }

    SearchLimits limits_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

int sbm_distance_exact(const Permutation& pi, const Permutation& sigma, const SearchLimits& limits) {
    const auto x = relabel_pair(pi, sigma);
    return SbmSearch(limits).state_distance(x.vec());
}

int distance(Metric metric, const Permutation& pi, const Permutation& sigma, const DistanceOptions& opts) {
    if (pi.size() != sigma.size()) throw LengthMismatch(pi.size(), sigma.size());
    if (pi.empty()) return 0;
    switch (metric) {
    case Metric::Breakpoint: return breakpoint_distance(pi, sigma, opts.breakpoint_boundary);
    case Metric::Swap: return swap_distance(pi, sigma);
    case Metric::BlockInterchange: return block_interchange_distance(pi, sigma);
    case Metric::Transposition: return transposition_distance_exact(pi, sigma, opts.limits);
    case Metric::ShortBlockMove: return sbm_distance_exact(pi, sigma, opts.limits);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Correcting-move normalization

namespace {

// Pairs of values crossed by t(i,j,k) applied to s, as (earlier, later) in s.
std::vector<std::pair<int, int>> crossed_pairs(const State& s, const BlockMove& m) {
    std::vector<std::pair<int, int>> out;
    for (int a = m.i; a < m.j; ++a)
        for (int b = m.j; b < m.k; ++b) out.push_back({s[a - 1], s[b - 1]});
    return out;
}

State swap_values(State s, int e, int f) {
    for (int& v : s) {
        if (v == e) v = f;
        else if (v == f) v = e;
    }
    return s;
}

// A single sbm (or nothing) taking from to to; they must differ in at most
// three consecutive positions.
std::optional<std::optional<BlockMove>> bridge(const State& from, const State& to) {
    if (from == to) return std::optional<BlockMove>{};
    const int n = static_cast<int>(from.size());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= std::min(n + 1, i + 3); ++k) {
                State s = from;
                apply_block_move(s, i, j, k);
                if (s == to) return std::optional<BlockMove>{BlockMove{i, j, k}};
            }
    return std::nullopt;
}

}  // namespace

bool is_correcting(const Permutation& before, const BlockMove& m) {
    if (!is_sbm(m) || m.k > before.size() + 1) return false;
    for (auto [x, y] : crossed_pairs(before.vec(), m))
        if (x < y) return false;
    return true;
}

bool is_merging(const Permutation& before, const BlockMove& m) {
    std::vector<int> comp(before.size() + 1, 0);
    int id = 0;
    for (const auto& iv : components(before).intervals) {
        for (int p = iv.first; p <= iv.last; ++p) comp[p] = id;
        ++id;
    }
    for (int a = m.i; a < m.j; ++a)
        for (int b = m.j; b < m.k; ++b)
            if (comp[a] != comp[b]) return true;
    return false;
}

MoveSequence normalize_to_correcting(const MoveSequence& seq) {
    std::vector<BlockMove> moves;
    for (const auto& m : seq.moves) {
        const auto* bm = std::get_if<BlockMove>(&m.op);
        if (!bm || !is_sbm(*bm)) throw InvalidSequence("not a short-block-move: " + m.to_string());
        moves.push_back(*bm);
    }
    auto states_of = [&](const std::vector<BlockMove>& ms) {
        std::vector<State> st{seq.start.vec()};
        for (const auto& m : ms) {
            if (m.k > static_cast<int>(st.back().size()) + 1)
                throw InvalidSequence("move t(" + std::to_string(m.i) + "," + std::to_string(m.j) + "," +
                                      std::to_string(m.k) + ") out of range");
            State s = st.back();
            apply_block_move(s, m.i, m.j, m.k);
            st.push_back(std::move(s));
        }
        return st;
    };
    auto states = states_of(moves);
    if (!Permutation(states.back()).is_identity()) throw InvalidSequence("sequence does not sort its start");

    while (true) {
        std::size_t t = 0;
        std::pair<int, int> ef{0, 0};
        for (; t < moves.size(); ++t) {
            bool found = false;
            for (auto [x, y] : crossed_pairs(states[t], moves[t]))
                if (x < y) {
                    ef = {x, y};
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (t == moves.size()) break;
        const auto [e, f] = ef;
        // First later state where e is back in front of f; it exists since the
        // sequence ends sorted.
        auto e_first = [&](const State& s) {
            return std::find(s.begin(), s.end(), e) < std::find(s.begin(), s.end(), f);
        };
        std::size_t back = t + 1;
        while (!e_first(states[back + 1])) ++back;

        std::vector<BlockMove> rebuilt(moves.begin(), moves.begin() + t);
        auto head = bridge(states[t], swap_values(states[t + 1], e, f));
        auto tail = bridge(swap_values(states[back], e, f), states[back + 1]);
        if (!head || !tail) throw std::logic_error("sbm replacement case not covered");
        if (*head) rebuilt.push_back(**head);
        rebuilt.insert(rebuilt.end(), moves.begin() + t + 1, moves.begin() + back);
        if (*tail) rebuilt.push_back(**tail);
        rebuilt.insert(rebuilt.end(), moves.begin() + back + 1, moves.end());
        moves = std::move(rebuilt);
        states = states_of(moves);
    }

    MoveSequence out{seq.start, {}};
    for (const auto& m : moves) out.moves.push_back(Move::sbm(m.i, m.j, m.k));
    return out;
}

}  // namespace rearr
