#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rearr/permutation.hpp"

namespace rearr {

enum class Metric { Breakpoint, Swap, BlockInterchange, Transposition, ShortBlockMove };

inline constexpr Metric kAllMetrics[] = {Metric::Breakpoint, Metric::Swap, Metric::BlockInterchange,
                                         Metric::Transposition, Metric::ShortBlockMove};

// "bp", "swap", "bi", "transposition", "sbm".
std::string to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

// Exchange positions i < j.
struct SwapMove {
    int i, j;
    bool operator==(const SwapMove&) const = default;
};

// t(i,j,k): blocks [i..j-1] and [j..k-1] trade places, 1 <= i < j < k <= n+1.
struct BlockMove {
    int i, j, k;
    bool operator==(const BlockMove&) const = default;
};

// Blocks [a..b] and [c..d] trade places, a <= b < c <= d.
struct BlockInterchangeMove {
    int a, b, c, d;
    bool operator==(const BlockInterchangeMove&) const = default;
};

struct Move {
    Metric metric;
    std::variant<SwapMove, BlockMove, BlockInterchangeMove> op;

    static Move swap(int i, int j) { return {Metric::Swap, SwapMove{i, j}}; }
    static Move transposition(int i, int j, int k) { return {Metric::Transposition, BlockMove{i, j, k}}; }
    static Move sbm(int i, int j, int k) { return {Metric::ShortBlockMove, BlockMove{i, j, k}}; }
    static Move block_interchange(int a, int b, int c, int d) {
        return {Metric::BlockInterchange, BlockInterchangeMove{a, b, c, d}};
    }

    std::string to_string() const;
    bool operator==(const Move&) const = default;
};

struct MoveSequence {
    Permutation start;
    std::vector<Move> moves;

    // Apply all moves; throws IndexOutOfRange on a bad move.
    Permutation finish() const;
};

struct SearchLimits {
    int max_length = 10;
    std::uint64_t node_budget = 20'000'000;
};

struct DistanceOptions {
    SearchLimits limits;
    // Count the boundary pairs {0,pi_1} and {pi_n,n+1} as adjacencies too.
    bool breakpoint_boundary = false;
};

int breakpoint_distance(const Permutation& pi, const Permutation& sigma, bool include_boundary = false);
int swap_distance(const Permutation& pi, const Permutation& sigma);
int block_interchange_distance(const Permutation& pi, const Permutation& sigma);
int transposition_lower_bound(const Permutation& pi, const Permutation& sigma);
int transposition_distance_exact(const Permutation& pi, const Permutation& sigma,
                                 const SearchLimits& limits = {});
bool is_hurdle_free(const Permutation& pi, const SearchLimits& limits = {});

struct SbmBounds {
    int lower;
    int upper;
    bool operator==(const SbmBounds&) const = default;
};

SbmBounds sbm_bounds(const Permutation& pi);
// max_length caps the component length rather than n.
int sbm_distance_exact(const Permutation& pi, const Permutation& sigma, const SearchLimits& limits = {});

int distance(Metric metric, const Permutation& pi, const Permutation& sigma, const DistanceOptions& opts = {});

std::vector<Move> enumerate_moves(Metric metric, const Permutation& pi);
Permutation apply_move(const Permutation& pi, const Move& m);

// Sbm move classification with respect to sorting towards the identity.
bool is_sbm(const BlockMove& m);
bool is_correcting(const Permutation& before, const BlockMove& m);
// True when m crosses two elements lying in different components of before.
bool is_merging(const Permutation& before, const BlockMove& m);

MoveSequence normalize_to_correcting(const MoveSequence& seq);

}  // namespace rearr
