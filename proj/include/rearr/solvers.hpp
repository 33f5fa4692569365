#pragma once

#include <cstdint>
#include <optional>

#include "rearr/kernels.hpp"
#include "rearr/metrics.hpp"
#include "rearr/permutation.hpp"

namespace rearr {

struct MedianResult {
    Permutation witness;
    long long total = 0;
    bool optimal = false;
};

struct ClosestResult {
    Permutation witness;
    int radius = 0;
    bool optimal = false;
};

inline constexpr int kBruteForceCap = 8;

long long total_distance(Metric metric, const Permutation& z, const PermutationSet& s, const DistanceOptions& opts = {});
int radius(Metric metric, const Permutation& z, const PermutationSet& s, const DistanceOptions& opts = {});

// Exhaustive over all n! candidates in lexicographic order; the first optimum
// wins ties. Throws SearchBudgetExceeded for n > kBruteForceCap.
MedianResult median_brute_force(const PermutationSet& s, Metric metric, const DistanceOptions& opts = {});
ClosestResult closest_brute_force(const PermutationSet& s, Metric metric, const DistanceOptions& opts = {});

struct FptOptions {
    DistanceOptions distance;
    std::uint64_t node_budget = 50'000'000;
};

struct FptResult {
    std::optional<Permutation> witness;
    // Expanded search-tree nodes. A child is expanded only when every row is
    // within (remaining budget + d) of it.
    std::uint64_t nodes = 0;
};

// Bounded search tree for d-Closest under Swap, ShortBlockMove and
// BlockInterchange. Throws UnsupportedMetric otherwise.
FptResult closest_fpt(const PermutationSet& s, int d, Metric metric, const FptOptions& opts = {});

struct KernelMedianDecision {
    bool yes = false;
    std::optional<Permutation> witness;
    long long total = 0;  // of the witness, when yes
    KernelOutcome kernel;
};

// Kernelize, then solve the reduced instance by enumerating its candidates and
// scoring their lifts against the original rows.
KernelMedianDecision median_with_kernel(const PermutationSet& s, int d, Metric metric,
                                        const DistanceOptions& opts = {});

}  // namespace rearr
