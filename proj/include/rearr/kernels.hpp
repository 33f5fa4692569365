#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rearr/metrics.hpp"
#include "rearr/permutation.hpp"

namespace rearr {

// Maps a reduced instance back to the original universe. Each reduced
// element stands for a strip of original elements; column-deleting rules
// record the deleted (column, element) pairs, which every lifted solution
// keeps fixed.
struct RelabelMap {
    int original_n = 0;
    std::vector<std::vector<int>> strips;            // strips[v-1] for reduced element v
    std::vector<std::pair<int, int>> fixed_columns;  // (original column, original element)
    // Breakpoint strips may appear in either orientation in a solution.
    bool orientable = false;

    // Lift a reduced permutation; orientation bit v-1 reverses strip v.
    Permutation lift(const Permutation& reduced, unsigned long long orientation = 0) const;
};

struct RuleApplication {
    std::string rule;
    std::string evidence;
    bool operator==(const RuleApplication&) const = default;
};

enum class KernelDecision { No, YesWitness, Reduced, Unresolved };

struct SizeBound {
    long long columns;
    long long rows;
};

struct KernelOutcome {
    KernelDecision decision = KernelDecision::Reduced;
    std::optional<Permutation> witness;
    PermutationSet reduced;  // empty unless decision is Reduced
    int reduced_d = 0;
    RelabelMap relabel_map;
    SizeBound bound{0, 0};
    std::vector<RuleApplication> applied_rules;
};

std::string to_string(KernelDecision d);

SizeBound kernel_size_bound(Metric metric, int d);

KernelOutcome kernelize_swap_median(const PermutationSet& s, int d, const SearchLimits& limits = {});
KernelOutcome kernelize_breakpoint_median(const PermutationSet& s, int d, const SearchLimits& limits = {});
KernelOutcome kernelize_bi_median(const PermutationSet& s, int d, const SearchLimits& limits = {});
KernelOutcome kernelize_transposition_median(const PermutationSet& s, int d, const SearchLimits& limits = {});
KernelOutcome kernelize_sbm_median(const PermutationSet& s, int d, const SearchLimits& limits = {});
KernelOutcome kernelize_median(Metric metric, const PermutationSet& s, int d, const SearchLimits& limits = {});

}  // namespace rearr
