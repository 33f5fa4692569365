#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "rearr/permutation.hpp"

namespace rearr {

class BinaryString {
public:
    explicit BinaryString(std::string_view bits);
    static std::vector<BinaryString> parse_lines(std::string_view text);

    int size() const { return static_cast<int>(bits_.size()); }
    bool operator[](int i) const { return bits_[i] == '1'; }
    const std::string& str() const { return bits_; }
    bool operator==(const BinaryString&) const = default;

private:
    std::string bits_;
};

int hamming_distance(const BinaryString& s, const BinaryString& t);

// Pair (2i-1, 2i) stays in place for bit 0 and is reversed for bit 1.
Permutation permut_bi(const BinaryString& s);

PermutationSet closest_string_to_sbm_instance(const std::vector<BinaryString>& strings);

// Iterated union of the given parts, folded from the left.
Permutation union_of(const std::vector<Permutation>& parts);

Permutation sixfold_union(const Permutation& sigma);

// The three rows pi^{1,2,3,1,2,3}, pi^{2,1,1,3,3,2}, pi^{3,3,2,2,1,1}.
std::array<Permutation, 3> median_to_closest_instance(const Permutation& p1, const Permutation& p2,
                                                      const Permutation& p3);

}  // namespace rearr
