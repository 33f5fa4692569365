#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rearr {

// A bijection on {1..n}. Length 0 is allowed and is produced by reduce_glue of
// an identity; the public constructors otherwise require n >= 1 only through
// identity(). The sentinels 0 and n+1 are never stored.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> elems);

    static Permutation identity(int n);
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }

    // 1-based value at position i; 0 and n+1 yield the sentinels.
    int operator()(int i) const {
        if (i <= 0) return 0;
        if (i > size()) return size() + 1;
        return elems_[i - 1];
    }

    std::span<const int> elems() const { return elems_; }
    const std::vector<int>& vec() const { return elems_; }

    // Inverse as a 1-based lookup table: positions()[v] is the position of v.
    std::vector<int> positions() const;

    bool is_identity() const;
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> elems_;
};

// Rows of equal length; k >= 1.
class PermutationSet {
public:
    PermutationSet() = default;
    explicit PermutationSet(std::vector<Permutation> rows);

    static PermutationSet parse(std::string_view text);

    int k() const { return static_cast<int>(rows_.size()); }
    int n() const { return rows_.empty() ? 0 : rows_.front().size(); }
    const std::vector<Permutation>& rows() const { return rows_; }
    const Permutation& operator[](int i) const { return rows_[i]; }

    // Column j (1-based) as the list of entries, one per row.
    std::vector<int> column(int j) const;

    std::string to_string() const;

    bool operator==(const PermutationSet&) const = default;

private:
    std::vector<Permutation> rows_;
};

struct Interval {
    int first;
    int last;
    int length() const { return last - first + 1; }
    bool operator==(const Interval&) const = default;
};

struct ComponentDecomposition {
    std::vector<Interval> intervals;
};

Permutation identity(int n);
Permutation parse_permutation(std::string_view text);

// r(i) = pi(sigma(i)).
Permutation compose(const Permutation& pi, const Permutation& sigma);
Permutation inverse(const Permutation& pi);

// The single permutation whose distance to the identity equals the distance
// between pi and sigma, for every position-based move set: sigma^-1 o pi.
Permutation relabel_pair(const Permutation& pi, const Permutation& sigma);

// [a..., p+1, b+p+1...] where p = |a|.
Permutation disjoint_union(const Permutation& a, const Permutation& b);

// Glue every adjacency i, i+1 (including the sentinels) into one element and
// renumber. The identity collapses to length 0.
Permutation reduce_glue(const Permutation& pi);

// Prefix-maximum split: a component ends at i when max(pi(1..i)) == i.
ComponentDecomposition components(const Permutation& pi);

int inversion_count(const Permutation& pi);

}  // namespace rearr
