#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rearr/errors.hpp"
#include "rearr/metrics.hpp"
#include "rearr/reductions.hpp"
#include "rearr/solvers.hpp"

using namespace rearr;

namespace {
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<std::string> all_strings(int m) {
    std::vector<std::string> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::string s;
        for (int i = 0; i < m; ++i) s += (mask >> i & 1) ? '1' : '0';
        out.push_back(s);
    }
    return out;
}
}  // namespace

TEST(BinaryString, Validates) {
    EXPECT_EQ(BinaryString("0110").size(), 4);
    EXPECT_THROW(BinaryString("02"), ParseError);
    EXPECT_THROW(BinaryString(""), ParseError);
    EXPECT_EQ(BinaryString::parse_lines("01\n# c\n\n10\n").size(), 2u);
}

TEST(Hamming, Examples) {
    EXPECT_EQ(hamming_distance(BinaryString("000"), BinaryString("000")), 0);
    EXPECT_EQ(hamming_distance(BinaryString("011"), BinaryString("000")), 2);
    EXPECT_EQ(hamming_distance(BinaryString("10"), BinaryString("01")), 2);
    EXPECT_THROW(hamming_distance(BinaryString("1"), BinaryString("10")), LengthMismatch);
}

TEST(PermutBi, Examples) {
    EXPECT_EQ(permut_bi(BinaryString("00")), identity(4));
    EXPECT_EQ(permut_bi(BinaryString("01")), P({1, 2, 4, 3}));
    EXPECT_EQ(permut_bi(BinaryString("110")), P({2, 1, 4, 3, 5, 6}));
}

TEST(PermutBi, SbmDistanceEqualsHammingExhaustive) {
    for (int m = 1; m <= 5; ++m)
        for (const auto& bits : all_strings(m)) {
            const BinaryString s(bits);
            const BinaryString zero(std::string(m, '0'));
            const auto lambda = permut_bi(s);
            ASSERT_EQ(sbm_distance_exact(lambda, identity(2 * m)), hamming_distance(s, zero)) << bits;
            if (m <= 4)
                ASSERT_EQ(oracle::distance(Metric::ShortBlockMove, lambda, identity(2 * m)), hamming_distance(s, zero));
        }
}

// Under the prefix-maximum decomposition a reversed pair is one component of
// length 2 and an untouched pair splits into two fixed points.
TEST(PermutBi, ComponentsFollowTheBits) {
    for (int m = 1; m <= 5; ++m)
        for (const auto& bits : all_strings(m)) {
            std::vector<Interval> expected;
            for (int i = 0; i < m; ++i) {
                if (bits[i] == '1') expected.push_back({2 * i + 1, 2 * i + 2});
                else expected.insert(expected.end(), {{2 * i + 1, 2 * i + 1}, {2 * i + 2, 2 * i + 2}});
            }
            ASSERT_EQ(components(permut_bi(BinaryString(bits))).intervals, expected) << bits;
        }
}

TEST(ClosestStringInstance, Examples) {
    auto s = closest_string_to_sbm_instance({BinaryString("00"), BinaryString("00")});
    EXPECT_EQ(closest_brute_force(s, Metric::ShortBlockMove).radius, 0);

    s = closest_string_to_sbm_instance({BinaryString("01"), BinaryString("10")});
    EXPECT_EQ(s[0], P({1, 2, 4, 3}));
    EXPECT_EQ(s[1], P({2, 1, 3, 4}));
    EXPECT_EQ(closest_brute_force(s, Metric::ShortBlockMove).radius, 1);

    s = closest_string_to_sbm_instance({BinaryString("1")});
    const auto c = closest_brute_force(s, Metric::ShortBlockMove);
    EXPECT_EQ(c.witness, P({2, 1}));
    EXPECT_EQ(c.radius, 0);
    EXPECT_THROW(closest_string_to_sbm_instance({BinaryString("1"), BinaryString("10")}), LengthMismatch);
}

TEST(ClosestStringInstance, RadiusMatchesHammingRadius) {
    // All pairs of strings of length 3; the Hamming radius is computed over all 8 centres.
    const auto strings = all_strings(3);
    for (const auto& a : strings)
        for (const auto& b : strings) {
            const std::vector<BinaryString> in{BinaryString(a), BinaryString(b)};
            int best = 99;
            for (const auto& c : strings)
                best = std::min(best, std::max(hamming_distance(in[0], BinaryString(c)),
                                               hamming_distance(in[1], BinaryString(c))));
            const auto s = closest_string_to_sbm_instance(in);
            ASSERT_EQ(oracle::closest(s, Metric::ShortBlockMove).value, best) << a << " " << b;
        }
}

TEST(Union, AdditiveUnderBlockInterchange) {
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q)
            for (const auto& a : oracle::all_permutations(p))
                for (const auto& b : oracle::all_permutations(q)) {
                    const auto u = disjoint_union(P(a), P(b));
                    ASSERT_EQ(block_interchange_distance(u, identity(p + q + 1)),
                              block_interchange_distance(P(a), identity(p)) +
                                  block_interchange_distance(P(b), identity(q)));
                }
}

TEST(SixfoldUnion, Examples) {
    EXPECT_EQ(sixfold_union(identity(1)), identity(11));
    const auto u = sixfold_union(P({2, 1}));
    EXPECT_EQ(u.size(), 17);
    for (int part = 0; part < 6; ++part) {
        EXPECT_EQ(u(3 * part + 1), 3 * part + 2);
        EXPECT_EQ(u(3 * part + 2), 3 * part + 1);
    }
    EXPECT_EQ(block_interchange_distance(u, identity(17)), 6);
}

TEST(MedianToClosest, Examples) {
    const auto rows = median_to_closest_instance(identity(2), identity(2), identity(2));
    for (const auto& r : rows) EXPECT_EQ(r, identity(17));
    EXPECT_THROW(median_to_closest_instance(identity(2), identity(3), identity(2)), LengthMismatch);

    const auto out = median_to_closest_instance(P({2, 1, 3}), P({3, 1, 2}), P({1, 3, 2}));
    for (const auto& r : out) {
        ASSERT_EQ(r.size(), 23);
        for (int j = 1; j <= 5; ++j) EXPECT_EQ(r(j * 3 + j), j * 3 + j);
    }
}

TEST(MedianToClosest, SixfoldRadiusIsTwiceMedianTotal) {
    const auto perms = oracle::all_permutations(3);
    for (const auto& a : perms)
        for (const auto& b : perms)
            for (const auto& c : perms) {
                const PermutationSet s({P(a), P(b), P(c)});
                const long long total = oracle::median(s, Metric::BlockInterchange).value;
                const auto rows = median_to_closest_instance(P(a), P(b), P(c));
                const PermutationSet inst({rows[0], rows[1], rows[2]});
                int best = -1;
                for (const auto& sigma : perms) {
                    const int r = radius(Metric::BlockInterchange, sixfold_union(P(sigma)), inst);
                    if (best < 0 || r < best) best = r;
                }
                ASSERT_EQ(best, 2 * total);
                const auto w = median_brute_force(s, Metric::BlockInterchange).witness;
                ASSERT_EQ(radius(Metric::BlockInterchange, sixfold_union(w), inst), best);
            }
}
