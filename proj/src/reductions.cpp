#include "rearr/reductions.hpp"

#include <sstream>

#include "rearr/errors.hpp"

namespace rearr {

BinaryString::BinaryString(std::string_view bits) : bits_(bits) {
    if (bits_.empty()) throw ParseError(ParseError::Kind::Empty, "empty binary string");
    for (char c : bits_)
        if (c != '0' && c != '1')
            throw ParseError(ParseError::Kind::NonBinary, "non-binary character '" + std::string(1, c) + "' in " + bits_);
}

std::vector<BinaryString> BinaryString::parse_lines(std::string_view text) {
    std::vector<BinaryString> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.emplace_back(std::string_view(line).substr(first, last - first + 1));
    }
    if (out.empty()) throw ParseError(ParseError::Kind::Empty, "no binary strings");
    return out;
}

int hamming_distance(const BinaryString& s, const BinaryString& t) {
    if (s.size() != t.size()) throw LengthMismatch(s.size(), t.size());
    int count = 0;
    for (int i = 0; i < s.size(); ++i) count += s[i] != t[i];
    return count;
}

Permutation permut_bi(const BinaryString& s) {
    std::vector<int> out;
    for (int i = 1; i <= s.size(); ++i) {
        if (s[i - 1]) {
            out.push_back(2 * i);
            out.push_back(2 * i - 1);
        } else {
            out.push_back(2 * i - 1);
            out.push_back(2 * i);
        }
    }
    return Permutation(std::move(out));
}

PermutationSet closest_string_to_sbm_instance(const std::vector<BinaryString>& strings) {
    std::vector<Permutation> rows;
    for (const auto& s : strings) {
        if (s.size() != strings.front().size()) throw LengthMismatch(strings.front().size(), s.size());
        rows.push_back(permut_bi(s));
    }
    return PermutationSet(std::move(rows));
}

Permutation union_of(const std::vector<Permutation>& parts) {
    if (parts.empty()) throw InvalidLength("union of no parts");
    Permutation acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = disjoint_union(acc, parts[i]);
    return acc;
}

Permutation sixfold_union(const Permutation& sigma) { return union_of(std::vector<Permutation>(6, sigma)); }

std::array<Permutation, 3> median_to_closest_instance(const Permutation& p1, const Permutation& p2,
                                                      const Permutation& p3) {
    if (p1.size() != p2.size()) throw LengthMismatch(p1.size(), p2.size());
    if (p1.size() != p3.size()) throw LengthMismatch(p1.size(), p3.size());
    return {union_of({p1, p2, p3, p1, p2, p3}), union_of({p2, p1, p1, p3, p3, p2}),
            union_of({p3, p3, p2, p2, p1, p1})};
}

}  // namespace rearr
