#include "rearr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "rearr/errors.hpp"

namespace rearr {

namespace {

std::vector<int> tokenize(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc() || ptr != text.data() + j)
            throw ParseError(ParseError::Kind::Malformed,
                             "not an integer: '" + std::string(text.substr(i, j - i)) + "'");
        out.push_back(value);
        i = j;
    }
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> elems) : elems_(std::move(elems)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int v : elems_) {
        if (v < 1 || v > n)
            throw ParseError(ParseError::Kind::OutOfRange,
                             "element " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[v])
            throw ParseError(ParseError::Kind::DuplicateElement,
                             "duplicate element " + std::to_string(v));
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw InvalidLength("identity needs n >= 1, got " + std::to_string(n));
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i + 1;
    return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
    auto values = tokenize(text);
    if (values.empty()) throw ParseError(ParseError::Kind::Empty, "empty permutation");
    return Permutation(std::move(values));
}

std::vector<int> Permutation::positions() const {
    std::vector<int> pos(size() + 2, 0);
    for (int i = 0; i < size(); ++i) pos[elems_[i]] = i + 1;
    pos[size() + 1] = size() + 1;
    return pos;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (elems_[i] != i + 1) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(elems_[i]);
    }
    return s;
}

PermutationSet::PermutationSet(std::vector<Permutation> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw ParseError(ParseError::Kind::Empty, "permutation set needs at least one row");
    for (const auto& r : rows_)
        if (r.size() != rows_.front().size()) throw LengthMismatch(rows_.front().size(), r.size());
}

PermutationSet PermutationSet::parse(std::string_view text) {
    std::vector<Permutation> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(Permutation::parse(line));
    }
    return PermutationSet(std::move(rows));
}

std::vector<int> PermutationSet::column(int j) const {
    std::vector<int> col;
    col.reserve(rows_.size());
    for (const auto& r : rows_) col.push_back(r(j));
    return col;
}

std::string PermutationSet::to_string() const {
    std::string s;
    for (const auto& r : rows_) s += r.to_string() + "\n";
    return s;
}

Permutation identity(int n) { return Permutation::identity(n); }

Permutation parse_permutation(std::string_view text) { return Permutation::parse(text); }

Permutation compose(const Permutation& pi, const Permutation& sigma) {
    if (pi.size() != sigma.size()) throw LengthMismatch(pi.size(), sigma.size());
    std::vector<int> r(pi.size());
    for (int i = 1; i <= pi.size(); ++i) r[i - 1] = pi(sigma(i));
    return Permutation(std::move(r));
}

Permutation inverse(const Permutation& pi) {
    std::vector<int> r(pi.size());
    for (int i = 1; i <= pi.size(); ++i) r[pi(i) - 1] = i;
    return Permutation(std::move(r));
}

Permutation relabel_pair(const Permutation& pi, const Permutation& sigma) {
    if (pi.size() != sigma.size()) throw LengthMismatch(pi.size(), sigma.size());
    return compose(inverse(sigma), pi);
}

Permutation disjoint_union(const Permutation& a, const Permutation& b) {
    const int p = a.size();
    std::vector<int> r(a.vec());
    r.push_back(p + 1);
    for (int v : b.elems()) r.push_back(v + p + 1);
    return Permutation(std::move(r));
}

Permutation reduce_glue(const Permutation& pi) {
    const int n = pi.size();
    // glued[v]: v directly follows v-1 in the extended sequence 0 pi n+1.
    std::vector<int> ext(n + 2);
    for (int i = 0; i <= n + 1; ++i) ext[i] = pi(i);
    std::vector<char> glued(n + 2, 0);
    for (int i = 0; i <= n; ++i)
        if (ext[i + 1] == ext[i] + 1) glued[ext[i + 1]] = 1;
    // Each maximal glued run survives as its head, except the runs that
    // contain a sentinel, which vanish into it.
    std::vector<int> head_of(n + 2, 0);
    for (int v = 0; v <= n + 1; ++v) head_of[v] = glued[v] ? head_of[v - 1] : v;
    const int last_head = head_of[n + 1];
    std::vector<int> label(n + 2, 0);
    int next = 0;
    for (int v = 1; v <= n; ++v) {
        if (glued[v] || head_of[v] == 0 || head_of[v] == last_head) continue;
        label[v] = ++next;
    }
    std::vector<int> r;
    for (int i = 1; i <= n; ++i) {
        int v = ext[i];
        if (glued[v] || head_of[v] == 0 || head_of[v] == last_head) continue;
        r.push_back(label[v]);
    }
    return Permutation(std::move(r));
}

ComponentDecomposition components(const Permutation& pi) {
    ComponentDecomposition out;
    int start = 1, prefix_max = 0;
    for (int i = 1; i <= pi.size(); ++i) {
        prefix_max = std::max(prefix_max, pi(i));
        if (prefix_max == i) {
            out.intervals.push_back({start, i});
            start = i + 1;
        }
    }
    return out;
}

int inversion_count(const Permutation& pi) {
    int count = 0;
    const auto e = pi.elems();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i] > e[j]) ++count;
    return count;
}

}  // namespace rearr
