#pragma once

#include "seidel.hpp"
#include "two_graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twograph {

/// Number of bitangents of a smooth plane quartic, one per antipodal pair of minimal vectors.
inline constexpr int kBitangentCount = 28;

/**
 * One of the 56 minimal vectors +-u_jk of E7*, entries scaled by 4.
 *
 * u_jk has 3 at coordinates j and k and -1 elsewhere; j < k are 1-based.
 * The scaled self inner product is 24, i.e. norm 3/2.
 */
class SignedMinimalVector
{
  public:
    SignedMinimalVector(int j, int k, int sign) : j_(j), k_(k), sign_(sign)
    {
        if (j < 1 || k > 8 || j >= k)
            throw std::invalid_argument("minimal vector indices need 1 <= j < k <= 8, got (" + std::to_string(j) + "," +
                                        std::to_string(k) + ")");
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("minimal vector sign must be +1 or -1");
        for (int c = 0; c < 8; ++c)
            entries_[static_cast<std::size_t>(c)] = sign * ((c + 1 == j || c + 1 == k) ? 3 : -1);
    }

    int j() const { return j_; }
    int k() const { return k_; }
    int sign() const { return sign_; }
    const std::array<int, 8>& entries() const { return entries_; }

    SignedMinimalVector negated() const { return {j_, k_, -sign_}; }

    bool same_pair(const SignedMinimalVector& o) const { return j_ == o.j_ && k_ == o.k_; }

    /// "u18" or "-u18".
    std::string to_string() const
    {
        return (sign_ < 0 ? "-u" : "u") + std::to_string(j_) + std::to_string(k_);
    }

    friend bool operator==(const SignedMinimalVector&, const SignedMinimalVector&) = default;

  private:
    int j_, k_, sign_;
    std::array<int, 8> entries_{};
};

inline SignedMinimalVector minimal_vector(int j, int k, int sign = 1) { return {j, k, sign}; }

/// Inner product of the 4-scaled entries, i.e. 16 times the true inner product.
inline int dot16(const SignedMinimalVector& v, const SignedMinimalVector& w)
{
    int s = 0;
    for (std::size_t c = 0; c < 8; ++c)
        s += v.entries()[c] * w.entries()[c];
    return s;
}

/// Graph on the listed vectors with an edge wherever the inner product is -1/2.
inline Graph graph_from_vectors(std::span<const SignedMinimalVector> vs)
{
    const int n = static_cast<int>(vs.size());
    if (n < 1 || n > kBitangentCount)
        throw std::out_of_range("vector list must have between 1 and 28 entries");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& va = vs[static_cast<std::size_t>(a)];
            const auto& vb = vs[static_cast<std::size_t>(b)];
            if (va.same_pair(vb))
                throw std::invalid_argument("bitangent u" + std::to_string(va.j()) + std::to_string(va.k()) +
                                            " listed twice");
            if (dot16(va, vb) == -8)
                edges.emplace_back(a, b);
        }
    return Graph(n, edges);
}

/// Parses "u18", "-u15", "+u23".
inline SignedMinimalVector parse_vector_spec(std::string_view s)
{
    const std::string text(s);
    std::size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
        sign = s[pos++] == '-' ? -1 : 1;
    if (s.size() != pos + 3 || s[pos] != 'u' || !std::isdigit(static_cast<unsigned char>(s[pos + 1])) ||
        !std::isdigit(static_cast<unsigned char>(s[pos + 2])))
        throw std::invalid_argument("malformed vector token '" + text + "', expected e.g. u18 or -u15");
    const int j = s[pos + 1] - '0';
    const int k = s[pos + 2] - '0';
    if (j < 1 || j > 8 || k < 1 || k > 8)
        throw std::invalid_argument("index out of range 1..8 in '" + text + "'");
    if (j >= k)
        throw std::invalid_argument("indices must increase in '" + text + "'");
    return {j, k, sign};
}

/// Comma- or whitespace-separated tokens; anything after '#' is a comment.
inline std::vector<SignedMinimalVector> parse_vector_list(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<SignedMinimalVector> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ',' || std::isspace(static_cast<unsigned char>(line[i]))))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ',' && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(parse_vector_spec(line.substr(start, i - start)));
    }
    return out;
}

/// Bitangent index 0..27 of the pair (j, k) in lexicographic order.
inline int bitangent_index(int j, int k)
{
    if (j < 1 || k > 8 || j >= k)
        throw std::invalid_argument("bitangent pair needs 1 <= j < k <= 8");
    int idx = 0;
    for (int a = 1; a < j; ++a)
        idx += 8 - a;
    return idx + (k - j - 1);
}

/// Pair (j, k) of a bitangent index.
inline std::pair<int, int> bitangent_pair(int index)
{
    if (index < 0 || index >= kBitangentCount)
        throw std::out_of_range("bitangent index must be in [0, 28)");
    for (int j = 1; j <= 7; ++j) {
        if (index < 8 - j)
            return {j, j + 1 + index};
        index -= 8 - j;
    }
    return {0, 0}; // unreachable
}

inline int bitangent_index(const SignedMinimalVector& v) { return bitangent_index(v.j(), v.k()); }

/**
 * The 28 bitangents as the positive minimal vectors +u_jk (lexicographic
 * in (j, k)) and the two-graph they carry. Built once, then read-only.
 */
class BitangentModel
{
  public:
    static BitangentModel build()
    {
        std::vector<SignedMinimalVector> vs;
        for (int j = 1; j <= 8; ++j)
            for (int k = j + 1; k <= 8; ++k)
                vs.emplace_back(j, k, 1);
        Graph g = graph_from_vectors(vs);
        TwoGraph full = two_graph_of(g);
        return BitangentModel(std::move(vs), std::move(g), std::move(full));
    }

    const std::vector<SignedMinimalVector>& vectors() const { return vectors_; }
    const Graph& graph() const { return graph_; }
    const TwoGraph& full_two_graph() const { return full_; }

    /// Graph on the representatives sign(i) * u_i, bit i of `negated` choosing -u_i.
    Graph graph_with_signs(std::uint32_t negated) const
    {
        std::vector<SignedMinimalVector> vs;
        for (std::size_t i = 0; i < vectors_.size(); ++i)
            vs.push_back(((negated >> i) & 1u) ? vectors_[i].negated() : vectors_[i]);
        return graph_from_vectors(vs);
    }

    /// Copy with one triple dropped from Delta. Negative controls only: the result is not a two-graph.
    BitangentModel with_triple_removed(Triple t) const
    {
        std::array<int, 3> v{t.i, t.j, t.k};
        std::sort(v.begin(), v.end());
        TwoGraph::Bits delta = full_.delta();
        delta.reset(static_cast<std::size_t>(triple_rank(v[0], v[1], v[2], kBitangentCount)));
        return BitangentModel(vectors_, graph_, TwoGraph::unchecked(kBitangentCount, delta));
    }

  private:
    BitangentModel(std::vector<SignedMinimalVector> vs, Graph g, TwoGraph full)
        : vectors_(std::move(vs)), graph_(std::move(g)), full_(std::move(full))
    {
    }

    std::vector<SignedMinimalVector> vectors_;
    Graph graph_;
    TwoGraph full_;
};

inline BitangentModel bitangent_two_graph() { return BitangentModel::build(); }

} // namespace twograph
