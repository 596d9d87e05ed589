#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace twograph {

/// Largest vertex count any graph or two-graph may have (one vertex per bitangent).
inline constexpr int kMaxVertices = 28;

namespace detail {

inline constexpr auto make_binomials()
{
    std::array<std::array<std::uint64_t, 9>, kMaxVertices + 1> table{};
    for (int n = 0; n <= kMaxVertices; ++n) {
        table[n][0] = 1;
        for (int k = 1; k <= 8; ++k)
            table[n][k] = n == 0 ? 0 : table[n - 1][k - 1] + table[n - 1][k];
    }
    return table;
}

inline constexpr auto kBinomials = make_binomials();

} // namespace detail

/// C(n, k) for 0 <= n <= 28 and 0 <= k <= 8; zero when k > n.
constexpr std::uint64_t binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    return detail::kBinomials[n][k];
}

/// C(n, k) for arbitrary small arguments (used for subset totals).
constexpr std::uint64_t binomial_wide(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

inline constexpr int kMaxPairs = kMaxVertices * (kMaxVertices - 1) / 2;
inline constexpr int kMaxTriples = kMaxVertices * (kMaxVertices - 1) * (kMaxVertices - 2) / 6;

/// Triangular (colex) rank of the pair {i, j}, i < j. Independent of the vertex count.
constexpr int pair_rank(int i, int j)
{
    if (i > j)
        std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

/// Lexicographic rank of the triple i < j < k among the 3-subsets of {0,...,n-1}.
constexpr int triple_rank(int i, int j, int k, int n)
{
    return static_cast<int>(binomial(n, 3) - binomial(n - i, 3) + binomial(n - i - 1, 2)
                            - binomial(n - j, 2))
           + (k - j - 1);
}

struct Triple {
    int i, j, k;
    friend constexpr bool operator==(const Triple&, const Triple&) = default;
};

/// All triples of {0,...,n-1} in lexicographic rank order.
inline std::vector<Triple> triples_in_rank_order(int n)
{
    std::vector<Triple> out;
    out.reserve(binomial(n, 3));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                out.push_back({i, j, k});
    return out;
}

/// A k-subset of {0,...,27} stepped through in colex order.
///
/// Colex order compares subsets by their largest differing element, so the
/// rank of {c_0 < ... < c_{k-1}} is sum C(c_i, i+1).
class ColexSubset
{
  public:
    explicit ColexSubset(int k) : elems_(static_cast<std::size_t>(k))
    {
        std::iota(elems_.begin(), elems_.end(), 0);
    }

    ColexSubset(int k, std::uint64_t rank) : elems_(static_cast<std::size_t>(k))
    {
        for (int i = k; i >= 1; --i) {
            int c = i - 1;
            while (binomial_wide(c + 1, i) <= rank)
                ++c;
            elems_[static_cast<std::size_t>(i - 1)] = c;
            rank -= binomial_wide(c, i);
        }
    }

    std::span<const int> elements() const { return elems_; }

    std::uint64_t rank() const
    {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            r += binomial_wide(elems_[i], static_cast<int>(i) + 1);
        return r;
    }

    /// Steps to the colex successor. The caller bounds the walk by rank.
    void advance()
    {
        std::size_t i = 0;
        while (i + 1 < elems_.size() && elems_[i] + 1 == elems_[i + 1])
            ++i;
        ++elems_[i];
        for (std::size_t t = 0; t < i; ++t)
            elems_[t] = static_cast<int>(t);
    }

  private:
    std::vector<int> elems_;
};

/// Every permutation of {0,...,n-1} in lexicographic order, flattened.
inline std::vector<std::uint8_t> all_permutations(int n)
{
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});
    std::vector<std::uint8_t> out;
    do {
        out.insert(out.end(), perm.begin(), perm.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace twograph
