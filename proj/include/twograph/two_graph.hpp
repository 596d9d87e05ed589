#pragma once

#include "combinatorics.hpp"
#include "seidel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twograph {

/// Largest vertex count for which canonical keys are computed (8! relabelings).
inline constexpr int kMaxCanonicalVertices = 8;

/// Delta of a two-graph on at most 8 vertices: bit r is the triple of lexicographic rank r.
using PackedDelta = std::uint64_t;

/**
 * A two-graph (Omega, Delta) with Omega = {0,...,n-1}.
 *
 * Delta is a bitset over the C(n,3) triples in lexicographic rank order.
 * Every 4-subset contains an even number of Delta triples; the checked
 * constructors reject anything else.
 */
class TwoGraph
{
  public:
    using Bits = std::bitset<kMaxTriples>;

    static TwoGraph from_bits(int n, const Bits& delta)
    {
        TwoGraph tg = unchecked(n, delta);
        if (!tg.is_valid())
            throw std::invalid_argument("triple set violates the even 4-subset condition");
        return tg;
    }

    static TwoGraph from_triples(int n, std::span<const Triple> triples)
    {
        check_size(n);
        Bits delta;
        for (Triple t : triples)
            delta.set(static_cast<std::size_t>(rank_of(n, t)));
        return from_bits(n, delta);
    }

    static TwoGraph from_packed(int n, PackedDelta delta)
    {
        check_size(n);
        if (n > kMaxCanonicalVertices)
            throw std::out_of_range("packed deltas hold at most 8 vertices");
        Bits bits;
        for (PackedDelta d = delta; d != 0; d &= d - 1)
            bits.set(static_cast<std::size_t>(std::countr_zero(d)));
        return from_bits(n, bits);
    }

    /// Skips the two-graph check. Only for negative controls in verification code.
    static TwoGraph unchecked(int n, const Bits& delta)
    {
        check_size(n);
        if ((delta >> binomial(n, 3)).any())
            throw std::invalid_argument("delta bits beyond the triple range");
        TwoGraph tg;
        tg.n_ = n;
        tg.delta_ = delta;
        return tg;
    }

    int vertex_count() const { return n_; }
    const Bits& delta() const { return delta_; }
    std::size_t size() const { return delta_.count(); }

    bool contains(Triple t) const { return delta_.test(static_cast<std::size_t>(rank_of(n_, t))); }

    std::vector<Triple> triples() const
    {
        std::vector<Triple> out;
        for (Triple t : triples_in_rank_order(n_))
            if (contains(t))
                out.push_back(t);
        return out;
    }

    PackedDelta packed() const
    {
        if (n_ > kMaxCanonicalVertices)
            throw std::out_of_range("packed deltas hold at most 8 vertices");
        PackedDelta p = 0;
        for (std::size_t r = 0; r < binomial(n_, 3); ++r)
            if (delta_.test(r))
                p |= PackedDelta{1} << r;
        return p;
    }

    bool is_valid() const;

    friend bool operator==(const TwoGraph&, const TwoGraph&) = default;

  private:
    TwoGraph() = default;

    static void check_size(int n)
    {
        if (n < 1 || n > kMaxVertices)
            throw std::out_of_range("two-graph vertex count must be in [1, 28], got " + std::to_string(n));
    }

    static int rank_of(int n, Triple t)
    {
        std::array<int, 3> v{t.i, t.j, t.k};
        std::sort(v.begin(), v.end());
        if (v[0] < 0 || v[2] >= n || v[0] == v[1] || v[1] == v[2])
            throw std::invalid_argument("malformed triple for n = " + std::to_string(n));
        return triple_rank(v[0], v[1], v[2], n);
    }

    int n_ = 0;
    Bits delta_;
};

/// True iff every 4-subset of {0,...,n-1} contains an even number of delta triples.
inline bool validate(int n, const TwoGraph::Bits& delta)
{
    auto in = [&](int a, int b, int c) { return delta.test(static_cast<std::size_t>(triple_rank(a, b, c, n))); };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const bool abc = in(a, b, c);
                for (int d = c + 1; d < n; ++d)
                    if (abc ^ in(a, b, d) ^ in(a, c, d) ^ in(b, c, d))
                        return false;
            }
    return true;
}

inline bool TwoGraph::is_valid() const { return validate(n_, delta_); }

/// The two-graph of odd triples of g.
inline TwoGraph two_graph_of(const Graph& g)
{
    const int n = g.vertex_count();
    const auto& e = g.bits();
    TwoGraph::Bits delta;
    std::size_t r = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool ij = e.test(static_cast<std::size_t>(pair_rank(i, j)));
            for (int k = j + 1; k < n; ++k, ++r)
                if (ij ^ e.test(static_cast<std::size_t>(pair_rank(i, k))) ^ e.test(static_cast<std::size_t>(pair_rank(j, k))))
                    delta.set(r);
        }
    return TwoGraph::unchecked(n, delta);
}

/// Restriction of tg to the ordered vertex list `subset`, reindexed by position.
inline TwoGraph induced(const TwoGraph& tg, std::span<const int> subset)
{
    const int m = static_cast<int>(subset.size());
    if (m < 3)
        throw std::invalid_argument("induced sub-two-graph needs at least 3 vertices");
    VertexSet seen = 0;
    for (int v : subset) {
        if (v < 0 || v >= tg.vertex_count())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        if ((seen >> v) & 1u)
            throw std::invalid_argument("repeated vertex in induced subset");
        seen |= VertexSet{1} << v;
    }
    TwoGraph::Bits delta;
    std::size_t r = 0;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c, ++r)
                if (tg.contains({subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)],
                                 subset[static_cast<std::size_t>(c)]}))
                    delta.set(r);
    return TwoGraph::unchecked(m, delta);
}

/// The graph with vertex n-1 isolated whose two-graph is tg.
inline Graph representative_graph(const TwoGraph& tg)
{
    const int n = tg.vertex_count();
    Graph::Bits bits;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j)
            if (tg.contains({i, j, n - 1}))
                bits.set(static_cast<std::size_t>(pair_rank(i, j)));
    return Graph::from_bits(n, bits);
}

/// Lexicographic order on packed deltas: the lowest-ranked differing triple decides.
constexpr bool lex_less(PackedDelta a, PackedDelta b)
{
    const PackedDelta diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) == 0;
}

/// Lexicographically minimal Delta over all relabelings of a two-graph on n <= 8 vertices.
struct CanonicalKey {
    int n = 0;
    PackedDelta bits = 0;

    int delta_popcount() const { return std::popcount(bits); }

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Catalog order: vertex count, then |Delta|, then lexicographic Delta.
inline bool operator<(const CanonicalKey& a, const CanonicalKey& b)
{
    if (a.n != b.n)
        return a.n < b.n;
    if (a.delta_popcount() != b.delta_popcount())
        return a.delta_popcount() < b.delta_popcount();
    return lex_less(a.bits, b.bits);
}

/// Hex string of the delta bits in rank order, four triples per digit, rank 0 leading.
inline std::string key_hex(int n, PackedDelta bits)
{
    static constexpr char digits[] = "0123456789abcdef";
    const int total = static_cast<int>(binomial(n, 3));
    std::string out;
    for (int base = 0; base < total; base += 4) {
        int nibble = 0;
        for (int b = 0; b < 4; ++b)
            if (base + b < total && ((bits >> (base + b)) & 1u))
                nibble |= 8 >> b;
        out.push_back(digits[nibble]);
    }
    return out;
}

inline std::string key_hex(const CanonicalKey& key) { return key_hex(key.n, key.bits); }

/// Inverse of key_hex.
inline PackedDelta parse_key_hex(int n, const std::string& hex)
{
    const int total = static_cast<int>(binomial(n, 3));
    if (static_cast<int>(hex.size()) != (total + 3) / 4)
        throw std::invalid_argument("key hex has the wrong length for n = " + std::to_string(n));
    PackedDelta bits = 0;
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        int nibble;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = c - 'a' + 10;
        else
            throw std::invalid_argument("bad hex digit in key");
        for (int b = 0; b < 4; ++b) {
            if ((nibble & (8 >> b)) == 0)
                continue;
            const int r = static_cast<int>(d) * 4 + b;
            if (r >= total)
                throw std::invalid_argument("key hex sets padding bits");
            bits |= PackedDelta{1} << r;
        }
    }
    return bits;
}

namespace detail {

/// Precomputed action of S_n on triple ranks and the normal-form index map for one n <= 8.
struct SmallTables {
    int n = 0;
    int triple_count = 0;
    int pair_count = 0; // C(n-1, 2): pairs that avoid the last vertex
    std::size_t perm_count = 0;
    std::vector<std::uint8_t> perms;        // perm_count x n
    std::vector<std::uint8_t> images;       // perm_count x triple_count
    std::vector<std::uint8_t> nf_triple;    // pair rank p -> rank of {i, j, n-1}
    std::vector<std::array<std::int8_t, 3>> triple_pairs; // pair ranks of a triple, -1 if it touches n-1

    explicit SmallTables(int n_) : n(n_)
    {
        triple_count = static_cast<int>(binomial(n, 3));
        pair_count = static_cast<int>(binomial(n - 1, 2));
        perms = all_permutations(n);
        perm_count = perms.size() / static_cast<std::size_t>(n);
        const auto trips = triples_in_rank_order(n);
        images.resize(perm_count * static_cast<std::size_t>(triple_count));
        for (std::size_t p = 0; p < perm_count; ++p) {
            const std::uint8_t* pi = &perms[p * static_cast<std::size_t>(n)];
            for (int r = 0; r < triple_count; ++r) {
                std::array<int, 3> v{pi[trips[r].i], pi[trips[r].j], pi[trips[r].k]};
                std::sort(v.begin(), v.end());
                images[p * static_cast<std::size_t>(triple_count) + static_cast<std::size_t>(r)] =
                    static_cast<std::uint8_t>(triple_rank(v[0], v[1], v[2], n));
            }
        }
        nf_triple.resize(static_cast<std::size_t>(pair_count));
        for (int j = 1; j < n - 1; ++j)
            for (int i = 0; i < j; ++i)
                nf_triple[static_cast<std::size_t>(pair_rank(i, j))] = static_cast<std::uint8_t>(triple_rank(i, j, n - 1, n));
        for (const Triple& t : trips) {
            auto pr = [&](int a, int b) -> std::int8_t {
                return b == n - 1 ? std::int8_t{-1} : static_cast<std::int8_t>(pair_rank(a, b));
            };
            triple_pairs.push_back({pr(t.i, t.j), pr(t.i, t.k), pr(t.j, t.k)});
        }
    }

    PackedDelta apply(std::size_t perm, PackedDelta delta) const
    {
        const std::uint8_t* img = &images[perm * static_cast<std::size_t>(triple_count)];
        PackedDelta out = 0;
        for (; delta != 0; delta &= delta - 1)
            out |= PackedDelta{1} << img[std::countr_zero(delta)];
        return out;
    }

    /// Edge bits of the representative graph (vertex n-1 isolated).
    std::uint32_t normal_form_index(PackedDelta delta) const
    {
        std::uint32_t idx = 0;
        for (int p = 0; p < pair_count; ++p)
            idx |= static_cast<std::uint32_t>((delta >> nf_triple[static_cast<std::size_t>(p)]) & 1u) << p;
        return idx;
    }

    /// Two-graph of the representative graph with the given edge bits.
    PackedDelta delta_of_normal_form(std::uint32_t idx) const
    {
        PackedDelta out = 0;
        for (int r = 0; r < triple_count; ++r) {
            unsigned parity = 0;
            for (std::int8_t p : triple_pairs[static_cast<std::size_t>(r)])
                if (p >= 0)
                    parity ^= (idx >> p) & 1u;
            out |= static_cast<PackedDelta>(parity) << r;
        }
        return out;
    }
};

inline const SmallTables& small_tables(int n)
{
    if (n < 1 || n > kMaxCanonicalVertices)
        throw std::out_of_range("canonical keys are supported for 1 <= n <= 8, got n = " + std::to_string(n));
    static std::array<std::once_flag, kMaxCanonicalVertices + 1> flags;
    static std::array<std::unique_ptr<SmallTables>, kMaxCanonicalVertices + 1> tables;
    std::call_once(flags[static_cast<std::size_t>(n)], [n] { tables[static_cast<std::size_t>(n)] = std::make_unique<SmallTables>(n); });
    return *tables[static_cast<std::size_t>(n)];
}

} // namespace detail

/// Canonical key of a packed delta: minimum over all n! relabelings.
inline CanonicalKey canonical_key(int n, PackedDelta delta)
{
    const auto& tab = detail::small_tables(n);
    PackedDelta best = delta;
    for (std::size_t p = 0; p < tab.perm_count; ++p) {
        const PackedDelta img = tab.apply(p, delta);
        if (lex_less(img, best))
            best = img;
    }
    return {n, best};
}

inline CanonicalKey canonical_key(const TwoGraph& tg)
{
    if (tg.vertex_count() > kMaxCanonicalVertices)
        throw std::out_of_range("canonical keys are supported for n <= 8, got n = " + std::to_string(tg.vertex_count()));
    return canonical_key(tg.vertex_count(), tg.packed());
}

/// Equivalence of two-graphs. Throws for n > 8 when the cheap invariants agree.
inline bool equivalent(const TwoGraph& a, const TwoGraph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.size() != b.size())
        return false;
    if (a == b)
        return true;
    return canonical_key(a) == canonical_key(b);
}

inline TwoGraph two_graph_of_key(const CanonicalKey& key) { return TwoGraph::from_packed(key.n, key.bits); }

} // namespace twograph
