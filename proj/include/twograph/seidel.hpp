#pragma once

#include "combinatorics.hpp"

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twograph {

using Edge = std::pair<int, int>;

/// A vertex subset of a graph with at most 28 vertices, bit v meaning vertex v.
using VertexSet = std::uint32_t;

/**
 * Labeled simple graph on vertices {0,...,n-1}, n <= 28.
 *
 * Edges live in a triangular bitset indexed by pair_rank(). Values are
 * immutable once built; every operation returns a new graph.
 */
class Graph
{
  public:
    using Bits = std::bitset<kMaxPairs>;

    /// Builds the graph with exactly the listed edges. Duplicates collapse.
    Graph(int n, std::span<const Edge> edges) : n_(n)
    {
        if (n < 1 || n > kMaxVertices)
            throw std::out_of_range("graph vertex count must be in [1, 28], got " + std::to_string(n));
        for (auto [i, j] : edges) {
            check_vertex(i);
            check_vertex(j);
            if (i == j)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
            bits_.set(static_cast<std::size_t>(pair_rank(i, j)));
        }
    }

    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    explicit Graph(int n) : Graph(n, std::span<const Edge>{}) {}

    /// Graph from a raw triangular bitset; bits at pair ranks >= C(n,2) must be clear.
    static Graph from_bits(int n, const Bits& bits)
    {
        Graph g(n);
        if ((bits >> binomial(n, 2)).any())
            throw std::invalid_argument("edge bits beyond the vertex range");
        g.bits_ = bits;
        return g;
    }

    int vertex_count() const { return n_; }
    const Bits& bits() const { return bits_; }

    bool edge(int i, int j) const
    {
        check_vertex(i);
        check_vertex(j);
        return i != j && bits_.test(static_cast<std::size_t>(pair_rank(i, j)));
    }

    std::size_t edge_count() const { return bits_.count(); }

    /// Edge list with i < j, sorted by (i, j).
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (bits_.test(static_cast<std::size_t>(pair_rank(i, j))))
                    out.emplace_back(i, j);
        return out;
    }

    VertexSet neighbourhood(int v) const
    {
        check_vertex(v);
        VertexSet s = 0;
        for (int u = 0; u < n_; ++u)
            if (u != v && bits_.test(static_cast<std::size_t>(pair_rank(u, v))))
                s |= VertexSet{1} << u;
        return s;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
    }

    int n_;
    Bits bits_;
};

/// Symmetric {-1, 0, +1} matrix: 0 on the diagonal, -1 for adjacent pairs, +1 otherwise.
class SeidelMatrix
{
  public:
    explicit SeidelMatrix(const Graph& g) : n_(g.vertex_count()), entries_(static_cast<std::size_t>(n_ * n_), 0)
    {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j)
                    entries_[static_cast<std::size_t>(i * n_ + j)] = g.edge(i, j) ? -1 : 1;
    }

    int dimension() const { return n_; }
    int operator()(int i, int j) const { return entries_.at(static_cast<std::size_t>(i * n_ + j)); }

    friend bool operator==(const SeidelMatrix&, const SeidelMatrix&) = default;

  private:
    int n_;
    std::vector<int> entries_;
};

inline SeidelMatrix seidel_matrix(const Graph& g) { return SeidelMatrix(g); }

inline VertexSet vertex_set(std::initializer_list<int> vs)
{
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        s |= VertexSet{1} << v;
    }
    return s;
}

/// Seidel switching with respect to s: flips adjacency on every pair with exactly one end in s.
inline Graph switch_graph(const Graph& g, VertexSet s)
{
    const int n = g.vertex_count();
    if ((s >> n) != 0)
        throw std::out_of_range("switching set contains a vertex >= n");
    Graph::Bits bits = g.bits();
    for (int j = 1; j < n; ++j) {
        const bool in_j = (s >> j) & 1u;
        for (int i = 0; i < j; ++i)
            if (in_j != static_cast<bool>((s >> i) & 1u))
                bits.flip(static_cast<std::size_t>(pair_rank(i, j)));
    }
    return Graph::from_bits(n, bits);
}

/// Relabels vertex v as perm[v]: edge(perm[i], perm[j]) in the result iff edge(i, j) in g.
inline Graph relabel(const Graph& g, std::span<const int> perm)
{
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match vertex count");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n || ((seen >> p) & 1u))
            throw std::invalid_argument("relabeling is not a bijection on the vertex set");
        seen |= VertexSet{1} << p;
    }
    Graph::Bits bits;
    for (auto [i, j] : g.edges())
        bits.set(static_cast<std::size_t>(pair_rank(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])));
    return Graph::from_bits(n, bits);
}

/// Image of a vertex set under a relabeling.
inline VertexSet relabel_set(VertexSet s, std::span<const int> perm)
{
    VertexSet out = 0;
    for (std::size_t v = 0; v < perm.size(); ++v)
        if ((s >> v) & 1u)
            out |= VertexSet{1} << perm[v];
    return out;
}

enum class Parity { even, odd };

/// Odd when the induced subgraph on t has 1 or 3 edges.
inline Parity triple_parity(const Graph& g, Triple t)
{
    if (t.i == t.j || t.i == t.k || t.j == t.k)
        throw std::invalid_argument("triple must have three distinct vertices");
    return (g.edge(t.i, t.j) ^ g.edge(t.i, t.k) ^ g.edge(t.j, t.k)) ? Parity::odd : Parity::even;
}

/// Graphviz rendering with vertices named v1...vn.
inline std::string to_dot(const Graph& g, const std::string& name = "G")
{
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v + 1 << ";\n";
    for (auto [i, j] : g.edges())
        os << "  v" << i + 1 << " -- v" << j + 1 << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace twograph
