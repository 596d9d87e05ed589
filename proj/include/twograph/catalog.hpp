#pragma once

#include "seidel.hpp"
#include "two_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twograph {

/// Number of two-graph classes on n vertices for n = 1..10.
inline constexpr std::array<std::uint64_t, 11> kTwoGraphClassCounts{0, 1, 1, 2, 3, 7, 16, 54, 243, 2038, 33120};

struct CatalogClass {
    CanonicalKey key;
    std::string label;

    int delta_popcount() const { return key.delta_popcount(); }
    TwoGraph two_graph() const { return two_graph_of_key(key); }
    Graph representative() const { return representative_graph(two_graph()); }
};

/// A drawn class representative: a label and the edge list of a graph in its switching class.
struct FigureRepresentative {
    std::string_view label;
    std::vector<Edge> edges;
};

/// Drawn representatives for five and six vertices, vertices v1...v6 as 0...5.
inline std::vector<FigureRepresentative> figure_representatives(int n)
{
    if (n == 5)
        return {
            {"(5,0)", {}},
            {"(5,3)", {{0, 1}}},
            {"(5,4)", {{0, 1}, {1, 2}}},
            {"(5,5)", {{0, 1}, {1, 2}, {2, 3}}},
            {"(5,6)", {{0, 1}, {2, 3}}},
            {"(5,7)", {{0, 1}, {1, 2}, {0, 2}}},
            {"(5,10)", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
        };
    if (n == 6)
        return {
            {"(6,0)", {}},
            {"(6,4)", {{0, 1}}},
            {"(6,6)", {{0, 1}, {1, 2}}},
            {"(6,8)_1", {{0, 1}, {2, 3}}},
            {"(6,8)_2", {{0, 1}, {1, 2}, {2, 3}}},
            {"(6,8)_3", {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
            {"(6,10)_1", {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
            {"(6,10)_2", {{0, 1}, {1, 2}, {2, 0}}},
            {"(6,10)_3", {{0, 1}, {1, 2}, {3, 4}}},
            {"(6,10)_4", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}},
            {"(6,12)_1", {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}}},
            {"(6,12)_2", {{0, 1}, {1, 2}, {2, 3}, {4, 5}}},
            {"(6,12)_3", {{0, 1}, {2, 3}, {4, 5}}},
            {"(6,14)", {{0, 1}, {1, 2}, {2, 0}, {3, 4}}},
            {"(6,16)", {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}}},
            {"(6,20)", {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}},
        };
    return {};
}

/**
 * All equivalence classes of two-graphs on n vertices, sorted by |Delta| then key.
 *
 * Besides the class list the catalog keeps a dense table from the
 * normal-form index of every labeled two-graph (the edge bits of its
 * representative graph with vertex n-1 isolated) to its class, so
 * classifying a labeled two-graph is a single lookup.
 */
class ClassCatalog
{
  public:
    static constexpr std::uint16_t kUnassigned = std::numeric_limits<std::uint16_t>::max();

    ClassCatalog(int n, std::vector<CatalogClass> classes, std::vector<std::uint16_t> lookup)
        : n_(n), classes_(std::move(classes)), lookup_(std::move(lookup))
    {
    }

    int vertex_count() const { return n_; }
    std::size_t size() const { return classes_.size(); }
    const std::vector<CatalogClass>& classes() const { return classes_; }
    const CatalogClass& operator[](std::size_t i) const { return classes_.at(i); }

    std::size_t class_index_of_packed(PackedDelta delta) const
    {
        return lookup_.at(detail::small_tables(n_).normal_form_index(delta));
    }

    /// Class index from the edge bits of a representative graph with vertex n-1 isolated.
    std::size_t class_index_of_normal_form(std::uint32_t index) const { return lookup_[index]; }

    std::size_t class_index_of(const TwoGraph& tg) const
    {
        if (tg.vertex_count() != n_)
            throw std::invalid_argument("two-graph size does not match the catalog");
        return class_index_of_packed(tg.packed());
    }

    const CatalogClass& class_of(const TwoGraph& tg) const { return classes_[class_index_of(tg)]; }

    std::optional<std::size_t> find_label(std::string_view label) const
    {
        for (std::size_t i = 0; i < classes_.size(); ++i)
            if (classes_[i].label == label)
                return i;
        return std::nullopt;
    }

    std::size_t index_of_label(std::string_view label) const
    {
        if (auto i = find_label(label))
            return *i;
        throw std::out_of_range("label " + std::string(label) + " is not bound in the catalog for n = " + std::to_string(n_));
    }

  private:
    int n_;
    std::vector<CatalogClass> classes_;
    std::vector<std::uint16_t> lookup_;
};

namespace detail {

/// Marks the S_n orbit of `delta` in `lookup` with `id`; returns the lex-minimal orbit element.
inline PackedDelta sweep_orbit(const SmallTables& tab, PackedDelta delta, std::uint16_t id, std::vector<std::uint16_t>& lookup)
{
    PackedDelta best = delta;
    for (std::size_t p = 0; p < tab.perm_count; ++p) {
        const PackedDelta img = tab.apply(p, delta);
        lookup[tab.normal_form_index(img)] = id;
        if (lex_less(img, best))
            best = img;
    }
    return best;
}

/// "(n,d)" labels with subscripts by catalog order when several classes share d,
/// then drawn-figure labels bound by class identity for n = 5, 6.
inline void assign_labels(int n, std::vector<CatalogClass>& classes, const std::vector<std::uint16_t>& lookup)
{
    std::map<int, int> per_d;
    for (const auto& c : classes)
        ++per_d[c.delta_popcount()];
    std::map<int, int> seen;
    for (auto& c : classes) {
        const int d = c.delta_popcount();
        c.label = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
        if (per_d[d] > 1)
            c.label += "_" + std::to_string(++seen[d]);
    }

    const auto figures = figure_representatives(n);
    if (figures.empty())
        return;
    if (figures.size() != classes.size())
        throw std::logic_error("figure representatives do not cover every class for n = " + std::to_string(n));
    const auto& tab = small_tables(n);
    std::vector<bool> bound(classes.size(), false);
    for (const auto& fig : figures) {
        const PackedDelta delta = two_graph_of(Graph(n, fig.edges)).packed();
        const std::size_t idx = lookup[tab.normal_form_index(delta)];
        if (bound[idx])
            throw std::logic_error("two drawn representatives fall into the same class: " + std::string(fig.label));
        bound[idx] = true;
        classes[idx].label = std::string(fig.label);
    }
}

inline ClassCatalog finish_catalog(int n, std::vector<CanonicalKey> keys, std::vector<std::uint16_t> lookup)
{
    std::vector<std::uint16_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::uint16_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    std::vector<std::uint16_t> remap(keys.size());
    std::vector<CatalogClass> classes;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        remap[order[pos]] = static_cast<std::uint16_t>(pos);
        classes.push_back({keys[order[pos]], {}});
    }
    for (auto& id : lookup)
        id = remap[id];
    assign_labels(n, classes, lookup);
    return ClassCatalog(n, std::move(classes), std::move(lookup));
}

} // namespace detail

/**
 * Enumerates the two-graph classes on n vertices, 1 <= n <= 8.
 *
 * Walks the 2^C(n-1,2) graphs with vertex n-1 isolated (one per labeled
 * two-graph). The first unvisited one starts a new class; its whole S_n
 * orbit is marked and the lex-minimal orbit element becomes the key.
 */
inline ClassCatalog enumerate_classes(int n)
{
    if (n < 1 || n > kMaxCanonicalVertices)
        throw std::out_of_range("class enumeration supports 1 <= n <= 8, got n = " + std::to_string(n));
    const auto& tab = detail::small_tables(n);
    const std::uint32_t total = std::uint32_t{1} << tab.pair_count;
    std::vector<std::uint16_t> lookup(total, ClassCatalog::kUnassigned);
    std::vector<CanonicalKey> keys;
    for (std::uint32_t idx = 0; idx < total; ++idx) {
        if (lookup[idx] != ClassCatalog::kUnassigned)
            continue;
        const auto id = static_cast<std::uint16_t>(keys.size());
        keys.push_back({n, detail::sweep_orbit(tab, tab.delta_of_normal_form(idx), id, lookup)});
    }
    return detail::finish_catalog(n, std::move(keys), std::move(lookup));
}

/// Rebuilds a catalog from previously computed keys (e.g. a cache file).
/// Throws if the keys are not canonical or do not cover every labeled two-graph.
inline ClassCatalog catalog_from_keys(int n, const std::vector<CanonicalKey>& keys)
{
    if (n < 1 || n > kMaxCanonicalVertices)
        throw std::out_of_range("class enumeration supports 1 <= n <= 8, got n = " + std::to_string(n));
    const auto& tab = detail::small_tables(n);
    std::vector<std::uint16_t> lookup(std::size_t{1} << tab.pair_count, ClassCatalog::kUnassigned);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (keys[i].n != n)
            throw std::invalid_argument("key vertex count mismatch");
        if (tab.delta_of_normal_form(tab.normal_form_index(keys[i].bits)) != keys[i].bits)
            throw std::invalid_argument("key " + key_hex(keys[i]) + " is not a two-graph");
        if (lookup[tab.normal_form_index(keys[i].bits)] != ClassCatalog::kUnassigned)
            throw std::invalid_argument("duplicate class in key list");
        const PackedDelta best = detail::sweep_orbit(tab, keys[i].bits, static_cast<std::uint16_t>(i), lookup);
        if (best != keys[i].bits)
            throw std::invalid_argument("key " + key_hex(keys[i]) + " is not canonical");
    }
    if (std::find(lookup.begin(), lookup.end(), ClassCatalog::kUnassigned) != lookup.end())
        throw std::invalid_argument("key list does not cover every class");
    return detail::finish_catalog(n, keys, std::move(lookup));
}

} // namespace twograph
