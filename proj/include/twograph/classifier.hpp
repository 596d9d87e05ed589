#pragma once

#include "catalog.hpp"
#include "e7.hpp"
#include "seidel.hpp"
#include "two_graph.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace twograph {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct RealizabilityRecord {
    std::string label;
    CanonicalKey key;
    bool realizable = false;
    std::uint64_t count = 0;
    std::optional<std::vector<int>> witness; // bitangent indices, colex-first realizing subset
};

struct RealizabilityReport {
    int n = 0;
    std::uint64_t total_subsets = 0;
    int max_delta_popcount = 0;
    std::vector<RealizabilityRecord> classes;

    std::size_t realizable_count() const
    {
        return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const auto& r) { return r.realizable; }));
    }

    std::uint64_t counted() const
    {
        std::uint64_t s = 0;
        for (const auto& r : classes)
            s += r.count;
        return s;
    }

    const RealizabilityRecord& by_label(std::string_view label) const
    {
        for (const auto& r : classes)
            if (r.label == label)
                return r;
        throw std::out_of_range("no class labeled " + std::string(label));
    }
};

inline unsigned resolve_workers(unsigned workers)
{
    if (workers != 0)
        return workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Tallies the induced two-graph class of every n-subset of the 28 bitangents.
 *
 * Subsets are visited by colex rank in contiguous blocks shared out to
 * the workers. Each block keeps its own counts and colex-first witness;
 * merging is a sum and a minimum, so the result does not depend on the
 * worker count or on scheduling.
 */
inline RealizabilityReport classify_subsets(int n, const ClassCatalog& catalog, const BitangentModel& model, unsigned workers = 0)
{
    if (n < 3 || n > 7)
        throw std::out_of_range("subset classification supports 3 <= n <= 7, got n = " + std::to_string(n));
    if (catalog.vertex_count() != n)
        throw std::invalid_argument("catalog is for n = " + std::to_string(catalog.vertex_count()) + ", not " + std::to_string(n));
    const TwoGraph& full = model.full_two_graph();
    if (full.vertex_count() != kBitangentCount)
        throw std::invalid_argument("bitangent model must have 28 vertices");

    constexpr int V = kBitangentCount;
    std::vector<std::uint8_t> in_delta(static_cast<std::size_t>(V * V * V), 0);
    for (int a = 0; a < V; ++a)
        for (int b = a + 1; b < V; ++b)
            for (int c = b + 1; c < V; ++c)
                in_delta[static_cast<std::size_t>((a * V + b) * V + c)] = full.contains({a, b, c}) ? 1 : 0;

    const std::uint64_t total = binomial_wide(V, n);
    const std::size_t class_count = catalog.size();
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

    struct Tally {
        std::vector<std::uint64_t> counts;
        std::vector<std::uint64_t> first;
    };

    const unsigned threads = resolve_workers(workers);
    const std::uint64_t blocks = std::min<std::uint64_t>(total, std::uint64_t{threads} * 16);
    std::vector<Tally> tallies(threads, Tally{std::vector<std::uint64_t>(class_count, 0), std::vector<std::uint64_t>(class_count, kNone)});
    std::atomic<std::uint64_t> next_block{0};

    auto work = [&](unsigned id) {
        Tally& t = tallies[id];
        for (std::uint64_t blk = next_block++; blk < blocks; blk = next_block++) {
            const std::uint64_t begin = total * blk / blocks;
            const std::uint64_t end = total * (blk + 1) / blocks;
            ColexSubset subset(n, begin);
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                const auto s = subset.elements();
                const int last = s[static_cast<std::size_t>(n - 1)];
                std::uint32_t index = 0;
                for (int b = 1; b < n - 1; ++b)
                    for (int a = 0; a < b; ++a)
                        index |= std::uint32_t{in_delta[static_cast<std::size_t>((s[static_cast<std::size_t>(a)] * V + s[static_cast<std::size_t>(b)]) * V + last)]}
                                 << pair_rank(a, b);
                const std::size_t cls = catalog.class_index_of_normal_form(index);
                ++t.counts[cls];
                if (t.first[cls] == kNone || rank < t.first[cls])
                    t.first[cls] = rank;
                if (rank + 1 < end)
                    subset.advance();
            }
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id)
            pool.emplace_back(work, id);
    }

    RealizabilityReport report;
    report.n = n;
    report.total_subsets = total;
    for (std::size_t c = 0; c < class_count; ++c) {
        RealizabilityRecord rec;
        rec.label = catalog[c].label;
        rec.key = catalog[c].key;
        std::uint64_t first = kNone;
        for (const auto& t : tallies) {
            rec.count += t.counts[c];
            first = std::min(first, t.first[c]);
        }
        rec.realizable = rec.count > 0;
        if (rec.realizable) {
            ColexSubset w(n, first);
            rec.witness = std::vector<int>(w.elements().begin(), w.elements().end());
            report.max_delta_popcount = std::max(report.max_delta_popcount, rec.key.delta_popcount());
        }
        report.classes.push_back(std::move(rec));
    }
    return report;
}

struct LemmaReport {
    std::string lemma;
    std::uint64_t checked = 0;
    std::vector<std::string> violations;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return violations.empty(); }
};

namespace detail {

class Stopwatch
{
  public:
    std::chrono::milliseconds elapsed() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string format_triple(Triple t)
{
    return "{" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + "}";
}

} // namespace detail

/// Every Delta triple of a two-graph must extend to exactly one tetrad whose four triples all lie in Delta.
inline LemmaReport verify_unique_tetrad(const TwoGraph& tg)
{
    detail::Stopwatch clock;
    LemmaReport rep{"unique-tetrad", 0, {}, {}};
    const int n = tg.vertex_count();
    for (Triple t : tg.triples()) {
        ++rep.checked;
        int completions = 0;
        for (int w = 0; w < n; ++w) {
            if (w == t.i || w == t.j || w == t.k)
                continue;
            if (tg.contains({t.i, t.j, w}) && tg.contains({t.i, t.k, w}) && tg.contains({t.j, t.k, w}))
                ++completions;
        }
        if (completions != 1)
            rep.violations.push_back("triple " + detail::format_triple(t) + " has " + std::to_string(completions) + " completing vertices");
    }
    rep.elapsed = clock.elapsed();
    return rep;
}

inline LemmaReport verify_unique_tetrad(const BitangentModel& model) { return verify_unique_tetrad(model.full_two_graph()); }

/// |Delta| after deleting each vertex in turn.
inline std::vector<std::size_t> deletion_sizes(const TwoGraph& tg)
{
    const int n = tg.vertex_count();
    std::vector<std::size_t> d(static_cast<std::size_t>(n), 0);
    for (Triple t : tg.triples())
        for (int v = 0; v < n; ++v)
            if (v != t.i && v != t.j && v != t.k)
                ++d[static_cast<std::size_t>(v)];
    return d;
}

/// Sum of the single-deletion sizes is (n-3)|Delta|, and the largest is at least (n-3)|Delta|/n.
inline bool verify_reduction_bound(const TwoGraph& tg)
{
    const int n = tg.vertex_count();
    if (n < 4)
        throw std::invalid_argument("reduction bound needs n >= 4");
    const auto d = deletion_sizes(tg);
    const std::uint64_t whole = tg.size();
    std::uint64_t sum = 0;
    std::uint64_t best = 0;
    for (auto x : d) {
        sum += x;
        best = std::max<std::uint64_t>(best, x);
    }
    return sum == static_cast<std::uint64_t>(n - 3) * whole && best * static_cast<std::uint64_t>(n) >= static_cast<std::uint64_t>(n - 3) * whole;
}

/// Fair coin per vertex pair, drawn from raw generator bits.
inline Graph random_graph(int n, std::mt19937_64& rng)
{
    Graph::Bits bits;
    const int pairs = static_cast<int>(binomial(n, 2));
    for (int base = 0; base < pairs; base += 64) {
        const std::uint64_t word = rng();
        for (int b = 0; b < 64 && base + b < pairs; ++b)
            if ((word >> b) & 1u)
                bits.set(static_cast<std::size_t>(base + b));
    }
    return Graph::from_bits(n, bits);
}

inline VertexSet random_vertex_set(int n, std::mt19937_64& rng)
{
    return static_cast<VertexSet>(rng() & ((std::uint64_t{1} << n) - 1));
}

/// Integer in [lo, hi] from raw generator bits.
inline int random_in(int lo, int hi, std::mt19937_64& rng)
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline LemmaReport verify_reduction_random(std::uint64_t count, std::uint64_t seed)
{
    detail::Stopwatch clock;
    LemmaReport rep{"reduction", 0, {}, {}};
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        const int n = random_in(4, 8, rng);
        const TwoGraph tg = two_graph_of(random_graph(n, rng));
        ++rep.checked;
        if (!verify_reduction_bound(tg))
            rep.violations.push_back("sample " + std::to_string(i) + " (n = " + std::to_string(n) + ") breaks the bound");
    }
    rep.elapsed = clock.elapsed();
    return rep;
}

/// Switching leaves every triple parity unchanged, and graph two-graphs satisfy the 4-subset condition.
inline LemmaReport verify_switching_parity(std::uint64_t count, std::uint64_t seed)
{
    detail::Stopwatch clock;
    LemmaReport rep{"parity", 0, {}, {}};
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        const int n = random_in(1, kBitangentCount, rng);
        const Graph g = random_graph(n, rng);
        const VertexSet s = random_vertex_set(n, rng);
        ++rep.checked;
        if (two_graph_of(switch_graph(g, s)) != two_graph_of(g))
            rep.violations.push_back("sample " + std::to_string(i) + ": switching changed the two-graph");
        const int m = random_in(4, 12, rng);
        if (!two_graph_of(random_graph(m, rng)).is_valid())
            rep.violations.push_back("sample " + std::to_string(i) + ": graph two-graph failed the 4-subset condition");
    }
    rep.elapsed = clock.elapsed();
    return rep;
}

/// Any choice of signs for the 28 representatives gives the same two-graph.
inline LemmaReport verify_sign_independence(const BitangentModel& model, std::uint64_t count, std::uint64_t seed)
{
    detail::Stopwatch clock;
    LemmaReport rep{"sign-independence", 0, {}, {}};
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto signs = static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << kBitangentCount) - 1));
        ++rep.checked;
        if (two_graph_of(model.graph_with_signs(signs)) != model.full_two_graph())
            rep.violations.push_back("sign mask " + std::to_string(signs) + " changed the two-graph");
    }
    rep.elapsed = clock.elapsed();
    return rep;
}

/// Six-vertex classes that cannot occur, and those realized by explicit witnesses.
inline const std::vector<std::string_view>& excluded_six_vertex_labels()
{
    static const std::vector<std::string_view> labels{"(6,10)_2", "(6,10)_3", "(6,12)_1", "(6,12)_2", "(6,14)", "(6,16)", "(6,20)"};
    return labels;
}

inline const std::vector<std::string_view>& realizable_six_vertex_labels()
{
    static const std::vector<std::string_view> labels{"(6,0)",    "(6,4)",    "(6,6)",    "(6,8)_1", "(6,8)_2",
                                                      "(6,8)_3", "(6,10)_1", "(6,10)_4", "(6,12)_3"};
    return labels;
}

inline const std::vector<std::string_view>& forbidden_five_vertex_labels()
{
    static const std::vector<std::string_view> labels{"(5,7)", "(5,10)"};
    return labels;
}

/// Labels of the five-vertex classes met by deleting one vertex of a six-vertex class.
inline std::vector<std::string> deletion_labels(const TwoGraph& tg6, const ClassCatalog& catalog5)
{
    std::vector<std::string> out;
    for (int drop = 0; drop < 6; ++drop) {
        std::vector<int> keep;
        for (int v = 0; v < 6; ++v)
            if (v != drop)
                keep.push_back(v);
        out.push_back(catalog5.class_of(induced(tg6, keep)).label);
    }
    return out;
}

/**
 * Excluded six-vertex classes each contain a (5,7) or (5,10) sub-two-graph;
 * the nine realizable ones contain neither.
 */
inline LemmaReport verify_excluded_by_subgraph(const ClassCatalog& catalog6, const ClassCatalog& catalog5)
{
    detail::Stopwatch clock;
    LemmaReport rep{"exclusions", 0, {}, {}};
    if (catalog6.vertex_count() != 6 || catalog5.vertex_count() != 5)
        throw std::invalid_argument("exclusion check needs the n = 6 and n = 5 catalogs");
    auto has_forbidden = [&](std::string_view label) {
        const auto labels = deletion_labels(catalog6[catalog6.index_of_label(label)].two_graph(), catalog5);
        for (auto f : forbidden_five_vertex_labels())
            for (const auto& l : labels)
                if (l == f)
                    return true;
        return false;
    };
    for (auto label : excluded_six_vertex_labels()) {
        ++rep.checked;
        if (!has_forbidden(label))
            rep.violations.push_back(std::string(label) + " has no induced (5,7) or (5,10)");
    }
    for (auto label : realizable_six_vertex_labels()) {
        ++rep.checked;
        if (has_forbidden(label))
            rep.violations.push_back(std::string(label) + " contains an induced (5,7) or (5,10)");
    }
    rep.elapsed = clock.elapsed();
    return rep;
}

struct WitnessList {
    std::string_view label;
    std::string_view vectors;
};

/// Reference minimal-vector lists realizing each realizable five- and six-vertex class.
inline const std::vector<WitnessList>& reference_witness_lists()
{
    static const std::vector<WitnessList> lists{
        {"(5,0)", "u18, u28, u38, u48, u58"},
        {"(5,3)", "u18, u28, u38, u48, -u15"},
        {"(5,4)", "u18, u28, u38, u48, -u12"},
        {"(5,5)", "u18, u28, u38, u23, -u24"},
        {"(5,6)", "u18, u28, u13, u23, u12"},
        {"(6,0)", "u18, u28, u38, u48, u58, u68"},
        {"(6,4)", "u18, u28, u38, u48, u58, -u16"},
        {"(6,6)", "u18, u28, u38, u48, u58, -u12"},
        {"(6,8)_1", "u18, u28, u38, u48, -u15, -u26"},
        {"(6,8)_2", "u18, u28, u38, u48, -u15, -u25"},
        {"(6,8)_3", "u18, u28, u38, -u14, u23, u48"},
        {"(6,10)_1", "u18, u28, u38, u48, -u14, -u34"},
        {"(6,10)_4", "u18, u28, u38, u23, -u24, u35"},
        {"(6,12)_3", "u18, u28, u38, u12, u13, u23"},
    };
    return lists;
}

/**
 * Builds each reference witness list into a graph, and checks that its
 * class carries the listed label. The same subset read off the 28-vertex
 * model must give the identical two-graph.
 */
inline LemmaReport verify_reference_witnesses(const BitangentModel& model, const ClassCatalog& catalog5, const ClassCatalog& catalog6)
{
    detail::Stopwatch clock;
    LemmaReport rep{"examples", 0, {}, {}};
    for (const auto& w : reference_witness_lists()) {
        ++rep.checked;
        const auto vs = parse_vector_list(w.vectors);
        const int n = static_cast<int>(vs.size());
        const ClassCatalog& catalog = n == 5 ? catalog5 : catalog6;
        if (catalog.vertex_count() != n)
            throw std::invalid_argument("catalog size mismatch for witness " + std::string(w.label));
        const TwoGraph tg = two_graph_of(graph_from_vectors(vs));
        std::vector<int> indices;
        for (const auto& v : vs)
            indices.push_back(bitangent_index(v));
        if (induced(model.full_two_graph(), indices) != tg)
            rep.violations.push_back(std::string(w.label) + ": vector list and model disagree on Delta");
        const auto& got = catalog.class_of(tg);
        if (got.label != w.label) {
            const auto& want = catalog[catalog.index_of_label(w.label)];
            rep.violations.push_back(std::string(w.label) + " [" + std::string(w.vectors) + "] realizes " + got.label + " (key " +
                                     key_hex(got.key) + "), expected key " + key_hex(want.key));
        }
    }
    rep.elapsed = clock.elapsed();
    return rep;
}

} // namespace twograph
