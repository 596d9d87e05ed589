// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracle.hpp"

#include "twograph/twograph.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace twograph;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> check;
};

oracle::TripleSet as_set(const TwoGraph& tg)
{
    oracle::TripleSet s;
    for (Triple t : tg.triples())
        s.insert({t.i, t.j, t.k});
    return s;
}

std::string join(const std::vector<std::string>& xs)
{
    std::string out;
    for (const auto& x : xs)
        out += (out.empty() ? "" : " ") + x;
    return out;
}

std::string delta_text(const TwoGraph& tg)
{
    std::vector<std::string> names;
    for (Triple t : tg.triples())
        names.push_back(triple_name(t));
    return "{" + join(names) + "}";
}

const BitangentModel& model()
{
    static const BitangentModel m = BitangentModel::build();
    return m;
}

const ClassCatalog& catalog(int n)
{
    static std::map<int, ClassCatalog> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, enumerate_classes(n)).first;
    return it->second;
}

const RealizabilityReport& scan(int n)
{
    static std::map<int, RealizabilityReport> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, classify_subsets(n, catalog(n), model())).first;
    return it->second;
}

std::set<std::string> unrealizable(int n)
{
    std::set<std::string> out;
    for (const auto& r : scan(n).classes)
        if (!r.realizable)
            out.insert(r.label);
    return out;
}

std::string set_text(const std::set<std::string>& s)
{
    return "{" + join(std::vector<std::string>(s.begin(), s.end())) + "}";
}

std::vector<int> random_perm(int n, std::mt19937_64& rng)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(random_in(0, i, rng))]);
    return p;
}

Outcome class_counts()
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    std::vector<std::string> got;
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        const auto size = enumerate_classes(n).size();
        got.push_back(std::to_string(size));
        ok = ok && size == kTwoGraphClassCounts[static_cast<std::size_t>(n)];
    }
    const double small = std::chrono::duration<double>(clock::now() - start).count();
    const auto eight = enumerate_classes(8).size();
    const double total = std::chrono::duration<double>(clock::now() - start).count();
    ok = ok && small < 10.0;
    std::ostringstream os;
    os << "n=1..7: " << join(got) << " (" << small << " s); n=8: " << eight << " (" << total - small << " s)";
    return {ok && eight == 243, os.str()};
}

Outcome realizable_counts()
{
    using clock = std::chrono::steady_clock;
    std::ostringstream os;
    bool ok = true;
    for (auto [n, want] : {std::pair{5, 5u}, std::pair{6, 9u}}) {
        const auto start = clock::now();
        const auto got = scan(n).realizable_count();
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        ok = ok && got == want && secs < 60.0;
        os << (n == 5 ? "" : "; ") << "n=" << n << ": " << got << " realizable (" << secs << " s)";
    }
    return {ok, os.str()};
}

Outcome exclusions()
{
    const std::set<std::string> want5{"(5,7)", "(5,10)"};
    const std::set<std::string> want6(excluded_six_vertex_labels().begin(), excluded_six_vertex_labels().end());
    const auto got5 = unrealizable(5);
    const auto got6 = unrealizable(6);
    const auto sub = verify_excluded_by_subgraph(catalog(6), catalog(5));
    return {got5 == want5 && got6 == want6 && sub.passed(),
            "n=5 unrealizable " + set_text(got5) + "; n=6 unrealizable " + set_text(got6) + "; forbidden-subgraph check " +
                (sub.passed() ? "clean" : join(sub.violations))};
}

Outcome witness_lists()
{
    const auto rep = verify_reference_witnesses(model(), catalog(5), catalog(6));
    std::ostringstream os;
    os << rep.checked - rep.violations.size() << "/" << rep.checked << " lists land on their label";
    for (const auto& v : rep.violations)
        os << "; " << v;
    return {rep.passed(), os.str()};
}

Outcome four_vector_delta()
{
    const TwoGraph got = two_graph_of(graph_from_vectors(parse_vector_list("u14, u18, u28, u38")));
    const TwoGraph want = TwoGraph::from_triples(4, std::vector<Triple>{{0, 2, 3}, {1, 2, 3}});
    return {got == want, "computed Delta " + delta_text(got) + ", required " + delta_text(want) + " (same class: " +
                             (equivalent(got, want) ? "yes" : "no") + ")"};
}

Outcome unique_tetrad()
{
    const auto start = std::chrono::steady_clock::now();
    const auto rep = verify_unique_tetrad(model());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << rep.checked << " triples, " << rep.violations.size() << " violations (" << secs << " s)";
    return {rep.passed() && rep.checked == 1260 && secs < 10.0, os.str()};
}

Outcome properties()
{
    std::vector<std::string> parts;
    bool ok = true;
    auto record = [&](const std::string& name, std::uint64_t failures, std::uint64_t checked) {
        ok = ok && failures == 0;
        parts.push_back(name + " " + std::to_string(failures) + "/" + std::to_string(checked));
    };

    std::mt19937_64 rng(kDefaultSeed);
    std::uint64_t switch_fail = 0, valid_fail = 0;
    for (int i = 0; i < 10000; ++i) {
        const int n = random_in(1, kMaxVertices, rng);
        const Graph g = random_graph(n, rng);
        switch_fail += two_graph_of(switch_graph(g, random_vertex_set(n, rng))) != two_graph_of(g);
    }
    record("switching", switch_fail, 10000);
    for (int i = 0; i < 10000; ++i) {
        const int n = random_in(1, kMaxVertices, rng);
        const TwoGraph tg = two_graph_of(random_graph(n, rng));
        valid_fail += !validate(n, tg.delta());
    }
    record("validity", valid_fail, 10000);

    std::uint64_t round_fail = 0, round_checked = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& c : catalog(n).classes()) {
            const TwoGraph tg = c.two_graph();
            round_fail += two_graph_of(representative_graph(tg)) != tg;
            ++round_checked;
        }
    record("round-trip", round_fail, round_checked);

    std::uint64_t eq_fail = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = random_in(1, 6, rng);
        const TwoGraph a = two_graph_of(random_graph(n, rng));
        const TwoGraph b = (i % 2) ? two_graph_of(relabel(switch_graph(representative_graph(a), random_vertex_set(n, rng)), random_perm(n, rng)))
                                   : two_graph_of(random_graph(n, rng));
        eq_fail += equivalent(a, b) != oracle::equivalent(n, as_set(a), as_set(b));
    }
    record("equivalence", eq_fail, 1000);

    const auto red = verify_reduction_random(1000, kDefaultSeed);
    record("reduction", red.violations.size(), red.checked);
    const auto sign = verify_sign_independence(model(), 100, kDefaultSeed);
    record("sign-independence", sign.violations.size(), sign.checked);
    return {ok, "failures " + join(parts)};
}

Outcome no_large_six_subsets()
{
    const auto& rep = scan(6);
    std::uint64_t large = 0;
    for (const auto& r : rep.classes)
        if (r.key.delta_popcount() >= 14)
            large += r.count;
    return {large == 0 && rep.max_delta_popcount < 14 && rep.counted() == rep.total_subsets,
            std::to_string(rep.total_subsets) + " 6-subsets scanned, " + std::to_string(large) + " with |Delta| >= 14, max |Delta| " +
                std::to_string(rep.max_delta_popcount)};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "class counts n=1..7 (and n=8)", class_counts},
        {2, "realizable classes for n=5 and n=6", realizable_counts},
        {3, "unrealizable class sets", exclusions},
        {4, "reference witness lists", witness_lists},
        {5, "four-vector Delta", four_vector_delta},
        {6, "unique tetrad on the 28-vertex model", unique_tetrad},
        {7, "property suites", properties},
        {8, "no 6-subset with |Delta| >= 14", no_large_six_subsets},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s [%.2f s] | %s\n", o.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), secs, o.detail.c_str());
        failed += !o.passed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
