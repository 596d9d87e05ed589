#pragma once

#include "twograph/twograph.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace twograph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bumped whenever key layout or labeling changes; part of the catalog cache file name.
inline constexpr int kEngineVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandConfig {
    std::string subcommand;
    int n = 0;
    std::string format = "table";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 0;
    bool no_cache = false;
    std::string cache_dir;
    std::string which = "all";
    std::string file;
    std::vector<std::string> vector_tokens;
    bool corrupt_model = false;
};

inline std::filesystem::path default_cache_dir()
{
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "twograph";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "twograph";
    return std::filesystem::temp_directory_path() / "twograph-cache";
}

/// Catalog for n, read from or written to the cache unless disabled.
inline ClassCatalog load_catalog(int n, const CommandConfig& cfg, std::ostream& err)
{
    if (cfg.no_cache)
        return enumerate_classes(n);
    const auto dir = cfg.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cfg.cache_dir);
    const auto path = dir / ("catalog-n" + std::to_string(n) + "-v" + std::to_string(kEngineVersion) + ".json");
    if (std::ifstream in(path); in) {
        try {
            return catalog_from_json(Json::parse(in));
        } catch (const std::exception& e) {
            err << "warning: ignoring unreadable catalog cache " << path.string() << ": " << e.what() << "\n";
        }
    }
    ClassCatalog cat = enumerate_classes(n);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (std::ofstream os(path); os)
        os << catalog_to_json(cat).dump(2) << "\n";
    else
        err << "warning: could not write catalog cache " << path.string() << "\n";
    return cat;
}

/// Sends a document to --out or to `out`.
inline void emit(const CommandConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream os(cfg.out);
    if (!os)
        throw std::runtime_error("cannot write " + cfg.out);
    os << text;
}

/// One DOT file per graph under the --out directory.
inline void emit_dot_files(const CommandConfig& cfg, const std::vector<std::pair<std::string, Graph>>& graphs, std::ostream& err)
{
    if (cfg.out.empty())
        throw UsageError("--format dot writes one file per graph and needs --out DIR");
    std::filesystem::create_directories(cfg.out);
    for (const auto& [name, g] : graphs) {
        std::string file;
        for (char c : name)
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                file.push_back(c);
            else if (c == ',')
                file.push_back('_');
        const auto path = std::filesystem::path(cfg.out) / (file + ".dot");
        std::ofstream os(path);
        if (!os)
            throw std::runtime_error("cannot write " + path.string());
        os << to_dot(g, name);
    }
    err << "wrote " << graphs.size() << " DOT files to " << cfg.out << "\n";
}

inline int cmd_enumerate(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n < 3 || cfg.n > 8)
        throw UsageError("enumerate needs 3 <= n <= 8");
    const ClassCatalog cat = enumerate_classes(cfg.n);
    if (cfg.format == "json")
        emit(cfg, catalog_to_json(cat).dump(2) + "\n", out);
    else if (cfg.format == "table")
        emit(cfg, catalog_table(cat), out);
    else {
        std::vector<std::pair<std::string, Graph>> graphs;
        for (const auto& c : cat.classes())
            graphs.emplace_back(c.label, c.representative());
        emit_dot_files(cfg, graphs, err);
    }
    if (cfg.n <= 7) {
        if (cat.size() != kTwoGraphClassCounts[static_cast<std::size_t>(cfg.n)]) {
            err << "error: found " << cat.size() << " classes, expected " << kTwoGraphClassCounts[static_cast<std::size_t>(cfg.n)] << "\n";
            return kExitFailure;
        }
    } else {
        err << "n = " << cfg.n << ": " << cat.size() << " classes (computed)\n";
    }
    return kExitOk;
}

inline int cmd_classify(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n < 3 || cfg.n > 7)
        throw UsageError("classify needs 3 <= n <= 7");
    const ClassCatalog cat = load_catalog(cfg.n, cfg, err);
    const BitangentModel model = bitangent_two_graph();
    const RealizabilityReport rep = classify_subsets(cfg.n, cat, model, cfg.workers);
    if (cfg.format == "json")
        emit(cfg, report_to_json(rep).dump(2) + "\n", out);
    else if (cfg.format == "table")
        emit(cfg, report_table(rep), out);
    else {
        std::vector<std::pair<std::string, Graph>> graphs;
        for (const auto& r : rep.classes)
            if (r.witness) {
                std::vector<SignedMinimalVector> vs;
                for (int idx : *r.witness)
                    vs.push_back(model.vectors()[static_cast<std::size_t>(idx)]);
                graphs.emplace_back(r.label, graph_from_vectors(vs));
            }
        emit_dot_files(cfg, graphs, err);
    }
    const std::optional<std::size_t> expected = cfg.n == 5 ? std::optional<std::size_t>{5} : cfg.n == 6 ? std::optional<std::size_t>{9} : std::nullopt;
    if (expected && rep.realizable_count() != *expected) {
        err << "error: " << rep.realizable_count() << " realizable classes, expected " << *expected << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

struct Realization {
    std::vector<SignedMinimalVector> vectors;
    Graph graph;
    TwoGraph two_graph;
    CatalogClass cls;
};

inline Json realization_json(const Realization& r)
{
    Json vectors = Json::array();
    for (const auto& v : r.vectors)
        vectors.push_back(v.to_string());
    Json delta = Json::array();
    for (Triple t : r.two_graph.triples())
        delta.push_back({t.i, t.j, t.k});
    return {{"vectors", vectors},
            {"n", r.graph.vertex_count()},
            {"edges", edges_to_json(r.graph)},
            {"delta", delta},
            {"delta_popcount", r.two_graph.size()},
            {"label", r.cls.label},
            {"key_hex", key_hex(r.cls.key)}};
}

inline std::string realization_table(const Realization& r)
{
    std::ostringstream os;
    os << "vectors: ";
    for (std::size_t i = 0; i < r.vectors.size(); ++i)
        os << (i ? " " : "") << "v" << i + 1 << "=" << r.vectors[i].to_string();
    os << "\nedges:";
    for (auto [i, j] : r.graph.edges())
        os << " v" << i + 1 << "v" << j + 1;
    os << "\ndelta:";
    for (Triple t : r.two_graph.triples())
        os << " " << triple_name(t);
    os << "\n|delta| = " << r.two_graph.size() << "\nclass: " << r.cls.label << "\nkey: " << key_hex(r.cls.key) << "\n";
    return os.str();
}

inline int cmd_realize(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> lines;
    if (!cfg.file.empty()) {
        if (!cfg.vector_tokens.empty())
            throw UsageError("give either vector tokens or --file, not both");
        std::ifstream in(cfg.file);
        if (!in)
            throw UsageError("cannot read " + cfg.file);
        for (std::string line; std::getline(in, line);) {
            const auto body = line.substr(0, line.find('#'));
            if (body.find_first_not_of(" \t\r,") != std::string::npos)
                lines.push_back(line);
        }
    } else {
        std::string joined;
        for (const auto& t : cfg.vector_tokens)
            joined += t + " ";
        lines.push_back(joined);
    }

    std::vector<Realization> results;
    for (const auto& line : lines) {
        std::vector<SignedMinimalVector> vs;
        try {
            vs = parse_vector_list(line);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (vs.size() < 3 || vs.size() > 8)
            throw UsageError("a vector list needs between 3 and 8 entries, got " + std::to_string(vs.size()));
        Graph g(1);
        try {
            g = graph_from_vectors(vs);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("duplicate bitangent: ") + e.what());
        }
        const TwoGraph tg = two_graph_of(g);
        const ClassCatalog cat = load_catalog(static_cast<int>(vs.size()), cfg, err);
        results.push_back({vs, g, tg, cat.class_of(tg)});
    }

    if (cfg.format == "json") {
        Json doc;
        if (cfg.file.empty()) {
            doc = realization_json(results.front());
        } else {
            doc = {{"results", Json::array()}};
            for (const auto& r : results)
                doc["results"].push_back(realization_json(r));
        }
        emit(cfg, doc.dump(2) + "\n", out);
    } else if (cfg.format == "table") {
        std::string text;
        for (std::size_t i = 0; i < results.size(); ++i)
            text += (i ? "\n" : "") + realization_table(results[i]);
        emit(cfg, text, out);
    } else if (results.size() == 1) {
        emit(cfg, to_dot(results.front().graph, results.front().cls.label), out);
    } else {
        std::vector<std::pair<std::string, Graph>> graphs;
        for (std::size_t i = 0; i < results.size(); ++i)
            graphs.emplace_back("list" + std::to_string(i + 1), results[i].graph);
        emit_dot_files(cfg, graphs, err);
    }
    return kExitOk;
}

inline int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    static const std::vector<std::string> selectors{"all", "unique-tetrad", "reduction", "exclusions", "examples", "parity"};
    if (std::find(selectors.begin(), selectors.end(), cfg.which) == selectors.end())
        throw UsageError("unknown verification '" + cfg.which + "'");
    if (cfg.format == "dot")
        throw UsageError("verify supports --format json or table");
    auto wants = [&](const char* s) { return cfg.which == "all" || cfg.which == s; };

    BitangentModel model = bitangent_two_graph();
    if (cfg.corrupt_model)
        model = model.with_triple_removed(model.full_two_graph().triples().front());

    std::vector<LemmaReport> reports;
    if (wants("unique-tetrad"))
        reports.push_back(verify_unique_tetrad(model));
    if (wants("reduction"))
        reports.push_back(verify_reduction_random(1000, cfg.seed));
    if (wants("exclusions"))
        reports.push_back(verify_excluded_by_subgraph(load_catalog(6, cfg, err), load_catalog(5, cfg, err)));
    if (wants("examples"))
        reports.push_back(verify_reference_witnesses(model, load_catalog(5, cfg, err), load_catalog(6, cfg, err)));
    if (wants("parity")) {
        reports.push_back(verify_switching_parity(10000, cfg.seed));
        reports.push_back(verify_sign_independence(model, 100, cfg.seed));
    }

    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    for (const auto& r : reports)
        err << r.lemma << ": " << r.elapsed.count() << " ms\n";
    if (cfg.format == "json") {
        Json doc{{"passed", ok}, {"seed", cfg.seed}, {"reports", Json::array()}};
        for (const auto& r : reports)
            doc["reports"].push_back(lemma_to_json(r));
        emit(cfg, doc.dump(2) + "\n", out);
    } else {
        std::string text;
        for (const auto& r : reports)
            text += lemma_table_line(r);
        emit(cfg, text, out);
    }
    return ok ? kExitOk : kExitFailure;
}

inline void add_global_options(CLI::App& app, CommandConfig& cfg)
{
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
    app.add_option("--out", cfg.out, "Output path (directory for --format dot)");
    app.add_option("--workers", cfg.workers, "Worker threads, 0 = one per core");
    app.add_option("--seed", cfg.seed, "Seed for randomized verifications");
    app.add_flag("--no-cache", cfg.no_cache, "Recompute class catalogs instead of using the cache");
    app.add_option("--cache-dir", cfg.cache_dir, "Catalog cache directory");
}

/// Runs the command line; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CommandConfig cfg;
    CLI::App app{"Two-graph classes and bitangent realizability"};
    app.name("twograph");
    app.require_subcommand(1);
    add_global_options(app, cfg);

    auto* enumerate = app.add_subcommand("enumerate", "List all two-graph classes on n vertices");
    enumerate->add_option("--n", cfg.n, "Vertex count (3..8)")->required();
    auto* classify = app.add_subcommand("classify", "Classify every n-subset of the 28 bitangents");
    classify->add_option("--n", cfg.n, "Subset size (3..7)")->required();
    auto* realize = app.add_subcommand("realize", "Identify the class of a list of minimal vectors");
    realize->add_option("--file", cfg.file, "File with one vector list per line");
    realize->allow_extras();
    auto* verify = app.add_subcommand("verify", "Run lemma verifications");
    verify->add_option("--which", cfg.which, "all, unique-tetrad, reduction, exclusions, examples or parity");
    verify->add_flag("--corrupt-model", cfg.corrupt_model)->group("");
    for (auto* sub : {enumerate, classify, realize, verify})
        add_global_options(*sub, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(cfg, out, err);
        if (*classify)
            return cmd_classify(cfg, out, err);
        if (*realize) {
            cfg.vector_tokens = realize->remaining();
            if (cfg.vector_tokens.empty() && cfg.file.empty())
                throw UsageError("realize needs vector tokens or --file");
            return cmd_realize(cfg, out, err);
        }
        return cmd_verify(cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace twograph::cli
