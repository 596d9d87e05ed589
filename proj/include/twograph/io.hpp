#pragma once

#include "catalog.hpp"
#include "classifier.hpp"
#include "e7.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace twograph {

using Json = nlohmann::ordered_json;

inline Json edges_to_json(const Graph& g)
{
    Json edges = Json::array();
    for (auto [i, j] : g.edges())
        edges.push_back({i, j});
    return edges;
}

inline Json catalog_to_json(const ClassCatalog& cat)
{
    Json classes = Json::array();
    for (const auto& c : cat.classes())
        classes.push_back({{"label", c.label},
                           {"delta_popcount", c.delta_popcount()},
                           {"key_hex", key_hex(c.key)},
                           {"representative_edges", edges_to_json(c.representative())}});
    return {{"n", cat.vertex_count()}, {"classes", std::move(classes)}};
}

/// Reads a catalog document back; keys are re-verified and labels must bind identically.
inline ClassCatalog catalog_from_json(const Json& doc)
{
    const int n = doc.at("n").get<int>();
    std::vector<CanonicalKey> keys;
    std::vector<std::string> labels;
    for (const auto& c : doc.at("classes")) {
        keys.push_back({n, parse_key_hex(n, c.at("key_hex").get<std::string>())});
        labels.push_back(c.at("label").get<std::string>());
    }
    ClassCatalog cat = catalog_from_keys(n, keys);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const std::size_t idx = cat.class_index_of_packed(keys[i].bits);
        if (cat[idx].label != labels[i])
            throw std::invalid_argument("catalog label " + labels[i] + " does not match computed label " + cat[idx].label);
    }
    return cat;
}

inline std::string catalog_table(const ClassCatalog& cat)
{
    std::ostringstream os;
    os << "n = " << cat.vertex_count() << ", " << cat.size() << " classes\n";
    os << "label        |D|  key                representative edges\n";
    for (const auto& c : cat.classes()) {
        char head[64];
        std::snprintf(head, sizeof head, "%-12s %3d  %-18s", c.label.c_str(), c.delta_popcount(), key_hex(c.key).c_str());
        os << head << " ";
        bool first = true;
        for (auto [i, j] : c.representative().edges()) {
            os << (first ? "" : " ") << "v" << i + 1 << "v" << j + 1;
            first = false;
        }
        if (first)
            os << "-";
        os << "\n";
    }
    return os.str();
}

inline Json witness_pairs_json(const std::vector<int>& indices)
{
    Json pairs = Json::array();
    for (int idx : indices) {
        auto [j, k] = bitangent_pair(idx);
        pairs.push_back({j, k});
    }
    return pairs;
}

inline std::string witness_text(const std::vector<int>& indices)
{
    std::string out;
    for (int idx : indices) {
        auto [j, k] = bitangent_pair(idx);
        if (!out.empty())
            out += " ";
        out += "u" + std::to_string(j) + std::to_string(k);
    }
    return out;
}

inline Json report_to_json(const RealizabilityReport& rep)
{
    Json classes = Json::array();
    for (const auto& r : rep.classes)
        classes.push_back({{"label", r.label},
                           {"key_hex", key_hex(r.key)},
                           {"realizable", r.realizable},
                           {"count", r.count},
                           {"witness_pairs", r.witness ? witness_pairs_json(*r.witness) : Json(nullptr)}});
    return {{"n", rep.n}, {"total_subsets", rep.total_subsets}, {"classes", std::move(classes)}};
}

inline std::string report_table(const RealizabilityReport& rep)
{
    std::ostringstream os;
    os << "n = " << rep.n << ": " << rep.realizable_count() << " of " << rep.classes.size() << " classes realizable, "
       << rep.counted() << " of " << rep.total_subsets << " subsets\n";
    os << "label        |D|  realizable       count  witness\n";
    for (const auto& r : rep.classes) {
        char head[80];
        std::snprintf(head, sizeof head, "%-12s %3d  %-10s %11llu  ", r.label.c_str(), r.key.delta_popcount(), r.realizable ? "yes" : "no",
                      static_cast<unsigned long long>(r.count));
        os << head << (r.witness ? witness_text(*r.witness) : "-") << "\n";
    }
    return os.str();
}

inline Json lemma_to_json(const LemmaReport& rep)
{
    return {{"lemma", rep.lemma}, {"passed", rep.passed()}, {"checked", rep.checked}, {"violations", rep.violations}};
}

inline std::string lemma_table_line(const LemmaReport& rep)
{
    std::ostringstream os;
    os << (rep.passed() ? "PASS " : "FAIL ") << rep.lemma << ": " << rep.checked << " checked, " << rep.violations.size()
       << " violations, " << rep.elapsed.count() << " ms\n";
    for (const auto& v : rep.violations)
        os << "  " << v << "\n";
    return os.str();
}

/// "v1v3v4" style name of a triple.
inline std::string triple_name(Triple t)
{
    return "v" + std::to_string(t.i + 1) + "v" + std::to_string(t.j + 1) + "v" + std::to_string(t.k + 1);
}

} // namespace twograph
