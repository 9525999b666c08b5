#include "ulrich/graph_io.hpp"

#include <json.hpp>

#include "ulrich/errors.hpp"

namespace ulrich {

using nlohmann::json;

DualGraph parse_graph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("graph file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw validation_error("graph file: expected an object with a \"vertices\" array");

    std::vector<VertexSpec> verts;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("self"))
            throw validation_error("graph file: each vertex needs \"id\" and \"self\"");
        if (!v["id"].is_string() || !v["self"].is_number_integer())
            throw validation_error("graph file: vertex \"id\" must be a string, \"self\" an integer");
        verts.push_back({v["id"].get<std::string>(), v["self"].get<Int>()});
    }

    std::vector<EdgeSpec> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw validation_error("graph file: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_object() || !e.contains("a") || !e.contains("b"))
                throw validation_error("graph file: each edge needs \"a\" and \"b\"");
            EdgeSpec spec;
            spec.a = e["a"].get<std::string>();
            spec.b = e["b"].get<std::string>();
            if (e.contains("mult")) {
                if (!e["mult"].is_number_integer())
                    throw validation_error("graph file: edge \"mult\" must be an integer");
                spec.multiplicity = e["mult"].get<Int>();
            }
            edges.push_back(std::move(spec));
        }
    }
    return DualGraph(std::move(verts), std::move(edges));
}

std::string render_graph_json(const DualGraph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : g.vertices())
        doc["vertices"].push_back({{"id", v.id}, {"self", v.self_intersection}});
    doc["edges"] = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (g.entry(i, j) > 0)
                doc["edges"].push_back(
                    {{"a", g.id_of(i)}, {"b", g.id_of(j)}, {"mult", g.entry(i, j)}});
        }
    }
    return doc.dump(2);
}

Cycle parse_cycle_spec(const DualGraph& g, const std::string& spec) {
    Cycle z(std::vector<Int>(g.size(), 0));
    std::vector<bool> set(g.size(), false);
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        const std::string item = spec.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw validation_error("cycle: expected id=value, got \"" + item + "\"");
        const std::size_t idx = g.index_of(item.substr(0, eq));
        if (set[idx]) throw validation_error("cycle: repeated vertex " + item.substr(0, eq));
        Int value;
        try {
            std::size_t used = 0;
            value = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw validation_error("cycle: bad coefficient in \"" + item + "\"");
        }
        if (value < 0) throw validation_error("cycle: coefficients must be >= 0");
        z[idx] = value;
        set[idx] = true;
        pos = comma + 1;
    }
    return z;
}

} // namespace ulrich
