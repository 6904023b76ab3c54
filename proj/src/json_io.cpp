#include "minmaxhom/json_io.hpp"

#include <json.hpp>

namespace minmaxhom {

using nlohmann::json;

std::string ordering_to_json(const KMinMaxOrdering& ord) {
    json j;
    j["k"] = ord.k;
    j["levels"] = ord.levels.levels;
    j["orders"] = ord.orders;
    return j.dump();
}

KMinMaxOrdering ordering_from_json(const std::string& text) {
    json j = json::parse(text);
    KMinMaxOrdering ord;
    ord.k = j.at("k").get<int>();
    ord.levels.k = ord.k;
    ord.levels.levels = j.at("levels").get<std::vector<int>>();
    ord.orders = j.at("orders").get<std::vector<std::vector<int>>>();
    return ord;
}

namespace {

json certificate_json(const CircularChain& chain, int k) {
    json pairs = json::array();
    for (auto [a, b] : chain.pairs) pairs.push_back(json::array({a, b}));
    return json{{"kind", "circular_chain"},
                {"k", k},
                {"pairs", pairs},
                {"component_id", chain.component_id}};
}

}  // namespace

std::string certificate_to_json(const CircularChain& chain, int k) {
    return certificate_json(chain, k).dump();
}

std::string classification_to_json(const Classification& c) {
    json j;
    if (c.polynomial()) {
        j["status"] = "polynomial";
        json comps = json::array();
        for (const auto& cc : c.components)
            comps.push_back(json{{"vertices", cc.vertices},
                                 {"k", cc.k},
                                 {"levels", cc.levels},
                                 {"orders", cc.orders}});
        j["components"] = comps;
    } else {
        j["status"] = "np_complete";
        j["k"] = c.certificate_k;
        j["certificate"] = certificate_json(c.certificate, c.certificate_k);
    }
    return j.dump();
}

CostInstance instance_from_json(const std::string& text, int template_size) {
    json j = json::parse(text);
    int ng = j.at("n_g").get<int>();
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs"))
        arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    CostInstance inst;
    inst.g = Digraph(ng, std::move(arcs));
    inst.costs = j.at("costs").get<std::vector<std::vector<std::int64_t>>>();
    if (static_cast<int>(inst.costs.size()) != ng)
        throw std::invalid_argument("cost matrix row count mismatch");
    for (const auto& row : inst.costs)
        if (static_cast<int>(row.size()) != template_size)
            throw std::invalid_argument("cost matrix column count mismatch");
    return inst;
}

std::string instance_to_json(const CostInstance& inst) {
    json arcs = json::array();
    for (auto [u, v] : inst.g.arcs()) arcs.push_back(json::array({u, v}));
    return json{{"n_g", inst.g.vertex_count()},
                {"arcs", arcs},
                {"costs", inst.costs}}
        .dump();
}

std::string solution_to_json(const Solution& sol) {
    if (!sol.optimal()) return json{{"status", "infeasible"}}.dump();
    return json{{"status", "optimal"}, {"cost", sol.cost}, {"mapping", sol.mapping}}
        .dump();
}

std::string verify_result_to_json(const VerifyResult& res) {
    if (res.ok) return json{{"status", "ok"}}.dump();
    if (!res.structural_error.empty())
        return json{{"status", "structural_error"},
                    {"message", res.structural_error}}
            .dump();
    return json{{"status", "violation"},
                {"i", res.i},
                {"j", res.j},
                {"s", res.s},
                {"r", res.r},
                {"missing", json::array({res.missing.first, res.missing.second})}}
        .dump();
}

}  // namespace minmaxhom
