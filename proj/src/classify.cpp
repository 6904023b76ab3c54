#include "minmaxhom/classify.hpp"

#include <sstream>

namespace minmaxhom {

Classification classify(const Digraph& h) {
    Classification result;
    for (const auto& comp : weak_components(h)) {
        auto sub = induced_subdigraph(h, comp);
        const Digraph& local = sub.graph;
        std::vector<int> all(local.vertex_count());
        for (int i = 0; i < local.vertex_count(); ++i) all[i] = i;

        int g = cycle_gcd(local, all);
        int k = g == 0 ? 1 : g;
        LevelResult lr = level_assignment(local, all, k);
        // k divides every closed-walk net length by construction.
        if (!lr.ok()) throw std::logic_error("level assignment failed for cycle gcd");

        PairGraph pg = PairGraph::build(local, *lr.assignment);
        AdmitsResult adm = admits_ordering(pg);
        if (!adm.yes) {
            result.status = Classification::Status::NPComplete;
            result.certificate.component_id = adm.certificate.component_id;
            for (auto [a, b] : adm.certificate.pairs)
                result.certificate.pairs.emplace_back(sub.local_to_global[a],
                                                      sub.local_to_global[b]);
            result.certificate_component = sub.local_to_global;
            result.certificate_k = k;
            result.components.clear();
            return result;
        }

        KMinMaxOrdering ord = synthesize_ordering(local, pg);
        ComponentClassification cc;
        cc.vertices = sub.local_to_global;
        cc.k = k;
        for (int i = 0; i < local.vertex_count(); ++i)
            cc.levels.push_back(ord.levels.levels[i]);
        for (const auto& cls : ord.orders) {
            std::vector<int> mapped;
            for (int v : cls) mapped.push_back(sub.local_to_global[v]);
            cc.orders.push_back(std::move(mapped));
        }
        result.components.push_back(std::move(cc));
    }
    return result;
}

std::string explain(const Classification& c) {
    std::ostringstream out;
    if (c.polynomial()) {
        out << "MinHOM is polynomial time solvable.\n";
        out << "components: " << c.components.size() << "\n";
        for (std::size_t i = 0; i < c.components.size(); ++i) {
            const auto& cc = c.components[i];
            out << "  component " << i << ": " << cc.vertices.size()
                << " vertices, k=" << cc.k << "\n";
            for (int t = 0; t < cc.k; ++t) {
                out << "    class " << t << ":";
                for (int v : cc.orders[t]) out << ' ' << v;
                out << "\n";
            }
        }
    } else {
        out << "MinHOM is NP-complete.\n";
        out << "k=" << c.certificate_k << ", circular chain certificate:";
        for (auto [a, b] : c.certificate.pairs)
            out << " (" << a << ',' << b << ')';
        out << "\n";
    }
    return out.str();
}

}  // namespace minmaxhom
