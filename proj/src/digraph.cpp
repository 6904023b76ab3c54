#include "minmaxhom/digraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <sstream>

namespace minmaxhom {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        auto [u, v] = arcs_[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (i > 0 && arcs_[i] == arcs_[i - 1])
            throw std::invalid_argument("duplicate arc");
    }
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& a : in_) std::sort(a.begin(), a.end());
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ' ') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    if (s.size() > 9) return false;
    out = std::atoi(s.c_str());
    return true;
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_fields(line);
        if (n < 0) {
            if (fields.size() != 4 || fields[0] != "p" || fields[1] != "dg" ||
                !parse_int(fields[2], n) || !parse_int(fields[3], m))
                throw ParseError("malformed header, expected 'p dg <n> <m>'",
                                 lineno);
            continue;
        }
        if (fields.size() != 3 || fields[0] != "a")
            throw ParseError("malformed arc line, expected 'a <u> <v>'", lineno);
        int u, v;
        if (!parse_int(fields[1], u) || !parse_int(fields[2], v))
            throw ParseError("malformed arc endpoints", lineno);
        if (u >= n || v >= n)
            throw ParseError("arc endpoint out of range", lineno);
        if (static_cast<int>(arcs.size()) >= m)
            throw ParseError("more arc lines than declared", lineno);
        Arc a{u, v};
        if (std::find(arcs.begin(), arcs.end(), a) != arcs.end())
            throw ParseError("duplicate arc", lineno);
        arcs.push_back(a);
    }
    if (n < 0) throw ParseError("missing header", lineno);
    if (static_cast<int>(arcs.size()) != m)
        throw ParseError("arc count mismatch: declared " + std::to_string(m) +
                             ", found " + std::to_string(arcs.size()),
                         lineno);
    return Digraph(n, std::move(arcs));
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "p dg " << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << "a " << u << ' ' << v << '\n';
    return out.str();
}

int OrientedWalk::net_length() const {
    int net = 0;
    for (Step s : steps) net += (s == Step::Forward) ? 1 : -1;
    return net;
}

int OrientedWalk::min_height() const {
    int net = 0, lo = 0;
    for (Step s : steps) {
        net += (s == Step::Forward) ? 1 : -1;
        lo = std::min(lo, net);
    }
    return lo;
}

int OrientedWalk::max_height() const {
    int net = 0, hi = 0;
    for (Step s : steps) {
        net += (s == Step::Forward) ? 1 : -1;
        hi = std::max(hi, net);
    }
    return hi;
}

bool OrientedWalk::valid_in(const Digraph& host) const {
    if (vertices.empty()) return false;
    if (steps.size() + 1 != vertices.size()) return false;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        int a = vertices[i], b = vertices[i + 1];
        bool ok = (steps[i] == Step::Forward) ? host.has_arc(a, b)
                                              : host.has_arc(b, a);
        if (!ok) return false;
    }
    return true;
}

OrientedWalk OrientedWalk::reversed() const {
    OrientedWalk r;
    r.vertices.assign(vertices.rbegin(), vertices.rend());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        r.steps.push_back(*it == Step::Forward ? Step::Backward : Step::Forward);
    return r;
}

std::vector<std::vector<int>> weak_components(const Digraph& d) {
    int n = d.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> parts;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        int id = static_cast<int>(parts.size());
        std::vector<int> members;
        std::vector<int> stack{root};
        comp[root] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : d.out_neighbors(v))
                if (comp[w] < 0) comp[w] = id, stack.push_back(w);
            for (int w : d.in_neighbors(v))
                if (comp[w] < 0) comp[w] = id, stack.push_back(w);
        }
        std::sort(members.begin(), members.end());
        parts.push_back(std::move(members));
    }
    return parts;
}

InducedSubdigraph induced_subdigraph(const Digraph& d,
                                     const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> local(d.vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs())
        if (local[u] >= 0 && local[v] >= 0) arcs.emplace_back(local[u], local[v]);
    return InducedSubdigraph{Digraph(static_cast<int>(sorted.size()), std::move(arcs)),
                             std::move(sorted)};
}

namespace {

struct SearchTree {
    std::vector<int> parent;      // -1 at root / unvisited
    std::vector<Step> step_from_parent;
    std::vector<int> label;       // integer potential, INT_MIN-ish unset
    std::vector<char> seen;

    explicit SearchTree(int n)
        : parent(n, -1), step_from_parent(n, Step::Forward), label(n, 0),
          seen(n, 0) {}

    /// Walk root -> v along tree arcs.
    OrientedWalk path_from_root(int v) const {
        std::vector<int> verts;
        std::vector<Step> steps;
        for (int x = v; x >= 0; x = parent[x]) {
            verts.push_back(x);
            if (parent[x] >= 0) steps.push_back(step_from_parent[x]);
        }
        OrientedWalk w;
        w.vertices.assign(verts.rbegin(), verts.rend());
        w.steps.assign(steps.rbegin(), steps.rend());
        return w;
    }
};

/// BFS potentials over a component: label(v) = label(u) + 1 along each arc
/// traversed forward, -1 backward.
SearchTree potential_tree(const Digraph& d, int root) {
    SearchTree t(d.vertex_count());
    t.seen[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : d.out_neighbors(u)) {
            if (t.seen[v]) continue;
            t.seen[v] = 1;
            t.parent[v] = u;
            t.step_from_parent[v] = Step::Forward;
            t.label[v] = t.label[u] + 1;
            queue.push_back(v);
        }
        for (int v : d.in_neighbors(u)) {
            if (t.seen[v]) continue;
            t.seen[v] = 1;
            t.parent[v] = u;
            t.step_from_parent[v] = Step::Backward;
            t.label[v] = t.label[u] - 1;
            queue.push_back(v);
        }
    }
    return t;
}

}  // namespace

BalanceResult balance_labeling(const Digraph& d,
                               const std::vector<int>& vertices) {
    BalanceResult res;
    if (vertices.empty()) {
        res.labels = std::vector<int>(d.vertex_count(), 0);
        return res;
    }
    int root = *std::min_element(vertices.begin(), vertices.end());
    SearchTree t = potential_tree(d, root);
    // Check every arc inside the component; a violated arc closes a walk of
    // non-zero net length through the root.
    for (int u : vertices) {
        for (int v : d.out_neighbors(u)) {
            if (!t.seen[v]) continue;
            if (t.label[v] == t.label[u] + 1) continue;
            OrientedWalk w = t.path_from_root(u);
            w.vertices.push_back(v);
            w.steps.push_back(Step::Forward);
            OrientedWalk back = t.path_from_root(v).reversed();
            w.vertices.insert(w.vertices.end(), back.vertices.begin() + 1,
                              back.vertices.end());
            w.steps.insert(w.steps.end(), back.steps.begin(), back.steps.end());
            res.witness = std::move(w);
            return res;
        }
    }
    int lo = t.label[root];
    for (int v : vertices) lo = std::min(lo, t.label[v]);
    std::vector<int> labels(d.vertex_count(), 0);
    for (int v : vertices) labels[v] = t.label[v] - lo;
    res.labels = std::move(labels);
    return res;
}

Height height_of(const Digraph& d, const std::vector<int>& vertices) {
    BalanceResult b = balance_labeling(d, vertices);
    if (!b.balanced()) return Height::inf();
    int hi = 0;
    for (int v : vertices) hi = std::max(hi, (*b.labels)[v]);
    return Height::finite(hi);
}

int cycle_gcd(const Digraph& d, const std::vector<int>& vertices) {
    if (vertices.empty()) return 0;
    int root = *std::min_element(vertices.begin(), vertices.end());
    SearchTree t = potential_tree(d, root);
    int g = 0;
    for (int u : vertices)
        for (int v : d.out_neighbors(u))
            if (t.seen[v]) g = std::gcd(g, std::abs(t.label[u] + 1 - t.label[v]));
    return g;
}

LevelResult level_assignment(const Digraph& d, const std::vector<int>& vertices,
                             int k) {
    if (k < 1) throw std::invalid_argument("modulus must be >= 1");
    LevelResult res;
    LevelAssignment la;
    la.k = k;
    la.levels.assign(d.vertex_count(), -1);
    if (vertices.empty()) {
        res.assignment = std::move(la);
        return res;
    }
    int root = *std::min_element(vertices.begin(), vertices.end());
    SearchTree t = potential_tree(d, root);
    auto mod = [k](int x) { return ((x % k) + k) % k; };
    for (int u : vertices)
        for (int v : d.out_neighbors(u))
            if (t.seen[v] && mod(t.label[u] + 1) != mod(t.label[v])) {
                res.conflict = {u, v};
                return res;
            }
    for (int v : vertices) la.levels[v] = mod(t.label[v]);
    res.assignment = std::move(la);
    return res;
}

LevelResult level_assignment_all(const Digraph& d, int k) {
    LevelResult res;
    LevelAssignment la;
    la.k = k;
    la.levels.assign(d.vertex_count(), -1);
    for (const auto& comp : weak_components(d)) {
        LevelResult part = level_assignment(d, comp, k);
        if (!part.ok()) return part;
        for (int v : comp) la.levels[v] = part.assignment->levels[v];
    }
    res.assignment = std::move(la);
    return res;
}

}  // namespace minmaxhom
