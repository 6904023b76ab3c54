// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criterion 8 shells out to the CLI binary.

#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/helpers.hpp"
#include "minmaxhom/classify.hpp"
#include "minmaxhom/generate.hpp"
#include "minmaxhom/json_io.hpp"
#include "minmaxhom/oracle.hpp"
#include "minmaxhom/solver.hpp"

using namespace minmaxhom;
using namespace minmaxhom::testing;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "criterion " << criterion << (ok ? " PASS" : " FAIL") << " ("
              << detail << ")\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

LevelAssignment flat_levels(int n) {
    return LevelAssignment{1, std::vector<int>(n, 0)};
}

// Engine vs oracle on one digraph with k=1; returns false on any mismatch or
// unsound witness.
bool engine_oracle_agree(const Digraph& h) {
    PairGraph pg = PairGraph::build(h);
    AdmitsResult adm = admits_ordering(pg);
    auto oracle = oracle_ordering(h, 1, flat_levels(h.vertex_count()));
    if (adm.yes != oracle.has_value()) return false;
    if (adm.yes) {
        if (!verify_ordering(h, synthesize_ordering(h, pg)).ok) return false;
    } else {
        if (!check_certificate(pg, adm.certificate)) return false;
    }
    return true;
}

void criterion1() {
    auto t0 = Clock::now();
    int checked = 0;
    bool ok = true;
    for (unsigned mask = 0; ok && mask < (1u << 9); ++mask) {
        ok = engine_oracle_agree(from_mask(3, mask, true));
        ++checked;
    }
    for (unsigned mask = 0; ok && mask < (1u << 12); ++mask) {
        ok = engine_oracle_agree(from_mask(4, mask, false));
        ++checked;
    }
    double dt = seconds_since(t0);
    ok = ok && checked == 512 + 4096 && dt < 60.0;
    std::ostringstream d;
    d << checked << " digraphs exhaustively, " << dt << "s";
    report(1, ok, d.str());
}

void criterion2() {
    const int ns[] = {5, 6, 7};
    const double ps[] = {0.15, 0.3, 0.5};
    bool ok = true;
    int checked = 0;
    for (int i = 0; ok && i < 1000; ++i) {
        Digraph h = gen_random(GeneratorSpec{ns[i % 3], ps[(i / 3) % 3],
                                             static_cast<std::uint64_t>(2000 + i),
                                             false});
        ok = engine_oracle_agree(h);
        ++checked;
    }
    std::ostringstream d;
    d << checked << " random digraphs, engine vs permutation oracle";
    report(2, ok, d.str());
}

void criterion3() {
    bool ok = true;
    Digraph c6 = directed_cycle(6);

    auto w = find_sym_invertible(PairGraph::build(c6));
    ok = ok && w.has_value() && w->u == 0 && w->v == 3 &&
         w->pair_walk.length() == 3;

    LevelResult l6 = level_assignment_all(c6, 6);
    ok = ok && l6.ok() &&
         !find_sym_invertible(PairGraph::build(c6, *l6.assignment)).has_value();

    LevelResult l3 = level_assignment_all(c6, 3);
    if (l3.ok()) {
        auto w3 = find_sym_invertible(PairGraph::build(c6, *l3.assignment));
        ok = ok && w3.has_value() && w3->u == 0 && w3->v == 3;
    } else {
        ok = false;
    }

    for (int k = 2; ok && k <= 8; ++k) {
        Digraph ck = directed_cycle(k);
        Classification c = classify(ck);
        ok = c.polynomial() && c.components.size() == 1 &&
             c.components[0].k == k &&
             !oracle_ordering(ck, 1, flat_levels(k)).has_value();
    }
    report(3, ok, "hexagon pair facts and directed cycles k=2..8");
}

int staircase_violations = 0;

void criteria4and5() {
    bool ok = true;
    int solved = 0;
    SplitMix64 cost_rng(424242);
    std::uint64_t tseed = 1;
    for (int i = 0; ok && i < 300; ++i) {
        // Alternate template families; reject non-polynomial random templates.
        Digraph h;
        Classification cls;
        if (i % 2 == 0) {
            h = gen_proper_interval(3 + i % 4, 9000 + i);
            cls = classify(h);
        } else {
            for (;; ++tseed) {
                h = gen_random(GeneratorSpec{4 + static_cast<int>(tseed % 3),
                                             0.35, tseed, tseed % 2 == 0});
                cls = classify(h);
                if (cls.polynomial() && h.arc_count() > 0) {
                    ++tseed;
                    break;
                }
            }
        }
        int ng = 5 + i % 4;  // 5..8
        Digraph g = gen_random(GeneratorSpec{ng, i % 2 == 0 ? 0.2 : 0.4,
                                             static_cast<std::uint64_t>(5000 + i),
                                             false});
        std::vector<std::vector<std::int64_t>> costs(
            ng, std::vector<std::int64_t>(h.vertex_count()));
        for (auto& row : costs)
            for (auto& x : row) x = static_cast<std::int64_t>(cost_rng.next() % 10);
        CostInstance inst{g, costs};

        Solution fast;
        try {
            fast = solve_polynomial(h, cls, inst);
        } catch (const StaircaseViolation&) {
            ++staircase_violations;
            ok = false;
            break;
        }
        Solution slow = solve_bruteforce(h, inst, 100'000'000);
        if (fast.optimal() != slow.optimal()) ok = false;
        if (fast.optimal()) {
            if (fast.cost != slow.cost) ok = false;
            if (!is_homomorphism(g, h, fast.mapping)) ok = false;
            std::int64_t total = 0;
            for (int u = 0; u < ng; ++u) total += costs[u][fast.mapping[u]];
            if (total != fast.cost) ok = false;
        }
        ++solved;
    }
    std::ostringstream d;
    d << solved << " instances, exact vs brute force, zero tolerance";
    report(4, ok, d.str());
    std::ostringstream d5;
    d5 << staircase_violations << " staircase violations across all solver runs";
    report(5, staircase_violations == 0, d5.str());
}

void criterion6() {
    bool ok = true;
    int checked = 0;
    for (int i = 0; ok && i < 200; ++i) {
        Digraph h = gen_proper_interval(1 + i % 20, 7000 + i);
        Classification c = classify(h);
        ok = c.polynomial();
        for (const auto& comp : c.components) ok = ok && comp.k == 1;
        ++checked;
    }
    std::ostringstream d;
    d << checked << " proper interval templates, all polynomial with k=1";
    report(6, ok, d.str());
}

void criterion7() {
    bool ok = true;
    std::ostringstream d;

    auto t0 = Clock::now();
    Digraph big = gen_random(GeneratorSpec{120, 0.1, 31337, false});
    Classification c = classify(big);
    double t_classify = seconds_since(t0);
    ok = ok && t_classify < 10.0;
    d << "classify n=120: " << t_classify << "s";

    // Template: polynomial, 30 vertices. Instance: 2000 vertices, 6000 arcs.
    Digraph h = gen_proper_interval(30, 77);
    Classification hc = classify(h);
    ok = ok && hc.polynomial();

    SplitMix64 rng(4040);
    std::set<Arc> arcset;
    while (arcset.size() < 6000) {
        int u = static_cast<int>(rng.next() % 2000);
        int v = static_cast<int>(rng.next() % 2000);
        if (u != v) arcset.insert({u, v});
    }
    Digraph g(2000, std::vector<Arc>(arcset.begin(), arcset.end()));
    std::vector<std::vector<std::int64_t>> costs(
        2000, std::vector<std::int64_t>(30));
    for (auto& row : costs)
        for (auto& x : row) x = static_cast<std::int64_t>(rng.next() % 10);

    auto t1 = Clock::now();
    Solution s = solve_polynomial(h, hc, CostInstance{g, costs});
    double t_solve = seconds_since(t1);
    ok = ok && t_solve < 10.0 && s.optimal() &&
         is_homomorphism(g, h, s.mapping);
    d << "; solve 2000/6000 vs n=30: " << t_solve << "s";
    report(7, ok, d.str());
}

// --- criterion 8: byte-identical CLI reruns -------------------------------

std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(MINMAXHOM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {status, out};
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

void criterion8() {
    fs::path dir = fs::temp_directory_path() /
                   ("minmaxhom_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    write_file(dir / "hexagon.dg", serialize_digraph(directed_cycle(6)));
    write_file(dir / "bad.dg",
               serialize_digraph(Digraph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}})));
    Digraph h = gen_proper_interval(5, 3);
    write_file(dir / "interval.dg", serialize_digraph(h));
    Digraph g = gen_random(GeneratorSpec{6, 0.3, 11, false});
    std::vector<std::vector<std::int64_t>> costs(6,
                                                 std::vector<std::int64_t>(5));
    SplitMix64 rng(8);
    for (auto& row : costs)
        for (auto& x : row) x = static_cast<std::int64_t>(rng.next() % 10);
    write_file(dir / "instance.json", instance_to_json(CostInstance{g, costs}));

    std::vector<std::string> cmds = {
        "classify " + (dir / "hexagon.dg").string(),
        "classify " + (dir / "bad.dg").string(),
        "classify --human " + (dir / "bad.dg").string(),
        "order --k auto " + (dir / "hexagon.dg").string(),
        "order --k 3 " + (dir / "hexagon.dg").string(),
        "order --k auto " + (dir / "interval.dg").string(),
        "solve " + (dir / "interval.dg").string() + " " +
            (dir / "instance.json").string(),
        "oracle ordering --k 1 " + (dir / "interval.dg").string(),
        "oracle cycles --max-len 5 " + (dir / "bad.dg").string(),
        "oracle solve " + (dir / "interval.dg").string() + " " +
            (dir / "instance.json").string(),
        "gen random --n 7 --p 0.3 --seed 5",
        "gen random --n 5 --p 0.5 --seed 9 --loops",
        "gen interval --n 12 --seed 4",
    };
    bool ok = true;
    for (const std::string& c : cmds) {
        auto first = run_cli(c);
        auto second = run_cli(c);
        if (first.first != second.first || first.second != second.second ||
            first.second.empty()) {
            ok = false;
            std::cerr << "non-deterministic or empty output: " << c << "\n";
        }
    }
    fs::remove_all(dir);
    std::ostringstream d;
    d << cmds.size() << " commands re-run byte-identically";
    report(8, ok, d.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criteria4and5();
    criterion6();
    criterion7();
    criterion8();
    return failures;
}
