#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minmaxhom/classify.hpp"
#include "minmaxhom/generate.hpp"
#include "minmaxhom/json_io.hpp"
#include "minmaxhom/oracle.hpp"
#include "minmaxhom/solver.hpp"

namespace {

using namespace minmaxhom;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Digraph load_digraph(const std::string& path) {
    return parse_digraph(read_file(path));
}

/// Largest modulus admitted by every weak component; 1 when all balanced.
int auto_modulus(const Digraph& h) {
    int g = 0;
    for (const auto& comp : weak_components(h)) g = std::gcd(g, cycle_gcd(h, comp));
    return g == 0 ? 1 : g;
}

int cmd_classify(const std::string& path, bool human) {
    Classification c = classify(load_digraph(path));
    if (human)
        std::cout << explain(c);
    else
        std::cout << classification_to_json(c) << '\n';
    return c.polynomial() ? kExitOk : kExitNegative;
}

int cmd_order(const std::string& path, const std::string& k_arg) {
    Digraph h = load_digraph(path);
    int k;
    if (k_arg == "auto") {
        k = auto_modulus(h);
    } else {
        try {
            k = std::stoi(k_arg);
        } catch (const std::exception&) {
            throw std::invalid_argument("--k expects 'auto' or a positive integer");
        }
        if (k < 1) throw std::invalid_argument("--k must be >= 1");
    }
    LevelResult lr = level_assignment_all(h, k);
    if (!lr.ok()) {
        std::cerr << "error: no homomorphism to the directed " << k
                  << "-cycle (arc " << lr.conflict.first << "->"
                  << lr.conflict.second << " is inconsistent)\n";
        return kExitInputError;
    }
    PairGraph pg = PairGraph::build(h, *lr.assignment);
    AdmitsResult adm = admits_ordering(pg);
    if (!adm.yes) {
        CircularChain chain;
        chain.component_id = adm.certificate.component_id;
        chain.pairs = adm.certificate.pairs;
        std::cout << certificate_to_json(chain, k) << '\n';
        return kExitNegative;
    }
    KMinMaxOrdering ord = synthesize_ordering(h, pg);
    std::cout << ordering_to_json(ord) << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& h_path, const std::string& ord_path) {
    Digraph h = load_digraph(h_path);
    KMinMaxOrdering ord = ordering_from_json(read_file(ord_path));
    VerifyResult res = verify_ordering(h, ord);
    std::cout << verify_result_to_json(res) << '\n';
    return res.ok ? kExitOk : kExitNegative;
}

int cmd_solve(const std::string& h_path, const std::string& inst_path) {
    Digraph h = load_digraph(h_path);
    CostInstance inst = instance_from_json(read_file(inst_path), h.vertex_count());
    Classification c = classify(h);
    if (!c.polynomial()) {
        std::cerr << "error: MinHOM for this template is NP-complete; "
                     "certificate: "
                  << certificate_to_json(c.certificate, c.certificate_k) << '\n';
        return kExitInputError;
    }
    Solution sol = solve_polynomial(h, c, inst);
    std::cout << solution_to_json(sol) << '\n';
    return sol.optimal() ? kExitOk : kExitNegative;
}

int cmd_oracle_ordering(const std::string& path, int k, std::int64_t guard) {
    Digraph h = load_digraph(path);
    LevelResult lr = level_assignment_all(h, k);
    if (!lr.ok()) {
        std::cerr << "error: no homomorphism to the directed " << k << "-cycle\n";
        return kExitInputError;
    }
    auto ord = oracle_ordering(h, k, *lr.assignment, guard);
    if (!ord) {
        std::cout << "{\"status\":\"none\"}" << '\n';
        return kExitNegative;
    }
    std::cout << ordering_to_json(*ord) << '\n';
    return kExitOk;
}

int cmd_oracle_cycles(const std::string& path, int max_len, std::int64_t guard) {
    Digraph h = load_digraph(path);
    auto cycles = oracle_induced_cycles(h, max_len, guard);
    std::cout << "[";
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << "{\"net_length\":" << cycles[i].net_length
                  << ",\"vertices\":[";
        for (std::size_t j = 0; j < cycles[i].vertices.size(); ++j) {
            if (j) std::cout << ',';
            std::cout << cycles[i].vertices[j];
        }
        std::cout << "]}";
    }
    std::cout << "]\n";
    return kExitOk;
}

int cmd_oracle_solve(const std::string& h_path, const std::string& inst_path,
                     std::int64_t guard) {
    Digraph h = load_digraph(h_path);
    CostInstance inst = instance_from_json(read_file(inst_path), h.vertex_count());
    Solution sol = solve_bruteforce(h, inst, guard);
    std::cout << solution_to_json(sol) << '\n';
    return sol.optimal() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Min-Max ordering duality, MinHOM dichotomy and exact solver"};
    app.require_subcommand(1);

    std::string h_path, aux_path;
    bool human = false;
    std::string k_arg = "auto";
    int k_int = 1;
    int max_len = 8;
    std::int64_t guard = 10'000'000;

    auto* classify_cmd = app.add_subcommand("classify", "classify MinHOM(H)");
    classify_cmd->add_option("template", h_path, "template .dg file")->required();
    classify_cmd->add_flag("--human", human, "human-readable report");

    auto* order_cmd = app.add_subcommand("order", "synthesize a k-Min-Max ordering");
    order_cmd->add_option("template", h_path)->required();
    order_cmd->add_option("--k", k_arg, "modulus, 'auto' or an integer");

    auto* verify_cmd = app.add_subcommand("verify", "verify an ordering");
    verify_cmd->add_option("template", h_path)->required();
    verify_cmd->add_option("ordering", aux_path, "ordering JSON file")->required();

    auto* solve_cmd = app.add_subcommand("solve", "solve a MinHOM instance");
    solve_cmd->add_option("template", h_path)->required();
    solve_cmd->add_option("instance", aux_path, "instance JSON file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force oracles");
    oracle_cmd->require_subcommand(1);
    auto* oo = oracle_cmd->add_subcommand("ordering", "exhaustive ordering search");
    oo->add_option("template", h_path)->required();
    oo->add_option("--k", k_int, "modulus")->check(CLI::PositiveNumber);
    oo->add_option("--guard", guard, "permutation guard");
    auto* oc = oracle_cmd->add_subcommand("cycles", "induced oriented cycles");
    oc->add_option("template", h_path)->required();
    oc->add_option("--max-len", max_len, "maximum cycle length");
    oc->add_option("--guard", guard, "subset guard");
    auto* os = oracle_cmd->add_subcommand("solve", "exhaustive MinHOM");
    os->add_option("template", h_path)->required();
    os->add_option("instance", aux_path)->required();
    os->add_option("--guard", guard, "map-count guard");

    auto* gen_cmd = app.add_subcommand("gen", "deterministic generators");
    gen_cmd->require_subcommand(1);
    GeneratorSpec spec;
    auto* gr = gen_cmd->add_subcommand("random", "splitmix64 random digraph");
    gr->add_option("--n", spec.n)->required();
    gr->add_option("--p", spec.p)->required();
    gr->add_option("--seed", spec.seed)->required();
    gr->add_flag("--loops", spec.loops);
    int gi_n = 1;
    std::uint64_t gi_seed = 0;
    auto* gi = gen_cmd->add_subcommand("interval", "proper interval digraph");
    gi->add_option("--n", gi_n)->required();
    gi->add_option("--seed", gi_seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInputError : kExitOk;
    }

    try {
        if (*classify_cmd) return cmd_classify(h_path, human);
        if (*order_cmd) return cmd_order(h_path, k_arg);
        if (*verify_cmd) return cmd_verify(h_path, aux_path);
        if (*solve_cmd) return cmd_solve(h_path, aux_path);
        if (*oo) return cmd_oracle_ordering(h_path, k_int, guard);
        if (*oc) return cmd_oracle_cycles(h_path, max_len, guard);
        if (*os) return cmd_oracle_solve(h_path, aux_path, guard);
        if (*gr) {
            std::cout << serialize_digraph(gen_random(spec));
            return kExitOk;
        }
        if (*gi) {
            std::cout << serialize_digraph(gen_proper_interval(gi_n, gi_seed));
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error (line " << e.line() << "): " << e.what() << '\n';
        return kExitInputError;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
