#include <cstdint>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brauerkit/brauerkit.hpp"

namespace bk = brauerkit;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_disagree = 1;
constexpr int exit_usage = 2;

struct Global {
    bool json = false;
    std::string cache_dir;
    std::size_t max_order = bk::default_order_cap;
};

bk::GroupRef load(const std::string& spec, const Global& g) { return bk::analyze(bk::build_group(spec, g.max_order)); }

std::vector<std::string> split_specs(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        std::string part;
        while (std::getline(ss, part, ';'))
            if (part.find_first_not_of(' ') != std::string::npos) out.push_back(part);
    }
    return out;
}

void emit(const bk::Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::set<std::size_t>& s) {
    std::string out;
    for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
    return out.empty() ? "-" : out;
}

int cmd_classify(const Global& g, const std::string& spec, const std::vector<std::size_t>& primes) {
    const auto G = load(spec, g);
    const auto r = primes.empty() ? bk::classify(*G) : bk::classify(*G, primes);
    if (g.json) {
        emit({{"group", bk::group_json(*G)}, {"classification", bk::to_json(r)}});
        return exit_ok;
    }
    std::cout << "order " << G->order() << "\n"
              << "cyclic: " << (r.is_cyclic ? "yes" : "no") << "\n"
              << "q-quasi-elementary for q in: " << join(r.quasi_elementary_primes) << "\n"
              << "p-hypo-elementary for p in: " << join(r.hypo_elementary_primes) << "\n";
    for (const auto& [p, qs] : r.dress_pairs) std::cout << "(" << p << ",q)-Dress for q in: " << join(qs) << "\n";
    return exit_ok;
}

int cmd_subgroups(const Global& g, const std::string& spec) {
    const auto G = load(spec, g);
    if (g.json) {
        emit(bk::lattice_json(*G));
        return exit_ok;
    }
    const auto j = bk::lattice_json(*G);
    std::cout << "order " << G->order() << ", " << G->lattice.subgroup_count() << " subgroups in " << G->class_count()
              << " classes\n";
    std::cout << std::left << std::setw(7) << "class" << std::setw(7) << "order" << std::setw(6) << "size"
              << std::setw(8) << "|N(H)|" << std::setw(8) << "normal" << "generators\n";
    for (const auto& c : j["classes"]) {
        std::string gens;
        for (const auto& s : c["generators"]) gens += (gens.empty() ? "" : ", ") + s.get<std::string>();
        std::cout << std::setw(7) << c["label"].get<std::string>() << std::setw(7) << c["order"].get<std::size_t>()
                  << std::setw(6) << c["size"].get<std::size_t>() << std::setw(8)
                  << c["normalizer_order"].get<std::size_t>() << std::setw(8) << (c["normal"].get<bool>() ? "yes" : "no")
                  << (gens.empty() ? "()" : gens) << "\n";
    }
    return exit_ok;
}

int cmd_marks(const Global& g, const std::string& spec) {
    const auto G = load(spec, g);
    if (g.json) {
        emit(bk::marks_json(*G));
        return exit_ok;
    }
    const std::size_t n = G->class_count();
    std::cout << std::setw(6) << "";
    for (std::size_t j = 0; j < n; ++j) std::cout << std::setw(5) << bk::class_label(*G, j);
    std::cout << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        std::cout << std::setw(6) << bk::class_label(*G, i);
        for (std::size_t j = 0; j < n; ++j) std::cout << std::setw(5) << G->marks(i, j).get_str();
        std::cout << "\n";
    }
    return exit_ok;
}

int cmd_relations(const Global& g, const std::string& spec, std::size_t p) {
    const auto G = load(spec, g);
    const auto rl = bk::relation_lattice(G, bk::Characteristic::of(p));
    if (g.json) {
        emit({{"group", bk::group_json(*G)}, {"relations", bk::to_json(rl)}});
        return exit_ok;
    }
    std::cout << "characteristic " << p << ", rank " << rl.rank() << ", top ideal " << rl.top_ideal << "\n";
    std::string det;
    for (auto c : rl.detecting) det += (det.empty() ? "" : " ") + bk::class_label(*G, c);
    std::cout << "detecting classes: " << det << "\n";
    for (std::size_t i = 0; i < rl.rank(); ++i) std::cout << "  " << bk::to_string(rl.relation(i)) << "\n";
    return exit_ok;
}

int cmd_prim(const Global& g, const std::string& spec, std::size_t p, bool verify) {
    const auto G = load(spec, g);
    const auto r = bk::verify_classification(G, bk::Characteristic::of(p));
    if (g.json) {
        emit({{"group", bk::group_json(*G)}, {"prim", bk::to_json(r)}});
    } else {
        std::cout << "characteristic " << p << ": rank K = " << r.k_rank << ", rank Imprim = " << r.imprim_rank
                  << "\nPrim = " << r.structure() << "\npredicted: " << r.predicted.to_string();
        if (!r.predicted.reason.empty()) std::cout << " (" << r.predicted.reason << ")";
        std::cout << "\n";
        if (r.generator_certificate)
            std::cout << "certificate: " << bk::to_string(*r.generator_certificate)
                      << (r.certificate_generates ? " (generates Prim)" : " (does not generate Prim)") << "\n";
        std::cout << "agree: " << (r.agree ? "yes" : "no") << "\n";
    }
    return verify && !r.agree ? exit_disagree : exit_ok;
}

/// Trichotomy and classification for one group in each characteristic, plus
/// a number of random top-coefficient-one certificates.
struct Verdict {
    bk::Json json;
    std::vector<std::string> lines;
    bool agree = true;
};

Verdict verify_group(const bk::GroupRef& G, const std::vector<std::size_t>& chars, std::size_t certificates,
                     std::uint64_t seed) {
    Verdict v;
    v.json = bk::Json::array();
    for (std::size_t p : chars) {
        const auto ch = bk::Characteristic::of(p);
        const auto t = bk::primordiality_trichotomy(G, ch);
        const auto r = bk::verify_classification(G, ch);
        std::size_t tested = 0, generating = 0;
        if (r.predicted.applicable() && r.generator_certificate) {
            std::seed_seq seq{seed, std::uint64_t(p), std::uint64_t(G->order())};
            std::mt19937_64 rng(seq);
            for (const auto& x : bk::random_top_one_members(r.relations, r.generator_certificate->coeffs, certificates, rng)) {
                ++tested;
                if (bk::certificate_generates(r.relations, r.imprimitive, x)) ++generating;
            }
        }
        const bool ok = t.agree && r.agree && generating == tested;
        v.agree = v.agree && ok;
        v.json.push_back({{"characteristic", p},
                          {"trichotomy", bk::to_json(t)},
                          {"prim", bk::to_json(r)},
                          {"random_certificates", {{"tested", tested}, {"generating", generating}}},
                          {"agree", ok}});
        std::ostringstream os;
        os << std::left << std::setw(6) << p << std::setw(10) << (t.predicted.get_str() + "/" + t.computed.get_str()) << std::setw(16)
           << r.structure() << std::setw(16) << r.predicted.to_string() << std::setw(7)
           << (std::to_string(generating) + "/" + std::to_string(tested)) << (ok ? "ok" : "DISAGREE");
        v.lines.push_back(os.str());
    }
    return v;
}

void print_header() {
    std::cout << std::left << std::setw(10) << "group" << std::setw(7) << "order" << std::setw(6) << "char"
              << std::setw(10) << "top p/c" << std::setw(16) << "Prim" << std::setw(16) << "predicted" << std::setw(7)
              << "certs" << "status\n";
}

int cmd_verify(const Global& g, const std::string& spec, const std::vector<std::size_t>& chars, std::size_t certs,
               std::uint64_t seed) {
    const auto G = load(spec, g);
    const auto v = verify_group(G, chars, certs, seed);
    if (g.json) {
        emit({{"group", bk::group_json(*G)}, {"results", v.json}, {"agree", v.agree}});
    } else {
        print_header();
        for (const auto& l : v.lines) std::cout << std::setw(10) << spec << std::setw(7) << G->order() << l << "\n";
    }
    return v.agree ? exit_ok : exit_disagree;
}

int cmd_sweep(const Global& g, const std::vector<std::size_t>& chars, std::size_t max_order, std::size_t certs,
              std::uint64_t seed) {
    const auto entries = bk::catalog_up_to(max_order);
    std::vector<std::future<Verdict>> jobs;
    for (const auto& e : entries)
        jobs.push_back(std::async(std::launch::async, [&, e] { return verify_group(load(e.spec, g), chars, certs, seed); }));
    bool all = true;
    bk::Json rows = bk::Json::array();
    if (!g.json) print_header();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto v = jobs[i].get();
        all = all && v.agree;
        if (g.json) {
            rows.push_back({{"name", entries[i].name}, {"spec", entries[i].spec}, {"order", entries[i].order},
                            {"results", v.json}, {"agree", v.agree}});
        } else {
            for (const auto& l : v.lines)
                std::cout << std::setw(10) << entries[i].name << std::setw(7) << entries[i].order << l << "\n";
        }
    }
    if (g.json)
        emit({{"characteristics", chars}, {"rows", std::move(rows)}, {"all_agree", all}});
    else
        std::cout << (all ? "all agree" : "DISAGREEMENT") << "\n";
    return all ? exit_ok : exit_disagree;
}

int cmd_axioms(const Global& g, const std::vector<std::string>& specs, std::size_t max_order, std::size_t samples,
               std::uint64_t seed) {
    std::vector<bk::GroupRef> groups;
    if (specs.empty())
        for (const auto& e : bk::catalog_up_to(max_order)) groups.push_back(load(e.spec, g));
    else
        for (const auto& s : specs) groups.push_back(load(s, g));
    const auto reports = bk::run_axiom_suite(groups, samples, seed);
    bool ok = true;
    bk::Json arr = bk::Json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        arr.push_back(bk::to_json(r));
    }
    if (g.json) {
        emit({{"groups", groups.size()}, {"samples", samples}, {"seed", seed}, {"reports", std::move(arr)}, {"passed", ok}});
    } else {
        std::cout << groups.size() << " groups, " << samples << " samples per axiom and group, seed " << seed << "\n";
        for (const auto& r : reports) {
            std::cout << std::left << std::setw(6) << r.id << std::setw(8) << r.instances
                      << (r.passed() ? "ok" : std::to_string(r.failures.size()) + " failures") << "\n";
            for (const auto& f : r.failures) std::cout << "    " << f << "\n";
        }
    }
    return ok ? exit_ok : exit_disagree;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burnside rings, Brauer relations and primitive quotients of finite groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--cache-dir", g.cache_dir, "Directory for cached lattices and tables of marks")->envname("BRAUERKIT_CACHE");
    app.add_option("--max-order", g.max_order, "Largest group order accepted")
        ->check(CLI::Range(std::size_t(1), bk::max_order_cap));

    std::string spec;
    std::size_t p = 0;
    std::vector<std::size_t> primes;
    std::vector<std::size_t> chars;
    std::vector<std::string> group_list;
    bool verify_flag = false;
    std::size_t samples = 10, sweep_order = 120, axiom_order = 24, certs = 5;
    std::uint64_t seed = 1;

    auto* classify = app.add_subcommand("classify", "Cyclic / quasi-elementary / hypo-elementary / Dress predicates");
    classify->add_option("-g,--group", spec, "Group spec")->required();
    classify->add_option("--primes", primes, "Primes to test (default: divisors of |G|)");

    auto* subgroups = app.add_subcommand("subgroups", "Conjugacy classes of subgroups");
    subgroups->add_option("-g,--group", spec, "Group spec")->required();

    auto* marks = app.add_subcommand("marks", "Table of marks");
    marks->add_option("-g,--group", spec, "Group spec")->required();

    auto* relations = app.add_subcommand("relations", "Brauer relations K_F(G)");
    relations->add_option("-g,--group", spec, "Group spec")->required();
    relations->add_option("-c,--char", p, "Characteristic: 0 or a prime")->default_val(0);

    auto* prim = app.add_subcommand("prim", "Imprimitive sublattice and Prim(G)");
    prim->add_option("-g,--group", spec, "Group spec")->required();
    prim->add_option("-c,--char", p, "Characteristic: 0 or a prime")->default_val(0);
    prim->add_flag("--verify", verify_flag, "Exit 1 if Prim disagrees with the predicted structure");

    auto* verify = app.add_subcommand("verify", "Top-ideal trichotomy and Prim classification for one group");
    verify->add_option("-g,--group", spec, "Group spec")->required();
    verify->add_option("-c,--char", chars, "Characteristics")->default_val(std::vector<std::size_t>{0, 2, 3, 5});
    verify->add_option("--certificates", certs, "Random generator certificates per characteristic")->default_val(5);
    verify->add_option("--seed", seed, "Random seed")->default_val(1);

    auto* sweep = app.add_subcommand("sweep", "Run verify over the built-in catalog");
    sweep->add_option("-c,--char", chars, "Characteristics")->default_val(std::vector<std::size_t>{0});
    sweep->add_option("--catalog-order", sweep_order, "Largest catalog group order")->default_val(120);
    sweep->add_option("--certificates", certs, "Random generator certificates per characteristic")->default_val(5);
    sweep->add_option("--seed", seed, "Random seed")->default_val(1);

    auto* axioms = app.add_subcommand("axioms", "Randomized checks of the Mackey and Green functor axioms");
    axioms->add_option("--groups", group_list, "Group specs, ';'-separated (default: catalog up to --catalog-order)");
    axioms->add_option("--catalog-order", axiom_order, "Largest catalog group order")->default_val(24);
    axioms->add_option("--samples", samples, "Samples per axiom and group")->default_val(10);
    axioms->add_option("--seed", seed, "Random seed")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (!g.cache_dir.empty()) bk::Registry::instance().set_cache_dir(std::filesystem::path(g.cache_dir));
        if (*classify) return cmd_classify(g, spec, primes);
        if (*subgroups) return cmd_subgroups(g, spec);
        if (*marks) return cmd_marks(g, spec);
        if (*relations) return cmd_relations(g, spec, p);
        if (*prim) return cmd_prim(g, spec, p, verify_flag);
        if (*verify) return cmd_verify(g, spec, chars, certs, seed);
        if (*sweep) return cmd_sweep(g, chars, sweep_order, certs, seed);
        if (*axioms) return cmd_axioms(g, split_specs(group_list), axiom_order, samples, seed);
    } catch (const bk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
