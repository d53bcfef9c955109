#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "brauerkit/brauer_relations.hpp"
#include "brauerkit/burnside.hpp"
#include "brauerkit/group_classes.hpp"
#include "brauerkit/mackey_axioms.hpp"
#include "brauerkit/prim_quotient.hpp"

namespace brauerkit {

using Json = nlohmann::ordered_json;

/// Integers that fit a long become JSON numbers, larger ones decimal strings.
inline Json to_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

inline Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row_vector(i)));
    return a;
}

inline Json to_json(const BurnsideElement& x) {
    Json terms = Json::array();
    for (std::size_t c = 0; c < x.coeffs.size(); ++c) {
        if (x.coeffs[c] == 0) continue;
        terms.push_back({{"class", c}, {"order", x.group->lattice[c].order()}, {"coeff", to_json(x.coeffs[c])}});
    }
    return {{"terms", std::move(terms)}, {"text", to_string(x)}};
}

inline Json group_json(const GroupInfo& G) {
    Json gens = Json::array();
    for (const auto& p : G.group.generators()) gens.push_back(p.to_cycles());
    return {{"order", G.order()}, {"degree", G.group.degree()}, {"generators", std::move(gens)}, {"key", G.key}};
}

inline Json lattice_json(const GroupInfo& G) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        const auto& cls = G.lattice[c];
        Json gens = Json::array();
        for (Index g : small_generating_set(G.group, cls.representative)) gens.push_back(G.group.element(g).to_cycles());
        classes.push_back({{"class", c},
                           {"label", class_label(G, c)},
                           {"order", cls.order()},
                           {"size", cls.size()},
                           {"normalizer_order", cls.normalizer_order},
                           {"normal", G.lattice.is_normal(c)},
                           {"cyclic", is_cyclic_subgroup(G.group, cls.representative)},
                           {"generators", std::move(gens)}});
    }
    return {{"group", group_json(G)}, {"subgroup_count", G.lattice.subgroup_count()}, {"classes", std::move(classes)}};
}

inline Json marks_json(const GroupInfo& G) {
    Json orders = Json::array();
    for (std::size_t c = 0; c < G.class_count(); ++c) orders.push_back(G.lattice[c].order());
    return {{"group", group_json(G)}, {"class_orders", std::move(orders)}, {"marks", to_json(G.marks.marks)}};
}

inline Json to_json(const ClassReport& r) {
    Json dress = Json::object();
    for (const auto& [p, qs] : r.dress_pairs) dress[std::to_string(p)] = std::vector<std::size_t>(qs.begin(), qs.end());
    return {{"cyclic", r.is_cyclic},
            {"quasi_elementary_primes", std::vector<std::size_t>(r.quasi_elementary_primes.begin(), r.quasi_elementary_primes.end())},
            {"hypo_elementary_primes", std::vector<std::size_t>(r.hypo_elementary_primes.begin(), r.hypo_elementary_primes.end())},
            {"dress_pairs", std::move(dress)},
            {"contradiction", r.contradiction}};
}

inline Json to_json(const RelationLattice& rl) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < rl.rank(); ++i) rows.push_back(to_json(rl.relation(i)));
    return {{"characteristic", rl.characteristic.prime()},
            {"detecting_classes", rl.detecting},
            {"rank", rl.rank()},
            {"basis", to_json(rl.basis)},
            {"relations", std::move(rows)},
            {"top_ideal", to_json(rl.top_ideal)}};
}

inline Json to_json(const TrichotomyReport& r) {
    return {{"predicted", to_json(r.predicted)}, {"computed", to_json(r.computed)}, {"agree", r.agree}, {"reason", r.reason}};
}

inline Json to_json(const QuotientInvariants& q) {
    Json t = Json::array();
    for (const auto& d : q.torsion) t.push_back(to_json(d));
    return {{"free_rank", q.free_rank}, {"torsion", std::move(t)}};
}

inline Json to_json(const PrimReport& r) {
    Json j{{"characteristic", r.characteristic.prime()},
           {"k_rank", r.k_rank},
           {"imprim_rank", r.imprim_rank},
           {"prim", to_json(r.invariants)},
           {"structure", r.structure()},
           {"certificate", r.generator_certificate ? to_json(*r.generator_certificate) : Json(nullptr)},
           {"certificate_generates", r.certificate_generates}};
    j["predicted"] = {{"kind", r.predicted.to_string()}, {"reason", r.predicted.reason}};
    j["agree"] = r.agree;
    return j;
}

inline Json to_json(const AxiomReport& r) {
    return {{"axiom", r.id}, {"instances", r.instances}, {"failures", r.failures}};
}

} // namespace brauerkit
