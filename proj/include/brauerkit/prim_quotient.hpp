#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brauerkit/brauer_relations.hpp"
#include "brauerkit/burnside.hpp"
#include "brauerkit/group_classes.hpp"
#include "brauerkit/normal_form.hpp"
#include "brauerkit/quotient.hpp"

namespace brauerkit {

/// Relations of proper subgroups, induced to G. One representative per
/// conjugacy class suffices since conjugate subgroups induce the same lattice.
inline IntMatrix induced_relations(const GroupRef& G, Characteristic ch) {
    IntMatrix rows(0, G->class_count());
    for (std::size_t c = 0; c < G->top_class(); ++c) {
        const auto e = embed(G, G->lattice[c].representative);
        const auto rl = relation_lattice(e.sub, ch);
        for (std::size_t i = 0; i < rl.rank(); ++i) rows.append_row(induce(e, rl.relation(i)).coeffs);
    }
    return rows.empty() ? rows : lattice_basis(rows);
}

/// Relations of G/N inflated to G, over every nontrivial normal N (N = G included).
inline IntMatrix inflated_relations(const GroupRef& G, Characteristic ch) {
    IntMatrix rows(0, G->class_count());
    for (std::size_t c : G->lattice.normal_classes()) {
        if (c == 0) continue;
        const auto q = quotient_group(G, G->lattice[c].representative);
        const auto rl = relation_lattice(q.target, ch);
        for (std::size_t i = 0; i < rl.rank(); ++i) rows.append_row(inflate(q, rl.relation(i)).coeffs);
    }
    return rows.empty() ? rows : lattice_basis(rows);
}

/// Predicted isomorphism type of the primitive quotient.
struct PrimPrediction {
    enum class Kind { Z, CyclicQ, Trivial, NotApplicable };
    Kind kind = Kind::NotApplicable;
    std::size_t q = 0;  // for CyclicQ
    std::string reason;

    bool applicable() const noexcept { return kind != Kind::NotApplicable; }

    std::string to_string() const {
        switch (kind) {
        case Kind::Z: return "Z";
        case Kind::CyclicQ: return "Z/" + std::to_string(q);
        case Kind::Trivial: return "trivial";
        case Kind::NotApplicable: return "not-applicable";
        }
        return "?";
    }
};

struct PrimReport {
    GroupRef group;
    Characteristic characteristic;
    std::size_t k_rank = 0;
    std::size_t imprim_rank = 0;
    QuotientInvariants invariants;
    IntMatrix relations;  // K basis
    IntMatrix imprimitive;  // Imprim basis
    std::optional<BurnsideElement> generator_certificate;
    bool certificate_generates = false;
    PrimPrediction predicted;
    bool agree = false;

    std::string structure() const {
        if (invariants.trivial()) return "trivial";
        std::string s;
        for (std::size_t i = 0; i < invariants.free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
        for (const auto& t : invariants.torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
        return s;
    }
};

/// Does Imprim + Z x reproduce all of K?
inline bool certificate_generates(const IntMatrix& relations, const IntMatrix& imprim, const IntVector& x) {
    IntMatrix xm(0, relations.cols());
    xm.append_row(x);
    return lattice_sum({imprim, xm}, relations.cols()) == relations;
}

inline PrimReport prim_invariants(const GroupRef& G, Characteristic ch) {
    PrimReport r;
    r.group = G;
    r.characteristic = ch;
    const auto K = relation_lattice(G, ch);
    const std::size_t n = G->class_count();
    r.relations = K.basis;
    r.imprimitive = lattice_sum({induced_relations(G, ch), inflated_relations(G, ch)}, n);
    r.k_rank = K.rank();
    r.imprim_rank = r.imprimitive.rows();
    r.invariants = quotient_invariants(K.basis.rows() ? K.basis : IntMatrix(0, n), r.imprimitive);
    if (K.top_ideal == 1) {
        BurnsideElement cert{G, coordinate_ideal_witness(K.basis, G->top_class())};
        r.certificate_generates = certificate_generates(K.basis, r.imprimitive, cert.coeffs);
        r.generator_certificate = std::move(cert);
    }
    return r;
}

namespace detail {

/// Per-quotient facts needed by the case analysis.
struct QuotientClass {
    bool base = false;          // cyclic (char 0) or p-hypo-elementary (char p)
    std::set<std::size_t> qs;   // q for which a non-base quotient is q-quasi-elementary / (p,q)-Dress
};

inline QuotientClass quotient_class(const GroupInfo& Q, Characteristic ch) {
    QuotientClass out;
    if (ch.is_zero()) {
        out.base = is_cyclic(Q);
        if (!out.base)
            for (std::size_t q : prime_divisors(Q.order()))
                if (is_q_quasi_elementary(Q, q)) out.qs.insert(q);
    } else {
        out.base = is_p_hypo_elementary(Q, ch.prime());
        if (!out.base)
            for (std::size_t q : prime_divisors(Q.order()))
                if (is_pq_dress(Q, ch.prime(), q)) out.qs.insert(q);
    }
    return out;
}

} // namespace detail

/// Case analysis over the proper quotients G/N (N nontrivial normal, N = G
/// giving the trivial quotient).
inline PrimPrediction predict_prim(const GroupRef& G, Characteristic ch) {
    PrimPrediction out;
    const auto self = detail::quotient_class(*G, ch);
    if (self.base || !self.qs.empty()) {
        out.kind = PrimPrediction::Kind::NotApplicable;
        out.reason = ch.is_zero() ? "G is quasi-elementary"
                                  : "G is a (" + ch.to_string() + ",q)-Dress group";
        return out;
    }
    bool all_base = true;
    bool some_outside = false;
    std::set<std::size_t> qs;
    for (std::size_t c : G->lattice.normal_classes()) {
        if (c == 0) continue;
        const auto q = quotient_group(G, G->lattice[c].representative);
        const auto qc = detail::quotient_class(*q.target, ch);
        if (qc.base) continue;
        all_base = false;
        if (qc.qs.empty()) some_outside = true;
        qs.insert(qc.qs.begin(), qc.qs.end());
    }
    const std::string base_name = ch.is_zero() ? "cyclic" : ch.to_string() + "-hypo-elementary";
    if (all_base) {
        out.kind = PrimPrediction::Kind::Z;
        out.reason = "all proper quotients are " + base_name;
    } else if (some_outside) {
        out.kind = PrimPrediction::Kind::Trivial;
        out.reason = ch.is_zero() ? "a proper quotient is not quasi-elementary"
                                  : "a proper quotient is not a (" + ch.to_string() + ",q)-Dress group";
    } else if (qs.size() >= 2) {
        out.kind = PrimPrediction::Kind::Trivial;
        out.reason = "non-" + base_name + " proper quotients for two distinct primes q";
    } else {
        out.kind = PrimPrediction::Kind::CyclicQ;
        out.q = *qs.begin();
        out.reason = "all proper quotients are " +
                     (ch.is_zero() ? std::to_string(out.q) + "-quasi-elementary"
                                   : "(" + ch.to_string() + "," + std::to_string(out.q) + ")-Dress") +
                     ", not all " + base_name;
    }
    return out;
}

inline bool matches(const PrimPrediction& p, const QuotientInvariants& inv) {
    switch (p.kind) {
    case PrimPrediction::Kind::Z: return inv.free_rank == 1 && inv.torsion.empty();
    case PrimPrediction::Kind::CyclicQ:
        return inv.free_rank == 0 && inv.torsion.size() == 1 && inv.torsion[0] == Integer(static_cast<unsigned long>(p.q));
    case PrimPrediction::Kind::Trivial: return inv.trivial();
    case PrimPrediction::Kind::NotApplicable: return true;
    }
    return false;
}

/// Predicted versus computed Prim. When the prediction applies, a generator
/// certificate with top coefficient 1 must exist and generate the quotient.
inline PrimReport verify_classification(const GroupRef& G, Characteristic ch) {
    PrimReport r = prim_invariants(G, ch);
    r.predicted = predict_prim(G, ch);
    if (!r.predicted.applicable()) {
        r.agree = true;
        return r;
    }
    r.agree = matches(r.predicted, r.invariants) && r.generator_certificate && r.certificate_generates;
    return r;
}

/// Random lattice members of K with top coefficient exactly 1, built as
/// certificate + (y - y_top * certificate) for random combinations y.
inline std::vector<IntVector> random_top_one_members(const IntMatrix& relations, const IntVector& certificate,
                                                     std::size_t count, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    const std::size_t top = relations.cols() - 1;
    std::vector<IntVector> out;
    for (std::size_t s = 0; s < count; ++s) {
        IntVector y(relations.cols());
        for (std::size_t i = 0; i < relations.rows(); ++i) {
            Integer k = coeff(rng);
            for (std::size_t j = 0; j < y.size(); ++j) y[j] += k * relations(i, j);
        }
        const Integer yt = y[top];
        IntVector x(relations.cols());
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = certificate[j] + y[j] - yt * certificate[j];
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace brauerkit
