#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "brauerkit/burnside.hpp"
#include "brauerkit/quotient.hpp"

namespace brauerkit {

struct AxiomReport {
    std::string id;
    std::size_t instances = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// The maps under test. Swapping one out lets a test confirm that the
/// harness notices a broken implementation.
struct BurnsideOps {
    std::function<BurnsideElement(const Embedding&, const BurnsideElement&)> restrict =
        [](const Embedding& e, const BurnsideElement& x) { return brauerkit::restrict(e, x); };
};

namespace detail {

/// Index in S of the element of G with index g (S a subgroup group of G).
inline Index relabel(const GroupInfo& S, const FiniteGroup& G, Index g) {
    return S.group.index_of(G.element(g));
}

/// H as a subgroup of the group realized by `e.sub`.
inline Subgroup inside(const Embedding& e, const Subgroup& H) { return {e.from_parent_set(H.members)}; }

/// The homomorphism H -> Q restricted from a quotient map, landing in `Qsub`.
inline std::vector<Index> restricted_quotient_map(const Embedding& eH, const QuotientMap& q, const GroupInfo& Qsub) {
    std::vector<Index> hom(eH.sub->order());
    for (Index i = 0; i < hom.size(); ++i)
        hom[i] = relabel(Qsub, q.target->group, q.element_map[eH.to_parent[i]]);
    return hom;
}

/// Image of H under the quotient map.
inline Subgroup image_subgroup(const QuotientMap& q, const Subgroup& H) { return {q.image(H.members)}; }

} // namespace detail

/// Ind_H^G Ind_U^H x = Ind_U^G x for U <= H <= G, x in B(U).
inline bool check_ind_transitivity(const GroupRef& G, const Subgroup& H, const Subgroup& U, const BurnsideElement& x) {
    const auto eH = embed(G, H);
    const auto eUH = embed(eH.sub, detail::inside(eH, U));
    const auto eU = embed(G, U);
    return induce(eH, induce(eUH, x)) == induce(eU, x);
}

/// Res_U^H Res_H^G x = Res_U^G x.
inline bool check_res_transitivity(const GroupRef& G, const Subgroup& H, const Subgroup& U, const BurnsideElement& x,
                                   const BurnsideOps& ops = {}) {
    const auto eH = embed(G, H);
    const auto eUH = embed(eH.sub, detail::inside(eH, U));
    const auto eU = embed(G, U);
    return ops.restrict(eUH, ops.restrict(eH, x)) == ops.restrict(eU, x);
}

/// Inflation along G -> G/N -> (G/N)/(M/N) equals inflation along the
/// composite, for normal N <= M. x lives on the double quotient.
inline bool check_inf_transitivity(const GroupRef& G, const Subgroup& N, const Subgroup& M,
                                   const std::function<BurnsideElement(GroupRef)>& make_x) {
    const auto q1 = quotient_group(G, N);
    const auto q2 = quotient_group(q1.target, detail::image_subgroup(q1, M));
    const auto x = make_x(q2.target);
    std::vector<Index> composite(G->order());
    for (Index g = 0; g < composite.size(); ++g) composite[g] = q2.element_map[q1.element_map[g]];
    return inflate(q1, inflate(q2, x)) == pullback_along(G, composite, x);
}

/// Res_H Inf_{G/N}^G x = Inf along H ->> HN/N of Res_{HN/N} x.
inline bool check_res_inf_commute(const GroupRef& G, const Subgroup& N, const Subgroup& H,
                                  const std::function<BurnsideElement(GroupRef)>& make_x,
                                  const BurnsideOps& ops = {}) {
    const auto q = quotient_group(G, N);
    const auto x = make_x(q.target);
    const auto eH = embed(G, H);
    const auto eHbar = embed(q.target, detail::image_subgroup(q, H));
    const auto hom = detail::restricted_quotient_map(eH, q, *eHbar.sub);
    return ops.restrict(eH, inflate(q, x)) == pullback_along(eH.sub, hom, ops.restrict(eHbar, x));
}

/// Conjugation by h in H acts trivially on B(H), both covariantly and
/// contravariantly.
inline bool check_inner_trivial(const GroupRef& G, const Subgroup& H, Index h, const BurnsideElement& x) {
    const auto eH = embed(G, H);
    const FiniteGroup& grp = G->group;
    std::vector<Index> iso(eH.sub->order());
    for (Index i = 0; i < iso.size(); ++i)
        iso[i] = detail::relabel(*eH.sub, grp, grp.mul(h, grp.mul(eH.to_parent[i], grp.inv(h))));
    return transport(eH.sub, iso, x) == x && pullback_along(eH.sub, iso, x) == x;
}

/// For the automorphism a = (u -> g u g^{-1}) of H, with g normalizing H,
/// covariant transport along a equals contravariant pullback along a^{-1}.
inline bool check_automorphism(const GroupRef& G, const Subgroup& H, Index g, const BurnsideElement& x) {
    const auto eH = embed(G, H);
    const FiniteGroup& grp = G->group;
    const Index gi = grp.inv(g);
    std::vector<Index> fwd(eH.sub->order()), back(eH.sub->order());
    for (Index i = 0; i < fwd.size(); ++i) {
        const Index u = eH.to_parent[i];
        fwd[i] = detail::relabel(*eH.sub, grp, grp.mul(g, grp.mul(u, gi)));
        back[i] = detail::relabel(*eH.sub, grp, grp.mul(gi, grp.mul(u, g)));
    }
    return transport(eH.sub, fwd, x) == pullback_along(eH.sub, back, x);
}

/// Res_K Ind_H x = sum over K g H of Ind_{K cap gHg^-1}^K c_g Res_{H cap g^-1 K g}^H x.
inline bool check_mackey(const GroupRef& G, const Subgroup& H, const Subgroup& K, const BurnsideElement& x,
                         const BurnsideOps& ops = {}) {
    const FiniteGroup& grp = G->group;
    const auto eH = embed(G, H);
    const auto eK = embed(G, K);
    const auto lhs = ops.restrict(eK, induce(eH, x));
    auto rhs = BurnsideElement::zero(eK.sub);
    for (Index g : double_cosets(grp, K, H)) {
        const Index gi = grp.inv(g);
        const Subgroup Hg{H.members & conjugate(grp, K, g).members};    // H cap g^-1 K g
        const Subgroup L{K.members & conjugate(grp, H, gi).members};     // K cap g H g^-1
        const auto eHg = embed(eH.sub, detail::inside(eH, Hg));
        const auto eLK = embed(eK.sub, detail::inside(eK, L));
        const auto res = ops.restrict(eHg, x);
        std::vector<Index> iso(eHg.sub->order());
        for (Index i = 0; i < iso.size(); ++i) {
            const Index u = grp.index_of(eHg.sub->group.element(i));
            iso[i] = detail::relabel(*eLK.sub, grp, grp.mul(g, grp.mul(u, gi)));
        }
        rhs += induce(eLK, transport(eLK.sub, iso, res));
    }
    return lhs == rhs;
}

/// Frobenius reciprocity: Ind_H(x) * y = Ind_H(x * Res_H y).
inline bool check_frobenius(const GroupRef& G, const Subgroup& H, const BurnsideElement& x, const BurnsideElement& y,
                            const BurnsideOps& ops = {}) {
    const auto eH = embed(G, H);
    return multiply(induce(eH, x), y) == induce(eH, multiply(x, ops.restrict(eH, y)));
}

/// Inf_{G/N}^G Ind_{HN/N}^{G/N} xbar = Ind_H^G Inf along H ->> HN/N of xbar.
/// Holds when N <= H. Otherwise the two sides differ in general: for S3 with
/// N = C3 and H = C2 the left side of [H/H] is [G/G], the right [G/C2].
inline bool check_inf_ind_commute(const GroupRef& G, const Subgroup& N, const Subgroup& H,
                                  const std::function<BurnsideElement(GroupRef)>& make_xbar) {
    const auto q = quotient_group(G, N);
    const auto eHbar = embed(q.target, detail::image_subgroup(q, H));
    const auto xbar = make_xbar(eHbar.sub);
    const auto eH = embed(G, H);
    const auto hom = detail::restricted_quotient_map(eH, q, *eHbar.sub);
    return inflate(q, induce(eHbar, xbar)) == induce(eH, pullback_along(eH.sub, hom, xbar));
}

/// Sparse random element: at most 4 nonzero coefficients drawn from [-3, 3].
inline BurnsideElement random_element(const GroupRef& G, std::mt19937_64& rng) {
    auto x = BurnsideElement::zero(G);
    std::uniform_int_distribution<std::size_t> cls(0, G->class_count() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(1, 4);
    for (int k = count(rng); k > 0; --k) x.coeffs[cls(rng)] = coeff(rng);
    return x;
}

namespace detail {

inline Subgroup random_subgroup(const GroupInfo& G, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> cls(0, G.class_count() - 1);
    const auto& c = G.lattice[cls(rng)];
    std::uniform_int_distribution<std::size_t> mem(0, c.size() - 1);
    return c.members[mem(rng)];
}

/// A random subgroup of H, in G's indexing.
inline Subgroup random_subgroup_of(const GroupRef& G, const Subgroup& H, std::mt19937_64& rng) {
    const auto e = embed(G, H);
    return {e.to_parent_set(random_subgroup(*e.sub, rng).members)};
}

inline Subgroup random_normal(const GroupInfo& G, std::mt19937_64& rng) {
    const auto normals = G.lattice.normal_classes();
    std::uniform_int_distribution<std::size_t> pick(0, normals.size() - 1);
    return G.lattice[normals[pick(rng)]].representative;
}

inline Index random_index(const Subgroup& H, std::mt19937_64& rng) {
    const auto idx = H.members.indices();
    std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
    return idx[pick(rng)];
}

inline std::string describe(const GroupInfo& G, const std::string& what) {
    return "group " + G.key + " (order " + std::to_string(G.order()) + "): " + what;
}

inline std::string mask(const Subgroup& H) {
    std::string s = "{";
    for (Index i : H.members.indices()) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
}

} // namespace detail

inline const std::vector<std::string>& axiom_ids() {
    static const std::vector<std::string> ids{"MFI1", "MFI2", "MFI3", "MFI4", "MFI5", "MFI6", "GFI3"};
    return ids;
}

/// Runs `samples` instances of every axiom on one group.
inline std::vector<AxiomReport> run_axioms_on(const GroupRef& G, std::size_t samples, std::uint64_t seed,
                                              std::size_t group_index, const BurnsideOps& ops = {}) {
    using detail::mask;
    std::vector<AxiomReport> reports;
    for (const auto& id : axiom_ids()) reports.push_back({id, 0, {}});
    const FiniteGroup& grp = G->group;

    for (std::size_t a = 0; a < reports.size(); ++a) {
        auto& rep = reports[a];
        for (std::size_t s = 0; s < samples; ++s) {
            std::seed_seq seq{std::uint64_t(seed), std::uint64_t(a), std::uint64_t(group_index), std::uint64_t(s)};
            std::mt19937_64 rng(seq);
            auto rnd = [&rng](GroupRef X) { return random_element(X, rng); };
            auto fail = [&](const std::string& what) { rep.failures.push_back(detail::describe(*G, what)); };
            const auto H = detail::random_subgroup(*G, rng);
            switch (a) {
            case 0: {
                const auto U = detail::random_subgroup_of(G, H, rng);
                const auto x = random_element(embed(G, U).sub, rng);
                ++rep.instances;
                if (!check_ind_transitivity(G, H, U, x)) fail("Ind chain U=" + mask(U) + " H=" + mask(H) + " x=" + to_string(x));
                break;
            }
            case 1: {
                const auto U = detail::random_subgroup_of(G, H, rng);
                const auto x = random_element(G, rng);
                ++rep.instances;
                if (!check_res_transitivity(G, H, U, x, ops))
                    fail("Res chain U=" + mask(U) + " H=" + mask(H) + " x=" + to_string(x));
                const auto M = detail::random_normal(*G, rng);
                const auto Nc = G->lattice.normal_classes();
                std::vector<Subgroup> inside_m;
                for (std::size_t c : Nc)
                    if (G->lattice[c].representative.members.subset_of(M.members))
                        inside_m.push_back(G->lattice[c].representative);
                const auto N = inside_m[std::uniform_int_distribution<std::size_t>(0, inside_m.size() - 1)(rng)];
                ++rep.instances;
                if (!check_inf_transitivity(G, N, M, rnd)) fail("Inf chain N=" + mask(N) + " M=" + mask(M));
                const auto N2 = detail::random_normal(*G, rng);
                ++rep.instances;
                if (!check_res_inf_commute(G, N2, H, rnd, ops)) fail("Res/Inf N=" + mask(N2) + " H=" + mask(H));
                break;
            }
            case 2: {
                const Index h = detail::random_index(H, rng);
                const auto x = random_element(embed(G, H).sub, rng);
                ++rep.instances;
                if (!check_inner_trivial(G, H, h, x)) fail("inner h=" + std::to_string(h) + " H=" + mask(H));
                break;
            }
            case 3: {
                std::vector<Index> normalizer;
                for (Index g = 0; g < grp.order(); ++g)
                    if (conjugate(grp, H, g).members == H.members) normalizer.push_back(g);
                const Index g = normalizer[std::uniform_int_distribution<std::size_t>(0, normalizer.size() - 1)(rng)];
                const auto x = random_element(embed(G, H).sub, rng);
                ++rep.instances;
                if (!check_automorphism(G, H, g, x)) fail("automorphism g=" + std::to_string(g) + " H=" + mask(H));
                break;
            }
            case 4: {
                const auto K = detail::random_subgroup(*G, rng);
                const auto x = random_element(embed(G, H).sub, rng);
                ++rep.instances;
                if (!check_mackey(G, H, K, x, ops))
                    fail("Mackey H=" + mask(H) + " K=" + mask(K) + " x=" + to_string(x));
                break;
            }
            case 5: {
                // The square H -> G over HN/N -> G/N is a pullback only when N <= H.
                const auto N = detail::random_normal(*G, rng);
                const auto q = quotient_group(G, N);
                const Subgroup HN{q.preimage(detail::random_subgroup(*q.target, rng).members)};
                ++rep.instances;
                if (!check_inf_ind_commute(G, N, HN, rnd)) fail("Inf/Ind N=" + mask(N) + " H=" + mask(HN));
                break;
            }
            case 6: {
                const auto x = random_element(embed(G, H).sub, rng);
                const auto y = random_element(G, rng);
                ++rep.instances;
                if (!check_frobenius(G, H, x, y, ops))
                    fail("Frobenius H=" + mask(H) + " x=" + to_string(x) + " y=" + to_string(y));
                break;
            }
            }
        }
    }
    return reports;
}

/// Every axiom on every group, `samples` instances per (axiom, group). Groups
/// run concurrently; each sample has its own seed, so results do not depend
/// on scheduling.
inline std::vector<AxiomReport> run_axiom_suite(const std::vector<GroupRef>& catalog, std::size_t samples,
                                                std::uint64_t seed, const BurnsideOps& ops = {}) {
    std::vector<std::future<std::vector<AxiomReport>>> jobs;
    for (std::size_t i = 0; i < catalog.size(); ++i)
        jobs.push_back(std::async(std::launch::async, [&, i] { return run_axioms_on(catalog[i], samples, seed, i, ops); }));
    std::vector<AxiomReport> total;
    for (const auto& id : axiom_ids()) total.push_back({id, 0, {}});
    for (auto& j : jobs) {
        auto part = j.get();
        for (std::size_t a = 0; a < total.size(); ++a) {
            total[a].instances += part[a].instances;
            for (auto& f : part[a].failures) total[a].failures.push_back(std::move(f));
        }
    }
    return total;
}

} // namespace brauerkit
