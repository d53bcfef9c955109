#pragma once

#include <cstddef>
#include <vector>

#include "brauerkit/error.hpp"
#include "brauerkit/group_info.hpp"

namespace brauerkit {

/// The epimorphism G -> G/N, with G/N realized as the permutation group
/// induced by left multiplication on the left cosets of N.
struct QuotientMap {
    GroupRef source;
    Subgroup kernel;
    GroupRef target;
    std::vector<Index> element_map;

    ElementSet image(const ElementSet& s) const {
        ElementSet out(target->order());
        for (Index g : s.indices()) out.insert(element_map[g]);
        return out;
    }

    ElementSet preimage(const ElementSet& s) const {
        ElementSet out(source->order());
        for (Index g = 0; g < source->order(); ++g)
            if (s.contains(element_map[g])) out.insert(g);
        return out;
    }
};

inline QuotientMap quotient_group(const GroupRef& G, const Subgroup& N) {
    const FiniteGroup& grp = G->group;
    if (N.members.universe() != grp.order() || !is_subgroup(grp, N.members))
        throw Error(Errc::NotSubgroup, "kernel is not a subgroup");
    if (!is_normal(grp, N)) throw Error(Errc::NotNormal, "kernel is not normal");

    constexpr Index unassigned = ~Index{0};
    std::vector<Index> coset_of(grp.order(), unassigned);
    std::vector<Index> reps;
    const auto ns = N.members.indices();
    for (Index g = 0; g < grp.order(); ++g) {
        if (coset_of[g] != unassigned) continue;
        const Index c = Index(reps.size());
        reps.push_back(g);
        for (Index n : ns) coset_of[grp.mul(g, n)] = c;
    }
    const std::size_t index = reps.size();

    auto action = [&](Index x) {
        std::vector<Point> im(index);
        for (Index c = 0; c < index; ++c) im[c] = coset_of[grp.mul(x, reps[c])];
        return Permutation(std::move(im));
    };

    std::vector<Permutation> gens;
    for (const auto& p : grp.generators()) {
        auto q = action(grp.index_of(p));
        if (!q.is_identity()) gens.push_back(std::move(q));
    }
    FiniteGroup target = generate_group(index, std::move(gens), max_order_cap);
    if (target.order() != index)
        throw Error(Errc::NotNormal, "coset action has order " + std::to_string(target.order()) +
                                         ", expected " + std::to_string(index));

    QuotientMap q;
    q.source = G;
    q.kernel = N;
    q.element_map.resize(grp.order());
    for (Index g = 0; g < grp.order(); ++g) q.element_map[g] = target.index_of(action(g));
    q.target = analyze(target);
    return q;
}

/// Class of each subgroup of G/N, mapped to the class of its full preimage in G.
inline std::vector<std::size_t> subgroup_correspondence(const QuotientMap& q) {
    const auto& tl = q.target->lattice;
    std::vector<std::size_t> out(tl.size());
    for (std::size_t c = 0; c < tl.size(); ++c)
        out[c] = q.source->lattice.class_of(q.preimage(tl[c].representative.members));
    return out;
}

} // namespace brauerkit
