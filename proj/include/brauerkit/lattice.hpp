#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "brauerkit/error.hpp"
#include "brauerkit/group.hpp"

namespace brauerkit {

inline constexpr std::size_t default_lattice_cap = 20000;

struct SubgroupClass {
    Subgroup representative;
    std::vector<Subgroup> members;  // sorted by key; members.front() == representative
    std::size_t normalizer_order = 0;

    std::size_t order() const noexcept { return representative.order(); }
    std::size_t size() const noexcept { return members.size(); }
};

/// Conjugacy classes of subgroups, sorted by (order, key of representative).
/// Class 0 is the trivial subgroup and the last class is the whole group.
class SubgroupLattice {
public:
    SubgroupLattice() = default;

    /// Classes must already be in canonical order.
    explicit SubgroupLattice(std::vector<SubgroupClass> classes) : classes_(std::move(classes)) {
        for (std::size_t c = 0; c < classes_.size(); ++c)
            for (const auto& m : classes_[c].members) lookup_.emplace(m.members, c);
        const std::size_t n = classes_.size();
        subconj_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (classes_[j].order() % classes_[i].order() != 0) continue;
                for (const auto& m : classes_[i].members)
                    if (m.members.subset_of(classes_[j].representative.members)) {
                        subconj_[i * n + j] = 1;
                        break;
                    }
            }
    }

    std::size_t size() const noexcept { return classes_.size(); }
    const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
    const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }
    std::size_t top() const noexcept { return classes_.size() - 1; }

    /// Some member of class i lies in the representative of class j.
    bool subconjugate(std::size_t i, std::size_t j) const noexcept {
        return subconj_[i * classes_.size() + j] != 0;
    }

    bool is_normal(std::size_t i) const noexcept { return classes_[i].size() == 1; }

    std::size_t subgroup_count() const noexcept { return lookup_.size(); }

    std::size_t class_of(const ElementSet& s) const {
        auto it = lookup_.find(s);
        if (it == lookup_.end()) throw Error(Errc::NotSubgroup, "set is not a subgroup of this lattice");
        return it->second;
    }

    std::vector<std::size_t> normal_classes() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (is_normal(i)) out.push_back(i);
        return out;
    }

private:
    std::vector<SubgroupClass> classes_;
    std::vector<char> subconj_;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
};

/// Enumerates every subgroup by closing the set of cyclic subgroups under
/// joins with cyclic subgroups, then groups the result into conjugacy classes.
inline SubgroupLattice all_subgroups(const FiniteGroup& G, std::size_t lattice_cap = default_lattice_cap) {
    struct Entry {
        Subgroup sub;
        std::vector<Index> gens;
    };
    std::vector<Entry> found;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;

    auto add = [&](Subgroup s, std::vector<Index> gens) {
        if (seen.count(s.members)) return;
        seen.emplace(s.members, found.size());
        found.push_back({std::move(s), std::move(gens)});
        if (found.size() > lattice_cap)
            throw Error(Errc::LatticeCapExceeded, "more than " + std::to_string(lattice_cap) + " subgroups");
    };

    // Cyclic seeds, each recorded with a single generator.
    std::vector<Index> cyclic_gens;
    for (Index g = 0; g < G.order(); ++g) {
        std::vector<Index> gens;
        if (g != FiniteGroup::identity()) gens.push_back(g);
        auto before = found.size();
        add(generated_subgroup(G, gens), gens);
        if (found.size() > before && g != FiniteGroup::identity()) cyclic_gens.push_back(g);
    }

    for (std::size_t i = 0; i < found.size(); ++i) {
        for (Index c : cyclic_gens) {
            if (found[i].sub.contains(c)) continue;
            auto gens = found[i].gens;
            gens.push_back(c);
            Subgroup j = generated_subgroup(G, gens);
            if (seen.count(j.members)) continue;
            add(std::move(j), std::move(gens));
        }
    }

    std::vector<std::size_t> order_idx(found.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        const auto oa = found[a].sub.order(), ob = found[b].sub.order();
        if (oa != ob) return oa < ob;
        return key_less(found[a].sub.members, found[b].sub.members);
    });

    // The first unassigned subgroup met in canonical order is the smallest
    // member of its class, so it becomes the representative.
    std::vector<char> assigned(found.size(), 0);
    std::vector<SubgroupClass> classes;
    for (std::size_t pos : order_idx) {
        if (assigned[pos]) continue;
        const Subgroup& rep = found[pos].sub;
        std::vector<Subgroup> members;
        for (Index g = 0; g < G.order(); ++g) {
            Subgroup c = conjugate(G, rep, g);
            auto it = seen.find(c.members);
            if (assigned[it->second]) continue;
            assigned[it->second] = 1;
            members.push_back(std::move(c));
        }
        std::sort(members.begin(), members.end(),
                  [](const Subgroup& a, const Subgroup& b) { return key_less(a.members, b.members); });
        SubgroupClass cls;
        cls.representative = members.front();
        cls.normalizer_order = G.order() / members.size();
        cls.members = std::move(members);
        classes.push_back(std::move(cls));
    }
    return SubgroupLattice(std::move(classes));
}

/// One representative per double coset H g K: the smallest element index in it.
inline std::vector<Index> double_cosets(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    std::vector<char> covered(G.order(), 0);
    const auto hs = H.members.indices();
    const auto ks = K.members.indices();
    std::vector<Index> reps;
    for (Index g = 0; g < G.order(); ++g) {
        if (covered[g]) continue;
        reps.push_back(g);
        for (Index h : hs) {
            Index hg = G.mul(h, g);
            for (Index k : ks) covered[G.mul(hg, k)] = 1;
        }
    }
    return reps;
}

} // namespace brauerkit
