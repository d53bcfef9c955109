#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauerkit/error.hpp"
#include "brauerkit/permutation.hpp"

namespace brauerkit {

inline constexpr std::size_t default_order_cap = 200;
inline constexpr std::size_t max_order_cap = 2000;

/// A finite permutation group with every element enumerated.
///
/// Elements are stored in lexicographic order of their image arrays, so the
/// identity is always element 0. A full multiplication table is kept; the
/// order cap bounds its size.
class FiniteGroup {
public:
    std::size_t degree() const noexcept { return degree_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const Permutation& element(Index i) const { return elements_[i]; }

    static constexpr Index identity() noexcept { return 0; }

    /// Index of a * b, where b is applied first.
    Index mul(Index a, Index b) const noexcept { return table_[std::size_t(a) * order() + b]; }
    Index inv(Index a) const noexcept { return inverse_[a]; }
    /// g^{-1} h g
    Index conj(Index h, Index g) const noexcept { return mul(inverse_[g], mul(h, g)); }

    std::optional<Index> find(const Permutation& p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || *it != p) return std::nullopt;
        return Index(it - elements_.begin());
    }

    Index index_of(const Permutation& p) const {
        auto i = find(p);
        if (!i) throw Error(Errc::NotSubgroup, "permutation " + p.to_cycles() + " is not a group element");
        return *i;
    }

    std::size_t element_order(Index g) const noexcept {
        std::size_t n = 1;
        for (Index x = g; x != identity(); x = mul(x, g)) ++n;
        return n;
    }

    friend FiniteGroup generate_group(std::size_t degree, std::vector<Permutation> generators,
                                      std::size_t order_cap);
    friend FiniteGroup group_from_elements(std::size_t degree, std::vector<Permutation> elements,
                                           std::vector<Permutation> generators);

private:
    void build_tables() {
        const std::size_t n = elements_.size();
        table_.assign(n * n, 0);
        inverse_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Index c = index_of(elements_[a] * elements_[b]);
                table_[a * n + b] = c;
                if (c == identity()) inverse_[a] = Index(b);
            }
    }

    std::size_t degree_ = 1;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::vector<Index> table_;
    std::vector<Index> inverse_;
};

/// Closure of the generators under composition; elements in canonical order.
inline FiniteGroup generate_group(std::size_t degree, std::vector<Permutation> generators,
                                  std::size_t order_cap = default_order_cap) {
    if (degree == 0) throw Error(Errc::DegreeMismatch, "degree must be positive");
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw Error(Errc::DegreeMismatch, "generator " + g.to_cycles() + " has degree " +
                                                  std::to_string(g.degree()) + ", expected " +
                                                  std::to_string(degree));
    std::vector<Permutation> found{Permutation::identity(degree)};
    std::vector<Permutation> sorted = found;
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& g : generators) {
            Permutation h = found[i] * g;
            auto it = std::lower_bound(sorted.begin(), sorted.end(), h);
            if (it != sorted.end() && *it == h) continue;
            sorted.insert(it, h);
            found.push_back(std::move(h));
            if (found.size() > order_cap)
                throw Error(Errc::OrderCapExceeded,
                            "group order exceeds cap " + std::to_string(order_cap));
        }
    }
    FiniteGroup G;
    G.degree_ = degree;
    G.generators_ = std::move(generators);
    G.elements_ = std::move(sorted);
    G.build_tables();
    return G;
}

/// Wraps an already closed, sorted element list (e.g. a subgroup's members).
inline FiniteGroup group_from_elements(std::size_t degree, std::vector<Permutation> elements,
                                       std::vector<Permutation> generators) {
    FiniteGroup G;
    G.degree_ = degree;
    G.generators_ = std::move(generators);
    G.elements_ = std::move(elements);
    G.build_tables();
    return G;
}

/// A subgroup as a mask over the parent's element indices.
struct Subgroup {
    ElementSet members;

    std::size_t order() const noexcept { return members.count(); }
    bool contains(Index g) const noexcept { return members.contains(g); }
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Subgroup generated by a list of element indices.
inline Subgroup generated_subgroup(const FiniteGroup& G, std::span<const Index> gens) {
    ElementSet mask(G.order());
    std::vector<Index> queue{FiniteGroup::identity()};
    mask.insert(FiniteGroup::identity());
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Index g : gens) {
            Index h = G.mul(queue[i], g);
            if (!mask.contains(h)) {
                mask.insert(h);
                queue.push_back(h);
            }
        }
    return Subgroup{std::move(mask)};
}

inline Subgroup whole_group(const FiniteGroup& G) {
    ElementSet m(G.order());
    for (Index i = 0; i < G.order(); ++i) m.insert(i);
    return Subgroup{std::move(m)};
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) {
    ElementSet m(G.order());
    m.insert(FiniteGroup::identity());
    return Subgroup{std::move(m)};
}

inline bool is_subgroup(const FiniteGroup& G, const ElementSet& s) {
    if (s.universe() != G.order() || !s.contains(FiniteGroup::identity())) return false;
    auto idx = s.indices();
    for (Index a : idx)
        for (Index b : idx)
            if (!s.contains(G.mul(a, b))) return false;
    return true;
}

/// Conjugate g^{-1} H g.
inline Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, Index g) {
    ElementSet m(G.order());
    for (Index h : H.members.indices()) m.insert(G.conj(h, g));
    return Subgroup{std::move(m)};
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& N) {
    auto idx = N.members.indices();
    for (Index g = 0; g < G.order(); ++g)
        for (Index n : idx)
            if (!N.contains(G.conj(n, g))) return false;
    return true;
}

inline bool is_cyclic_subgroup(const FiniteGroup& G, const Subgroup& H) {
    const auto n = H.order();
    for (Index h : H.members.indices())
        if (G.element_order(h) == n) return true;
    return false;
}

/// Greedy generating set: walk the members in index order, keep each one not
/// already in the span of those kept.
inline std::vector<Index> small_generating_set(const FiniteGroup& G, const Subgroup& H) {
    std::vector<Index> gens;
    Subgroup span = trivial_subgroup(G);
    for (Index h : H.members.indices()) {
        if (span.contains(h)) continue;
        gens.push_back(h);
        span = generated_subgroup(G, gens);
        if (span.order() == H.order()) break;
    }
    return gens;
}

/// H repackaged as a permutation group on the same points as G.
inline FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
    std::vector<Permutation> elems;
    elems.reserve(H.order());
    for (Index h : H.members.indices()) elems.push_back(G.element(h));
    std::vector<Permutation> gens;
    for (Index h : small_generating_set(G, H)) gens.push_back(G.element(h));
    return group_from_elements(G.degree(), std::move(elems), std::move(gens));
}

} // namespace brauerkit
