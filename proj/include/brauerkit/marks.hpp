#pragma once

#include <cstddef>

#include "brauerkit/int_matrix.hpp"
#include "brauerkit/lattice.hpp"

namespace brauerkit {

/// marks(i, j) = #(G/K_j)^{H_i} for class representatives H_i, K_j.
struct TableOfMarks {
    IntMatrix marks;

    std::size_t size() const noexcept { return marks.rows(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return marks(i, j); }
};

/// marks(i, j) = |{g in G : g^{-1} H_i g <= K_j}| / |K_j|. Each conjugate of
/// H_i arises from |N_G(H_i)| elements g, so the numerator is the number of
/// members of class i inside K_j times the normalizer order.
inline TableOfMarks table_of_marks(const FiniteGroup& /*G*/, const SubgroupLattice& lattice) {
    const std::size_t n = lattice.size();
    TableOfMarks tom{IntMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!lattice.subconjugate(i, j)) continue;
            const auto& K = lattice[j].representative;
            std::size_t inside = 0;
            for (const auto& m : lattice[i].members)
                if (m.members.subset_of(K.members)) ++inside;
            const std::size_t fixers = inside * lattice[i].normalizer_order;
            if (fixers % K.order() != 0)
                throw Error(Errc::IntegralityViolation, "mark numerator not divisible by |K|");
            tom.marks(i, j) = Integer(static_cast<unsigned long>(fixers / K.order()));
        }
    return tom;
}

} // namespace brauerkit
