#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "brauerkit/burnside.hpp"
#include "brauerkit/error.hpp"
#include "brauerkit/group_classes.hpp"
#include "brauerkit/normal_form.hpp"

namespace brauerkit {

/// Characteristic of the coefficient field: 0 or a prime p.
class Characteristic {
public:
    constexpr Characteristic() = default;

    static constexpr Characteristic zero() { return Characteristic(); }

    static Characteristic of(std::size_t p) {
        if (p == 0) return zero();
        if (!is_prime(p)) throw Error(Errc::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
        Characteristic c;
        c.p_ = p;
        return c;
    }

    constexpr bool is_zero() const noexcept { return p_ == 0; }
    constexpr std::size_t prime() const noexcept { return p_; }
    std::string to_string() const { return std::to_string(p_); }

    friend constexpr bool operator==(Characteristic, Characteristic) = default;

private:
    std::size_t p_ = 0;
};

/// Classes whose marks detect permutation modules: cyclic subgroups in
/// characteristic 0, p-hypo-elementary subgroups in characteristic p.
inline std::vector<std::size_t> detecting_classes(const GroupInfo& G, Characteristic ch) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        const auto& H = G.lattice[c].representative;
        bool detects = ch.is_zero() ? is_cyclic_subgroup(G.group, H)
                                    : is_p_hypo_elementary(*analyze(subgroup_as_group(G.group, H)), ch.prime());
        if (detects) out.push_back(c);
    }
    return out;
}

/// K_F(G): the Brauer relations of G over a field of the given characteristic.
struct RelationLattice {
    GroupRef group;
    Characteristic characteristic;
    std::vector<std::size_t> detecting;
    IntMatrix basis;  // HNF rows; columns are subgroup classes
    Integer top_ideal;

    std::size_t rank() const noexcept { return basis.rows(); }

    BurnsideElement relation(std::size_t i) const { return {group, basis.row_vector(i)}; }

    bool contains(const BurnsideElement& v) const { return lattice_contains(basis, v.coeffs); }
};

/// The table of marks with rows restricted to the detecting classes.
inline IntMatrix detection_matrix(const GroupInfo& G, const std::vector<std::size_t>& detecting) {
    IntMatrix A(detecting.size(), G.class_count());
    for (std::size_t r = 0; r < detecting.size(); ++r)
        for (std::size_t c = 0; c < G.class_count(); ++c) A(r, c) = G.marks(detecting[r], c);
    return A;
}

inline RelationLattice relation_lattice(const GroupRef& G, Characteristic ch) {
    RelationLattice rl;
    rl.group = G;
    rl.characteristic = ch;
    rl.detecting = detecting_classes(*G, ch);
    rl.basis = kernel_basis(detection_matrix(*G, rl.detecting));
    rl.top_ideal = coordinate_ideal(rl.basis, G->top_class());
    return rl;
}

/// Marks of v vanish on every detecting class.
inline bool verify_relation(const GroupInfo& G, Characteristic ch, const BurnsideElement& v) {
    if (!same_group(G, *v.group)) throw Error(Errc::GroupMismatch, "relation lives on another group");
    const auto marks = marks_of(v);
    for (std::size_t c : detecting_classes(G, ch))
        if (marks[c] != 0) return false;
    return true;
}

/// g >= 0 with {a : a[G/G] + sum_{H < G} a_H [G/H] in K_F(G)} = gZ.
inline Integer top_coefficient_ideal(const GroupRef& G, Characteristic ch) {
    return relation_lattice(G, ch).top_ideal;
}

struct TrichotomyReport {
    Integer predicted;
    Integer computed;
    bool agree = false;
    std::string reason;
};

/// Top-coefficient ideal predicted from the group's class alone.
/// Characteristic 0: 0 if cyclic, q if non-cyclic q-quasi-elementary, else 1.
/// Characteristic p: 0 if p-hypo-elementary, q if (p,q)-Dress, else 1.
inline std::pair<Integer, std::string> predicted_top_ideal(const GroupInfo& G, Characteristic ch) {
    const auto primes = prime_divisors(G.order());
    if (ch.is_zero()) {
        if (is_cyclic(G)) return {0, "cyclic"};
        for (std::size_t q : primes)
            if (is_q_quasi_elementary(G, q)) return {Integer(static_cast<unsigned long>(q)), std::to_string(q) + "-quasi-elementary, not cyclic"};
        return {1, "not quasi-elementary"};
    }
    const std::size_t p = ch.prime();
    if (is_p_hypo_elementary(G, p)) return {0, std::to_string(p) + "-hypo-elementary"};
    for (std::size_t q : primes)
        if (is_pq_dress(G, p, q))
            return {Integer(static_cast<unsigned long>(q)),
                    "(" + std::to_string(p) + "," + std::to_string(q) + ")-Dress, not " + std::to_string(p) +
                        "-hypo-elementary"};
    return {1, "not a (" + std::to_string(p) + ",q)-Dress group for any q"};
}

inline TrichotomyReport primordiality_trichotomy(const GroupRef& G, Characteristic ch) {
    TrichotomyReport r;
    std::tie(r.predicted, r.reason) = predicted_top_ideal(*G, ch);
    r.computed = top_coefficient_ideal(G, ch);
    r.agree = r.predicted == r.computed;
    return r;
}

} // namespace brauerkit
