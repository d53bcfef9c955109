#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "brauerkit/error.hpp"
#include "brauerkit/group_info.hpp"

namespace brauerkit {

inline bool is_prime(std::size_t n) noexcept {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// n = p^k for some k >= 0 (so 1 is a power of every prime).
inline bool is_power_of(std::size_t n, std::size_t p) noexcept {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

namespace detail {

inline void require_prime(std::size_t p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
}

/// Order of gP in G/P: least k >= 1 with g^k in P.
inline std::size_t coset_order(const FiniteGroup& G, Index g, const Subgroup& P) {
    std::size_t k = 1;
    for (Index x = g; !P.contains(x); x = G.mul(x, g)) ++k;
    return k;
}

/// M/P cyclic, for P <= M both normal.
inline bool section_is_cyclic(const FiniteGroup& G, const Subgroup& M, const Subgroup& P) {
    const std::size_t target = M.order() / P.order();
    for (Index m : M.members.indices())
        if (coset_order(G, m, P) == target) return true;
    return false;
}

} // namespace detail

inline bool is_cyclic(const GroupInfo& G) {
    for (Index g = 0; g < G.order(); ++g)
        if (G.group.element_order(g) == G.order()) return true;
    return false;
}

/// Normal cyclic subgroup of q-power index (q^0 included).
inline bool is_q_quasi_elementary(const GroupInfo& G, std::size_t q) {
    detail::require_prime(q);
    for (std::size_t c : G.lattice.normal_classes()) {
        const auto& N = G.lattice[c].representative;
        if (is_power_of(G.order() / N.order(), q) && is_cyclic_subgroup(G.group, N)) return true;
    }
    return false;
}

/// Normal p-subgroup with cyclic quotient.
inline bool is_p_hypo_elementary(const GroupInfo& G, std::size_t p) {
    detail::require_prime(p);
    const auto whole = whole_group(G.group);
    for (std::size_t c : G.lattice.normal_classes()) {
        const auto& P = G.lattice[c].representative;
        if (is_power_of(P.order(), p) && detail::section_is_cyclic(G.group, whole, P)) return true;
    }
    return false;
}

/// Normal p-subgroup P with G/P q-quasi-elementary. The normal cyclic
/// subgroup of G/P is found as M/P for a normal M >= P of G.
inline bool is_pq_dress(const GroupInfo& G, std::size_t p, std::size_t q) {
    detail::require_prime(p);
    detail::require_prime(q);
    const auto normals = G.lattice.normal_classes();
    for (std::size_t pc : normals) {
        const auto& P = G.lattice[pc].representative;
        if (!is_power_of(P.order(), p)) continue;
        for (std::size_t mc : normals) {
            const auto& M = G.lattice[mc].representative;
            if (!P.members.subset_of(M.members)) continue;
            if (!is_power_of(G.order() / M.order(), q)) continue;
            if (detail::section_is_cyclic(G.group, M, P)) return true;
        }
    }
    return false;
}

struct ClassReport {
    bool is_cyclic = false;
    std::set<std::size_t> quasi_elementary_primes;
    std::set<std::size_t> hypo_elementary_primes;
    std::map<std::size_t, std::set<std::size_t>> dress_pairs;  // p -> {q : G is (p,q)-Dress}
    bool contradiction = false;
};

/// Every predicate evaluated for every listed prime; the list must cover the
/// primes dividing |G|.
inline ClassReport classify(const GroupInfo& G, std::span<const std::size_t> primes) {
    if (primes.empty()) throw Error(Errc::InvalidArgument, "prime list is empty");
    for (std::size_t p : primes) detail::require_prime(p);
    for (std::size_t d : prime_divisors(G.order()))
        if (std::find(primes.begin(), primes.end(), d) == primes.end())
            throw Error(Errc::InvalidArgument, "prime list misses divisor " + std::to_string(d) + " of |G|");

    ClassReport r;
    r.is_cyclic = is_cyclic(G);
    for (std::size_t q : primes)
        if (is_q_quasi_elementary(G, q)) r.quasi_elementary_primes.insert(q);
    for (std::size_t p : primes) {
        if (is_p_hypo_elementary(G, p)) r.hypo_elementary_primes.insert(p);
        auto& qs = r.dress_pairs[p];
        for (std::size_t q : primes)
            if (is_pq_dress(G, p, q)) qs.insert(q);
    }
    if (!r.is_cyclic && r.quasi_elementary_primes.size() > 1) r.contradiction = true;
    for (const auto& [p, qs] : r.dress_pairs)
        if (!r.hypo_elementary_primes.count(p) && qs.size() > 1) r.contradiction = true;
    return r;
}

inline ClassReport classify(const GroupInfo& G) {
    auto primes = prime_divisors(G.order());
    if (primes.empty()) primes.push_back(2);
    return classify(G, primes);
}

} // namespace brauerkit
