#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "brauerkit/error.hpp"
#include "brauerkit/int_matrix.hpp"

namespace brauerkit {

/// U * A = H with U unimodular and H in row Hermite normal form: echelon,
/// pivots positive, entries above a pivot reduced into [0, pivot). Zero rows
/// of H come last; `rank` counts the nonzero ones.
struct HermiteDecomposition {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// U * A * V = D, D diagonal with d_1 | d_2 | ... , nonnegative, zeros last.
struct SmithDecomposition {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;

    /// Nonzero diagonal entries.
    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            if (D(i, i) != 0) out.push_back(D(i, i));
        return out;
    }
};

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace detail

inline HermiteDecomposition hnf(const IntMatrix& A) {
    HermiteDecomposition out{A, IntMatrix::identity(A.rows()), 0, {}};
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;
    const std::size_t m = A.rows(), n = A.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        bool have_pivot = false;
        for (;;) {
            std::optional<std::size_t> p;
            for (std::size_t i = r; i < m; ++i)
                if (H(i, c) != 0 && (!p || abs(H(i, c)) < abs(H(*p, c)))) p = i;
            if (!p) break;
            have_pivot = true;
            H.swap_rows(r, *p);
            U.swap_rows(r, *p);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (H(i, c) == 0) continue;
                Integer q = -detail::floor_div(H(i, c), H(r, c));
                H.add_row_multiple(i, r, q);
                U.add_row_multiple(i, r, q);
                if (H(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have_pivot) continue;
        if (H(r, c) < 0) {
            H.negate_row(r);
            U.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = -detail::floor_div(H(i, c), H(r, c));
            H.add_row_multiple(i, r, q);
            U.add_row_multiple(i, r, q);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

inline SmithDecomposition snf(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithDecomposition out{A, IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& D = out.D;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> p;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (!p || abs(D(i, j)) < abs(D(p->first, p->second)))) p = {i, j};
            if (!p) return out;
            D.swap_rows(t, p->first);
            U.swap_rows(t, p->first);
            D.swap_cols(t, p->second);
            V.swap_cols(t, p->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Integer q = -detail::floor_div(D(i, t), D(t, t));
                D.add_row_multiple(i, t, q);
                U.add_row_multiple(i, t, q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Integer q = -detail::floor_div(D(t, j), D(t, t));
                D.add_col_multiple(j, t, q);
                V.add_col_multiple(j, t, q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the remaining block; otherwise fold the
            // offending row in and reduce again with a smaller remainder.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            D.add_row_multiple(t, *bad_row, 1);
            U.add_row_multiple(t, *bad_row, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return out;
}

/// HNF basis (nonzero rows only) of the row lattice of M.
inline IntMatrix lattice_basis(const IntMatrix& M) {
    auto h = hnf(M);
    return h.H.top_rows(h.rank);
}

/// Z-basis of {x in Z^cols : A x = 0}, HNF-reduced.
inline IntMatrix kernel_basis(const IntMatrix& A) {
    const std::size_t n = A.cols();
    auto h = hnf(A.transpose());
    IntMatrix K(0, n);
    for (std::size_t i = h.rank; i < n; ++i) K.append_row(h.U.row(i));
    if (K.empty()) return K;
    return lattice_basis(K);
}

/// HNF basis of the sum of row lattices in Z^n.
inline IntMatrix lattice_sum(std::span<const IntMatrix> bases, std::size_t ambient_dim) {
    IntMatrix stacked(0, ambient_dim);
    for (const auto& b : bases) {
        if (b.rows() == 0) continue;
        if (b.cols() != ambient_dim)
            throw Error(Errc::DimensionMismatch, "basis has " + std::to_string(b.cols()) +
                                                     " columns, expected " + std::to_string(ambient_dim));
        for (std::size_t i = 0; i < b.rows(); ++i) stacked.append_row(b.row(i));
    }
    if (stacked.empty()) return stacked;
    return lattice_basis(stacked);
}

inline IntMatrix lattice_sum(std::initializer_list<IntMatrix> bases, std::size_t ambient_dim) {
    return lattice_sum(std::span<const IntMatrix>(bases.begin(), bases.size()), ambient_dim);
}

/// Coordinates of v in an echelon basis B (as produced by lattice_basis), or
/// nullopt when v is not an integer combination of the rows.
inline std::optional<IntVector> coordinates_in(const IntMatrix& echelon, std::span<const Integer> v) {
    if (v.size() != echelon.cols()) throw Error(Errc::DimensionMismatch, "vector length mismatch");
    IntVector residual(v.begin(), v.end());
    IntVector coords(echelon.rows());
    std::size_t col = 0;
    for (std::size_t k = 0; k < echelon.rows(); ++k) {
        while (col < echelon.cols() && echelon(k, col) == 0) {
            if (residual[col] != 0) return std::nullopt;
            ++col;
        }
        const Integer& pivot = echelon(k, col);
        if (!mpz_divisible_p(residual[col].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
        coords[k] = residual[col] / pivot;
        for (std::size_t j = col; j < echelon.cols(); ++j) residual[j] -= coords[k] * echelon(k, j);
        ++col;
    }
    for (std::size_t j = 0; j < residual.size(); ++j)
        if (residual[j] != 0) return std::nullopt;
    return coords;
}

inline bool lattice_contains(const IntMatrix& basis, std::span<const Integer> v) {
    if (basis.rows() == 0) return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    return coordinates_in(lattice_basis(basis), v).has_value();
}

/// L2 subset of L1?
inline bool lattice_includes(const IntMatrix& big, const IntMatrix& small) {
    if (small.rows() == 0) return true;
    IntMatrix b = big.rows() ? lattice_basis(big) : IntMatrix(0, small.cols());
    for (std::size_t i = 0; i < small.rows(); ++i) {
        if (b.rows() == 0) {
            if (!small.row_is_zero(i)) return false;
            continue;
        }
        if (!coordinates_in(b, small.row(i))) return false;
    }
    return true;
}

/// Abelian group invariants of L1 / L2: torsion as a divisibility chain with
/// every entry > 1, plus the free rank.
struct QuotientInvariants {
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;

    bool trivial() const noexcept { return torsion.empty() && free_rank == 0; }
    friend bool operator==(const QuotientInvariants&, const QuotientInvariants&) = default;
};

inline QuotientInvariants quotient_invariants(const IntMatrix& big, const IntMatrix& small) {
    if (big.rows() && small.rows() && big.cols() != small.cols())
        throw Error(Errc::DimensionMismatch, "lattices live in different ambient spaces");
    IntMatrix b = big.rows() ? lattice_basis(big) : IntMatrix(0, big.cols());
    QuotientInvariants out;
    if (b.rows() == 0) {
        for (std::size_t i = 0; i < small.rows(); ++i)
            if (!small.row_is_zero(i)) throw Error(Errc::NotSublattice, "nonzero row in zero lattice");
        return out;
    }
    IntMatrix coords(0, b.rows());
    for (std::size_t i = 0; i < small.rows(); ++i) {
        auto c = coordinates_in(b, small.row(i));
        if (!c) throw Error(Errc::NotSublattice, "row " + std::to_string(i) + " is not in the larger lattice");
        coords.append_row(*c);
    }
    std::size_t small_rank = 0;
    if (coords.rows()) {
        for (const auto& d : snf(coords).invariant_factors()) {
            ++small_rank;
            if (d > 1) out.torsion.push_back(d);
        }
    }
    out.free_rank = b.rows() - small_rank;
    return out;
}

/// g >= 0 with {x[coord] : x in L} = gZ.
inline Integer coordinate_ideal(const IntMatrix& L, std::size_t coord) {
    if (L.rows() == 0) return 0;
    if (coord >= L.cols()) throw Error(Errc::DimensionMismatch, "coordinate out of range");
    Integer g = 0;
    for (std::size_t i = 0; i < L.rows(); ++i) g = gcd(g, L(i, coord));
    return g;
}

/// A member x of L with x[coord] = coordinate_ideal(L, coord), built from a
/// Bezout combination of the rows. Zero vector when the projection is zero.
inline IntVector coordinate_ideal_witness(const IntMatrix& L, std::size_t coord) {
    IntVector x(L.cols());
    Integer g = 0;
    for (std::size_t i = 0; i < L.rows(); ++i) {
        const Integer& a = L(i, coord);
        if (a == 0) continue;
        Integer ng, s, t;
        mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        // ng = s*g + t*a
        for (std::size_t j = 0; j < L.cols(); ++j) x[j] = s * x[j] + t * L(i, j);
        g = ng;
    }
    return x;
}

} // namespace brauerkit
