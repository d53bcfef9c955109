#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "brauerkit/error.hpp"
#include "brauerkit/group_info.hpp"
#include "brauerkit/int_matrix.hpp"
#include "brauerkit/quotient.hpp"

namespace brauerkit {

/// Sum_K a_K [G/K] in B(G), indexed by the classes of G's lattice.
struct BurnsideElement {
    GroupRef group;
    IntVector coeffs;

    static BurnsideElement zero(GroupRef G) {
        const auto n = G->class_count();
        return {std::move(G), IntVector(n)};
    }

    /// [G/K] for the class index of K.
    static BurnsideElement basis(GroupRef G, std::size_t cls) {
        auto x = zero(std::move(G));
        x.coeffs.at(cls) = 1;
        return x;
    }

    /// [G/G], the identity of the ring.
    static BurnsideElement one(GroupRef G) {
        const auto top = G->top_class();
        return basis(std::move(G), top);
    }

    static BurnsideElement from_coeffs(GroupRef G, IntVector coeffs) {
        if (coeffs.size() != G->class_count())
            throw Error(Errc::DimensionMismatch, "coefficient vector has " + std::to_string(coeffs.size()) +
                                                     " entries, group has " +
                                                     std::to_string(G->class_count()) + " classes");
        return {std::move(G), std::move(coeffs)};
    }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    const Integer& top_coefficient() const { return coeffs.back(); }

    BurnsideElement& operator+=(const BurnsideElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }

    BurnsideElement& operator-=(const BurnsideElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }

    friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
    friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }

    friend BurnsideElement operator*(const Integer& k, BurnsideElement a) {
        for (auto& c : a.coeffs) c *= k;
        return a;
    }

    friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
        return same_group(*a.group, *b.group) && a.coeffs == b.coeffs;
    }

    void check_same(const BurnsideElement& o) const {
        if (!same_group(*group, *o.group)) throw Error(Errc::GroupMismatch, "elements live in different groups");
    }
};

/// f_H(x) for every class H: the table of marks applied to the coefficients.
inline IntVector marks_of(const BurnsideElement& x) {
    return times_column(x.group->marks.marks, x.coeffs);
}

/// Product through mark vectors: multiply pointwise, then recover the
/// coefficients by back-substitution in the upper triangular table.
inline BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) {
    x.check_same(y);
    const auto& M = x.group->marks.marks;
    const std::size_t n = M.rows();
    IntVector mx = marks_of(x), my = marks_of(y);
    IntVector target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = mx[i] * my[i];
    IntVector c(n);
    for (std::size_t k = n; k-- > 0;) {
        Integer rhs = target[k];
        for (std::size_t j = k + 1; j < n; ++j) rhs -= M(k, j) * c[j];
        if (!mpz_divisible_p(rhs.get_mpz_t(), M(k, k).get_mpz_t()))
            throw Error(Errc::IntegralityViolation, "mark system has no integral solution");
        c[k] = rhs / M(k, k);
    }
    return {x.group, std::move(c)};
}

/// Ind: [H/U] -> [G/U], through an explicit embedding of H in G.
inline BurnsideElement induce(const Embedding& e, const BurnsideElement& x) {
    if (!same_group(*x.group, *e.sub)) throw Error(Errc::GroupMismatch, "element does not live on the subgroup");
    auto out = BurnsideElement::zero(e.parent);
    const auto& sl = e.sub->lattice;
    for (std::size_t c = 0; c < sl.size(); ++c) {
        if (x.coeffs[c] == 0) continue;
        auto cls = e.parent->lattice.class_of(e.to_parent_set(sl[c].representative.members));
        out.coeffs[cls] += x.coeffs[c];
    }
    return out;
}

inline BurnsideElement induce(const GroupRef& G, const Subgroup& H, const BurnsideElement& x) {
    return induce(embed(G, H), x);
}

/// Res: [G/K] -> sum over double cosets HgK of [H / (H cap gKg^{-1})].
inline BurnsideElement restrict(const Embedding& e, const BurnsideElement& x) {
    if (!same_group(*x.group, *e.parent)) throw Error(Errc::GroupMismatch, "element does not live on the parent");
    const FiniteGroup& G = e.parent->group;
    const auto& gl = e.parent->lattice;
    const Subgroup H{e.to_parent_set(whole_group(e.sub->group).members)};
    auto out = BurnsideElement::zero(e.sub);
    for (std::size_t j = 0; j < gl.size(); ++j) {
        if (x.coeffs[j] == 0) continue;
        const auto& K = gl[j].representative;
        for (Index g : double_cosets(G, H, K)) {
            Subgroup stab{H.members & conjugate(G, K, G.inv(g)).members};
            auto cls = e.sub->lattice.class_of(e.from_parent_set(stab.members));
            out.coeffs[cls] += x.coeffs[j];
        }
    }
    return out;
}

inline BurnsideElement restrict(const GroupRef& G, const Subgroup& H, const BurnsideElement& x) {
    return restrict(embed(G, H), x);
}

/// Inf: [(G/N)/(H/N)] -> [G/H] through the subgroup correspondence.
inline BurnsideElement inflate(const QuotientMap& q, const BurnsideElement& x) {
    if (!same_group(*x.group, *q.target)) throw Error(Errc::GroupMismatch, "element does not live on the quotient");
    const auto corr = subgroup_correspondence(q);
    auto out = BurnsideElement::zero(q.source);
    for (std::size_t c = 0; c < corr.size(); ++c) out.coeffs[corr[c]] += x.coeffs[c];
    return out;
}

/// Covariant transport along an isomorphism src -> dst given on element
/// indices: [src/U] -> [dst/iso(U)].
inline BurnsideElement transport(const GroupRef& dst, std::span<const Index> iso, const BurnsideElement& x) {
    const auto& src = *x.group;
    if (iso.size() != src.order() || src.order() != dst->order())
        throw Error(Errc::DimensionMismatch, "isomorphism size mismatch");
    auto out = BurnsideElement::zero(dst);
    for (std::size_t c = 0; c < src.class_count(); ++c) {
        if (x.coeffs[c] == 0) continue;
        ElementSet img(dst->order());
        for (Index u : src.lattice[c].representative.members.indices()) img.insert(iso[u]);
        out.coeffs[dst->lattice.class_of(img)] += x.coeffs[c];
    }
    return out;
}

/// Contravariant map along a surjective homomorphism src -> dst given on
/// element indices: a transitive dst-set dst/V becomes the src-set with
/// point stabilizer hom^{-1}(V).
inline BurnsideElement pullback_along(const GroupRef& src, std::span<const Index> hom, const BurnsideElement& y) {
    const auto& dst = *y.group;
    if (hom.size() != src->order()) throw Error(Errc::DimensionMismatch, "homomorphism size mismatch");
    ElementSet hit(dst.order());
    for (Index h : hom) hit.insert(h);
    if (hit.count() != dst.order()) throw Error(Errc::InvalidArgument, "homomorphism is not surjective");
    auto out = BurnsideElement::zero(src);
    for (std::size_t c = 0; c < dst.class_count(); ++c) {
        if (y.coeffs[c] == 0) continue;
        const auto& V = dst.lattice[c].representative;
        ElementSet pre(src->order());
        for (Index s = 0; s < src->order(); ++s)
            if (V.contains(hom[s])) pre.insert(s);
        out.coeffs[src->lattice.class_of(pre)] += y.coeffs[c];
    }
    return out;
}

/// Label for class c: "1" for the trivial class, "G" for the top, else "H<c>".
inline std::string class_label(const GroupInfo& G, std::size_t c) {
    if (c == G.top_class()) return "G";
    if (c == 0) return "1";
    return "H" + std::to_string(c);
}

/// Human-readable form such as "[G/1] - 2[G/H1] - [G/H2] + 2[G/G]".
inline std::string to_string(const BurnsideElement& x) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t c = 0; c < x.coeffs.size(); ++c) {
        const Integer& a = x.coeffs[c];
        if (a == 0) continue;
        Integer mag = abs(a);
        if (first)
            os << (a < 0 ? "-" : "");
        else
            os << (a < 0 ? " - " : " + ");
        if (mag != 1) os << mag;
        os << "[G/" << class_label(*x.group, c) << "]";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace brauerkit
