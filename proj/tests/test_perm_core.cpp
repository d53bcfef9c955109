#include <gtest/gtest.h>

#include <numeric>

#include "brauerkit/brauerkit.hpp"
#include "support/oracles.hpp"

using namespace brauerkit;

namespace {

Permutation P(std::size_t n, const char* cycles) { return Permutation::from_cycles(n, cycles); }

std::vector<std::size_t> class_orders(const GroupInfo& G) {
    std::vector<std::size_t> v;
    for (const auto& c : G.lattice.classes()) v.push_back(c.order());
    return v;
}

std::vector<std::size_t> class_sizes(const GroupInfo& G) {
    std::vector<std::size_t> v;
    for (const auto& c : G.lattice.classes()) v.push_back(c.size());
    return v;
}

} // namespace

TEST(Permutation, ComposesRightToLeft) {
    const auto a = P(3, "(0 1)"), b = P(3, "(1 2)");
    // (a*b)(x) = a(b(x)): 1 -> 2 -> 2, 2 -> 1 -> 0, 0 -> 0 -> 1
    EXPECT_EQ(a * b, P(3, "(0 1 2)"));
    EXPECT_EQ((a * b).inverse(), P(3, "(0 2 1)"));
    EXPECT_TRUE((a * a).is_identity());
}

TEST(Permutation, CycleRoundTrip) {
    for (const char* c : {"()", "(0 1)", "(0 3 2)(1 4)", "(0 1 2 3 4)"}) EXPECT_EQ(P(5, c).to_cycles(), std::string(c));
    EXPECT_EQ(P(4, "(0 1)(2 3)").to_cycles(), "(0 1)(2 3)");
}

TEST(Permutation, RejectsBadInput) {
    EXPECT_THROW(Permutation({0, 0, 1}), Error);
    EXPECT_THROW(P(3, "(0 3)"), Error);
    EXPECT_THROW(P(3, "(0 1"), Error);
    EXPECT_THROW(P(3, "(0 1)(1 2)"), Error);
    try {
        P(2, "(0 5)");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegreeMismatch);
    }
}

TEST(ElementSet, BasicOperations) {
    auto a = ElementSet::from_indices(70, std::vector<Index>{0, 3, 65});
    auto b = ElementSet::from_indices(70, std::vector<Index>{0, 65});
    EXPECT_EQ(a.count(), 3u);
    EXPECT_TRUE(b.subset_of(a));
    EXPECT_FALSE(a.subset_of(b));
    EXPECT_EQ((a & b), b);
    EXPECT_EQ(a.indices(), (std::vector<Index>{0, 3, 65}));
    EXPECT_TRUE(key_less(a, b));  // {0,3,65} < {0,65}
    EXPECT_FALSE(key_less(b, a));
}

TEST(GenerateGroup, SymmetricGroupOnThreePoints) {
    auto G = generate_group(3, {P(3, "(0 1 2)"), P(3, "(0 1)")});
    EXPECT_EQ(G.order(), 6u);
    EXPECT_TRUE(G.element(0).is_identity());
    EXPECT_TRUE(std::is_sorted(G.elements().begin(), G.elements().end()));
}

TEST(GenerateGroup, TrivialGroup) {
    auto G = generate_group(1, {});
    EXPECT_EQ(G.order(), 1u);
}

TEST(GenerateGroup, KleinFourIsElementary) {
    auto G = generate_group(4, {P(4, "(0 1)(2 3)"), P(4, "(0 2)(1 3)")});
    ASSERT_EQ(G.order(), 4u);
    for (Index g = 0; g < 4; ++g) EXPECT_EQ(G.mul(g, g), FiniteGroup::identity());
}

TEST(GenerateGroup, Errors) {
    try {
        generate_group(3, {P(4, "(0 1)")});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegreeMismatch);
    }
    try {
        generate_group(6, {P(6, "(0 1 2 3 4 5)"), P(6, "(0 1)")}, 100);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::OrderCapExceeded);
    }
}

TEST(GenerateGroup, TablesAreConsistent) {
    auto G = build_group("S 4");
    for (Index a = 0; a < G.order(); ++a) {
        EXPECT_EQ(G.mul(a, G.inv(a)), 0u);
        for (Index b = 0; b < G.order(); b += 5) EXPECT_EQ(G.element(G.mul(a, b)), G.element(a) * G.element(b));
    }
    auto A = build_group("A 4");
    EXPECT_FALSE(A.find(P(4, "(0 1)")).has_value());
    EXPECT_THROW(A.index_of(P(4, "(0 1)")), Error);
}

TEST(AllSubgroups, SymmetricGroupS3) {
    auto G = analyze(build_group("S 3"));
    EXPECT_EQ(class_orders(*G), (std::vector<std::size_t>{1, 2, 3, 6}));
    EXPECT_EQ(class_sizes(*G), (std::vector<std::size_t>{1, 3, 1, 1}));
    EXPECT_EQ(G->lattice.subgroup_count(), oracle::subgroups_by_subsets(G->group).size());
}

TEST(AllSubgroups, KleinFour) {
    auto G = analyze(build_group("C 2 x C 2"));
    EXPECT_EQ(class_orders(*G), (std::vector<std::size_t>{1, 2, 2, 2, 4}));
    EXPECT_EQ(G->lattice.subgroup_count(), 5u);
}

TEST(AllSubgroups, TrivialGroup) {
    auto G = analyze(build_group("C 1"));
    EXPECT_EQ(G->class_count(), 1u);
    EXPECT_EQ(G->top_class(), 0u);
}

TEST(AllSubgroups, LatticeCap) {
    auto G = build_group("S 4");
    try {
        all_subgroups(G, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::LatticeCapExceeded);
    }
}

// Every subgroup appears in exactly one class, against exhaustive subset
// search (order <= 16) or generation by triples (order <= 24).
TEST(AllSubgroups, MatchesBruteForceOnCatalog) {
    for (const auto& e : catalog_up_to(24)) {
        auto G = analyze(build_group(e.spec));
        const auto expected = G->order() <= 16 ? oracle::subgroups_by_subsets(G->group)
                                               : oracle::subgroups_by_triples(G->group);
        std::set<std::vector<Index>> found;
        for (const auto& c : G->lattice.classes())
            for (const auto& m : c.members) EXPECT_TRUE(found.insert(m.members.indices()).second) << e.name;
        EXPECT_EQ(found, expected) << e.name;
    }
}

TEST(AllSubgroups, StructuralInvariants) {
    for (const auto& e : catalog()) {
        auto G = analyze(build_group(e.spec));
        const auto& L = G->lattice;
        EXPECT_EQ(L[0].order(), 1u) << e.name;
        EXPECT_EQ(L[L.top()].order(), G->order()) << e.name;
        std::size_t total = 0;
        for (std::size_t i = 0; i < L.size(); ++i) {
            const auto& c = L[i];
            EXPECT_EQ(G->order() % c.order(), 0u);
            EXPECT_EQ(c.size(), G->order() / c.normalizer_order) << e.name << " class " << i;
            EXPECT_EQ(L.is_normal(i), c.size() == 1);
            EXPECT_TRUE(L.subconjugate(i, i));
            for (std::size_t j = 0; j < L.size(); ++j)
                if (L.subconjugate(i, j)) { EXPECT_EQ(L[j].order() % c.order(), 0u); }
            for (const auto& m : c.members) EXPECT_FALSE(key_less(m.members, c.representative.members));
            total += c.size();
            if (i > 0) {
                const auto& p = L[i - 1];
                EXPECT_TRUE(p.order() < c.order() ||
                            (p.order() == c.order() && key_less(p.representative.members, c.representative.members)));
            }
        }
        EXPECT_EQ(total, L.subgroup_count()) << e.name;
    }
}

TEST(Quotient, S3ModC3) {
    auto G = analyze(build_group("S 3"));
    auto q = quotient_group(G, G->lattice[2].representative);
    EXPECT_EQ(q.target->order(), 2u);
    // q: S3 -> C2 pulls both target classes back onto {C3, S3}
    EXPECT_EQ(subgroup_correspondence(q), (std::vector<std::size_t>{2, 3}));
}

TEST(Quotient, ByTrivialIsIsomorphism) {
    auto G = analyze(build_group("D 8"));
    auto q = quotient_group(G, trivial_subgroup(G->group));
    EXPECT_EQ(q.target->order(), G->order());
    std::set<Index> img(q.element_map.begin(), q.element_map.end());
    EXPECT_EQ(img.size(), G->order());
    // The regular action relabels elements, so the correspondence is the
    // identity up to the class ordering of the relabelled copy.
    auto corr = subgroup_correspondence(q);
    std::vector<std::size_t> sorted = corr;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> ident(G->class_count());
    std::iota(ident.begin(), ident.end(), 0);
    EXPECT_EQ(sorted, ident);
    for (std::size_t c = 0; c < corr.size(); ++c) {
        EXPECT_EQ(G->lattice[corr[c]].order(), q.target->lattice[c].order());
        EXPECT_EQ(G->lattice[corr[c]].size(), q.target->lattice[c].size());
    }
}

TEST(Quotient, A4ModV4IsCyclicOfOrderThree) {
    auto G = analyze(build_group("A 4"));
    std::size_t v4 = 0;
    for (std::size_t c : G->lattice.normal_classes())
        if (G->lattice[c].order() == 4) v4 = c;
    ASSERT_NE(v4, 0u);
    auto q = quotient_group(G, G->lattice[v4].representative);
    EXPECT_EQ(q.target->order(), 3u);
    EXPECT_TRUE(is_cyclic(*q.target));
    auto corr = subgroup_correspondence(q);
    ASSERT_EQ(corr.size(), 2u);
    EXPECT_EQ(G->lattice[corr[0]].order(), 4u);
    EXPECT_EQ(corr[1], G->top_class());
}

TEST(Quotient, RejectsNonNormal) {
    auto G = analyze(build_group("S 3"));
    try {
        quotient_group(G, G->lattice[1].representative);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotNormal);
    }
    Subgroup bogus{ElementSet::from_indices(6, std::vector<Index>{0, 1, 2})};
    EXPECT_THROW(quotient_group(G, bogus), Error);
}

TEST(Quotient, HomomorphismAndPreimageOrders) {
    for (const auto& e : catalog_up_to(24)) {
        auto G = analyze(build_group(e.spec));
        for (std::size_t n : G->lattice.normal_classes()) {
            const auto& N = G->lattice[n].representative;
            auto q = quotient_group(G, N);
            ASSERT_EQ(q.target->order() * N.order(), G->order());
            for (Index a = 0; a < G->order(); a += 3)
                for (Index b = 0; b < G->order(); ++b)
                    ASSERT_EQ(q.element_map[G->group.mul(a, b)], q.target->group.mul(q.element_map[a], q.element_map[b]));
            std::size_t kernel = 0;
            for (Index g = 0; g < G->order(); ++g)
                if (q.element_map[g] == 0) {
                    ++kernel;
                    EXPECT_TRUE(N.contains(g));
                }
            EXPECT_EQ(kernel, N.order());
            const auto corr = subgroup_correspondence(q);
            std::set<std::size_t> distinct(corr.begin(), corr.end());
            EXPECT_EQ(distinct.size(), corr.size()) << e.name;
            for (std::size_t c = 0; c < corr.size(); ++c)
                EXPECT_EQ(G->lattice[corr[c]].order(), q.target->lattice[c].order() * N.order());
            // onto the classes containing a member above N
            std::size_t above = 0;
            for (const auto& cls : G->lattice.classes()) {
                bool any = false;
                for (const auto& m : cls.members) any = any || N.members.subset_of(m.members);
                above += any;
            }
            EXPECT_EQ(above, corr.size()) << e.name;
        }
    }
}

TEST(DoubleCosets, Examples) {
    auto G = analyze(build_group("S 3"));
    const auto& grp = G->group;
    const auto whole = whole_group(grp), triv = trivial_subgroup(grp);
    EXPECT_EQ(double_cosets(grp, whole, whole), (std::vector<Index>{0}));
    EXPECT_EQ(double_cosets(grp, triv, triv).size(), 6u);
    const auto& C2 = G->lattice[1].representative;
    const auto reps = double_cosets(grp, C2, C2);
    ASSERT_EQ(reps.size(), 2u);
    std::multiset<std::size_t> sizes;
    for (Index g : reps) {
        std::set<Index> dc;
        for (Index h : C2.members.indices())
            for (Index k : C2.members.indices()) dc.insert(grp.mul(grp.mul(h, g), k));
        sizes.insert(dc.size());
    }
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 4}));
}

TEST(DoubleCosets, PartitionTheGroup) {
    for (const char* spec : {"S 4", "D 12", "A 4 x C 2", "Q 8"}) {
        auto G = analyze(build_group(spec));
        const auto& grp = G->group;
        for (std::size_t i = 0; i < G->class_count(); ++i)
            for (std::size_t j = 0; j < G->class_count(); ++j) {
                const auto& H = G->lattice[i].representative;
                const auto& K = G->lattice[j].representative;
                std::vector<int> hit(grp.order(), 0);
                std::size_t total = 0;
                for (Index g : double_cosets(grp, H, K)) {
                    std::set<Index> dc;
                    for (Index h : H.members.indices())
                        for (Index k : K.members.indices()) dc.insert(grp.mul(grp.mul(h, g), k));
                    EXPECT_EQ(*dc.begin(), g);  // smallest index represents
                    for (Index x : dc) ++hit[x];
                    total += dc.size();
                }
                EXPECT_EQ(total, grp.order());
                for (int h : hit) EXPECT_EQ(h, 1);
            }
    }
}

TEST(Subgroups, Helpers) {
    auto G = build_group("S 4");
    const Index a = G.index_of(P(4, "(0 1 2 3)"));
    auto C4 = generated_subgroup(G, std::vector<Index>{a});
    EXPECT_EQ(C4.order(), 4u);
    EXPECT_TRUE(is_cyclic_subgroup(G, C4));
    EXPECT_FALSE(is_normal(G, C4));
    EXPECT_TRUE(is_subgroup(G, C4.members));
    auto V = generated_subgroup(G, std::vector<Index>{G.index_of(P(4, "(0 1)(2 3)")), G.index_of(P(4, "(0 2)(1 3)"))});
    EXPECT_TRUE(is_normal(G, V));
    EXPECT_FALSE(is_cyclic_subgroup(G, V));
    auto H = subgroup_as_group(G, C4);
    EXPECT_EQ(H.order(), 4u);
    EXPECT_EQ(H.degree(), 4u);
    // conjugate(G, H, g) = g^-1 H g
    const Index g = G.index_of(P(4, "(1 2)"));
    auto Cg = conjugate(G, C4, g);
    for (Index x : C4.members.indices()) EXPECT_TRUE(Cg.contains(G.conj(x, g)));
}
