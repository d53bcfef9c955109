#include <gtest/gtest.h>

#include <random>

#include "brauerkit/brauerkit.hpp"

using namespace brauerkit;

namespace {

GroupRef G(const char* spec) { return analyze(build_group(spec)); }

const auto Q = Characteristic::zero();
Characteristic F(std::size_t p) { return Characteristic::of(p); }

std::size_t class_with_order(const GroupInfo& g, std::size_t order) {
    for (std::size_t c = 0; c < g.class_count(); ++c)
        if (g.lattice[c].order() == order) return c;
    throw std::logic_error("no class of that order");
}

std::vector<GroupRef> small_catalog() {
    std::vector<GroupRef> out;
    for (const auto& e : catalog_up_to(24)) out.push_back(analyze(build_group(e.spec)));
    return out;
}

} // namespace

TEST(InducedRelations, Examples) {
    for (const char* s : {"C 2", "C 5", "C 7"}) EXPECT_EQ(induced_relations(G(s), Q).rows(), 0u) << s;
    EXPECT_EQ(induced_relations(G("S 3"), Q).rows(), 0u);

    auto a4 = G("A 4");
    auto ind = induced_relations(a4, Q);
    IntVector v(a4->class_count());
    v[0] = 1;
    v[class_with_order(*a4, 2)] = -3;
    v[class_with_order(*a4, 4)] = 2;
    EXPECT_TRUE(lattice_contains(ind, v));
}

TEST(InflatedRelations, Examples) {
    EXPECT_EQ(inflated_relations(G("A 5"), Q).rows(), 0u);
    EXPECT_EQ(inflated_relations(G("C 7"), Q).rows(), 0u);
    EXPECT_EQ(inflated_relations(G("S 3"), Q).rows(), 0u);

    auto e8 = G("C 2 x C 2 x C 2");
    auto inf = inflated_relations(e8, Q);
    EXPECT_GT(inf.rows(), 0u);
    // every C2 x C2 quotient contributes its relation
    std::size_t contributing = 0;
    for (std::size_t c : e8->lattice.normal_classes()) {
        if (e8->lattice[c].order() != 2) continue;
        auto q = quotient_group(e8, e8->lattice[c].representative);
        auto rl = relation_lattice(q.target, Q);
        ASSERT_EQ(rl.rank(), 1u);
        EXPECT_TRUE(lattice_contains(inf, inflate(q, rl.relation(0)).coeffs));
        ++contributing;
    }
    EXPECT_EQ(contributing, 7u);
}

TEST(PrimInvariants, A4CharZero) {
    auto r = prim_invariants(G("A 4"), Q);
    EXPECT_EQ(r.k_rank, 2u);
    EXPECT_EQ(r.invariants.free_rank, 1u);
    EXPECT_TRUE(r.invariants.torsion.empty());
    EXPECT_EQ(r.structure(), "Z");
    ASSERT_TRUE(r.generator_certificate);
    EXPECT_EQ(r.generator_certificate->top_coefficient(), 1);
    EXPECT_TRUE(r.certificate_generates);
}

TEST(PrimInvariants, QuasiElementaryCases) {
    auto s3 = verify_classification(G("S 3"), Q);
    EXPECT_FALSE(s3.predicted.applicable());
    EXPECT_TRUE(s3.agree);
    EXPECT_FALSE(s3.predicted.reason.empty());

    for (auto ch : {Q, F(2), F(3), F(5)}) {
        auto c6 = verify_classification(G("C 6"), ch);
        EXPECT_EQ(c6.k_rank, 0u);
        EXPECT_TRUE(c6.invariants.trivial());
        EXPECT_EQ(c6.structure(), "trivial");
        EXPECT_TRUE(c6.agree);
    }
}

TEST(Predict, Examples) {
    EXPECT_EQ(predict_prim(G("A 4"), Q).to_string(), "Z");
    EXPECT_EQ(predict_prim(G("A 5"), Q).to_string(), "Z");
    EXPECT_EQ(predict_prim(G("A 5"), F(2)).to_string(), "Z");
    EXPECT_EQ(predict_prim(G("S 4"), Q).to_string(), "Z/2");
    EXPECT_EQ(predict_prim(G("A 4 x C 2"), Q).to_string(), "trivial");
    EXPECT_EQ(predict_prim(G("S 3"), Q).to_string(), "not-applicable");
}

TEST(VerifyClassification, A4) {
    auto r = verify_classification(G("A 4"), Q);
    EXPECT_TRUE(r.agree);
    EXPECT_EQ(r.predicted.kind, PrimPrediction::Kind::Z);
}

TEST(VerifyClassification, SmallCatalog) {
    for (const auto& g : small_catalog())
        for (auto ch : {Q, F(2), F(3)}) {
            auto r = verify_classification(g, ch);
            EXPECT_TRUE(r.agree) << "order " << g->order() << " char " << ch.to_string() << ": predicted "
                                 << r.predicted.to_string() << " computed " << r.structure();
            EXPECT_LE(r.invariants.free_rank + r.invariants.torsion.size(), r.k_rank);
        }
}

TEST(Imprim, InsideRelationLattice) {
    for (const auto& g : small_catalog())
        for (auto ch : {Q, F(2)}) {
            for (const auto& m : {induced_relations(g, ch), inflated_relations(g, ch)})
                for (std::size_t i = 0; i < m.rows(); ++i)
                    ASSERT_TRUE(verify_relation(*g, ch, BurnsideElement::from_coeffs(g, m.row_vector(i))))
                        << "order " << g->order();
            auto r = prim_invariants(g, ch);
            EXPECT_TRUE(lattice_includes(r.relations, r.imprimitive));
        }
}

TEST(Certificate, AnyTopOneMemberGenerates) {
    std::mt19937_64 rng(99);
    for (const auto& g : small_catalog())
        for (auto ch : {Q, F(2), F(3)}) {
            auto r = prim_invariants(g, ch);
            if (!r.generator_certificate) continue;
            const auto& cert = *r.generator_certificate;
            EXPECT_EQ(cert.top_coefficient(), 1);
            EXPECT_TRUE(verify_relation(*g, ch, cert));
            for (const auto& x : random_top_one_members(r.relations, cert.coeffs, 5, rng)) {
                ASSERT_EQ(x.back(), 1);
                ASSERT_TRUE(lattice_contains(r.relations, x));
                ASSERT_TRUE(certificate_generates(r.relations, r.imprimitive, x)) << "order " << g->order();
            }
        }
}

TEST(Certificate, NonGeneratorIsRejected) {
    // Twice the certificate has top coefficient 2 and cannot generate Prim = Z.
    auto r = prim_invariants(G("A 4"), Q);
    ASSERT_TRUE(r.generator_certificate);
    IntVector twice;
    for (const auto& c : r.generator_certificate->coeffs) twice.push_back(2 * c);
    EXPECT_FALSE(certificate_generates(r.relations, r.imprimitive, twice));
}

// A proper quotient with top ideal 1 forces Prim to vanish.
TEST(PrimVanishes, QuotientWithUnitTopIdeal) {
    std::size_t seen = 0;
    for (const auto& g : small_catalog())
        for (auto ch : {Q, F(2), F(3)})
            for (std::size_t c : g->lattice.normal_classes()) {
                if (c == 0 || c == g->top_class()) continue;
                auto q = quotient_group(g, g->lattice[c].representative);
                if (top_coefficient_ideal(q.target, ch) != 1) continue;
                ++seen;
                EXPECT_TRUE(prim_invariants(g, ch).invariants.trivial()) << "order " << g->order();
                break;
            }
    EXPECT_GT(seen, 0u);
}

TEST(PrimInvariants, IndependentOfAnalysisOrder) {
    auto before = prim_invariants(G("S 4"), Q);
    Registry::instance().clear();
    for (const char* s : {"A 4", "D 8", "S 3", "C 2 x C 2"}) G(s);
    auto after = prim_invariants(G("S 4"), Q);
    EXPECT_EQ(before.relations, after.relations);
    EXPECT_EQ(before.imprimitive, after.imprimitive);
    EXPECT_EQ(before.invariants, after.invariants);

    // another faithful realization of A4
    auto alt = prim_invariants(G("perm 4 : (1 2 3), (0 1)(2 3)"), Q);
    auto a4 = prim_invariants(G("A 4"), Q);
    EXPECT_EQ(alt.invariants, a4.invariants);
    EXPECT_EQ(alt.k_rank, a4.k_rank);
}
