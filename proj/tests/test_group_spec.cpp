#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "brauerkit/brauerkit.hpp"

using namespace brauerkit;
namespace fs = std::filesystem;

namespace {

std::size_t parse_error_position(std::string_view text) {
    try {
        parse_group_spec(text);
    } catch (const SpecParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for '" << text << "'";
    return ~std::size_t{0};
}

Errc error_code(std::string_view text) {
    try {
        parse_group_spec(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return Errc::InvalidArgument;
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("brauerkit-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

/// Leaves the registry memo empty and uncached on exit.
struct RegistryGuard {
    ~RegistryGuard() {
        Registry::instance().set_cache_dir(std::nullopt);
        Registry::instance().clear();
    }
};

} // namespace

TEST(GroupSpecParse, Families) {
    auto s3 = parse_group_spec("S 3");
    EXPECT_EQ(s3.kind, GroupSpec::Kind::Symmetric);
    EXPECT_EQ(s3.n, 3u);
    auto g = build_group(s3);
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.degree(), 3u);

    auto v = parse_group_spec("C 2 x C 2");
    EXPECT_EQ(v.kind, GroupSpec::Kind::Product);
    ASSERT_EQ(v.factors.size(), 2u);
    auto vg = build_group(v);
    EXPECT_EQ(vg.order(), 4u);
    EXPECT_EQ(vg.degree(), 4u);
    EXPECT_FALSE(is_cyclic(*analyze(vg)));

    auto p = build_group("perm 4 : (0 1)(2 3), (0 2)(1 3)");
    EXPECT_EQ(p.order(), 4u);
    EXPECT_FALSE(is_cyclic(*analyze(p)));

    EXPECT_EQ(build_group("Q 8").order(), 8u);
    EXPECT_EQ(build_group("V 4").order(), 4u);
    EXPECT_EQ(build_group("D 10").order(), 10u);
    EXPECT_EQ(build_group("A 5").order(), 60u);
    EXPECT_EQ(build_group("C 2 x C 3 x C 5").order(), 30u);
    EXPECT_EQ(build_group("S 5", 200).order(), 120u);
}

TEST(GroupSpecParse, RenderRoundTrip) {
    for (const char* text : {"C 7", "D 12", "S 4", "A 5", "Q 8", "V 4", "C 2 x C 4", "S 3 x C 3",
                             "perm 4 : (0 1)(2 3), (0 2)(1 3)", "perm 7 : (0 1 2), (1 2)(3 4 5 6)",
                             "A 4 x perm 3 : (0 1)"}) {
        auto g = parse_group_spec(text);
        EXPECT_EQ(parse_group_spec(render(g)), g) << text;
    }
    for (const auto& e : catalog()) EXPECT_EQ(parse_group_spec(render(parse_group_spec(e.spec))), parse_group_spec(e.spec));
}

TEST(GroupSpecParse, Errors) {
    EXPECT_EQ(parse_error_position("X 3"), 0u);
    EXPECT_EQ(parse_error_position("C"), 1u);
    EXPECT_EQ(parse_error_position("C 2 y C 2"), 4u);
    EXPECT_EQ(parse_error_position("perm 3 (0 1)"), 7u);
    EXPECT_EQ(parse_error_position("perm 3 : (0 5)"), 9u);
    EXPECT_EQ(parse_error_position(""), 0u);
    EXPECT_EQ(error_code("S 7"), Errc::UnsupportedSize);
    EXPECT_EQ(error_code("D 7"), Errc::UnsupportedSize);
    EXPECT_EQ(error_code("Q 16"), Errc::UnsupportedSize);
    EXPECT_EQ(error_code("C 0"), Errc::UnsupportedSize);
    try {
        build_group("C 300");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::OrderCapExceeded);
    }
}

TEST(Catalog, OrdersMatchRealization) {
    std::set<std::string> names;
    for (const auto& e : catalog()) {
        EXPECT_TRUE(names.insert(e.name).second) << e.name;
        EXPECT_EQ(build_group(e.spec).order(), e.order) << e.name;
    }
    auto c34 = analyze(build_group("perm 7 : (0 1 2), (1 2)(3 4 5 6)"));
    EXPECT_FALSE(is_cyclic(*c34));
    EXPECT_TRUE(is_q_quasi_elementary(*c34, 2));  // C3 normal, cyclic, quotient C4
    for (const auto& e : catalog_up_to(8)) EXPECT_LE(e.order, 8u);
}

TEST(Cache, SerializeRoundTrip) {
    auto g = build_group("S 4");
    auto info = analyze(g);
    auto j = detail::serialize_info(*info);
    auto back = detail::deserialize_info(j, g, info->key);
    ASSERT_TRUE(back);
    EXPECT_EQ(back->marks.marks, info->marks.marks);
    ASSERT_EQ(back->class_count(), info->class_count());
    for (std::size_t c = 0; c < info->class_count(); ++c) {
        EXPECT_EQ(back->lattice[c].normalizer_order, info->lattice[c].normalizer_order);
        ASSERT_EQ(back->lattice[c].size(), info->lattice[c].size());
        for (std::size_t m = 0; m < info->lattice[c].size(); ++m)
            EXPECT_EQ(back->lattice[c].members[m].members, info->lattice[c].members[m].members);
    }
    EXPECT_EQ(detail::serialize_info(*back).dump(), j.dump());

    auto stale = j;
    stale["version"] = cache_format_version + 1;
    EXPECT_FALSE(detail::deserialize_info(stale, g, info->key));
    EXPECT_FALSE(detail::deserialize_info(j, g, "0000000000000000"));
}

TEST(Cache, DiskHitReproducesLattice) {
    RegistryGuard guard;
    TempDir dir;
    auto& reg = Registry::instance();
    reg.clear();
    reg.set_cache_dir(dir.path);

    auto g = build_group("A 4 x C 2");
    auto first = analyze(g);
    const auto file = dir.path / (first->key + ".json");
    ASSERT_TRUE(fs::exists(file));
    const auto dumped = detail::serialize_info(*first).dump();

    reg.clear();
    auto second = analyze(g);
    EXPECT_NE(first.get(), second.get());
    EXPECT_EQ(detail::serialize_info(*second).dump(), dumped);
    EXPECT_EQ(prim_invariants(second, Characteristic::zero()).invariants,
              prim_invariants(first, Characteristic::zero()).invariants);

    // A corrupt file is ignored and recomputed.
    { std::ofstream(file) << "{not json"; }
    reg.clear();
    auto third = analyze(g);
    EXPECT_EQ(detail::serialize_info(*third).dump(), dumped);
}

TEST(Cache, ContentKeyDependsOnElements) {
    auto a = content_key(build_group("C 4"));
    EXPECT_EQ(a, content_key(build_group("C 4")));
    EXPECT_NE(a, content_key(build_group("C 2 x C 2")));
    EXPECT_EQ(a.size(), 16u);
}

TEST(JsonIo, Shapes) {
    auto s3 = analyze(build_group("S 3"));
    auto x = BurnsideElement::from_coeffs(s3, {1, -2, -1, 2});
    auto j = to_json(x);
    ASSERT_EQ(j["terms"].size(), 4u);
    EXPECT_EQ(j["terms"][1]["order"], 2);
    EXPECT_EQ(j["terms"][1]["coeff"], -2);
    EXPECT_EQ(j["text"], to_string(x));

    Integer big("123456789012345678901234567890");
    EXPECT_TRUE(to_json(big).is_string());
    EXPECT_EQ(to_json(Integer(-5)), -5);

    auto rl = to_json(relation_lattice(s3, Characteristic::zero()));
    EXPECT_EQ(rl["top_ideal"], 2);
}
