#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "sketchgen/dedup/dedup.hpp"

using namespace sketchgen;
namespace fx = sketchgen::testing;
using namespace sketchgen::dedup;
using sketch::SketchHypergraph;

namespace {

SketchHypergraph triangle() { return {{{0, 0}, {10, 0}, {0, 10}}, {{{0, 1}}, {{1, 2}}, {{2, 0}}}}; }

SketchHypergraph arc_shape(int bulge) {
    return {{{0, 0}, {100, 0}, {50, bulge}}, {{{0, 1}}, {{0, 2, 1}}}};
}

} // namespace

TEST(DedupKey, SelfEqual) {
    const auto r = fx::rectangle(10, 20, 90, 60);
    EXPECT_EQ(dedup_key(r), dedup_key(r));
    EXPECT_TRUE(is_duplicate(r, r));
}

TEST(DedupKey, ScaledCopyMatches) {
    const auto r = fx::rectangle(10, 20, 90, 60);
    EXPECT_EQ(dedup_key(r), dedup_key(fx::scaled(r, 2)));
}

TEST(DedupKey, SquareVsTriangle) {
    EXPECT_NE(dedup_key(fx::rectangle(0, 0, 10, 10)), dedup_key(triangle()));
}

TEST(DedupKey, AllCoincidentThrows) {
    SketchHypergraph g{{{5, 5}, {5, 5}}, {{{0, 1}}}};
    EXPECT_THROW(dedup_key(g), DegenerateGeometry);
    const auto k = dedup_key_lenient(g);
    EXPECT_TRUE(k.degenerate);
    EXPECT_EQ(k, dedup_key_lenient(g));
}

TEST(IsDuplicate, ReversedEdgeOrder) {
    auto r = fx::rectangle(0, 0, 90, 50);
    auto rev = r;
    std::reverse(rev.edges.begin(), rev.edges.end());
    EXPECT_TRUE(is_duplicate(r, rev));
}

TEST(IsDuplicate, MovedCornerDiffers) {
    const auto r = fx::rectangle(0, 0, 90, 90);
    auto moved = r;
    moved.vertices[2] = {90 - 25, 90 - 25};
    EXPECT_FALSE(is_duplicate(r, moved));
}

TEST(IsDuplicate, SmallJitterCollides) {
    const auto r = fx::rectangle(0, 0, 90, 90);
    auto moved = r;
    moved.vertices[2] = {89, 90};
    EXPECT_TRUE(is_duplicate(r, moved));
}

TEST(IsDuplicate, ArcRadiusMatters) {
    // Same endpoints, sagitta 10 vs 40: radii 130 and 51.25 on a bbox side of 100.
    EXPECT_FALSE(is_duplicate(arc_shape(10), arc_shape(40)));
    EXPECT_TRUE(is_duplicate(arc_shape(40), arc_shape(40)));
}

TEST(Filter, KeepsFirstOfEachKey) {
    const auto a = fx::rectangle(0, 0, 90, 50);
    const auto b = fx::circle(100, 100, 30);
    const auto res = filter_dataset({a, a, b});
    EXPECT_EQ(res.kept, (std::vector<SketchHypergraph>{a, b}));
    EXPECT_EQ(res.stats.duplicates, 1u);
    EXPECT_EQ(res.stats.total, 3u);
    EXPECT_EQ(res.stats.kept, 2u);
}

TEST(Filter, DropsInvalid) {
    const auto a = fx::rectangle(0, 0, 90, 50);
    const auto b = fx::circle(100, 100, 30);
    SketchHypergraph bad{{{0, 0}, {0, 0}}, {{{0, 1}}}};
    const auto res = filter_dataset({a, bad, b});
    EXPECT_EQ(res.kept, (std::vector<SketchHypergraph>{a, b}));
    EXPECT_EQ(res.stats.invalid, 1u);
    EXPECT_EQ(res.stats.duplicates, 0u);
}

TEST(Filter, FiveClassesOfRectangles) {
    util::Rng rng(9);
    const std::vector<std::pair<int, int>> aspects{{10, 10}, {20, 10}, {30, 10}, {10, 40}, {50, 10}};
    std::vector<SketchHypergraph> corpus;
    for (int i = 0; i < 100; ++i) {
        const auto [w, h] = aspects[rng.uniform_int(aspects.size())];
        const int s = 1 + static_cast<int>(rng.uniform_int(4));
        const int ox = static_cast<int>(rng.uniform_int(50)), oy = static_cast<int>(rng.uniform_int(50));
        corpus.push_back(fx::shuffled(fx::rectangle(ox, oy, ox + w * s, oy + h * s), rng));
    }
    const auto res = filter_dataset(corpus);
    EXPECT_EQ(res.kept.size(), 5u);
    EXPECT_EQ(res.stats.duplicates, 95u);
}

TEST(Filter, OutputHasDistinctKeys) {
    util::Rng rng(10);
    std::vector<SketchHypergraph> corpus;
    for (int i = 0; i < 200; ++i) {
        corpus.push_back(fx::random_sketch(rng));
    }
    const auto res = filter_dataset(corpus);
    for (std::size_t i = 0; i < res.kept.size(); ++i) {
        for (std::size_t j = i + 1; j < res.kept.size(); ++j) {
            EXPECT_NE(dedup_key(res.kept[i]), dedup_key(res.kept[j]));
        }
    }
}

TEST(DedupKey, InvarianceProperties) {
    util::Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        const auto g = fx::random_sketch(rng);
        const auto k = dedup_key(g);
        EXPECT_EQ(dedup_key(fx::shuffled(g, rng)), k);
        EXPECT_EQ(dedup_key(fx::scaled(g, 1 + static_cast<int>(rng.uniform_int(3)))), k);
        EXPECT_EQ(dedup_key(fx::translated(g, -static_cast<int>(rng.uniform_int(3)), 0)), k);
    }
}
