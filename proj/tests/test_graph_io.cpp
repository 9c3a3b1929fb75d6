#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lgr/error.hpp"
#include "lgr/graph_io.hpp"
#include "test_support.hpp"

namespace lgr {
namespace {

ErrorCode parse_error(std::string_view text) {
    try {
        parse(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed: " << text;
    return ErrorCode::Unsupported;
}

TEST(Parse, MinimalFile) {
    const LayeredGraph g = parse("LGR v1\nk 1\nq 1\nlayer 1 present 1\n");
    EXPECT_EQ(g.n(), 1);
    EXPECT_EQ(g.q(), 1);
}

TEST(Parse, CommentsBlankLinesAndCanonicalOutput) {
    const std::string text =
        "# a triangle over two layers\n"
        "LGR v1   \n"
        "\n"
        "k 3\n"
        "q 2\n"
        "layer 2 present 3 1\n"
        "layer 1 present 1 2   # label 3 absent\n"
        "inter 1 2 3\n"
        "edge 1 2 1\n"
        "inter 1 1 1\n";
    const LayeredGraph g = parse(text);
    EXPECT_EQ(serialize(g),
              "LGR v1\n"
              "k 3\n"
              "q 2\n"
              "layer 1 present 1 2\n"
              "layer 2 present 1 3\n"
              "edge 1 1 2\n"
              "inter 1 1 1\n"
              "inter 1 2 3\n");
}

TEST(Parse, SyntaxErrorsCarryLineNumbers) {
    try {
        parse("LGR v1\nk 2\nq 1\nlayer 1 present 1 2\nvertex 1 1\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Syntax);
        EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
    }
}

TEST(Parse, RejectsMalformedInput) {
    EXPECT_EQ(parse_error(""), ErrorCode::Syntax);
    EXPECT_EQ(parse_error("LGR v2\n"), ErrorCode::Syntax);
    EXPECT_EQ(parse_error("LGR v1\nq 1\n"), ErrorCode::Syntax);
    EXPECT_EQ(parse_error("LGR v1\nk 1\nq 2\nlayer 1 present 1\n"), ErrorCode::Syntax);
    EXPECT_EQ(parse_error("LGR v1\nk 1\nq 1\nlayer 1 present x\n"), ErrorCode::Syntax);
    EXPECT_EQ(parse_error("LGR v1\nk 1\nq 1\nlayer 1 present 1\nlayer 1 present 1\n"), ErrorCode::Syntax);
    EXPECT_EQ(parse_error("LGR v1\nk 2\nq 1\nlayer 1 present 1 2\nedge 1 1\n"), ErrorCode::Syntax);
}

TEST(Parse, ValidationErrorsPassThrough) {
    EXPECT_EQ(parse_error("LGR v1\nk 2\nq 1\nlayer 1 present\n"), ErrorCode::EmptyLayer);
    EXPECT_EQ(parse_error("LGR v1\nk 2\nq 2\nlayer 1 present 1\nlayer 2 present 1\ninter 1 1 2\n"),
              ErrorCode::EdgeToAbsentVertex);
    EXPECT_EQ(parse_error("LGR v1\nk 2\nq 1\nlayer 1 present 1 2\nedge 1 1 2\nedge 1 2 1\n"),
              ErrorCode::DuplicateEdge);
    EXPECT_EQ(parse_error("LGR v1\nk 2\nq 1\nlayer 1 present 1 2\ninter 1 1 1\n"), ErrorCode::LayerOutOfRange);
}

TEST(Serialize, FullK2x2) {
    const std::string text = serialize(gen_full(2, 2));
    EXPECT_EQ(text,
              "LGR v1\nk 2\nq 2\nlayer 1 present 1 2\nlayer 2 present 1 2\n"
              "edge 1 1 2\nedge 2 1 2\n"
              "inter 1 1 1\ninter 1 1 2\ninter 1 2 1\ninter 1 2 2\n");
}

TEST(RoundTrip, ParseSerializeIsIdentity) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const int q = 1 + static_cast<int>(rng() % 6);
        RawLayeredGraph raw = describe(gen_random(k, q, density(rng), density(rng), rng()));
        // Knock out some labels so absent vertices are exercised.
        for (auto& labels : raw.present) {
            if (labels.size() > 1 && rng() % 2) labels.erase(labels.begin() + static_cast<long>(rng() % labels.size()));
        }
        std::erase_if(raw.edges, [&](const RawEdge& e) {
            const auto& p = raw.present[e.layer - 1];
            return std::find(p.begin(), p.end(), e.a) == p.end() || std::find(p.begin(), p.end(), e.b) == p.end();
        });
        std::erase_if(raw.inters, [&](const RawInterEdge& e) {
            const auto& pa = raw.present[e.from_layer - 1];
            const auto& pb = raw.present[e.to_layer - 1];
            return std::find(pa.begin(), pa.end(), e.a) == pa.end() || std::find(pb.begin(), pb.end(), e.b) == pb.end();
        });
        const LayeredGraph g = validate(raw);
        const std::string text = serialize(g);
        const LayeredGraph back = parse(text);
        ASSERT_TRUE(back == g) << text;
        ASSERT_EQ(serialize(back), text);
    }
}

TEST(Generators, Full) {
    EXPECT_TRUE(gen_full(1, 4) == gen_path(4));
    EXPECT_EQ(gen_full(3, 2).edge_count(), 15);
    const LayeredGraph k5 = gen_full(5, 1);
    EXPECT_EQ(k5.edge_count(), 10);
    EXPECT_TRUE(classify(gen_full(4, 3)).is_full);
}

TEST(Generators, RandomExtremesAndDeterminism) {
    EXPECT_EQ(gen_random(4, 3, 0.0, 0.0, 7).edge_count(), 0);
    EXPECT_EQ(serialize(gen_random(4, 3, 1.0, 1.0, 7)), serialize(gen_full(4, 3)));
    EXPECT_EQ(serialize(gen_random(5, 6, 0.4, 0.6, 11)), serialize(gen_random(5, 6, 0.4, 0.6, 11)));
    EXPECT_NE(serialize(gen_random(5, 6, 0.4, 0.6, 11)), serialize(gen_random(5, 6, 0.4, 0.6, 12)));
    EXPECT_THROW(gen_random(3, 3, 1.5, 0.0, 1), Error);
    EXPECT_THROW(gen_full(0, 3), Error);
}

TEST(Generators, Llg) {
    EXPECT_TRUE(classify(gen_llg(1, 5, 0.0, 1.0, 1)).is_llg);
    EXPECT_TRUE(gen_llg(1, 5, 0.0, 1.0, 1) == gen_path(5));
    const LayeredGraph g = gen_llg(3, 2, 0.5, 1.0, 3);
    EXPECT_EQ(g.inter(0).edge_count(), 3);
    for (int seed = 0; seed < 20; ++seed) {
        const LayeredGraph r = gen_llg(4, 5, 0.5, 0.5, static_cast<std::uint64_t>(seed));
        ASSERT_TRUE(classify(r).is_llg);
        for (const auto& e : describe(r).inters) ASSERT_EQ(e.a, e.b);
    }
}

}  // namespace
}  // namespace lgr
