#include <gtest/gtest.h>

#include "cafcon/cafcon.hpp"
#include "fixtures.hpp"

using namespace cafcon;

TEST(ParseCaf, ThreeArgDocument) {
    EXPECT_EQ(parse_caf(fixtures::three_arg_document), fixtures::three_arg_caf());
}

TEST(ParseCaf, EmptyAndCommentOnly) {
    EXPECT_EQ(parse_caf("").n_args(), 0u);
    EXPECT_EQ(parse_caf("# nothing\n\n   \n").n_args(), 0u);
}

TEST(ParseCaf, CommentsCrlfAndDuplicateAttacks) {
    const auto caf = parse_caf("# demo\r\narg p  # first\r\narg q\r\nclaim q c\r\nclaim p c\r\natt p q\r\natt p q\r\n");
    EXPECT_EQ(caf.n_args(), 2u);
    EXPECT_EQ(caf.af().attacks().size(), 1u);
    EXPECT_EQ(caf.claim(0), caf.claim(1));
}

namespace {
std::size_t error_line(const char* text) {
    try {
        parse_caf(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}
}  // namespace

TEST(ParseCaf, Errors) {
    EXPECT_EQ(error_line("att a b\n"), 1u);
    EXPECT_EQ(error_line("arg a\narg a\n"), 2u);
    EXPECT_EQ(error_line("arg a\nclaim a x\nclaim a y\n"), 3u);
    EXPECT_EQ(error_line("arg a\narg b\nclaim a x\n"), 2u);  // b has no claim
    EXPECT_EQ(error_line("arg a\nclaim a x\natt a b\n"), 3u);
    EXPECT_EQ(error_line("arg a\nfoo a\n"), 2u);
    EXPECT_EQ(error_line("arg a-b\n"), 1u);
    EXPECT_EQ(error_line("arg a b\n"), 1u);
    EXPECT_EQ(error_line("arg a\nclaim a x.y\n"), 2u);
    EXPECT_EQ(error_line("claim a x\narg a\n"), 1u);
}

TEST(EmitCaf, Canonical) {
    EXPECT_EQ(emit_caf(Caf{}), "");
    EXPECT_EQ(emit_caf(fixtures::three_arg_caf()), fixtures::three_arg_document);
    const auto caf = parse_caf("arg b\narg a\natt a b\natt b b\nclaim a k\natt a a\nclaim b k\n");
    EXPECT_EQ(emit_caf(caf), "arg b\narg a\nclaim b k\nclaim a k\natt b b\natt a b\natt a a\n");
}

TEST(EmitCaf, Figure1FixedPoint) {
    const auto art = reduce_unsat(fixtures::figure1_formula());
    const auto once = emit_caf(art.caf);
    EXPECT_EQ(parse_caf(once), art.caf);
    EXPECT_EQ(emit_caf(parse_caf(once)), once);
}

TEST(CafFormatProperty, RoundTrip) {
    Rng rng(314);
    for (int i = 0; i < 300; ++i) {
        const auto caf = random_caf(rng, 14, 5);
        const auto text = emit_caf(caf);
        const auto back = parse_caf(text);
        ASSERT_EQ(back, caf);
        EXPECT_EQ(emit_caf(back), text);
    }
}

TEST(Format, SetsPrintInOrder) {
    const auto caf = fixtures::three_arg_caf();
    EXPECT_EQ(format_extension(caf, fixtures::ext(caf, {"phi", "a1"})), "{a1,phi}");
    EXPECT_EQ(format_claims(caf, fixtures::claims(caf, {"phi", "a"})), "{a,phi}");
    EXPECT_EQ(format_claims(caf, caf.empty_claim_set()), "{}");
}
