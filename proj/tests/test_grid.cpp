#include <gtest/gtest.h>

#include <random>

#include "fungal/grid.hpp"

using namespace fungal;

TEST(ParseGrid, SmallestInput) {
    const Configuration c = parse_grid("1 1 0\n1\n");
    EXPECT_EQ(c.rows(), 1);
    EXPECT_EQ(c.cols(), 1);
    EXPECT_EQ(c.background(), 0);
    EXPECT_EQ(c.at(0, 0), 1);
}

TEST(ParseGrid, RaggedRowNamesLine) {
    try {
        parse_grid("2 2 0\n10\n1\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_STREQ(e.what(), "ragged row at line 3");
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(ParseGrid, Errors) {
    EXPECT_THROW(parse_grid("2 2\n10\n01\n"), ParseError);
    EXPECT_THROW(parse_grid("2  2 0\n10\n01\n"), ParseError);
    EXPECT_THROW(parse_grid("0 2 0\n"), ParseError);
    EXPECT_THROW(parse_grid("1 2 2\n10\n"), ParseError);
    EXPECT_THROW(parse_grid("2 2 0\n10\n0x\n"), ParseError);
    EXPECT_THROW(parse_grid("2 2 0\n10\n"), ParseError);
    EXPECT_THROW(parse_grid("1 2 0\n10\n11\n"), ParseError);
    try {
        parse_grid("2 2 0\n10\n0x\n");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(ParseGrid, CommentsBeforeHeader) {
    const Configuration c = parse_grid("# a wire\n#\n1 3 1\n010\n");
    EXPECT_EQ(c.background(), 1);
    EXPECT_EQ(c.at(0, 1), 1);
    EXPECT_EQ(c.at(0, 0), 0);
}

TEST(ParseGrid, RoundTripCanonical) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const int rows = 1 + int(rng() % 7), cols = 1 + int(rng() % 9);
        std::string text = std::to_string(rows) + " " + std::to_string(cols) + " " + std::to_string(rng() % 2) + "\n";
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) text += char('0' + rng() % 2);
            text += '\n';
        }
        EXPECT_EQ(serialize(parse_grid(text)), text);
    }
}

TEST(Get, InsideAndBackground) {
    const Configuration one = parse_grid("1 1 0\n1\n");
    EXPECT_EQ(one.get(0, 0), 1);
    EXPECT_EQ(one.get(5, 5), 0);
    const Configuration bg1 = parse_grid("1 1 1\n0\n");
    EXPECT_EQ(bg1.get(-1, 0), 1);
    EXPECT_EQ(bg1.get(0, 0), 0);
}

TEST(Get, TotalOverAWindow) {
    const Configuration c = parse_grid("2 3 1\n010\n001\n");
    for (long r = -4; r < 6; ++r)
        for (long col = -4; col < 7; ++col)
            if (!c.contains(r, col)) {
                EXPECT_EQ(c.get(r, col), 1);
            }
}

TEST(Configuration, PaddedAndWindow) {
    const Configuration c = parse_grid("2 2 1\n01\n00\n");
    const Configuration p = c.padded(2);
    EXPECT_EQ(p.rows(), 6);
    EXPECT_EQ(p.cols(), 6);
    EXPECT_EQ(p.at(0, 0), 1);
    EXPECT_EQ(p.at(2, 2), 0);
    EXPECT_EQ(p.at(2, 3), 1);
    EXPECT_EQ(p.window(2, 2, 2, 2), c);
    EXPECT_EQ(c.count_ones(), 1);
}

TEST(Render, Ascii) {
    EXPECT_EQ(render(parse_grid("1 2 0\n01\n"), RenderFormat::ascii), "01\n");
}

TEST(Render, GraymapWhiteForZero) {
    const std::string pgm = render(Configuration(3, 3, 0), RenderFormat::pgm);
    std::istringstream in(pgm);
    std::string magic;
    int w, h, maxval;
    in >> magic >> w >> h >> maxval;
    EXPECT_EQ(magic, "P2");
    EXPECT_EQ(w, 3);
    EXPECT_EQ(h, 3);
    int white = 0, px;
    while (in >> px) white += px == maxval;
    EXPECT_EQ(white, 9);
    EXPECT_NE(render(parse_grid("1 1 0\n1\n"), RenderFormat::pgm).find("\n0\n"), std::string::npos);
}

TEST(Render, WireRowSurvivesParseAndRender) {
    const Configuration c = parse_grid("1 8 0\n11010101\n");
    EXPECT_EQ(render(c, RenderFormat::ascii), "11010101\n");
}

TEST(Render, AsciiThenParseReproducesCells) {
    const Configuration c = parse_grid("3 4 0\n0110\n1001\n0000\n");
    const Configuration back = parse_grid("3 4 0\n" + render(c, RenderFormat::ascii));
    EXPECT_EQ(back, c);
}

TEST(Render, FormatNames) {
    EXPECT_EQ(parse_render_format("ascii"), RenderFormat::ascii);
    EXPECT_EQ(parse_render_format("pgm"), RenderFormat::pgm);
    EXPECT_THROW(parse_render_format("png"), std::invalid_argument);
}

TEST(FromRows, AnyOtherCharacterIsZero) {
    const Configuration c = from_rows({"1.", ".1"}, 0);
    EXPECT_EQ(c.at(0, 0), 1);
    EXPECT_EQ(c.at(0, 1), 0);
    EXPECT_EQ(c.at(1, 1), 1);
}
