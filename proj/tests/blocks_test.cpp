#include <gtest/gtest.h>

#include "selfdesc/blocks.hpp"
#include "selfdesc/oracle.hpp"
#include "selfdesc/spectral.hpp"

using namespace selfdesc;

namespace {

DirectorWord w(const char* s) { return parse_director(s); }

CountVector cv(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) { return CountVector{{a, b, c, d}}; }

Rational max_residual(const std::vector<Residual>& es, std::size_t from, std::size_t to) {
    Rational best(0);
    for (std::size_t i = from; i <= to; ++i) best = std::max(best, max_abs(es[i]));
    return best;
}

}  // namespace

TEST(RecodeRun, Substitution) {
    EXPECT_EQ(to_string(recode_run({3, 1, 1, 5, RunSource::t1})), "a");
    EXPECT_EQ(to_string(recode_run({3, 1, 2, 5, RunSource::t1})), "b");
    EXPECT_EQ(to_string(recode_run({1, 2, 1, 2, RunSource::t2})), "cc");
    EXPECT_EQ(to_string(recode_run({5, 2, 2, 7, RunSource::t2})), "dd");
    EXPECT_THROW(recode_run({0, 2, 2, 0, RunSource::seed}), std::invalid_argument);
    EXPECT_EQ(value(RecodedLetter::a), 1);
    EXPECT_EQ(value(RecodedLetter::c), 1);
    EXPECT_EQ(value(RecodedLetter::b), 2);
    EXPECT_EQ(value(RecodedLetter::d), 2);
}

TEST(BlockDecompose, WorkedExample) {
    const auto blocks = block_decompose(w("121"), w("12"), 3);
    ASSERT_EQ(blocks.size(), 3u);
    EXPECT_EQ(to_string(blocks[0].word), "cc");
    EXPECT_EQ(to_string(blocks[1].word), "ab");
    EXPECT_EQ(to_string(blocks[2].word), "add");
    EXPECT_EQ(count_vector(blocks[0]), cv(0, 0, 2, 0));
    EXPECT_EQ(count_vector(blocks[1]), cv(1, 1, 0, 0));
    EXPECT_EQ(count_vector(blocks[2]), cv(1, 0, 0, 2));
    EXPECT_EQ(blocks[0].start, 2u);
    EXPECT_EQ(blocks[2].end, 9u);
}

TEST(BlockDecompose, TwelveOneAndAllOnes) {
    const auto twelve_one = block_decompose(w("12"), w("1"), 3);
    EXPECT_EQ(to_string(twelve_one[0].word), "cc");
    EXPECT_EQ(to_string(twelve_one[1].word), "ab");
    EXPECT_EQ(to_string(twelve_one[2].word), "acc");

    const auto ones = block_decompose(w("1"), w("1"), 6);
    EXPECT_EQ(to_string(ones[0].word), "cc");
    for (std::size_t i = 1; i < ones.size(); ++i) EXPECT_EQ(to_string(ones[i].word), "aa");
    EXPECT_THROW(block_decompose(w("1"), w("1"), 0), std::invalid_argument);
}

TEST(BlockDecompose, CountsOnlyMatchesWords) {
    BlockOptions counts;
    counts.keep_words = false;
    const auto full = block_decompose(w("211"), w("12"), 15);
    const auto lean = block_decompose(w("211"), w("12"), 15, counts);
    for (std::size_t i = 0; i < full.size(); ++i) {
        EXPECT_TRUE(lean[i].word.empty());
        EXPECT_EQ(lean[i].v, full[i].v);
        EXPECT_EQ(count_vector(full[i].word), full[i].v);
    }
}

TEST(BlockDecompose, LetterBudgetIsEnforced) {
    BlockOptions opts;
    opts.keep_words = false;
    opts.max_letters = 1000;
    EXPECT_THROW(block_decompose(w("2"), w("2"), 40, opts), std::length_error);
}

// Tiling, decoding, evenness and growth over every pair of period <= 3.
TEST(BlockProperty, TilingDecodingEvenness) {
    const auto words = all_words(3);
    for (const auto& x1 : words)
        for (const auto& x2 : words) {
            const auto blocks = block_decompose(x1, x2, 12);
            const Word u = oracle_generate(x1, x2, blocks.back().end).u;
            std::uint64_t expected_start = 2;
            for (const BlockLevel& b : blocks) {
                ASSERT_EQ(b.start, expected_start);
                expected_start = b.end;
                ASSERT_EQ(b.word.size(), b.length());
                ASSERT_EQ(b.v.total(), b.length());
                ASSERT_EQ(b.v.n[kC] % 2, 0u);
                ASSERT_EQ(b.v.n[kD] % 2, 0u);
                for (std::size_t i = 0; i < b.word.size(); ++i) ASSERT_EQ(value(b.word[i]), u[b.start + i]);
            }
        }
}

// Blocks grow once alpha1 > 1 and the level-5 counts see the Perron direction.
TEST(BlockProperty, GrowthWhenDominantEigenvalueExceedsOne) {
    BlockOptions counts;
    counts.keep_words = false;
    const auto words = all_words(3);
    std::size_t checked = 0;
    for (const auto& x1 : words)
        for (const auto& x2 : words) {
            const Spectrum s = perron(densities(x1, x2));
            if (!s.l || s.alpha1 <= 1.0 + 1e-9) continue;
            const auto blocks = block_decompose(x1, x2, 21, counts);
            double weight = 0;
            for (std::size_t i = 0; i < 4; ++i) weight += (*s.l)[i] * static_cast<double>(blocks[5].v.n[i]);
            if (weight <= 1e-12) continue;
            ++checked;
            for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
                ASSERT_GE(blocks[i + 1].length(), blocks[i].length()) << x1.str() << "," << x2.str();
            ASSERT_GT(blocks[20].length(), blocks[5].length()) << x1.str() << "," << x2.str();
        }
    EXPECT_GT(checked, 100u);
}

TEST(RecursionResidual, Examples) {
    const TransitionMatrix m = build_matrices(densities(w("12"), w("12")));
    const Residual e0 = recursion_residual(cv(0, 0, 2, 0), cv(1, 1, 0, 0), m);
    for (const Rational& x : e0) EXPECT_EQ(x, Rational(0));

    const CountVector next = cv(3, 1, 4, 2);
    const Residual ez = recursion_residual(cv(0, 0, 0, 0), next, m);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(ez[i], Rational(static_cast<std::int64_t>(next.n[i])));
}

// e_n = v_{n+1} - A v_n stays bounded. Bounds frozen from an independent run
// of the list-based generator: 1/2 for (12,1) and 1 for ("121","12").
TEST(RecursionResidual, BoundedOverThirtyLevels) {
    BlockOptions counts;
    counts.keep_words = false;
    struct Case {
        const char* t1;
        const char* t2;
        Rational bound;
    };
    for (const Case& c : {Case{"12", "1", Rational(1, 2)}, Case{"121", "12", Rational(1)}}) {
        const auto blocks = block_decompose(w(c.t1), w(c.t2), 32, counts);
        const auto es = residuals(blocks, build_matrices(densities(w(c.t1), w(c.t2))));
        ASSERT_EQ(es.size(), 31u);
        const Rational early = max_residual(es, 1, 15);
        const Rational late = max_residual(es, 15, 30);
        EXPECT_LE(late, early);
        EXPECT_EQ(early, c.bound);
        EXPECT_LE(late, c.bound);
    }
}

TEST(RecursionResidual, BoundedForAllSmallPeriodPairs) {
    BlockOptions counts;
    counts.keep_words = false;
    const auto words = all_words(2);
    for (const auto& x1 : words)
        for (const auto& x2 : words) {
            const auto blocks = block_decompose(x1, x2, 22, counts);
            const auto es = residuals(blocks, build_matrices(densities(x1, x2)));
            // A director of period P can be at most P-1 letters "ahead" of its
            // density, and each misplaced letter moves at most two counts.
            for (const Residual& e : es) ASSERT_LE(max_abs(e), Rational(2)) << x1.str() << "," << x2.str();
        }
}
