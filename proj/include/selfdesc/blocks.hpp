#pragma once

/**
 * @file blocks.hpp
 * @brief Block hierarchy u = 22 . w0 . w1 . w2 ... over the recoded alphabet.
 *
 * w0 is the recoded run produced by reading u_1 (the second seed letter).
 * w_{n+1} is the concatenation of the recoded runs produced by reading each
 * position of w_n in order. In run-index terms, block n is made of the runs
 * k in [K_n, K_{n+1}) with K_0 = 1 and K_{n+1} = start(K_n), so the blocks
 * tile u from position 2 onwards.
 */

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfdesc/generator.hpp"
#include "selfdesc/spectral.hpp"

namespace selfdesc {

enum class RecodedLetter : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

inline constexpr Letter value(RecodedLetter s) noexcept {
    return (s == RecodedLetter::a || s == RecodedLetter::c) ? 1 : 2;
}

inline constexpr char to_char(RecodedLetter s) noexcept { return static_cast<char>('a' + static_cast<int>(s)); }

using RecodedWord = std::vector<RecodedLetter>;

inline std::string to_string(const RecodedWord& w) {
    std::string s;
    s.reserve(w.size());
    for (RecodedLetter c : w) s.push_back(to_char(c));
    return s;
}

/// (|w|_a, |w|_b, |w|_c, |w|_d).
struct CountVector {
    std::array<std::uint64_t, 4> n{};

    std::uint64_t total() const noexcept { return n[0] + n[1] + n[2] + n[3]; }
    std::uint64_t ones() const noexcept { return n[kA] + n[kC]; }

    friend bool operator==(const CountVector&, const CountVector&) = default;
};

/// Isolated runs become a/b, doubled runs become cc/dd. Not defined for the seed.
inline RecodedWord recode_run(const RunEvent& ev) {
    if (ev.k == 0) throw std::invalid_argument("recode_run: the seed run has no recoding");
    if (ev.length == 1) return {ev.letter == 1 ? RecodedLetter::a : RecodedLetter::b};
    const RecodedLetter s = ev.letter == 1 ? RecodedLetter::c : RecodedLetter::d;
    return {s, s};
}

struct BlockLevel {
    unsigned level = 0;
    RecodedWord word;  // empty when decomposed with counts only
    std::uint64_t start = 0;
    std::uint64_t end = 0;
    CountVector v;

    std::uint64_t length() const noexcept { return end - start; }
};

inline CountVector count_vector(const RecodedWord& w) {
    CountVector v;
    for (RecodedLetter c : w) ++v.n[static_cast<std::size_t>(c)];
    return v;
}

inline CountVector count_vector(const BlockLevel& b) { return b.v; }

struct BlockOptions {
    bool keep_words = true;
    /// Refuse to start a level that could end past this many letters of u.
    /// A level is at most twice as long as the previous one.
    std::uint64_t max_letters = std::uint64_t{1} << 31;
};

/// Streams blocks w0, w1, ... to `on_block(BlockLevel&&)` until it returns false.
template <class OnBlock>
void for_each_block(const DirectorWord& x1, const DirectorWord& x2, const BlockOptions& opts, OnBlock&& on_block) {
    Generator g(x1, x2);
    (void)g.next_run();  // seed "22" sits in front of w0

    BlockLevel cur;
    std::uint64_t next_boundary = 0;  // first run index of the next level, once known
    bool first = true;

    while (true) {
        const RunEvent ev = g.next_run();
        if (first) {
            cur.start = ev.start;
            next_boundary = ev.start;  // K_1 = start(K_0)
            first = false;
        } else if (ev.k == next_boundary) {
            cur.end = ev.start;
            const unsigned level = cur.level;
            const std::uint64_t worst_end = cur.end + 2 * cur.length() + 2;
            if (!on_block(std::move(cur))) return;
            if (worst_end > opts.max_letters)
                throw std::length_error("block level " + std::to_string(level + 1) + " may exceed " +
                                        std::to_string(opts.max_letters) + " letters");
            cur = BlockLevel{};
            cur.level = level + 1;
            cur.start = ev.start;
            next_boundary = ev.start;
        }
        const std::size_t idx = (ev.length == 1 ? 0 : 2) + (ev.letter == 1 ? 0 : 1);
        cur.v.n[idx] += ev.length;
        if (opts.keep_words) {
            for (RecodedLetter c : recode_run(ev)) cur.word.push_back(c);
        }
    }
}

inline std::vector<BlockLevel> block_decompose(const DirectorWord& x1, const DirectorWord& x2, unsigned levels,
                                               const BlockOptions& opts = {}) {
    if (levels == 0) throw std::invalid_argument("block_decompose: levels must be >= 1");
    std::vector<BlockLevel> out;
    out.reserve(levels);
    for_each_block(x1, x2, opts, [&](BlockLevel&& b) {
        out.push_back(std::move(b));
        return out.size() < levels;
    });
    return out;
}

using Residual = std::array<Rational, 4>;

/// e_n = v_{n+1} - A v_n, exactly.
inline Residual recursion_residual(const CountVector& vn, const CountVector& vnext, const TransitionMatrix& m) {
    Residual e;
    for (std::size_t i = 0; i < 4; ++i) {
        Rational av(0);
        for (std::size_t j = 0; j < 4; ++j)
            av += m.a[i][j] * Rational(static_cast<Rational::int_type>(vn.n[j]));
        e[i] = Rational(static_cast<Rational::int_type>(vnext.n[i])) - av;
    }
    return e;
}

inline Rational max_abs(const Residual& e) {
    Rational best(0);
    for (const Rational& x : e) {
        const Rational ax = x < Rational(0) ? -x : x;
        if (best < ax) best = ax;
    }
    return best;
}

/// Residuals e_0 .. e_{L-2} for a decomposition of L levels.
inline std::vector<Residual> residuals(const std::vector<BlockLevel>& blocks, const TransitionMatrix& m) {
    std::vector<Residual> out;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) out.push_back(recursion_residual(blocks[i].v, blocks[i + 1].v, m));
    return out;
}

}  // namespace selfdesc
