#pragma once

/**
 * @file generator.hpp
 * @brief Streaming generation of a self-descriptive sequence u over {1,2}
 *        directed by two periodic words T1 = x1^omega and T2 = x2^omega.
 *
 * u starts with the fixed seed u0 = u1 = 2 (directing letter delta0 = 2).
 * Run k >= 1 is produced by reading u_k: if u_k = 1 the next letter c of T1
 * is appended once, if u_k = 2 the next letter c of T2 is appended twice;
 * in both cases delta_k = c. Hence u = delta0^u0 delta1^u1 delta2^u2 ...
 *
 * Letters below the read index are never needed again, so the engine only
 * keeps the window [read_index, frontier) bit-packed (bit set <=> letter 2).
 * The window grows like (1 - 1/(2 - f1)) * frontier, i.e. at most half the
 * letters produced.
 */

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <utility>
#include <vector>

#include "selfdesc/director.hpp"

namespace selfdesc {

enum class RunSource : std::uint8_t { seed, t1, t2 };

inline const char* to_string(RunSource s) noexcept {
    switch (s) {
        case RunSource::seed: return "SEED";
        case RunSource::t1: return "T1";
        case RunSource::t2: return "T2";
    }
    return "?";
}

/// One emitted run delta_k^{u_k}, occupying u[start, start + length).
struct RunEvent {
    std::uint64_t k = 0;
    std::uint8_t length = 0;
    Letter letter = 0;
    std::uint64_t start = 0;
    RunSource source = RunSource::seed;

    friend bool operator==(const RunEvent&, const RunEvent&) = default;
};

class Generator {
public:
    Generator(DirectorWord x1, DirectorWord x2) : t1_(std::move(x1)), t2_(std::move(x2)) {
        // Seed u = 22: position 0 is already consumed, position 1 is pending.
        words_.assign(kMinWords, 0);
        push_letter(2);
        push_letter(2);
        read_index_ = 1;
        count2_ = 2;
    }

    const DirectorWord& t1() const noexcept { return t1_; }
    const DirectorWord& t2() const noexcept { return t2_; }

    /// Next run index to expand (k of the next non-seed event).
    std::uint64_t read_index() const noexcept { return read_index_; }
    /// Letters of u produced so far.
    std::uint64_t frontier() const noexcept { return frontier_; }
    std::uint64_t count1() const noexcept { return count1_; }
    std::uint64_t count2() const noexcept { return count2_; }
    /// Ones among delta_0 .. delta_{runs_emitted()-1}.
    std::uint64_t dcount1() const noexcept { return dcount1_; }
    /// Number of RunEvents handed out, seed included.
    std::uint64_t runs_emitted() const noexcept { return seed_pending_ ? 0 : read_index_; }
    std::size_t cursor_t1() const noexcept { return cursor1_; }
    std::size_t cursor_t2() const noexcept { return cursor2_; }

    /// Letters held in the window, i.e. frontier - read_index.
    std::uint64_t window_size() const noexcept { return frontier_ - read_index_; }
    /// Bytes currently reserved for the window.
    std::size_t window_bytes() const noexcept { return words_.capacity() * sizeof(std::uint64_t); }

    /// Letter of u at `pos`; requires read_index <= pos < frontier.
    Letter letter_at(std::uint64_t pos) const {
        if (pos < read_index_ || pos >= frontier_) throw std::out_of_range("Generator::letter_at outside window");
        return bit(pos) ? 2 : 1;
    }

    RunEvent next_run() {
        if (seed_pending_) {
            seed_pending_ = false;
            return RunEvent{0, 2, 2, 0, RunSource::seed};
        }
        return step();
    }

    /// Expands runs until at least `target` letters exist, invoking
    /// `on_run(const RunEvent&)` for every event (including a pending seed).
    template <class OnRun>
    void run_until_frontier(std::uint64_t target, OnRun&& on_run) {
        if (seed_pending_) on_run(next_run());
        while (frontier_ < target) on_run(step());
    }

    /// Same, bounded by run count: emits events until runs_emitted() >= runs.
    template <class OnRun>
    void run_until_runs(std::uint64_t runs, OnRun&& on_run) {
        if (runs == 0) return;
        if (seed_pending_) on_run(next_run());
        while (read_index_ < runs) on_run(step());
    }

    void advance_to_frontier(std::uint64_t target) {
        run_until_frontier(target, [](const RunEvent&) {});
    }

private:
    static constexpr std::size_t kMinWords = 64;

    bool bit(std::uint64_t pos) const noexcept {
        const std::uint64_t w = (pos >> 6) - base_word_;
        return (words_[w] >> (pos & 63)) & 1U;
    }

    void push_letter(Letter c) {
        const std::uint64_t w = (frontier_ >> 6) - base_word_;
        if (w >= words_.size()) grow();
        const std::uint64_t mask = std::uint64_t{1} << (frontier_ & 63);
        // Fresh words are zeroed, so only 2s need a store.
        if (c == 2) words_[(frontier_ >> 6) - base_word_] |= mask;
        ++frontier_;
    }

    void grow() {
        // Drop whole words that lie entirely below read_index, then make room.
        const std::uint64_t dead = (read_index_ >> 6) - base_word_;
        const std::size_t live = words_.size() - dead;
        if (dead >= words_.size() / 2) {
            std::memmove(words_.data(), words_.data() + dead, live * sizeof(std::uint64_t));
            std::memset(words_.data() + live, 0, dead * sizeof(std::uint64_t));
            base_word_ += dead;
        } else {
            words_.resize(words_.size() * 2, 0);
        }
    }

    RunEvent step() {
        const std::uint64_t k = read_index_;
        const std::uint64_t start = frontier_;
        RunEvent ev;
        ev.k = k;
        ev.start = start;
        if (!bit(k)) {
            const Letter c = t1_[cursor1_];
            if (++cursor1_ == t1_.period()) cursor1_ = 0;
            push_letter(c);
            (c == 1 ? count1_ : count2_) += 1;
            ev.length = 1;
            ev.letter = c;
            ev.source = RunSource::t1;
        } else {
            const Letter c = t2_[cursor2_];
            if (++cursor2_ == t2_.period()) cursor2_ = 0;
            push_letter(c);
            push_letter(c);
            (c == 1 ? count1_ : count2_) += 2;
            ev.length = 2;
            ev.letter = c;
            ev.source = RunSource::t2;
        }
        dcount1_ += (ev.letter == 1);
        ++read_index_;
        return ev;
    }

    DirectorWord t1_;
    DirectorWord t2_;
    std::vector<std::uint64_t> words_;
    std::uint64_t base_word_ = 0;
    std::uint64_t read_index_ = 0;
    std::uint64_t frontier_ = 0;
    std::uint64_t count1_ = 0;
    std::uint64_t count2_ = 0;
    std::uint64_t dcount1_ = 0;
    std::size_t cursor1_ = 0;
    std::size_t cursor2_ = 0;
    bool seed_pending_ = true;
};

/// u_0 .. u_{n-1}. `g` must be fresh (no events taken yet).
inline Word take_letters(Generator& g, std::uint64_t n) {
    if (g.runs_emitted() != 0) throw std::logic_error("take_letters needs a fresh generator");
    Word u;
    u.reserve(n);
    g.run_until_frontier(n, [&](const RunEvent& ev) {
        for (int i = 0; i < ev.length && u.size() < n; ++i) u.push_back(ev.letter);
    });
    return u;
}

inline Word take_letters(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n) {
    Generator g(x1, x2);
    return take_letters(g, n);
}

/// delta_0 .. delta_{n-1}. `g` must be fresh.
inline Word delta_prefix(Generator& g, std::uint64_t n) {
    if (g.runs_emitted() != 0) throw std::logic_error("delta_prefix needs a fresh generator");
    Word d;
    d.reserve(n);
    g.run_until_runs(n, [&](const RunEvent& ev) { d.push_back(ev.letter); });
    return d;
}

inline Word delta_prefix(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n) {
    Generator g(x1, x2);
    return delta_prefix(g, n);
}

}  // namespace selfdesc
