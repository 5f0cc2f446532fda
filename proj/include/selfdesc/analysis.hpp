#pragma once

/**
 * @file analysis.hpp
 * @brief Streamed empirical frequencies and the block-cutting diagnostic.
 */

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfdesc/blocks.hpp"
#include "selfdesc/director.hpp"
#include "selfdesc/generator.hpp"
#include "selfdesc/spectral.hpp"

namespace selfdesc {

enum class Series { u, delta };

inline const char* to_string(Series s) noexcept { return s == Series::u ? "u" : "delta"; }

struct FrequencyRow {
    std::uint64_t n = 0;
    std::uint64_t count1 = 0;
    double emp = 0;
    double theory = 0;
    double err = 0;
    /// err(n_k) / err(n_{k-1}); empty on the first row or when err(n_{k-1}) = 0.
    std::optional<double> ratio;
    /// For u: ones in u[0,n) equal the number of length-1 runs among runs 0..n-1.
    bool consistent = true;

    friend bool operator==(const FrequencyRow&, const FrequencyRow&) = default;
};

struct FrequencyReport {
    Series series = Series::u;
    std::vector<FrequencyRow> rows;

    friend bool operator==(const FrequencyReport&, const FrequencyReport&) = default;
};

inline void validate_checkpoints(const std::vector<std::uint64_t>& cps, std::uint64_t n) {
    if (cps.empty()) throw ValidationError("no checkpoints given");
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (cps[i] == 0) throw ValidationError("checkpoints must be positive", i);
        if (i > 0 && cps[i] <= cps[i - 1]) throw ValidationError("checkpoints must be strictly increasing", i);
        if (cps[i] > n) throw ValidationError("checkpoint exceeds n", i);
    }
}

/// Powers of ten from 10^3 up to n, with n appended when it is not one.
inline std::vector<std::uint64_t> default_checkpoints(std::uint64_t n) {
    std::vector<std::uint64_t> cps;
    for (std::uint64_t p = 1000; p <= n; p *= 10) {
        cps.push_back(p);
        if (p > UINT64_MAX / 10) break;
    }
    if (cps.empty() || cps.back() != n) cps.push_back(n);
    return cps;
}

namespace detail {

inline FrequencyRow make_row(std::uint64_t n, std::uint64_t ones, double theory) {
    FrequencyRow r;
    r.n = n;
    r.count1 = ones;
    r.emp = static_cast<double>(ones) / static_cast<double>(n);
    r.theory = theory;
    r.err = std::abs(r.emp - theory);
    return r;
}

inline void fill_ratios(FrequencyReport& rep) {
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        const double prev = rep.rows[i - 1].err;
        if (prev > 0) rep.rows[i].ratio = rep.rows[i].err / prev;
    }
}

}  // namespace detail

/// Ones in u[0, cp) for each checkpoint, in one streaming pass.
inline FrequencyReport empirical_frequency(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n,
                                           const std::vector<std::uint64_t>& checkpoints) {
    validate_checkpoints(checkpoints, n);
    const double theory = f1_closed(densities(x1, x2));

    FrequencyReport rep;
    rep.series = Series::u;
    rep.rows.reserve(checkpoints.size());

    Generator g(x1, x2);
    std::uint64_t t1_runs = 0;
    std::size_t routed = 0;  // rows whose routing identity has been checked
    auto on_run = [&](const RunEvent& ev) {
        t1_runs += (ev.length == 1);
        while (routed < rep.rows.size() && ev.k + 1 >= rep.rows[routed].n) {
            rep.rows[routed].consistent = (t1_runs == rep.rows[routed].count1);
            ++routed;
        }
    };

    for (std::uint64_t cp : checkpoints) {
        g.run_until_frontier(cp, on_run);
        std::uint64_t ones = g.count1();
        // A doubled run may have overshot by one letter.
        if (g.frontier() > cp && g.letter_at(g.frontier() - 1) == 1) --ones;
        rep.rows.push_back(detail::make_row(cp, ones, theory));
    }
    if (routed < rep.rows.size()) g.run_until_runs(rep.rows.back().n, on_run);
    detail::fill_ratios(rep);
    return rep;
}

/// Ones in delta_0 .. delta_{cp-1} for each checkpoint (counts runs, not letters).
inline FrequencyReport directing_empirical(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t runs,
                                           const std::vector<std::uint64_t>& checkpoints) {
    validate_checkpoints(checkpoints, runs);
    const DensityPair d = densities(x1, x2);
    const double theory = directing_freq(d, f1_closed(d));

    FrequencyReport rep;
    rep.series = Series::delta;
    Generator g(x1, x2);
    for (std::uint64_t cp : checkpoints) {
        g.run_until_runs(cp, [](const RunEvent&) {});
        rep.rows.push_back(detail::make_row(cp, g.dcount1(), theory));
    }
    detail::fill_ratios(rep);
    return rep;
}

struct ConvergenceReport {
    FrequencyReport u;
    FrequencyReport delta;
};

inline ConvergenceReport convergence_report(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n,
                                            const std::vector<std::uint64_t>& checkpoints) {
    if (checkpoints.size() < 2) throw ValidationError("convergence report needs at least two checkpoints");
    return {empirical_frequency(x1, x2, n, checkpoints), directing_empirical(x1, x2, n, checkpoints)};
}

// Cutting diagnostic ------------------------------------------------------

/**
 * One step of the cutting procedure at position n.
 *
 * prefix_len = 2 + |w_0 ... w_{l-1}| (the seed "22" belongs to the prefix);
 * g is u[prefix_len .. n], so g_len = n + 1 - prefix_len (0 while the prefix
 * still covers position n). After recording the state, l advances when
 * g_len + 1 > (2 + |w_0 ... w_l|)^2.
 */
struct CutState {
    std::uint64_t n = 0;
    std::uint64_t l = 0;
    std::uint64_t prefix_len = 0;
    std::uint64_t g_len = 0;
    std::uint64_t g_count1 = 0;

    double g_freq() const noexcept {
        return g_len == 0 ? 0.0 : static_cast<double>(g_count1) / static_cast<double>(g_len);
    }

    friend bool operator==(const CutState&, const CutState&) = default;
};

/// Block start positions 2, 2+|w0|, 2+|w0|+|w1|, ... up to the first one
/// whose square exceeds `limit`, plus one more.
inline std::vector<std::uint64_t> block_boundaries(const DirectorWord& x1, const DirectorWord& x2,
                                                   std::uint64_t limit) {
    std::vector<std::uint64_t> bounds{2};
    BlockOptions opts;
    opts.keep_words = false;
    int extra = 2;
    for_each_block(x1, x2, opts, [&](BlockLevel&& b) {
        bounds.push_back(b.end);
        const long double e = static_cast<long double>(b.end);
        if (e * e > static_cast<long double>(limit)) --extra;
        return extra > 0;
    });
    return bounds;
}

/// Visits the CutState of every position 0 .. n-1.
template <class OnState>
void cut_sequence(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t n, OnState&& on_state) {
    if (n == 0) return;
    const std::vector<std::uint64_t> bounds = block_boundaries(x1, x2, n + 2);

    // ones_at[j] = ones in u[0, bounds[j]), filled as the stream passes bounds[j].
    std::vector<std::uint64_t> ones_at(bounds.size(), 0);
    std::size_t next_bound = 0;

    Generator g(x1, x2);
    std::uint64_t pos = 0, ones = 0;  // ones in u[0, pos)
    std::uint64_t l = 0;

    auto visit_letter = [&](Letter c) {
        while (next_bound < bounds.size() && bounds[next_bound] == pos) ones_at[next_bound++] = ones;
        ones += (c == 1);

        CutState s;
        s.n = pos;
        s.l = l;
        s.prefix_len = bounds[l];
        s.g_len = pos + 1 > s.prefix_len ? pos + 1 - s.prefix_len : 0;
        s.g_count1 = s.g_len ? ones - ones_at[l] : 0;
        on_state(s);

        const std::uint64_t through = bounds.at(l + 1);
        if (static_cast<long double>(s.g_len) + 1 > static_cast<long double>(through) * static_cast<long double>(through))
            ++l;
        ++pos;
    };

    while (pos < n) {
        const RunEvent ev = g.next_run();
        for (int i = 0; i < ev.length && pos < n; ++i) visit_letter(ev.letter);
    }
}

/// CutStates at the given (strictly increasing) positions, all < n.
inline std::vector<CutState> cut_at(const DirectorWord& x1, const DirectorWord& x2,
                                    const std::vector<std::uint64_t>& positions) {
    std::vector<CutState> out;
    if (positions.empty()) return out;
    for (std::size_t i = 1; i < positions.size(); ++i)
        if (positions[i] <= positions[i - 1]) throw ValidationError("cut positions must be strictly increasing", i);
    std::size_t next = 0;
    cut_sequence(x1, x2, positions.back() + 1, [&](const CutState& s) {
        if (next < positions.size() && s.n == positions[next]) {
            out.push_back(s);
            ++next;
        }
    });
    return out;
}

}  // namespace selfdesc
