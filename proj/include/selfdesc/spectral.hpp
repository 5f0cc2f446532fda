#pragma once

/**
 * @file spectral.hpp
 * @brief Closed-form letter frequencies and the Perron-Frobenius route.
 *
 * Recoding u over {a,b,c,d} (a/b: isolated 1/2 drawn from T1, c/d: one half
 * of a doubled 1/2 drawn from T2) turns block growth into the linear map
 *
 *         a    b     c    d
 *   A = | p1   0     p1   0    |   a
 *       | p2   0     p2   0    |   b
 *       | 0    2q1   0    2q1  |   c
 *       | 0    2q2   0    2q2  |   d
 *
 * Columns a/c and b/d coincide because a letter only matters through its
 * value, so A has rank <= 2 and its nonzero spectrum is that of
 *
 *   B = | p1  2q1 |   acting on (value-1 count, value-2 count).
 *       | p2  2q2 |
 *
 * The eigenvalues are the roots of x^2 - (p1 + 2q2) x + 2(p1 + q2 - 1), with
 * discriminant  Delta = (p1 + 2q2)^2 - 8(p1 + q2 - 1).
 *
 * Perron vectors are lifted from B. If (s, t) is the right eigenvector of B
 * for alpha1, then
 *
 *   r = (p1 s, p2 s, 2q1 t, 2q2 t)
 *
 * is a right eigenvector of A (its a+c and b+d sums are alpha1 s and
 * alpha1 t). If (x, y) is the left eigenvector of B, then l = (x, y, x, y) is
 * a left eigenvector of A. They are scaled so that l . r = 1; r_freq is r
 * rescaled to sum 1 and its a+c mass is the frequency of 1s in u.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <stdexcept>

#include "selfdesc/director.hpp"
#include "selfdesc/rational.hpp"

namespace selfdesc {

template <class T, std::size_t N>
using Matrix = std::array<std::array<T, N>, N>;

using Vec4 = std::array<double, 4>;

enum RecodedIndex : std::size_t { kA = 0, kB = 1, kC = 2, kD = 3 };

struct TransitionMatrix {
    Matrix<Rational, 4> a{};  // rows/columns ordered (a, b, c, d)
    Matrix<Rational, 2> b{};  // rows/columns ordered (value 1, value 2)
};

inline TransitionMatrix build_matrices(const DensityPair& d) {
    const Rational p1 = d.p1, p2 = d.p2(), q1 = d.q1(), q2 = d.q2;
    const Rational two(2);
    TransitionMatrix m;
    m.a = {{{p1, 0, p1, 0}, {p2, 0, p2, 0}, {0, two * q1, 0, two * q1}, {0, two * q2, 0, two * q2}}};
    m.b = {{{p1, two * q1}, {p2, two * q2}}};
    return m;
}

inline Rational discriminant(const DensityPair& d) {
    const Rational tr = d.p1 + Rational(2) * d.q2;
    return tr * tr - Rational(8) * (d.p1 + d.q2 - Rational(1));
}

/// Limit frequency of the letter 1 in u.
inline double f1_closed(const DensityPair& d) {
    const double p1 = d.p1.to_double(), q2 = d.q2.to_double();
    const Rational delta = discriminant(d);
    if (delta < Rational(0)) throw std::domain_error("negative discriminant");
    const double sd = std::sqrt(delta.to_double());
    const double f = (1.0 - q2) * (p1 + 2.0 * q2 + sd) / (2.0 + sd - p1);
    return std::clamp(f, 0.0, 1.0);
}

/// Algebraically equal rewrite 4 q1 / (4 - 2 q2 - p1 + sqrt(Delta)), obtained
/// from the right eigenvector (2 q1, alpha1 - p1) of B.
inline double f1_closed_alt(const DensityPair& d) {
    const double p1 = d.p1.to_double(), q2 = d.q2.to_double();
    const double sd = std::sqrt(discriminant(d).to_double());
    return 4.0 * (1.0 - q2) / (4.0 - 2.0 * q2 - p1 + sd);
}

struct Spectrum {
    Rational delta;
    double alpha1 = 0;
    double alpha2 = 0;
    /// Entrywise-positive B, i.e. 0 < p1 < 1 and 0 < q2 < 1.
    bool primitive = false;
    /// r and l exist: alpha1 is simple and strictly dominates |alpha2|.
    std::optional<Vec4> r;
    std::optional<Vec4> l;
    std::optional<Vec4> r_freq;
};

inline Spectrum perron(const TransitionMatrix& m) {
    const Rational p1 = m.b[0][0], p2 = m.b[1][0];
    const Rational q1 = m.b[0][1] / Rational(2), q2 = m.b[1][1] / Rational(2);
    const Rational trace = p1 + Rational(2) * q2;

    Spectrum s;
    s.delta = discriminant({p1, q2});
    const double sd = std::sqrt(s.delta.to_double());
    s.alpha1 = (trace.to_double() + sd) / 2.0;
    s.alpha2 = (trace.to_double() - sd) / 2.0;
    s.primitive = Rational(0) < p1 && p1 < Rational(1) && Rational(0) < q2 && q2 < Rational(1);

    // alpha1 > |alpha2|  <=>  Delta > 0 and trace > 0.
    if (!(Rational(0) < s.delta && Rational(0) < trace)) return s;

    const double a1 = s.alpha1;
    const double dp1 = p1.to_double(), dp2 = p2.to_double();
    const double dq1 = q1.to_double(), dq2 = q2.to_double();

    // Null vectors of B - alpha1 I, read off either row (right) or either
    // column (left); the longer candidate avoids the degenerate one.
    auto longer = [](double a0, double a1_, double b0, double b1) {
        return a0 * a0 + a1_ * a1_ >= b0 * b0 + b1 * b1 ? std::pair{a0, a1_} : std::pair{b0, b1};
    };
    const auto [sv, tv] = longer(2.0 * dq1, a1 - dp1, a1 - 2.0 * dq2, dp2);
    const auto [xv, yv] = longer(dp2, a1 - dp1, a1 - 2.0 * dq2, 2.0 * dq1);

    Vec4 r{dp1 * sv, dp2 * sv, 2.0 * dq1 * tv, 2.0 * dq2 * tv};
    Vec4 l{xv, yv, xv, yv};
    double lr = 0;
    for (std::size_t i = 0; i < 4; ++i) lr += l[i] * r[i];
    for (double& v : l) v /= lr;

    Vec4 rf = r;
    double sum = 0;
    for (double v : rf) sum += v;
    for (double& v : rf) v /= sum;

    s.r = r;
    s.l = l;
    s.r_freq = rf;
    return s;
}

inline Spectrum perron(const DensityPair& d) { return perron(build_matrices(d)); }

/// Frequency of 1s read off the Perron vector: r_freq(a) + r_freq(c).
/// Falls back to f1_closed when no dominant Perron vector exists.
inline double f1_eigen(const DensityPair& d) {
    const Spectrum s = perron(d);
    if (!s.r_freq) return f1_closed(d);
    return (*s.r_freq)[kA] + (*s.r_freq)[kC];
}

/// Limit frequency of 1s in delta. Runs read at a 1 draw from T1 (1-density
/// p1) and runs read at a 2 draw from T2 (1-density q1 = 1 - q2).
inline double directing_freq(const DensityPair& d, double f1) {
    return d.p1.to_double() * f1 + d.q1().to_double() * (1.0 - f1);
}

struct Frequencies {
    double f1 = 0;
    double f2 = 0;
    double dfreq = 0;
};

inline Frequencies frequencies(const DensityPair& d) {
    const double f1 = f1_closed(d);
    return {f1, 1.0 - f1, directing_freq(d, f1)};
}

/// max_ij | (A / alpha1)^n - r l |_ij, when r and l exist.
inline std::optional<double> power_convergence(const TransitionMatrix& m, const Spectrum& s, unsigned n) {
    if (!s.r || !s.l) return std::nullopt;
    Matrix<double, 4> scaled{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) scaled[i][j] = m.a[i][j].to_double() / s.alpha1;

    Matrix<double, 4> pow{};
    for (std::size_t i = 0; i < 4; ++i) pow[i][i] = 1.0;
    for (unsigned step = 0; step < n; ++step) {
        Matrix<double, 4> next{};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t j = 0; j < 4; ++j) next[i][j] += pow[i][k] * scaled[k][j];
        pow = next;
    }

    double dev = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) dev = std::max(dev, std::abs(pow[i][j] - (*s.r)[i] * (*s.l)[j]));
    return dev;
}

}  // namespace selfdesc
