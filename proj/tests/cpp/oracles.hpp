// Independent reference computations used by the tests. These deliberately
// avoid the library's own code paths: the grid oracle scans raw angles, the
// partial-trace oracle sums index pairs directly, and the closed forms are
// transcribed rather than derived from library calls.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "steerkit/criteria.hpp"
#include "steerkit/qcore.hpp"

namespace oracles {

inline constexpr double kPi = std::numbers::pi;

// Correlation-image of a Bloch direction: w_i = sum_j T_ij b_j.
struct Vec3 {
    double v[3];
};

inline Vec3 t_image(const std::array<std::array<double, 3>, 3>& t, double bx, double by,
                    double bz) {
    Vec3 o;
    for (int i = 0; i < 3; ++i) o.v[i] = t[i][0] * bx + t[i][1] * by + t[i][2] * bz;
    return o;
}

// Best CHSH value for fixed Bob axes: Alice's optimal responses align with
// the correlation images of the sum and difference axes.
inline double chsh_pair_value(const Vec3& w1, const Vec3& w2) {
    double plus = 0.0, minus = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double p = w1.v[i] + w2.v[i];
        const double m = w1.v[i] - w2.v[i];
        plus += p * p;
        minus += m * m;
    }
    return std::sqrt(plus) + std::sqrt(minus);
}

// Staged grid search over Bob's two axes: 6-degree full scan keeping the top
// candidates, then 1-degree and 0.25-degree local rescans around each. The
// Alice side is exact, so only Bob's two axes are discretized.
inline double chsh_grid_oracle(const steerkit::DensityMatrix& rho) {
    const auto t = steerkit::correlation_matrix(rho);
    const double deg = kPi / 180.0;

    struct Cand {
        double val, th1, ph1, th2, ph2;
    };
    std::vector<Cand> top;
    double best = 0.0;

    auto scan = [&](double step, const Cand& center, double span, bool collect) {
        std::vector<double> th1s, ph1s, th2s, ph2s;
        auto fill = [&](std::vector<double>& out, double c, double lo, double hi) {
            for (double v = c - span; v <= c + span + 1e-12; v += step)
                out.push_back(std::clamp(v, lo, hi));
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        };
        if (span < 0.0) {  // full scan
            for (double v = 0.0; v <= kPi + 1e-12; v += step) th1s.push_back(std::min(v, kPi));
            for (double v = 0.0; v < 2.0 * kPi - 1e-12; v += step) ph1s.push_back(v);
            th2s = th1s;
            ph2s = ph1s;
        } else {
            fill(th1s, center.th1, 0.0, kPi);
            fill(ph1s, center.ph1, -2.0 * kPi, 4.0 * kPi);
            fill(th2s, center.th2, 0.0, kPi);
            fill(ph2s, center.ph2, -2.0 * kPi, 4.0 * kPi);
        }
        std::vector<Vec3> w1s, w2s;
        std::vector<std::pair<double, double>> a1s, a2s;
        for (double th : th1s)
            for (double ph : ph1s) {
                w1s.push_back(
                    t_image(t, std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                            std::cos(th)));
                a1s.emplace_back(th, ph);
            }
        for (double th : th2s)
            for (double ph : ph2s) {
                w2s.push_back(
                    t_image(t, std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                            std::cos(th)));
                a2s.emplace_back(th, ph);
            }
        for (std::size_t i = 0; i < w1s.size(); ++i)
            for (std::size_t j = 0; j < w2s.size(); ++j) {
                const double v = chsh_pair_value(w1s[i], w2s[j]);
                best = std::max(best, v);
                if (!collect) continue;
                const Cand c{v, a1s[i].first, a1s[i].second, a2s[j].first, a2s[j].second};
                if (top.size() < 60) {
                    top.push_back(c);
                } else {
                    auto mn = std::min_element(
                        top.begin(), top.end(),
                        [](const Cand& a, const Cand& b) { return a.val < b.val; });
                    if (v > mn->val) *mn = c;
                }
            }
    };

    scan(6.0 * deg, Cand{}, -1.0, true);
    const std::vector<Cand> stage1 = top;
    for (const Cand& c : stage1) scan(deg, c, 6.0 * deg, false);
    for (const Cand& c : stage1) scan(0.25 * deg, c, 1.5 * deg, false);
    return best;
}

// Partial trace by direct index-pair summation over the traced subsystem's
// digits, written against the flattened row-major layout.
inline steerkit::ComplexMatrix partial_trace_oracle(const steerkit::ComplexMatrix& m,
                                                    const std::vector<int>& dims,
                                                    const std::vector<int>& keep) {
    const int n = static_cast<int>(dims.size());
    std::vector<int> traced;
    for (int i = 0; i < n; ++i)
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) traced.push_back(i);

    int kd = 1, td = 1;
    for (int i : keep) kd *= dims[static_cast<std::size_t>(i)];
    for (int i : traced) td *= dims[static_cast<std::size_t>(i)];

    // digits -> flat index in tensor order (first factor most significant)
    auto flatten = [&](const std::vector<int>& digits) {
        int idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * dims[static_cast<std::size_t>(i)] + digits[static_cast<std::size_t>(i)];
        return idx;
    };
    auto unpack = [&](int value, const std::vector<int>& parties, std::vector<int>& digits) {
        for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
            digits[static_cast<std::size_t>(*it)] = value % dims[static_cast<std::size_t>(*it)];
            value /= dims[static_cast<std::size_t>(*it)];
        }
    };

    steerkit::ComplexMatrix out(kd);
    std::vector<int> rd(static_cast<std::size_t>(n)), cd(static_cast<std::size_t>(n));
    for (int r = 0; r < kd; ++r)
        for (int c = 0; c < kd; ++c) {
            steerkit::Complex sum = 0.0;
            for (int s = 0; s < td; ++s) {
                unpack(r, keep, rd);
                unpack(c, keep, cd);
                unpack(s, traced, rd);
                unpack(s, traced, cd);
                sum += m.at(static_cast<std::size_t>(flatten(rd)), static_cast<std::size_t>(flatten(cd)));
            }
            out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = sum;
        }
    return out;
}

// Closed-form fine-grained game value for a qubit with Bloch vector n.
inline double fur_closed_form(const steerkit::BlochVector& n, const steerkit::BlochVector& p,
                              const steerkit::BlochVector& q, bool win_up) {
    const double s = win_up ? 1.0 : -1.0;
    return 0.5 + 0.25 * s * (n.dot(p) + n.dot(q));
}

// Sum of the two printed conditional-probability fractions for the Schmidt
// family with Bob checking z then x. The individual fractions carry +1/2 and
// -1/2 offsets against the first-principles conditionals; the sum is exact.
inline double schmidt_printed_sum(double alpha, double theta_s, double theta_t, double phi_t) {
    const double cs = std::cos(theta_s);
    const double ct = std::cos(theta_t);
    const double frac1 = ((4.0 * alpha - 1.0) * cs + 2.0 * alpha + 1.0) /
                         ((4.0 * alpha - 2.0) * cs + 2.0);
    const double frac2 = std::sqrt((1.0 - alpha) * alpha) * std::sin(theta_t) * std::cos(phi_t) /
                         ((2.0 * alpha - 1.0) * ct + 1.0);
    return frac1 + frac2;
}

// Shannon entropy helpers for the mutual-information cross-checks.
inline double h2(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (1.0 - p > 0.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

}  // namespace oracles
