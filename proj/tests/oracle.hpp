#pragma once

// Dense-matrix reference implementations of every ranking method, written
// independently of the library's sparse engine. O(n^2) per step; tiny
// graphs only.

#include <cmath>
#include <cstddef>
#include <vector>

#include "lurker/graph.hpp"
#include "lurker/rank.hpp"

namespace oracle {

struct Dense {
    std::size_t n = 0;
    std::vector<std::vector<double>> w;  // w[i][j]: weight of edge i->j, 0 if absent
    std::vector<double> sin, sout;       // smoothed degrees
    std::vector<std::size_t> raw_out;
};

inline Dense densify(const lurker::DirectedGraph& g) {
    Dense d;
    d.n = g.num_nodes();
    d.w.assign(d.n, std::vector<double>(d.n, 0.0));
    d.sin.assign(d.n, 1.0);
    d.sout.assign(d.n, 1.0);
    d.raw_out.assign(d.n, 0);
    for (const auto& e : g.edge_list()) {
        d.w[e.src][e.dst] = e.weight;
        d.sout[e.src] += 1.0;
        d.sin[e.dst] += 1.0;
        d.raw_out[e.src] += 1;
    }
    return d;
}

namespace detail {

inline double l1(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

inline void l1_normalize(std::vector<double>& v) {
    const double s = l1(v);
    if (s > 0.0)
        for (double& x : v) x /= s;
}

/// Same iteration discipline as the engine: uniform start, synchronous
/// updates, convergence on the L1 delta between normalized iterates.
template <class Step>
std::vector<double> iterate(std::size_t n, std::size_t max_iters, double tol,
                            bool normalize_each_step, Step step) {
    std::vector<double> x(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
    for (std::size_t it = 0; it < max_iters; ++it) {
        std::vector<double> y = step(x);
        if (normalize_each_step) l1_normalize(y);
        const double sx = l1(x), sy = l1(y);
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta += std::abs(y[i] / sy - x[i] / sx);
        x = std::move(y);
        if (delta <= tol) break;
    }
    return x;
}

}  // namespace detail

/// All six LurkerRank variants; `trust` (nullptr for uniform) replaces the
/// teleport/exogenous vector.
inline std::vector<double> lurker_rank(const Dense& g, lurker::LurkVariant variant, double d,
                                       std::size_t max_iters, double tol,
                                       const std::vector<double>* trust = nullptr) {
    using lurker::LurkVariant;
    const std::size_t n = g.n;
    const bool ac = variant == LurkVariant::ac_lr_in || variant == LurkVariant::ac_lr_out ||
                    variant == LurkVariant::ac_lr_in_out;
    auto step = [&](const std::vector<double>& x) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double in_term = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (g.w[j][i] > 0.0) in_term += g.w[j][i] * (g.sout[j] / g.sin[j]) * x[j];
            in_term /= g.sout[i];

            double out_sum = 0.0, in_deg_sum = 0.0;
            bool has_out = false;
            for (std::size_t j = 0; j < n; ++j)
                if (g.w[i][j] > 0.0) {
                    has_out = true;
                    out_sum += g.w[i][j] * (g.sin[j] / g.sout[j]) * x[j];
                    in_deg_sum += g.sin[j];
                }
            const double out_term = has_out ? (g.sin[i] / in_deg_sum) * out_sum : 0.0;

            double endo = 0.0;
            switch (variant) {
                case LurkVariant::lr_in:
                case LurkVariant::ac_lr_in: endo = in_term; break;
                case LurkVariant::lr_out:
                case LurkVariant::ac_lr_out: endo = out_term; break;
                case LurkVariant::lr_in_out:
                case LurkVariant::ac_lr_in_out: endo = in_term * (1.0 + out_term); break;
            }
            const double t = trust ? (*trust)[i] : 1.0 / static_cast<double>(n);
            y[i] = d * endo + (ac ? static_cast<double>(n) * t : (1.0 - d) * t);
        }
        return y;
    };
    return detail::iterate(n, max_iters, tol, ac, step);
}

/// PageRank / TrustRank. Uniform teleport spreads dangling mass uniformly;
/// a biased teleport routes it through the teleport vector.
inline std::vector<double> pagerank(const Dense& g, double d, std::size_t max_iters, double tol,
                                    const std::vector<double>* teleport = nullptr) {
    const std::size_t n = g.n;
    auto step = [&](const std::vector<double>& x) {
        double dangle = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (g.raw_out[j] == 0) dangle += x[j];
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (g.w[j][i] > 0.0) acc += x[j] / static_cast<double>(g.raw_out[j]);
            const double v = teleport ? (*teleport)[i] : 1.0 / static_cast<double>(n);
            const double share = teleport ? dangle * v : dangle / static_cast<double>(n);
            y[i] = d * (acc + share) + (1.0 - d) * v;
        }
        return y;
    };
    return detail::iterate(n, max_iters, tol, false, step);
}

inline std::vector<double> alpha_centrality(const Dense& g, double d, std::size_t max_iters,
                                            double tol) {
    const std::size_t n = g.n;
    auto step = [&](const std::vector<double>& x) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += g.w[j][i] * x[j];
            y[i] = d * acc + 1.0;
        }
        return y;
    };
    return detail::iterate(n, max_iters, tol, true, step);
}

inline std::vector<double> fair_bets(const Dense& g, std::size_t max_iters, double tol) {
    const std::size_t n = g.n;
    auto step = [&](const std::vector<double>& x) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (g.w[j][i] > 0.0) acc += x[j];
            y[i] = acc / g.sout[i] + 1.0 / static_cast<double>(n);
        }
        return y;
    };
    return detail::iterate(n, max_iters, tol, true, step);
}

/// Max-abs difference after aligning both vectors to unit L1 mass.
inline double normalized_max_abs_diff(std::vector<double> a, std::vector<double> b) {
    detail::l1_normalize(a);
    detail::l1_normalize(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace oracle
