#include "lurker/rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lurker/parallel.hpp"

namespace lurker {

const char* variant_name(LurkVariant v) {
    switch (v) {
        case LurkVariant::lr_in: return "lrin";
        case LurkVariant::lr_out: return "lrout";
        case LurkVariant::lr_in_out: return "lrinout";
        case LurkVariant::ac_lr_in: return "ac-lrin";
        case LurkVariant::ac_lr_out: return "ac-lrout";
        case LurkVariant::ac_lr_in_out: return "ac-lrinout";
    }
    return "?";
}

LurkVariant variant_from_name(const std::string& name) {
    if (name == "lrin") return LurkVariant::lr_in;
    if (name == "lrout") return LurkVariant::lr_out;
    if (name == "lrinout" || name == "lrin-out") return LurkVariant::lr_in_out;
    if (name == "ac-lrin") return LurkVariant::ac_lr_in;
    if (name == "ac-lrout") return LurkVariant::ac_lr_out;
    if (name == "ac-lrinout" || name == "ac-lrin-out") return LurkVariant::ac_lr_in_out;
    throw std::invalid_argument("unknown LurkerRank variant: " + name);
}

const char* flavor_name(DataDrivenFlavor f) {
    switch (f) {
        case DataDrivenFlavor::twitter: return "twitter";
        case DataDrivenFlavor::friendfeed: return "friendfeed";
        case DataDrivenFlavor::flickr_favorites: return "flickr-favorites";
        case DataDrivenFlavor::flickr_views: return "flickr-views";
    }
    return "?";
}

DataDrivenFlavor flavor_from_name(const std::string& name) {
    if (name == "twitter") return DataDrivenFlavor::twitter;
    if (name == "friendfeed") return DataDrivenFlavor::friendfeed;
    if (name == "flickr-favorites") return DataDrivenFlavor::flickr_favorites;
    if (name == "flickr-views") return DataDrivenFlavor::flickr_views;
    throw std::invalid_argument("unknown data-driven flavor: " + name);
}

std::vector<NodeId> ranking_list(const std::vector<double>& scores) {
    std::vector<NodeId> order(scores.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    return order;
}

namespace {

void validate_params(const RankParams& p) {
    if (p.damping < 0.0 || p.damping > 1.0)
        throw std::invalid_argument("damping must lie in [0, 1]");
    if (p.tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (p.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
}

struct IterState {
    std::vector<double> scores;
    std::size_t iterations = 0;
    bool converged = false;
    std::size_t stable_at = 0;
};

/// Synchronous power iteration from the uniform vector. Convergence is the
/// L1 delta between successive L1-normalized iterates; the iterates
/// themselves stay raw unless normalize_each_step is set.
template <class Update>
IterState power_iterate(std::size_t n, const RankParams& p, bool normalize_each_step,
                        Update&& update) {
    IterState state;
    state.scores.assign(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
    if (n == 0) {
        state.converged = true;
        return state;
    }
    std::vector<double> next(n, 0.0);
    std::vector<NodeId> prev_ranking;
    std::size_t last_change = 0;
    if (p.track_ranking_stability) prev_ranking = ranking_list(state.scores);

    double sum_x = 1.0;
    for (std::size_t iter = 1; iter <= p.max_iters; ++iter) {
        state.iterations = iter;
        update(state.scores, next);

        double sum_y = 0.0;
        for (double v : next) sum_y += v;
        if (!std::isfinite(sum_y) || sum_y <= 0.0) {
            state.converged = false;
            break;
        }
        if (normalize_each_step) {
            const double inv = 1.0 / sum_y;
            for (double& v : next) v *= inv;
            sum_y = 1.0;
        }

        double delta = 0.0;
        const double inv_x = 1.0 / sum_x;
        const double inv_y = 1.0 / sum_y;
        for (std::size_t i = 0; i < n; ++i)
            delta += std::abs(next[i] * inv_y - state.scores[i] * inv_x);

        if (p.track_ranking_stability) {
            std::vector<NodeId> ranking = ranking_list(next);
            if (ranking != prev_ranking) last_change = iter;
            prev_ranking = std::move(ranking);
        }

        state.scores.swap(next);
        sum_x = sum_y;
        if (delta <= p.tolerance) {
            state.converged = true;
            break;
        }
    }
    if (p.track_ranking_stability) state.stable_at = last_change + 1;
    return state;
}

void finalize(RankVector& r) {
    if (!r.params.normalize_final) return;
    double sum = 0.0;
    for (double v : r.scores) sum += v;
    if (sum > 0.0) {
        const double inv = 1.0 / sum;
        for (double& v : r.scores) v *= inv;
    }
}

/// Per-edge multipliers for the LurkerRank update, aligned with the graph's
/// adjacency order. in_coef holds w(j,i) * out(j)/in(j) per in-edge of i;
/// out_coef holds w(i,j) * in(j)/out(j) per out-edge; out_scale holds
/// in(i) / sum of in-degrees over R_i (0 for sinks, by convention).
struct LrCoefficients {
    std::vector<std::size_t> in_off, out_off;
    std::vector<NodeId> in_src;
    std::vector<double> in_coef;
    std::vector<NodeId> out_dst;
    std::vector<double> out_coef;
    std::vector<double> inv_sout;
    std::vector<double> out_scale;
};

LrCoefficients build_lr_coefficients(const DirectedGraph& g, const DegreeTable& deg,
                                     bool need_in, bool need_out) {
    const NodeId n = g.num_nodes();
    LrCoefficients c;
    c.inv_sout.resize(n);
    for (NodeId i = 0; i < n; ++i) c.inv_sout[i] = 1.0 / deg.smoothed_out(i);

    if (need_in) {
        c.in_off.assign(n + 1, 0);
        c.in_src.reserve(g.num_edges());
        c.in_coef.reserve(g.num_edges());
        for (NodeId i = 0; i < n; ++i) {
            const auto nbrs = g.in_neighbors(i);
            const auto w = g.in_weights(i);
            for (std::size_t k = 0; k < nbrs.size(); ++k) {
                const NodeId j = nbrs[k];
                c.in_src.push_back(j);
                const double weight = g.weighted() ? w[k] : 1.0;
                c.in_coef.push_back(weight * deg.smoothed_out(j) / deg.smoothed_in(j));
            }
            c.in_off[i + 1] = c.in_src.size();
        }
    }
    if (need_out) {
        c.out_off.assign(n + 1, 0);
        c.out_scale.resize(n);
        c.out_dst.reserve(g.num_edges());
        c.out_coef.reserve(g.num_edges());
        for (NodeId i = 0; i < n; ++i) {
            const auto nbrs = g.out_neighbors(i);
            const auto w = g.out_weights(i);
            double in_sum = 0.0;
            for (std::size_t k = 0; k < nbrs.size(); ++k) {
                const NodeId j = nbrs[k];
                c.out_dst.push_back(j);
                const double weight = g.weighted() ? w[k] : 1.0;
                c.out_coef.push_back(weight * deg.smoothed_in(j) / deg.smoothed_out(j));
                in_sum += deg.smoothed_in(j);
            }
            c.out_off[i + 1] = c.out_dst.size();
            c.out_scale[i] = nbrs.empty() ? 0.0 : deg.smoothed_in(i) / in_sum;
        }
    }
    return c;
}

RankVector run_lurker_rank(const DirectedGraph& g, LurkVariant variant, const RankParams& params,
                           const std::vector<double>* trust_vector) {
    validate_params(params);
    const NodeId n = g.num_nodes();
    const DegreeTable deg = degrees(g);
    const bool ac_style = variant == LurkVariant::ac_lr_in || variant == LurkVariant::ac_lr_out ||
                          variant == LurkVariant::ac_lr_in_out;
    const bool need_in = variant != LurkVariant::lr_out && variant != LurkVariant::ac_lr_out;
    const bool need_out = variant != LurkVariant::lr_in && variant != LurkVariant::ac_lr_in;
    const LrCoefficients c = build_lr_coefficients(g, deg, need_in, need_out);
    const double d = params.damping;

    // Exogenous term: uniform teleport/unit source, or the trust bias.
    std::vector<double> exo(n);
    for (NodeId i = 0; i < n; ++i) {
        const double t = trust_vector ? (*trust_vector)[i] : (n > 0 ? 1.0 / n : 0.0);
        exo[i] = ac_style ? static_cast<double>(n) * t : (1.0 - d) * t;
    }

    auto update = [&](const std::vector<double>& x, std::vector<double>& y) {
        parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                double in_term = 0.0;
                if (need_in) {
                    double acc = 0.0;
                    for (std::size_t k = c.in_off[i]; k < c.in_off[i + 1]; ++k)
                        acc += c.in_coef[k] * x[c.in_src[k]];
                    in_term = c.inv_sout[i] * acc;
                }
                double out_term = 0.0;
                if (need_out) {
                    double acc = 0.0;
                    for (std::size_t k = c.out_off[i]; k < c.out_off[i + 1]; ++k)
                        acc += c.out_coef[k] * x[c.out_dst[k]];
                    out_term = c.out_scale[i] * acc;
                }
                double endo = 0.0;
                switch (variant) {
                    case LurkVariant::lr_in:
                    case LurkVariant::ac_lr_in: endo = in_term; break;
                    case LurkVariant::lr_out:
                    case LurkVariant::ac_lr_out: endo = out_term; break;
                    case LurkVariant::lr_in_out:
                    case LurkVariant::ac_lr_in_out: endo = in_term * (1.0 + out_term); break;
                }
                y[i] = d * endo + exo[i];
            }
        });
    };

    // PageRank-style variants iterate the raw affine update (teleportation
    // keeps iterates bounded); alpha-style ones need per-step normalization.
    IterState state = power_iterate(n, params, ac_style, update);
    RankVector r;
    r.scores = std::move(state.scores);
    r.method = trust_vector ? std::string("trust-") + variant_name(variant) : variant_name(variant);
    r.params = params;
    r.iterations = state.iterations;
    r.converged = state.converged;
    r.ranking_stable_at = state.stable_at;
    finalize(r);
    return r;
}

}  // namespace

RankVector lurker_rank(const DirectedGraph& g, LurkVariant variant, const RankParams& params) {
    return run_lurker_rank(g, variant, params, nullptr);
}

RankVector trust_biased_lurker_rank(const DirectedGraph& g, const std::vector<double>& trust_vector,
                                    LurkVariant variant, const RankParams& params) {
    if (trust_vector.size() != g.num_nodes())
        throw std::invalid_argument("trust vector dimension does not match the graph");
    double sum = 0.0;
    for (double v : trust_vector) {
        if (v < 0.0) throw std::invalid_argument("trust vector entries must be non-negative");
        sum += v;
    }
    if (sum <= 0.0) throw std::invalid_argument("trust vector must have positive mass");
    std::vector<double> t(trust_vector);
    if (std::abs(sum - 1.0) > 1e-12)
        for (double& v : t) v /= sum;
    return run_lurker_rank(g, variant, params, &t);
}

namespace {

RankVector run_pagerank(const DirectedGraph& g, const RankParams& params,
                        const std::vector<double>* teleport, const char* method) {
    validate_params(params);
    const NodeId n = g.num_nodes();
    const double d = params.damping;

    std::vector<double> inv_out(n, 0.0);
    std::vector<NodeId> dangling;
    for (NodeId u = 0; u < n; ++u) {
        const std::size_t out = g.raw_out_degree(u);
        if (out == 0)
            dangling.push_back(u);
        else
            inv_out[u] = 1.0 / static_cast<double>(out);
    }

    auto update = [&](const std::vector<double>& x, std::vector<double>& y) {
        double dangle = 0.0;
        for (NodeId u : dangling) dangle += x[u];
        parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                double acc = 0.0;
                for (NodeId j : g.in_neighbors(static_cast<NodeId>(i))) acc += x[j] * inv_out[j];
                const double v = teleport ? (*teleport)[i] : 1.0 / static_cast<double>(n);
                // Uniform teleport spreads dangling mass uniformly (the
                // e a^T/|V| correction); a biased teleport routes it to v.
                const double dangle_share = teleport ? dangle * v : dangle / static_cast<double>(n);
                y[i] = d * (acc + dangle_share) + (1.0 - d) * v;
            }
        });
    };

    IterState state = power_iterate(n, params, false, update);
    RankVector r;
    r.scores = std::move(state.scores);
    r.method = method;
    r.params = params;
    r.iterations = state.iterations;
    r.converged = state.converged;
    r.ranking_stable_at = state.stable_at;
    finalize(r);
    return r;
}

}  // namespace

RankVector pagerank(const DirectedGraph& g, const RankParams& params) {
    return run_pagerank(g, params, nullptr, "pagerank");
}

RankVector trustrank(const DirectedGraph& g_trust, const std::vector<NodeId>& seeds,
                     const RankParams& params) {
    if (seeds.empty()) throw std::invalid_argument("trustrank requires a non-empty seed set");
    std::vector<double> teleport(g_trust.num_nodes(), 0.0);
    for (NodeId s : seeds) {
        if (s >= g_trust.num_nodes()) throw std::invalid_argument("seed id out of range");
        teleport[s] = 1.0 / static_cast<double>(seeds.size());
    }
    return run_pagerank(g_trust, params, &teleport, "trustrank");
}

RankVector alpha_centrality(const DirectedGraph& g, const RankParams& params) {
    validate_params(params);
    const NodeId n = g.num_nodes();
    const double d = params.damping;

    auto update = [&](const std::vector<double>& x, std::vector<double>& y) {
        parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const NodeId node = static_cast<NodeId>(i);
                const auto nbrs = g.in_neighbors(node);
                const auto w = g.in_weights(node);
                double acc = 0.0;
                for (std::size_t k = 0; k < nbrs.size(); ++k)
                    acc += (g.weighted() ? w[k] : 1.0) * x[nbrs[k]];
                y[i] = d * acc + 1.0;
            }
        });
    };

    IterState state = power_iterate(n, params, true, update);
    RankVector r;
    r.scores = std::move(state.scores);
    r.method = "alpha-centrality";
    r.params = params;
    r.iterations = state.iterations;
    r.converged = state.converged;
    r.ranking_stable_at = state.stable_at;
    finalize(r);
    return r;
}

RankVector fair_bets(const DirectedGraph& g, const RankParams& params) {
    validate_params(params);
    const NodeId n = g.num_nodes();
    const DegreeTable deg = degrees(g);
    std::vector<double> inv_sout(n);
    for (NodeId i = 0; i < n; ++i) inv_sout[i] = 1.0 / deg.smoothed_out(i);
    const double injection = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;

    // The bare fair-bets operator decays to zero on acyclic graphs; a uniform
    // exogenous injection keeps the normalized fixed point defined everywhere
    // (no edges -> exactly uniform).
    auto update = [&](const std::vector<double>& x, std::vector<double>& y) {
        parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                double acc = 0.0;
                for (NodeId j : g.in_neighbors(static_cast<NodeId>(i))) acc += x[j];
                y[i] = inv_sout[i] * acc + injection;
            }
        });
    };

    IterState state = power_iterate(n, params, true, update);
    RankVector r;
    r.scores = std::move(state.scores);
    r.method = "fairbets";
    r.params = params;
    r.iterations = state.iterations;
    r.converged = state.converged;
    r.ranking_stable_at = state.stable_at;
    finalize(r);
    return r;
}

RankVector in_out_ratio_rank(const DirectedGraph& g) {
    const DegreeTable deg = degrees(g);
    RankVector r;
    r.scores.resize(g.num_nodes());
    for (NodeId i = 0; i < g.num_nodes(); ++i) r.scores[i] = deg.ratio(i);
    r.method = "io";
    r.params.normalize_final = false;  // scores are the literal smoothed ratios
    r.iterations = 0;
    r.converged = true;
    return r;
}

RankVector data_driven_rank(const DirectedGraph& g, const ActivityTable& activity,
                            DataDrivenFlavor flavor) {
    std::vector<std::string> required;
    switch (flavor) {
        case DataDrivenFlavor::twitter: required = {"retweets"}; break;
        case DataDrivenFlavor::friendfeed: required = {"comments", "posts"}; break;
        case DataDrivenFlavor::flickr_favorites: required = {"favorites"}; break;
        case DataDrivenFlavor::flickr_views: required = {"views"}; break;
    }
    std::string missing;
    for (const auto& name : required) {
        if (!activity.has(name)) {
            if (!missing.empty()) missing += ", ";
            missing += name;
        }
    }
    if (!missing.empty())
        throw std::invalid_argument(std::string("activity table lacks counters required by ") +
                                    flavor_name(flavor) + ": " + missing);

    const NodeId n = g.num_nodes();
    const DegreeTable deg = degrees(g);
    RankVector r;
    r.scores.resize(n);
    for (NodeId i = 0; i < n; ++i) {
        double ei = 0.0;
        switch (flavor) {
            case DataDrivenFlavor::twitter: {
                double sum = 0.0;
                for (NodeId j : g.out_neighbors(i)) sum += activity.value("retweets", j);
                ei = sum / deg.smoothed_out(i);
                break;
            }
            case DataDrivenFlavor::friendfeed: {
                double sum = 0.0;
                for (NodeId j : g.out_neighbors(i)) sum += activity.value("comments", j);
                ei = (sum / deg.smoothed_out(i)) *
                     std::log10(activity.value("posts", i) + 10.0);
                break;
            }
            case DataDrivenFlavor::flickr_favorites: ei = activity.value("favorites", i); break;
            case DataDrivenFlavor::flickr_views: ei = activity.value("views", i); break;
        }
        r.scores[i] = deg.ratio(i) * std::exp(-ei);
    }
    r.method = std::string("dd-") + flavor_name(flavor);
    r.params.normalize_final = false;  // DD scores are compared against the 1.0 cut
    r.iterations = 0;
    r.converged = true;
    return r;
}

TrustOracleResult trust_oracle_entropy(const DirectedGraph& g_trust) {
    const NodeId n = g_trust.num_nodes();
    TrustOracleResult result;
    result.h.assign(n, 0.0);
    std::vector<NodeId> eligible;

    for (NodeId i = 0; i < n; ++i) {
        const auto trusters = g_trust.in_neighbors(i);
        const auto w = g_trust.in_weights(i);
        double total = 0.0;
        std::size_t voters = 0;
        for (std::size_t k = 0; k < trusters.size(); ++k) {
            const double et = g_trust.weighted() ? w[k] : 1.0;
            if (et > 0.0) {
                total += et;
                ++voters;
            }
        }
        if (voters < 2 || total <= 0.0) continue;  // H = 0 by convention
        double entropy = 0.0;
        for (std::size_t k = 0; k < trusters.size(); ++k) {
            const double et = g_trust.weighted() ? w[k] : 1.0;
            if (et <= 0.0) continue;
            const double p = et / total;
            entropy -= p * std::log(p);
        }
        result.h[i] = std::clamp(entropy / std::log(static_cast<double>(voters)), 0.0, 1.0);
        eligible.push_back(i);
    }

    if (!eligible.empty()) {
        // Good seeds: third quartile of the H distribution over eligible
        // nodes, i.e. H at or above the top-25% cut (boundary ties included).
        std::vector<double> values;
        values.reserve(eligible.size());
        for (NodeId i : eligible) values.push_back(result.h[i]);
        std::sort(values.begin(), values.end(), std::greater<>());
        const std::size_t cut =
            static_cast<std::size_t>(std::ceil(0.25 * static_cast<double>(values.size())));
        result.quartile_threshold = values[cut == 0 ? 0 : cut - 1];
        for (NodeId i : eligible)
            if (result.h[i] >= result.quartile_threshold) result.good_seeds.push_back(i);
    }
    return result;
}

}  // namespace lurker
