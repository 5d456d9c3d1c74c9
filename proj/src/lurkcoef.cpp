#include "lurker/lurkcoef.hpp"

#include <algorithm>

namespace lurker {

double local_lurking_coefficient(const DirectedGraph& g, const DegreeTable& deg, NodeId i) {
    const double own = deg.ratio(i);
    if (own < 1.0) return 0.0;  // not in lurking status
    const auto in_nbrs = g.in_neighbors(i);
    const auto out_nbrs = g.out_neighbors(i);
    const std::size_t neighborhood = in_nbrs.size() + out_nbrs.size();
    if (neighborhood == 0) return 0.0;

    std::size_t hits = 0;
    for (NodeId j : in_nbrs)
        if (deg.ratio(j) < own) ++hits;
    for (NodeId j : out_nbrs)
        if (deg.ratio(j) >= own) ++hits;
    return static_cast<double>(hits) / static_cast<double>(neighborhood);
}

LurkingCoefficientReport lurking_coefficient(const DirectedGraph& g) {
    const NodeId n = g.num_nodes();
    const DegreeTable deg = degrees(g);
    LurkingCoefficientReport report;
    report.lc.resize(n);
    report.weights.resize(n);

    std::vector<NodeId> neighborhood;
    for (NodeId i = 0; i < n; ++i) {
        report.lc[i] = local_lurking_coefficient(g, deg, i);

        // p_i: own ratio normalized over the closed neighborhood (distinct
        // neighbors plus i itself, so isolated nodes get p_i = 1).
        neighborhood.assign(g.in_neighbors(i).begin(), g.in_neighbors(i).end());
        neighborhood.insert(neighborhood.end(), g.out_neighbors(i).begin(),
                            g.out_neighbors(i).end());
        neighborhood.push_back(i);
        std::sort(neighborhood.begin(), neighborhood.end());
        neighborhood.erase(std::unique(neighborhood.begin(), neighborhood.end()),
                           neighborhood.end());
        double ratio_sum = 0.0;
        for (NodeId j : neighborhood) ratio_sum += deg.ratio(j);
        report.weights[i] = deg.ratio(i) / ratio_sum;
    }

    if (n > 0) {
        double lc_sum = 0.0, wlc_sum = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            lc_sum += report.lc[i];
            wlc_sum += report.weights[i] * report.lc[i];
        }
        report.network_lc = lc_sum / static_cast<double>(n);
        report.network_wlc = wlc_sum / static_cast<double>(n);
    }
    return report;
}

}  // namespace lurker
