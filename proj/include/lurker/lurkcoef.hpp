#pragma once

#include <vector>

#include "lurker/graph.hpp"

namespace lurker {

struct LurkingCoefficientReport {
    std::vector<double> lc;       // per-node local coefficient in [0,1]
    std::vector<double> weights;  // p_i used by the weighted network coefficient
    double network_lc = 0.0;      // unweighted LC (mean of lc_i)
    double network_wlc = 0.0;     // weighted variant
};

/// Local Lurking Coefficient of node i: among nodes in lurking status
/// (smoothed in/out ratio >= 1), the fraction of in-neighbors with strictly
/// lower ratio plus out-neighbors with ratio at least as high, over
/// |B_i| + |R_i| (reciprocal neighbors count once per role). Nodes with
/// ratio < 1 and isolated nodes score 0.
double local_lurking_coefficient(const DirectedGraph& g, const DegreeTable& deg, NodeId i);

/// Network-level report: LC = mean of lc_i; wLC weights each lc_i by the
/// node's ratio normalized over its closed neighborhood (p_i = 1 for
/// isolated nodes, reducing to the unweighted case).
LurkingCoefficientReport lurking_coefficient(const DirectedGraph& g);

}  // namespace lurker
