#include "lurker/evalmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace lurker {

namespace {

// Inversion count by merge sort.
std::size_t count_inversions(std::vector<std::size_t>& seq, std::vector<std::size_t>& scratch,
                             std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::size_t inv = count_inversions(seq, scratch, lo, mid) + count_inversions(seq, scratch, mid, hi);
    std::merge(seq.begin() + lo, seq.begin() + mid, seq.begin() + mid, seq.begin() + hi,
               scratch.begin() + lo);
    std::size_t i = lo, j = mid;
    while (i < mid && j < hi) {
        if (seq[j] < seq[i]) {
            inv += mid - i;
            ++j;
        } else {
            ++i;
        }
    }
    std::copy(scratch.begin() + lo, scratch.begin() + hi, seq.begin() + lo);
    return inv;
}

}  // namespace

double kendall_tau(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    const std::size_t m = a.size();
    if (m < 2) throw std::invalid_argument("kendall_tau requires at least 2 nodes");
    if (b.size() != m) throw std::invalid_argument("kendall_tau: rankings differ in length");

    NodeId max_id = 0;
    for (NodeId u : a) max_id = std::max(max_id, u);
    constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pos_b(max_id + 1, kAbsent);
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] > max_id || pos_b[b[i]] != kAbsent)
            throw std::invalid_argument("kendall_tau: rankings cover different node universes");
        pos_b[b[i]] = i;
    }

    std::vector<std::size_t> seq(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (pos_b[a[i]] == kAbsent)
            throw std::invalid_argument("kendall_tau: rankings cover different node universes");
        seq[i] = pos_b[a[i]];
        pos_b[a[i]] = kAbsent;  // also catches duplicates in a
    }

    std::vector<std::size_t> scratch(m);
    const std::size_t discordant = count_inversions(seq, scratch, 0, m);
    const double pairs = static_cast<double>(m) * static_cast<double>(m - 1);
    return 1.0 - 4.0 * static_cast<double>(discordant) / pairs;
}

double fagin_intersection(const std::vector<NodeId>& a, const std::vector<NodeId>& b,
                          std::size_t k) {
    if (k == 0) throw std::invalid_argument("fagin_intersection requires k >= 1");
    if (k > a.size() || k > b.size())
        throw std::invalid_argument("fagin_intersection: k exceeds a ranking length");

    std::unordered_set<NodeId> seen_a, seen_b;
    seen_a.reserve(2 * k);
    seen_b.reserve(2 * k);
    std::size_t overlap = 0;
    double sum = 0.0;
    for (std::size_t q = 0; q < k; ++q) {
        const NodeId x = a[q], y = b[q];
        if (x == y) {
            ++overlap;
        } else {
            if (seen_b.count(x)) ++overlap;
            if (seen_a.count(y)) ++overlap;
        }
        seen_a.insert(x);
        seen_b.insert(y);
        sum += static_cast<double>(overlap) / static_cast<double>(q + 1);
    }
    return sum / static_cast<double>(k);
}

double bpref(const std::vector<NodeId>& ranking, const RelevanceSets& sets) {
    if (sets.relevant.empty()) throw std::invalid_argument("bpref requires a non-empty relevant set");
    std::unordered_set<NodeId> relevant(sets.relevant.begin(), sets.relevant.end());
    std::unordered_set<NodeId> irrelevant(sets.irrelevant.begin(), sets.irrelevant.end());
    for (NodeId u : sets.relevant)
        if (irrelevant.count(u))
            throw std::invalid_argument("bpref: relevant and irrelevant sets intersect");

    const double r_size = static_cast<double>(relevant.size());
    std::size_t n_above = 0;  // irrelevant nodes seen so far, capped at |R|
    double sum = 0.0;
    std::size_t r_seen = 0;
    for (NodeId u : ranking) {
        if (relevant.count(u)) {
            sum += 1.0 - static_cast<double>(n_above) / r_size;
            ++r_seen;
        } else if (irrelevant.count(u) && n_above < relevant.size()) {
            ++n_above;
        }
    }
    if (r_seen != relevant.size())
        throw std::invalid_argument("bpref: ranking does not cover the relevant set");
    return sum / r_size;
}

RelevanceSets build_relevance_sets(const std::vector<double>* dd_scores,
                                   const std::vector<NodeId>& method_ranking, double l_percent,
                                   std::optional<std::size_t> n_size) {
    if (l_percent <= 0.0 || l_percent > 100.0)
        throw std::invalid_argument("l_percent must lie in (0, 100]");
    RelevanceSets sets;
    std::vector<NodeId> complement;  // ordered by decreasing reference score

    if (dd_scores) {
        for (NodeId u : method_ranking)
            if (static_cast<std::size_t>(u) >= dd_scores->size())
                throw std::invalid_argument("ranking node outside the data-driven score range");
        // N: data-driven score <= 1; complement ordered by decreasing
        // data-driven score, ties by ascending id.
        for (std::size_t u = 0; u < dd_scores->size(); ++u) {
            if ((*dd_scores)[u] <= 1.0)
                sets.irrelevant.push_back(static_cast<NodeId>(u));
            else
                complement.push_back(static_cast<NodeId>(u));
        }
        std::stable_sort(complement.begin(), complement.end(), [&](NodeId a, NodeId b) {
            if ((*dd_scores)[a] != (*dd_scores)[b]) return (*dd_scores)[a] > (*dd_scores)[b];
            return a < b;
        });
    } else {
        const std::size_t n = method_ranking.size();
        std::size_t bottom = n_size.value_or(
            static_cast<std::size_t>(std::ceil(0.25 * static_cast<double>(n))));
        bottom = std::min(bottom, n);
        sets.irrelevant.assign(method_ranking.end() - static_cast<std::ptrdiff_t>(bottom),
                               method_ranking.end());
        complement.assign(method_ranking.begin(),
                          method_ranking.end() - static_cast<std::ptrdiff_t>(bottom));
    }

    if (complement.empty())
        throw std::invalid_argument("relevance sets: complement of the irrelevant set is empty");
    const std::size_t take = static_cast<std::size_t>(
        std::ceil(l_percent / 100.0 * static_cast<double>(complement.size())));
    sets.relevant.assign(complement.begin(), complement.begin() + static_cast<std::ptrdiff_t>(take));
    return sets;
}

std::vector<NodeId> filter_ranking(const std::vector<NodeId>& ranking,
                                   const std::vector<bool>& exclude) {
    std::vector<NodeId> out;
    out.reserve(ranking.size());
    for (NodeId u : ranking)
        if (u >= exclude.size() || !exclude[u]) out.push_back(u);
    return out;
}

}  // namespace lurker
