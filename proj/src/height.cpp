#include "hcs/height.hpp"

#include <algorithm>
#include <string>

namespace hcs {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::vector<Rat>> dist)
    : dist_(std::move(dist)) {
    const std::size_t n = dist_.size();
    for (const auto& row : dist_)
        if (row.size() != n) throw ContractError("distance matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (dist_[i][i] != 0) throw ContractError("nonzero diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist_[i][j] != dist_[j][i]) throw ContractError("asymmetric distances");
            if (dist_[i][j] <= 0) throw ContractError("non-positive off-diagonal distance");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (dist_[i][j] > dist_[i][k] + dist_[k][j])
                    throw ContractError("triangle inequality fails at (" +
                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(k) + ")");
}

Rat whitney_measure(const FiniteMetricSpace& s, const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw DomainError("whitney measure of the empty set");
    for (std::size_t idx : subset)
        if (idx >= s.size()) throw ContractError("subset index out of range");
    Rat mu(0);
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            if (subset[a] == subset[b]) throw ContractError("subset has repeated points");
            mu += s.dist(subset[a], subset[b]);
        }
    return mu;
}

void AbstractHairData::validate(std::size_t point_count) const {
    std::vector<bool> seen(point_count, false);
    std::size_t total = 0;
    for (const auto& chain : chains) {
        if (chain.empty()) throw ContractError("empty chain");
        for (std::size_t p : chain) {
            if (p >= point_count) throw ContractError("chain point out of range");
            if (seen[p]) throw ContractError("point " + std::to_string(p) +
                                             " appears in more than one chain position");
            seen[p] = true;
            ++total;
        }
    }
    if (total != point_count) throw ContractError("chains do not cover all points");
}

std::size_t AbstractHairData::chain_of(std::size_t point) const {
    for (std::size_t c = 0; c < chains.size(); ++c)
        for (std::size_t p : chains[c])
            if (p == point) return c;
    throw ContractError("point not in any chain");
}

std::vector<Rat> height_function(const AbstractHairData& d, const FiniteMetricSpace& s) {
    d.validate(s.size());
    std::vector<Rat> h(s.size(), Rat(0));
    for (const auto& chain : d.chains) {
        // mu of the growing prefix; each new point adds its distances to the
        // points already in the arc
        Rat mu(0);
        for (std::size_t i = 1; i < chain.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) mu += s.dist(chain[j], chain[i]);
            h[chain[i]] = mu;
        }
    }
    return h;
}

EmbeddedHairSet abstract_uniformize(const AbstractHairData& d, const FiniteMetricSpace& s,
                                    const std::vector<Rat>& g_per_chain) {
    d.validate(s.size());
    if (g_per_chain.size() != d.chains.size())
        throw ContractError("need one base coordinate per chain");
    for (std::size_t a = 0; a < g_per_chain.size(); ++a)
        for (std::size_t b = a + 1; b < g_per_chain.size(); ++b)
            if (g_per_chain[a] == g_per_chain[b])
                throw ContractError("g is not injective on bases");

    const std::vector<Rat> h = height_function(d, s);
    EmbeddedHairSet out;
    out.columns.reserve(d.chains.size());
    for (std::size_t c = 0; c < d.chains.size(); ++c) {
        EmbeddedHairSet::Column col;
        col.x = g_per_chain[c];
        for (std::size_t p : d.chains[c]) col.heights.push_back(h[p]);
        out.columns.push_back(std::move(col));
    }
    // exhaustive injectivity check of Phi(x) = (g(b(x)), h(x))
    std::vector<std::pair<Rat, Rat>> image;
    for (const auto& col : out.columns)
        for (const auto& y : col.heights) image.emplace_back(col.x, y);
    for (std::size_t a = 0; a < image.size(); ++a)
        for (std::size_t b = a + 1; b < image.size(); ++b)
            if (image[a] == image[b])
                throw ContractError("embedding is not injective");
    return out;
}

std::vector<AxiomVerdict> check_axioms(const AbstractHairData& d,
                                       const FiniteMetricSpace& s) {
    d.validate(s.size());
    std::vector<AxiomVerdict> out;

    // A1: components are single points or injective finite chains. validate()
    // already rejects repeats; re-check injectivity per chain explicitly.
    bool a1 = true;
    for (const auto& chain : d.chains)
        for (std::size_t i = 0; a1 && i < chain.size(); ++i)
            for (std::size_t j = i + 1; j < chain.size(); ++j)
                a1 = a1 && chain[i] != chain[j];
    out.push_back({"A1", true, a1, "components are single points or injective chains"});

    out.push_back({"A2", false, false,
                   "the closure of the point components being a Cantor set is a "
                   "limit property; not falsifiable at finite scale"});

    // A3: every chain meets the base set at exactly one end; the chain
    // representation puts the base first, so the checkable content is that
    // non-degenerate chains have distinct ends.
    bool a3 = true;
    for (const auto& chain : d.chains)
        if (chain.size() > 1) a3 = a3 && chain.front() != chain.back();
    out.push_back({"A3", true, a3, "the base of every chain is its first element"});

    out.push_back({"A4", false, false,
                   "Hausdorff convergence of arcs along convergent sequences is a "
                   "limit property; not falsifiable at finite scale"});

    out.push_back({"A5", false, false,
                   "non-accessibility from the plane complement has no content for "
                   "abstract chain data"});

    // A6': peaks (chain last elements) meet every point's chain. At finite
    // scale density degrades to: every chain has a peak, and no chain hides
    // points beyond its peak.
    bool a6p = true;
    for (const auto& chain : d.chains) a6p = a6p && !chain.empty();
    out.push_back({"A6'", true, a6p,
                   "every chain carries a peak; density of peaks is quantified "
                   "separately by peak_density_stats on embedded models"});
    return out;
}

}  // namespace hcs
