#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcs/errors.hpp"
#include "hcs/rational.hpp"

namespace hcs {

/// Finite metric space with an exactly validated rational distance matrix.
class FiniteMetricSpace {
  public:
    /// Validates the metric axioms exactly: zero diagonal, symmetry, strict
    /// positivity off the diagonal, triangle inequality.
    explicit FiniteMetricSpace(std::vector<std::vector<Rat>> dist);

    std::size_t size() const { return dist_.size(); }
    const Rat& dist(std::size_t i, std::size_t j) const { return dist_[i][j]; }
    const std::vector<std::vector<Rat>>& matrix() const { return dist_; }

  private:
    std::vector<std::vector<Rat>> dist_;
};

/// Whitney-style measure on nonempty subsets: the sum of pairwise distances.
/// Zero on singletons and strictly monotone under proper inclusion; for
/// finite spaces continuity in the Hausdorff metric is automatic.
Rat whitney_measure(const FiniteMetricSpace& s, const std::vector<std::size_t>& subset);

/// Chains of points, each ordered from its base to its peak; chain membership
/// partitions the points. Arcs [b(x), x] are chain prefixes.
struct AbstractHairData {
    std::vector<std::vector<std::size_t>> chains;

    /// Checks that the chains partition {0..n-1} with no repeated points.
    void validate(std::size_t point_count) const;

    std::size_t chain_of(std::size_t point) const;
};

/// h(x) = mu([b(x), x]) per point; zero exactly at bases, strictly increasing
/// along every chain.
std::vector<Rat> height_function(const AbstractHairData& d, const FiniteMetricSpace& s);

struct EmbeddedHairSet {
    struct Column {
        Rat x;                     // g(base)
        std::vector<Rat> heights;  // h along the chain, base first
    };
    std::vector<Column> columns;   // one per chain, in chain order
};

/// Phi(x) = (g(b(x)), h(x)) with g given per chain; verifies injectivity of
/// Phi exhaustively. Throws ContractError when g is not injective.
EmbeddedHairSet abstract_uniformize(const AbstractHairData& d, const FiniteMetricSpace& s,
                                    const std::vector<Rat>& g_per_chain);

/// Verdict of one axiom on finite data: either checked against the stored
/// structure, or explicitly not falsifiable at finite scale (limit content).
struct AxiomVerdict {
    std::string axiom;
    bool checkable = false;
    bool holds = false;  // meaningful only when checkable
    std::string note;
};

/// Data-level checks of the hairy-set axioms on finite chain data. A1/A3/A6'
/// are verified against the representation; A2 and A4 concern limit behavior
/// (Cantor closure, Hausdorff convergence of arcs) and are reported as not
/// falsifiable at finite scale rather than silently passed; A5 is a planar
/// accessibility statement with no abstract-data content.
std::vector<AxiomVerdict> check_axioms(const AbstractHairData& d,
                                       const FiniteMetricSpace& s);

}  // namespace hcs
