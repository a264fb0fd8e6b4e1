#pragma once

#include <cstddef>
#include <vector>

#include "hcs/bump.hpp"
#include "hcs/matching.hpp"

namespace hcs {

struct PlanePoint {
    Rat x;
    Rat y;
    friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// Per-partition-interval constant correction factor
///   eta_n = (Max(l^Y,J_n)/Max(l^Y,J_{n-1})) / (Max(l^X,J_n)/Max(l^X,J_{n-1})),
/// 1 off the partition. Satisfies |eta - 1| < 2^-(n+1) on every interval.
struct EtaFunction {
    int level = 0;
    struct Piece {
        Interval iv;  // X-side partition interval
        Rat eta;
    };
    std::vector<Piece> pieces;  // sorted by iv.lo

    Rat eval(const Rat& x) const;
    /// Exact check of the type invariant.
    bool bounds_ok() const;
};

EtaFunction make_eta(const MatchedNestPair& pair, int n);

/// Plane homeomorphism fixing x: identity outside [0,1]^2, piecewise linear
/// in y with the single knot at y = B(x), scaling [0, B(x)] by eta(x).
class VerticalShear {
  public:
    struct Piece {
        Interval iv;
        Rat eta;
        BumpFunction bump;
    };

    VerticalShear(int level, std::vector<Piece> pieces)
        : level_(level), pieces_(std::move(pieces)) {}

    int level() const { return level_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    /// B_n(x): the partition bump, 0 off-partition.
    Rat bump_at(const Rat& x) const;
    /// eta_n(x), 1 off-partition.
    Rat eta_at(const Rat& x) const;

    PlanePoint apply(const PlanePoint& p) const;

    /// The inverse shear: eta -> 1/eta with the knot moved to eta*B.
    VerticalShear inverted() const;

  private:
    const Piece* piece_at(const Rat& x) const;

    int level_;
    std::vector<Piece> pieces_;  // sorted by iv.lo
};

/// phi_N = H_N o ... o H_1 together with the exact per-leaf cumulative
/// eta products.
class ComposedVerticalMap {
  public:
    ComposedVerticalMap(std::vector<VerticalShear> shears,
                        std::vector<Rat> cumulative_factors)
        : shears_(std::move(shears)), cumulative_factors_(std::move(cumulative_factors)) {}

    const std::vector<VerticalShear>& shears() const { return shears_; }
    const std::vector<Rat>& cumulative_factors() const { return cumulative_factors_; }

    PlanePoint apply(const PlanePoint& p) const;
    /// Composition of the first k shears only.
    PlanePoint apply_prefix(const PlanePoint& p, int k) const;

  private:
    std::vector<VerticalShear> shears_;
    std::vector<Rat> cumulative_factors_;
};

struct ComposeReport {
    /// sup |phi_n - phi_{n-1}| over the sample set, per step n = 1..N.
    std::vector<Rat> step_sup_displacement;
    std::vector<Rat> step_bound;  // 2^-n
    bool displacement_ok = false;
    /// prod_{k<=n} (1 - 2^-k) for n = 1..N (lower Lipschitz constant in y).
    std::vector<Rat> lipschitz_partial;
};

struct ComposeResult {
    ComposedVerticalMap map;
    ComposeReport report;
};

/// Builds phi_N from the pair (models normalized internally so that
/// Max(l,[0,1]) = 1/2 on both sides, as the displacement bounds require) and
/// verifies the per-step sup bounds on a grid_n x grid_n sample grid plus all
/// hair tips of the normalized X model.
ComposeResult compose_and_bound(const MatchedNestPair& pair, int N, int grid_n = 200);

/// The exact level-N transferred model: on every X-side level-N interval,
/// value = (Max(l^Y, J^Y_{N,i}) / Max(l^X, J^X_{N,i})) * l^X pointwise.
LengthModel transfer_length(const MatchedNestPair& pair, int N, const LengthModel& lx);

/// Partial products prod_{k<=n}(1 - 2^-k) for n = 1..count, exact.
std::vector<Rat> lipschitz_partial_products(int count);

}  // namespace hcs
