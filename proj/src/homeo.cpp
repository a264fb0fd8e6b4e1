#include "hcs/homeo.hpp"

#include <algorithm>
#include <string>

namespace hcs {

Rat EtaFunction::eval(const Rat& x) const {
    for (const auto& p : pieces)
        if (p.iv.contains(x)) return p.eta;
    return Rat(1);
}

bool EtaFunction::bounds_ok() const {
    const Rat eps = pow2_inv(static_cast<unsigned>(level) + 1);
    for (const auto& p : pieces)
        if (rat_abs(p.eta - 1) >= eps) return false;
    return true;
}

EtaFunction make_eta(const MatchedNestPair& pair, int n) {
    if (n < 1 || n >= pair.level_count())
        throw ContractError("eta level out of range");
    EtaFunction eta;
    eta.level = n;
    for (const auto& b : pair.level(n)) {
        const NestBlock& par = pair.level(n - 1)[b.parent];
        if (par.max_x <= 0 || par.max_y <= 0)
            throw ContractError("zero parent Max in eta construction");
        eta.pieces.push_back({pair.x_interval(b), b.ratio});
    }
    if (!eta.bounds_ok()) throw ContractError("|eta - 1| bound violated");
    return eta;
}

const VerticalShear::Piece* VerticalShear::piece_at(const Rat& x) const {
    // last piece with iv.lo <= x
    std::size_t lo = 0, hi = pieces_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (pieces_[mid].iv.lo <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == 0) return nullptr;
    const Piece& p = pieces_[lo - 1];
    return x <= p.iv.hi ? &p : nullptr;
}

Rat VerticalShear::bump_at(const Rat& x) const {
    const Piece* p = piece_at(x);
    return p ? p->bump.eval(x) : Rat(0);
}

Rat VerticalShear::eta_at(const Rat& x) const {
    const Piece* p = piece_at(x);
    return p ? p->eta : Rat(1);
}

PlanePoint VerticalShear::apply(const PlanePoint& pt) const {
    if (pt.x < 0 || pt.x > 1 || pt.y < 0 || pt.y > 1) return pt;
    const Piece* p = piece_at(pt.x);
    if (!p) return pt;
    const Rat b = p->bump.eval(pt.x);
    if (pt.y <= b) return {pt.x, p->eta * pt.y};
    if (b >= 1) throw ContractError("shear knot at or above 1");
    // 1 - (1 - eta*B)/(1 - B) * (1 - y)
    return {pt.x, 1 - (1 - p->eta * b) / (1 - b) * (1 - pt.y)};
}

VerticalShear VerticalShear::inverted() const {
    std::vector<Piece> inv;
    inv.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        Piece q = p;
        q.eta = 1 / p.eta;
        for (auto& v : q.bump.envelope) v *= p.eta;
        for (auto& v : q.bump.raw) v *= p.eta;
        inv.push_back(std::move(q));
    }
    return VerticalShear(level_, std::move(inv));
}

PlanePoint ComposedVerticalMap::apply(const PlanePoint& p) const {
    return apply_prefix(p, static_cast<int>(shears_.size()));
}

PlanePoint ComposedVerticalMap::apply_prefix(const PlanePoint& p, int k) const {
    PlanePoint q = p;
    for (int i = 0; i < k; ++i) q = shears_[i].apply(q);
    return q;
}

std::vector<Rat> lipschitz_partial_products(int count) {
    std::vector<Rat> out;
    out.reserve(count);
    Rat prod(1);
    for (int k = 1; k <= count; ++k) {
        prod *= 1 - pow2_inv(static_cast<unsigned>(k));
        out.push_back(prod);
    }
    return out;
}

namespace {

/// Normalized transferred values at level m: scale_y * (max_y/max_x) * l^X
/// per X-side block from the raw X values, where scale_y normalizes
/// Max(l^Y,[0,1]) to 1/2. At m = 0 this reduces to the normalized X model.
std::vector<Rat> transferred_values(const MatchedNestPair& pair, int m,
                                    const std::vector<Rat>& x_raw_values,
                                    const Rat& scale_y) {
    std::vector<Rat> vals(x_raw_values.size());
    for (const auto& b : pair.level(m)) {
        const Rat f = scale_y * b.max_y / b.max_x;
        for (std::size_t i = b.x_first; i <= b.x_last; ++i) vals[i] = f * x_raw_values[i];
    }
    return vals;
}

}  // namespace

ComposeResult compose_and_bound(const MatchedNestPair& pair, int N, int grid_n) {
    if (N < 0 || N >= pair.level_count())
        throw ContractError("compose level out of range");
    if (grid_n < 2) throw ContractError("grid must have at least 2 points");

    const LengthModel& lx = pair.lx();
    const Rat scale_x = Rat(1, 2) / pair.level(0)[0].max_x;
    const Rat scale_y = Rat(1, 2) / pair.level(0)[0].max_y;

    std::vector<Rat> x_norm(lx.values());
    for (auto& v : x_norm) v *= scale_x;

    // shears: H_n uses the bump of the level-(n-1) transferred model over the
    // level-n partition, with eta from the recorded ratios
    std::vector<VerticalShear> shears;
    shears.reserve(N);
    for (int n = 1; n <= N; ++n) {
        auto prev_vals = transferred_values(pair, n - 1, lx.values(), scale_y);
        LengthModel prev = LengthModel::from_values(lx.cantor_ptr(), std::move(prev_vals));
        std::vector<VerticalShear::Piece> pieces;
        pieces.reserve(pair.level(n).size());
        for (const auto& b : pair.level(n)) {
            VerticalShear::Piece piece{pair.x_interval(b), b.ratio,
                                       make_bump(prev, pair.x_interval(b))};
            pieces.push_back(std::move(piece));
        }
        shears.emplace_back(n, std::move(pieces));
    }

    // exact per-leaf cumulative eta products
    std::vector<Rat> cumulative(lx.leaf_count(), Rat(1));
    for (int n = 1; n <= N; ++n)
        for (const auto& b : pair.level(n))
            for (std::size_t i = b.x_first; i <= b.x_last; ++i)
                cumulative[i] *= b.ratio;

    ComposedVerticalMap map(std::move(shears), std::move(cumulative));

    // sample set: grid plus all hair tips of the normalized X model
    std::vector<PlanePoint> samples;
    samples.reserve(static_cast<std::size_t>(grid_n) * grid_n + lx.leaf_count());
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j)
            samples.push_back({rat(i, grid_n - 1), rat(j, grid_n - 1)});
    const auto& leaves = lx.cantor().leaves();
    for (std::size_t i = 0; i < lx.leaf_count(); ++i)
        samples.push_back({leaves[i].midpoint(), x_norm[i]});

    ComposeReport rep;
    rep.displacement_ok = true;
    for (int n = 1; n <= N; ++n) {
        Rat sup(0);
        const VerticalShear& h = map.shears()[n - 1];
        for (auto& q : samples) {
            PlanePoint r = h.apply(q);
            sup = std::max(sup, rat_abs(r.y - q.y));
            q = r;
        }
        rep.step_sup_displacement.push_back(sup);
        rep.step_bound.push_back(pow2_inv(static_cast<unsigned>(n)));
        if (sup > rep.step_bound.back()) rep.displacement_ok = false;
    }
    rep.lipschitz_partial = lipschitz_partial_products(N);
    return ComposeResult{std::move(map), std::move(rep)};
}

LengthModel transfer_length(const MatchedNestPair& pair, int N, const LengthModel& lx) {
    if (N < 0 || N >= pair.level_count())
        throw ContractError("transfer level out of range");
    if (!(lx.cantor() == pair.lx().cantor()))
        throw ContractError("model does not live on the pair's CantorApprox");
    std::vector<Rat> vals(lx.leaf_count());
    for (const auto& b : pair.level(N)) {
        const Rat f = b.max_y / b.max_x;
        for (std::size_t i = b.x_first; i <= b.x_last; ++i) vals[i] = f * lx.value(i);
    }
    return LengthModel::from_values(lx.cantor_ptr(), std::move(vals));
}

}  // namespace hcs
