#include "hcs/render.hpp"

#include <sstream>

namespace hcs {

namespace {

// pixel coordinates as exact fixed-point strings so output bytes are
// reproducible across platforms
std::string px(const Rat& unit_coord, int canvas) {
    return rat_to_fixed6(unit_coord * canvas);
}

// y grows upward in the model, downward in SVG; baseline sits one margin
// above the canvas bottom
std::string py(const Rat& unit_coord, int canvas, int height) {
    return rat_to_fixed6(Rat(height - canvas / 40) - unit_coord * canvas);
}

}  // namespace

void RenderSpec::validate(int hair_depth) const {
    for (int d : graph_depths)
        if (d < 1 || d > hair_depth)
            throw ContractError("graph depth " + std::to_string(d) +
                                " outside [1, hair depth]");
    if (canvas < 1) throw ContractError("canvas scale must be positive");
}

std::string render_figure(const LengthModel& l, const RenderSpec& spec) {
    if (l.cantor().scheme() != Scheme::Canonical)
        throw ContractError("figure rendering expects the canonical model");
    spec.validate(l.depth());

    const int W = spec.canvas;
    const int H = spec.canvas + spec.canvas / 20;  // headroom above height 1
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
        << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    // hairs
    const auto cells = l.cantor().layout_cells(l.depth(), spec.layout);
    svg << "<g stroke=\"black\" stroke-width=\"0.5\">\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string x = px(cells[i].midpoint(), W);
        svg << "<line x1=\"" << x << "\" y1=\"" << py(Rat(0), W, H) << "\" x2=\"" << x
            << "\" y2=\"" << py(l.value(i), W, H) << "\"/>\n";
    }
    svg << "</g>\n";

    // graphs l_1..l_k
    for (std::size_t gi = 0; gi < spec.graph_depths.size(); ++gi) {
        const int d = spec.graph_depths[gi];
        const std::string& color = spec.colors[gi % spec.colors.size()];
        PiecewiseLinear pl = canonical_graph(d, spec.layout);
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < pl.points.size(); ++i) {
            if (i) svg << ' ';
            svg << px(pl.points[i].first, W) << ',' << py(pl.points[i].second, W, H);
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string export_heights(const LengthModel& l, int depth) {
    if (depth < 0 || depth > l.depth())
        throw ContractError("export depth out of range");
    std::ostringstream csv;
    csv << "address,x_lo,x_hi,height,height_exact\n";
    const auto& intervals = l.cantor().level(depth);
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        Address a = l.cantor().index_to_address(depth, i);
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j) csv << '.';
            csv << a[j];
        }
        const Rat& h = l.interval_max_at(depth, i);
        csv << ',' << rat_to_string(intervals[i].lo) << ',' << rat_to_string(intervals[i].hi)
            << ',' << rat_to_fixed6(h) << ',' << rat_to_string(h) << '\n';
    }
    return csv.str();
}

LengthModel import_heights(const std::string& csv, Scheme scheme) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "address,x_lo,x_hi,height,height_exact")
        throw ParseError("bad CSV header");
    struct Row {
        Address a;
        Rat lo, hi, h;
    };
    std::vector<Row> rows;
    int depth = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string addr, lo, hi, rounded, exact;
        if (!std::getline(ls, addr, ',') || !std::getline(ls, lo, ',') ||
            !std::getline(ls, hi, ',') || !std::getline(ls, rounded, ',') ||
            !std::getline(ls, exact))
            throw ParseError("short CSV row: '" + line + "'");
        Row r;
        std::istringstream as(addr);
        std::string part;
        while (std::getline(as, part, '.')) r.a.push_back(std::stoi(part));
        r.lo = rat_from_string(lo);
        r.hi = rat_from_string(hi);
        r.h = rat_from_string(exact);
        if (depth < 0)
            depth = static_cast<int>(r.a.size());
        else if (depth != static_cast<int>(r.a.size()))
            throw ParseError("mixed address lengths in CSV");
        rows.push_back(std::move(r));
    }
    if (depth < 0) throw ParseError("empty CSV");
    CantorPtr c = make_cantor(scheme, depth);
    if (rows.size() != c->leaf_count()) throw ParseError("row count mismatch");
    std::vector<Rat> vals(c->leaf_count());
    std::vector<bool> seen(c->leaf_count(), false);
    for (const auto& r : rows) {
        std::size_t idx = c->address_to_index(r.a);
        const Interval& iv = c->leaves()[idx];
        if (iv.lo != r.lo || iv.hi != r.hi)
            throw ParseError("x columns disagree with the reconstruction");
        if (seen[idx]) throw ParseError("duplicate address");
        seen[idx] = true;
        vals[idx] = r.h;
    }
    return LengthModel::from_values(std::move(c), std::move(vals));
}

}  // namespace hcs
