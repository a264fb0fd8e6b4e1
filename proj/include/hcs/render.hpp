#pragma once

#include <string>
#include <vector>

#include "hcs/length_model.hpp"

namespace hcs {

struct RenderSpec {
    std::vector<int> graph_depths = {1, 2, 3, 4};
    std::vector<std::string> colors = {"blue", "brown", "red", "green"};
    XLayout layout = XLayout::TrueCantor;
    int canvas = 1000;  // pixels per unit

    void validate(int hair_depth) const;
};

/// Figure-style SVG: one vertical segment per deepest address from (x, 0) to
/// (x, l(x)) with x at the cell midpoint of the chosen layout, overlaid with
/// the piecewise-linear graphs l_1..l_k. Byte-deterministic for a fixed spec.
std::string render_figure(const LengthModel& l, const RenderSpec& spec = {});

/// CSV rows "address,x_lo,x_hi,height,height_exact" for every level-`depth`
/// interval: heights are the interval maxima (the point values when depth is
/// the model depth), printed both at 6 decimals (round half to even) and as
/// exact "p/q".
std::string export_heights(const LengthModel& l, int depth);

/// Rebuilds a model from an export at full depth; verifies the x columns
/// against the reconstruction.
LengthModel import_heights(const std::string& csv, Scheme scheme);

}  // namespace hcs
