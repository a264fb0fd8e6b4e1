#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hcs/json_io.hpp"
#include "hcs/render.hpp"
#include "hcs/shuffle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_example(int depth, const std::string& out, const std::string& layout, int graphs) {
    hcs::LengthModel model = hcs::LengthModel::canonical(depth);
    if (ends_with(out, ".svg")) {
        hcs::RenderSpec spec;
        spec.layout = layout == "uniform" ? hcs::XLayout::AddressUniform
                                          : hcs::XLayout::TrueCantor;
        spec.graph_depths.clear();
        for (int d = 1; d <= std::min(graphs, depth); ++d) spec.graph_depths.push_back(d);
        hcs::write_file(out, hcs::render_figure(model, spec));
    } else if (ends_with(out, ".csv")) {
        hcs::write_file(out, hcs::export_heights(model, depth));
    } else if (ends_with(out, ".json")) {
        hcs::write_file(out, hcs::hairset_to_json(model));
    } else {
        std::cerr << "error: --out must end in .svg, .csv or .json\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_match(const std::string& xpath, const std::string& ypath, int levels,
              const std::string& out) {
    hcs::LengthModel lx = hcs::hairset_from_json(hcs::read_file(xpath));
    hcs::LengthModel ly = hcs::hairset_from_json(hcs::read_file(ypath));
    try {
        hcs::MatchedNestPair pair = hcs::build_matched_nests(lx, ly, levels);
        pair.verify();
        hcs::write_file(out, hcs::pair_to_json(pair));
        std::cout << "matched nests built to level " << levels << "; every ratio inside "
                  << "its 1 +- 2^-(n+2) window (verified exactly)\n";
        return kExitOk;
    } catch (const hcs::MatchingError& e) {
        std::cerr << "matching failed at level " << e.level_reached << ": " << e.what()
                  << "\n";
        return kExitCheckFailed;
    }
}

int run_uniformize(const std::string& in, int stages, const std::string& cert,
                   const std::string& out) {
    hcs::LengthModel model = hcs::hairset_from_json(hcs::read_file(in));
    try {
        hcs::ShuffleRunResult res = hcs::shuffle_run(model, stages);
        hcs::write_file(cert, hcs::shuffle_certificate_json(res.stages, res.report));
        if (!out.empty()) hcs::write_file(out, hcs::hairset_to_json(res.model));
        std::cout << "shuffle levels m =";
        for (int m : res.report.m_sequence) std::cout << ' ' << m;
        std::cout << "; displacements within 3^-m bounds: "
                  << (res.report.displacements_within_bounds ? "yes" : "no")
                  << "; final boundary max "
                  << hcs::rat_to_fixed6(res.report.final_boundary_max) << " < 1/" << stages
                  << ": " << (res.report.final_boundary_ok ? "yes" : "no") << "\n";
        return res.report.displacements_within_bounds && res.report.final_boundary_ok
                   ? kExitOk
                   : kExitCheckFailed;
    } catch (const hcs::ResourceError& e) {
        std::cerr << "uniformize failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

int run_check(const std::string& in) {
    hcs::LengthModel model = hcs::hairset_from_json(hcs::read_file(in));
    bool ok = true;

    hcs::ShcsReport rep = model.check_shcs_definition();
    if (!rep.positivity_ok) {
        ok = false;
        std::cout << "[FAIL] (i) positivity: leaf " << *rep.zero_leaf << " (address";
        for (int e : model.cantor().index_to_address(model.depth(), *rep.zero_leaf))
            std::cout << ' ' << e;
        std::cout << ") carries no positive value\n";
    } else {
        std::cout << "[ok] (i) every deepest interval carries a positive value\n";
    }
    if (!rep.boundary_decay_ok) {
        ok = false;
        const auto& w = *rep.boundary_failure;
        std::cout << "[FAIL] (ii) boundary decay: level " << w.level << " interval "
                  << w.index << " has max " << hcs::rat_to_string(w.value) << " > "
                  << hcs::rat_to_string(w.bound) << "\n";
    } else {
        std::cout << "[ok] (ii) boundary-interval maxima decay along the C/n schedule\n";
    }
    if (!rep.interior_limsup_ok) {
        ok = false;
        const auto& w = *rep.interior_failure;
        std::cout << "[FAIL] (iii) neighbor gap at the maximizer: level " << w.level
                  << " interval " << w.index << " gap " << hcs::rat_to_string(w.value)
                  << " > " << hcs::rat_to_string(w.bound) << "\n";
    } else {
        std::cout << "[ok] (iii) maximizer neighbor gaps decay along the C/n schedule\n";
    }

    bool usc_ok = true;
    for (std::size_t i = 0; i < model.leaf_count() && usc_ok; ++i) {
        auto urep = model.check_usc_limit(model.cantor().index_to_address(model.depth(), i));
        if (!urep.passed()) {
            usc_ok = ok = false;
            std::cout << "[FAIL] usc limit at leaf " << i << ": Max sequence not "
                      << "non-increasing (first violation at prefix length "
                      << urep.first_violation_level << ")\n";
        }
    }
    if (usc_ok)
        std::cout << "[ok] Max(l, I_k) is non-increasing along every address and ends at "
                  << "the point value\n";

    hcs::PeakDensityStats st = model.peak_density_stats();
    std::cout << "peak density: sup = " << hcs::rat_to_string(st.sup) << ", max gap = "
              << hcs::rat_to_string(st.max_gap) << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-depth straight hairy Cantor set models, matched partition nests, "
                 "vertical-shear iterations and shuffle certificates"};
    app.require_subcommand(1);

    auto* example = app.add_subcommand("example", "build the canonical model and render it");
    int ex_depth = 4;
    std::string ex_out, ex_layout = "true";
    int ex_graphs = 4;
    example->add_option("--depth", ex_depth, "construction depth")->required();
    example->add_option("--out", ex_out, "output file (.svg, .csv or .json)")->required();
    example->add_option("--layout", ex_layout, "x layout for svg: true|uniform")
        ->check(CLI::IsMember({"true", "uniform"}));
    example->add_option("--graphs", ex_graphs, "number of overlaid graphs l_1..l_k");

    auto* match = app.add_subcommand("match", "build matched partition nests for two models");
    std::string m_x, m_y, m_out;
    int m_levels = 0;
    match->add_option("--x", m_x, "X hair-set JSON")->required();
    match->add_option("--y", m_y, "Y hair-set JSON")->required();
    match->add_option("--levels", m_levels, "nest levels")->required();
    match->add_option("--out", m_out, "pair JSON output")->required();

    auto* unif = app.add_subcommand("uniformize", "run shuffle stages and emit a certificate");
    std::string u_in, u_cert, u_out;
    int u_stages = 1;
    unif->add_option("--in", u_in, "hair-set JSON (middle-third)")->required();
    unif->add_option("--stages", u_stages, "number of stages")->required();
    unif->add_option("--certificate", u_cert, "certificate JSON output")->required();
    unif->add_option("--out", u_out, "normalized hair-set JSON output");

    auto* check = app.add_subcommand("check", "run the straight-hairy definition checks");
    std::string c_in;
    check->add_option("--in", c_in, "hair-set JSON")->required();

    auto* heights = app.add_subcommand("heights", "export heights CSV of the canonical model");
    int h_depth = 4;
    std::string h_out;
    heights->add_option("--depth", h_depth, "construction depth")->required();
    heights->add_option("--out", h_out, "CSV output")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints message/help
        return kExitUsage;
    }

    try {
        if (example->parsed()) return run_example(ex_depth, ex_out, ex_layout, ex_graphs);
        if (match->parsed()) return run_match(m_x, m_y, m_levels, m_out);
        if (unif->parsed()) return run_uniformize(u_in, u_stages, u_cert, u_out);
        if (check->parsed()) return run_check(c_in);
        if (heights->parsed()) {
            hcs::LengthModel model = hcs::LengthModel::canonical(h_depth);
            hcs::write_file(h_out, hcs::export_heights(model, h_depth));
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
