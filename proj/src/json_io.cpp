#include "hcs/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hcs {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json interval_to_json(const Interval& iv) {
    return json{{"lo", rat_to_string(iv.lo)}, {"hi", rat_to_string(iv.hi)}};
}

std::string scheme_name(Scheme s) {
    return s == Scheme::Canonical ? "canonical" : "middle_third";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "canonical") return Scheme::Canonical;
    if (name == "middle_third") return Scheme::MiddleThird;
    throw ParseError("unknown scheme '" + name + "'");
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

}  // namespace

std::string cantor_to_json(const CantorApprox& c) {
    json levels = json::array();
    for (const auto& lvl : c.levels()) {
        json l = json::array();
        for (const auto& iv : lvl) l.push_back(interval_to_json(iv));
        levels.push_back(std::move(l));
    }
    json j{{"scheme", scheme_name(c.scheme())}, {"depth", c.depth()},
           {"levels", std::move(levels)}};
    return j.dump();
}

namespace {

CantorPtr cantor_from_parsed(const json& j) {
    Scheme scheme = scheme_from_name(j.at("scheme").get<std::string>());
    int depth = j.at("depth").get<int>();
    CantorPtr c = make_cantor(scheme, depth);
    // the serialized levels must agree with the canonical reconstruction
    const auto& levels = j.at("levels");
    if (levels.size() != c->levels().size())
        throw ParseError("level count disagrees with scheme/depth");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k].size() != c->level(static_cast<int>(k)).size())
            throw ParseError("interval count disagrees at level " + std::to_string(k));
        for (std::size_t i = 0; i < levels[k].size(); ++i) {
            Interval iv{rat_from_string(levels[k][i].at("lo").get<std::string>()),
                        rat_from_string(levels[k][i].at("hi").get<std::string>())};
            if (iv != c->level(static_cast<int>(k))[i])
                throw ParseError("interval endpoints disagree with the construction at level " +
                                 std::to_string(k) + ", index " + std::to_string(i));
        }
    }
    return c;
}

}  // namespace

CantorPtr cantor_from_json(const std::string& text) {
    return cantor_from_parsed(parse(text));
}

std::string hairset_to_json(const LengthModel& m) {
    json values = json::array();
    for (std::size_t i = 0; i < m.leaf_count(); ++i) {
        Address a = m.cantor().index_to_address(m.depth(), i);
        values.push_back(json{{"address", a}, {"l", rat_to_string(m.value(i))}});
    }
    json j{{"cantor", json::parse(cantor_to_json(m.cantor()))},
           {"values", std::move(values)}};
    return j.dump();
}

LengthModel hairset_from_json(const std::string& text) {
    json j = parse(text);
    CantorPtr c = cantor_from_parsed(j.at("cantor"));
    std::vector<Rat> vals(c->leaf_count(), Rat(-1));
    for (const auto& entry : j.at("values")) {
        Address a = entry.at("address").get<Address>();
        if (static_cast<int>(a.size()) != c->depth())
            throw ParseError("value address length must equal depth");
        std::size_t idx = c->address_to_index(a);
        if (vals[idx] >= 0) throw ParseError("duplicate address in values");
        vals[idx] = rat_from_string(entry.at("l").get<std::string>());
    }
    for (const auto& v : vals)
        if (v < 0) throw ParseError("values missing for some addresses");
    return LengthModel::from_values(std::move(c), std::move(vals));
}

std::string pair_to_json(const MatchedNestPair& pair) {
    json levels = json::array();
    for (int n = 0; n < pair.level_count(); ++n) {
        json lvl = json::array();
        for (const auto& b : pair.level(n)) {
            lvl.push_back(json{{"x_first", b.x_first},
                               {"x_last", b.x_last},
                               {"y_first", b.y_first},
                               {"y_last", b.y_last},
                               {"parent", b.parent},
                               {"max_x", rat_to_string(b.max_x)},
                               {"max_y", rat_to_string(b.max_y)},
                               {"ratio", rat_to_string(b.ratio)}});
        }
        levels.push_back(std::move(lvl));
    }
    json j{{"x", json::parse(hairset_to_json(pair.lx()))},
           {"y", json::parse(hairset_to_json(pair.ly()))},
           {"levels", std::move(levels)}};
    return j.dump();
}

std::string shuffle_certificate_json(const std::vector<ShuffleStage>& stages,
                                     const ShuffleRunReport& report) {
    json jstages = json::array();
    for (const auto& st : stages) {
        json parents = json::array();
        for (std::size_t p = 0; p < st.sigma.size(); ++p) {
            json offs = json::array();
            for (const auto& o : st.offsets[p]) offs.push_back(rat_to_string(o));
            parents.push_back(json{{"parent", p}, {"sigma", st.sigma[p]},
                                   {"offsets", std::move(offs)}});
        }
        auto checks = [](const std::vector<ShuffleCheck>& cs) {
            json out = json::array();
            for (const auto& c : cs)
                out.push_back(json{{"block", c.block},
                                   {"value", rat_to_string(c.value)},
                                   {"bound", rat_to_string(c.bound)},
                                   {"ok", c.ok}});
            return out;
        };
        jstages.push_back(json{{"stage", st.stage},
                               {"m_prev", st.m_prev},
                               {"m", st.m},
                               {"sup_displacement", rat_to_string(st.sup_displacement)},
                               {"displacement_bound", rat_to_string(st.displacement_bound)},
                               {"parents", std::move(parents)},
                               {"boundary_checks", checks(st.boundary_checks)},
                               {"adjacent_checks", checks(st.adjacent_checks)}});
    }
    json j{{"stages", std::move(jstages)},
           {"m_sequence", report.m_sequence},
           {"displacements_within_bounds", report.displacements_within_bounds},
           {"final_boundary_max", rat_to_string(report.final_boundary_max)},
           {"final_boundary_bound", rat_to_string(report.final_boundary_bound)},
           {"final_boundary_ok", report.final_boundary_ok},
           {"shcs_passed", report.shcs_passed}};
    return j.dump(2);
}

std::string hairdata_to_json(const AbstractHairData& d, const FiniteMetricSpace& s) {
    json dist = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (std::size_t j2 = 0; j2 < s.size(); ++j2)
            row.push_back(rat_to_string(s.dist(i, j2)));
        dist.push_back(std::move(row));
    }
    std::vector<std::size_t> points(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) points[i] = i;
    json j{{"points", points}, {"dist", std::move(dist)}, {"chains", d.chains}};
    return j.dump();
}

std::pair<AbstractHairData, FiniteMetricSpace> hairdata_from_json(const std::string& text) {
    json j = parse(text);
    std::vector<std::vector<Rat>> dist;
    for (const auto& row : j.at("dist")) {
        std::vector<Rat> r;
        for (const auto& e : row) r.push_back(rat_from_string(e.get<std::string>()));
        dist.push_back(std::move(r));
    }
    AbstractHairData d;
    d.chains = j.at("chains").get<std::vector<std::vector<std::size_t>>>();
    FiniteMetricSpace s(std::move(dist));
    d.validate(s.size());
    return {std::move(d), std::move(s)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

}  // namespace hcs
