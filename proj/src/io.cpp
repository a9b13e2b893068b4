#include "troptoric/io.hpp"

#include <fstream>

namespace troptoric {

Json fan_to_json(const Fan& fan) {
    Json j;
    j["dim"] = fan.dim;
    j["rays"] = fan.rays;
    std::vector<std::vector<std::size_t>> maximal;
    for (auto ci : maximal_cones(fan)) maximal.push_back(fan.cones[ci]);
    j["cones"] = maximal;
    return j;
}

Fan fan_from_json(const Json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    auto rays = j.at("rays").get<std::vector<std::vector<long long>>>();
    auto cones = j.at("cones").get<std::vector<std::vector<std::size_t>>>();
    return make_fan(dim, std::move(rays), std::move(cones));
}

Json plfunction_to_json(const PLFunction& f) {
    Json j;
    j["rank"] = f.rank();
    j["generators"] = f.generators();
    return j;
}

PLFunction plfunction_from_json(const Json& j) {
    return PLFunction(j.at("rank").get<std::size_t>(),
                      j.at("generators").get<std::vector<std::vector<long long>>>());
}

namespace {

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    return parse_rational(j.get<std::string>());
}

Json rat_to_json(const Rat& r) {
    if (denominator(r) == 1 && numerator(r) >= std::numeric_limits<long long>::min() &&
        numerator(r) <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(numerator(r)));
    return Json(r.str());
}

}  // namespace

Json diagram_to_json(const Diagram& d) {
    Json j;
    j["fan"] = fan_to_json(d.fan);
    Json pres;
    if (d.is_bundle()) {
        std::vector<std::vector<Json>> cols;
        for (std::size_t c = 0; c < d.linear->size(); ++c) {
            std::vector<Json> col;
            for (std::size_t r = 0; r < d.linear->ambient(); ++r)
                col.push_back(rat_to_json(d.linear->columns.at(r, c)));
            cols.push_back(std::move(col));
        }
        pres["columns"] = cols;
    } else {
        pres["variables"] = d.fiber_ring->vars;
        std::vector<std::string> gens;
        for (const auto& g : d.fiber_ideal) gens.push_back(format_polynomial(g));
        pres["generators"] = gens;
    }
    j["presentation"] = pres;
    j["matrix"] = d.matrix;
    return j;
}

Diagram diagram_from_json(const Json& j) {
    Fan fan = fan_from_json(j.at("fan"));
    auto matrix = j.at("matrix").get<std::vector<std::vector<long long>>>();
    const Json& pres = j.at("presentation");
    if (pres.contains("columns")) {
        auto cols = pres.at("columns");
        std::size_t d = cols.size();
        if (d == 0) throw std::invalid_argument("empty presentation");
        std::size_t r = cols.at(0).size();
        RationalMatrix m(r, d);
        for (std::size_t c = 0; c < d; ++c) {
            if (cols.at(c).size() != r)
                throw std::invalid_argument("ragged presentation columns");
            for (std::size_t i = 0; i < r; ++i) m.at(i, c) = rat_from_json(cols.at(c).at(i));
        }
        return make_linear_diagram(std::move(fan), LinearPresentation{std::move(m)},
                                   std::move(matrix));
    }
    auto vars = pres.at("variables").get<std::vector<std::string>>();
    RingPtr ring = make_ring(vars);
    std::vector<Polynomial> gens;
    for (const auto& s : pres.at("generators"))
        gens.push_back(parse_polynomial(ring, s.get<std::string>()));
    return make_family_diagram(std::move(fan), std::move(ring), std::move(gens),
                               std::move(matrix));
}

Diagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j = Json::parse(in);
    return diagram_from_json(j);
}

Json subspace_to_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    j["dim"] = s.dim();
    std::vector<std::vector<Json>> rows;
    for (std::size_t i = 0; i < s.basis().rows(); ++i) {
        std::vector<Json> row;
        for (std::size_t c = 0; c < s.ambient_dim(); ++c)
            row.push_back(rat_to_json(s.basis().at(i, c)));
        rows.push_back(std::move(row));
    }
    j["basis"] = rows;
    return j;
}

Json adaptedness_to_json(const AdaptednessReport& rep) {
    Json j;
    j["adapted"] = rep.adapted;
    if (rep.tropical_failure) j["tropical_failure"] = *rep.tropical_failure;
    Json cones = Json::array();
    for (const auto& c : rep.cones) {
        Json cj;
        cj["cone_index"] = c.cone_index;
        cj["adapted"] = c.adapted;
        if (c.apartment_basis) cj["apartment_basis"] = *c.apartment_basis;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        cones.push_back(std::move(cj));
    }
    j["maximal_cones"] = cones;
    return j;
}

Json presentation_to_json(const ReesPresentation& rp) {
    Json j;
    j["variables"] = rp.ring->vars;
    std::vector<std::string> gens;
    for (const auto& g : rp.gens) gens.push_back(format_polynomial(g));
    j["generators"] = gens;
    Json degs = Json::array();
    for (std::size_t c = 0; c < rp.d_basis; ++c) degs.push_back(rp.y_degree(c));
    j["column_degrees"] = degs;
    return j;
}

Json primality_to_json(const PrimalityVerdict& v) {
    Json j;
    switch (v.kind) {
        case PrimalityVerdict::Kind::Prime: j["verdict"] = "prime"; break;
        case PrimalityVerdict::Kind::NotPrime: j["verdict"] = "not_prime"; break;
        case PrimalityVerdict::Kind::Inconclusive: j["verdict"] = "inconclusive"; break;
    }
    j["reason"] = v.reason;
    if (v.witness) {
        j["witness_factors"] = {format_polynomial(v.witness->first),
                                format_polynomial(v.witness->second)};
    }
    return j;
}

Json mds_report_to_json(const MDSReport& rep) {
    Json j;
    switch (rep.overall) {
        case MDSReport::Overall::MoriDream: j["overall"] = "mori_dream"; break;
        case MDSReport::Overall::NotMoriDream: j["overall"] = "not_mori_dream"; break;
        case MDSReport::Overall::Inconclusive: j["overall"] = "inconclusive"; break;
    }
    j["certified_by"] = rep.certified_by;
    j["strong_basis"] = rep.strong_basis;
    if (!rep.note.empty()) j["note"] = rep.note;
    Json criteria;
    if (rep.hypersurface) {
        Json h;
        h["applicable"] = rep.hypersurface->applicable;
        h["pass"] = rep.hypersurface->pass;
        Json pairs = Json::array();
        for (auto [a, b] : rep.hypersurface->failing_pairs)
            pairs.push_back({a + 1, b + 1});  // 1-indexed rows in reports
        h["failing_pairs"] = pairs;
        criteria["hypersurface"] = h;
    }
    if (rep.sparse_twists) criteria["sparse_twists"] = *rep.sparse_twists;
    if (rep.uniform) {
        Json u;
        u["applicable"] = rep.uniform->applicable;
        if (!rep.uniform->reason.empty()) u["reason"] = rep.uniform->reason;
        u["pass"] = rep.uniform->pass;
        criteria["uniform"] = u;
    }
    j["criteria"] = criteria;
    Json rows = Json::array();
    for (const auto& rc : rep.row_checks) {
        Json rj;
        rj["row"] = rc.row + 1;
        rj["prime_check"] = primality_to_json(rc.verdict);
        rows.push_back(std::move(rj));
    }
    j["row_checks"] = rows;
    if (rep.presentation) j["presentation"] = presentation_to_json(*rep.presentation);
    return j;
}

}  // namespace troptoric
