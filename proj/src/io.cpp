#include "parsym/io.hpp"

#include <fstream>

namespace parsym {

namespace {

Rat field_rat(const Json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + ": expected a rational as a string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

long long field_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer exponent");
    return j.get<long long>();
}

std::vector<std::pair<Rat, long long>> field_factors(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of [root, exponent]");
    std::vector<std::pair<Rat, long long>> out;
    int idx = 0;
    for (const auto& item : j) {
        std::string at = where + "[" + std::to_string(idx++) + "]";
        if (!item.is_array() || item.size() != 2)
            throw InputError(at + ": expected [root, exponent]");
        out.emplace_back(field_rat(item[0], at + ".root"), field_int(item[1], at + ".exponent"));
    }
    return out;
}

FactoredFunction1D parse_func1d(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected a function object");
    Rat c = j.contains("constant") ? field_rat(j.at("constant"), where + ".constant") : Rat(1);
    if (c == 0) throw InputError(where + ".constant: must be nonzero");
    auto factors =
        j.contains("factors") ? field_factors(j.at("factors"), where + ".factors")
                              : std::vector<std::pair<Rat, long long>>{};
    try {
        return FactoredFunction1D(c, std::move(factors));
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

SurfaceFunction parse_surface_func(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected a function object");
    Rat c = j.contains("constant") ? field_rat(j.at("constant"), where + ".constant") : Rat(1);
    if (c == 0) throw InputError(where + ".constant: must be nonzero");
    auto xf = j.contains("xfactors") ? field_factors(j.at("xfactors"), where + ".xfactors")
                                     : std::vector<std::pair<Rat, long long>>{};
    auto yf = j.contains("yfactors") ? field_factors(j.at("yfactors"), where + ".yfactors")
                                     : std::vector<std::pair<Rat, long long>>{};
    try {
        return make_surface_function(c, std::move(xf), std::move(yf));
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace

Instance parse_instance(const Json& doc) {
    if (!doc.is_object() || !doc.contains("model"))
        throw InputError("instance: missing \"model\"");
    std::string model = doc.at("model").get<std::string>();
    if (!doc.contains("functions") || !doc.at("functions").is_array())
        throw InputError("instance: missing \"functions\" array");
    const auto& fs = doc.at("functions");

    if (model == "curve") {
        if (fs.size() != 2) throw InputError("curve instance needs exactly 2 functions");
        TateInstance inst;
        inst.f1 = parse_func1d(fs[0], "functions[0]");
        inst.f2 = parse_func1d(fs[1], "functions[1]");
        return inst;
    }
    if (model == "surface") {
        if (fs.size() != 3) throw InputError("surface instance needs exactly 3 functions");
        SurfaceInstance inst;
        for (int k = 0; k < 3; ++k)
            inst.f[k] = parse_surface_func(fs[k], "functions[" + std::to_string(k) + "]");
        if (!doc.contains("curve") || !doc.at("curve").is_object())
            throw InputError("surface instance: missing \"curve\" object");
        const auto& cj = doc.at("curve");
        std::string ori = cj.value("orientation", "");
        if (ori == "horizontal")
            inst.C0.orientation = Orientation::Horizontal;
        else if (ori == "vertical")
            inst.C0.orientation = Orientation::Vertical;
        else
            throw InputError("curve.orientation: expected \"horizontal\" or \"vertical\"");
        if (!cj.contains("position")) throw InputError("curve.position: missing");
        try {
            inst.C0.position = parse_p1(cj.at("position").get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(std::string("curve.position: ") + e.what());
        }
        return inst;
    }
    throw InputError("instance: unknown model \"" + model + "\"");
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse_instance(doc);
}

namespace {

Json factors_json(const std::vector<std::pair<Rat, long long>>& fs) {
    Json arr = Json::array();
    for (auto& [r, e] : fs) arr.push_back(Json::array({rat_str(r), e}));
    return arr;
}

}  // namespace

Json instance_json(const TateInstance& inst) {
    Json doc;
    doc["model"] = "curve";
    Json fs = Json::array();
    for (const FactoredFunction1D* f : {&inst.f1, &inst.f2}) {
        Json fj;
        fj["constant"] = rat_str(f->constant);
        fj["factors"] = factors_json(f->factors);
        fs.push_back(std::move(fj));
    }
    doc["functions"] = std::move(fs);
    return doc;
}

Json instance_json(const SurfaceInstance& inst) {
    Json doc;
    doc["model"] = "surface";
    Json fs = Json::array();
    for (const auto& f : inst.f) {
        Json fj;
        fj["constant"] = rat_str(f.constant);
        fj["xfactors"] = factors_json(f.xfactors);
        fj["yfactors"] = factors_json(f.yfactors);
        fs.push_back(std::move(fj));
    }
    doc["functions"] = std::move(fs);
    doc["curve"] = Json{
        {"orientation", inst.C0.orientation == Orientation::Horizontal ? "horizontal" : "vertical"},
        {"position", inst.C0.position.str()}};
    return doc;
}

Json json_complex(const Cx& z) { return Json::array({z.real(), z.imag()}); }
Json json_point(const P1Point& p) { return Json(p.str()); }

Json weil_report_json(const WeilReport& rep) {
    Json doc;
    Json pts = Json::array();
    for (const auto& pr : rep.points)
        pts.push_back(Json{{"point", pr.point.str()},
                           {"n1", pr.n1},
                           {"n2", pr.n2},
                           {"symbol", rat_str(pr.symbol)}});
    doc["points"] = std::move(pts);
    doc["product"] = rat_str(rep.product);
    doc["pass"] = rep.pass;
    return doc;
}

Json surface_report_json(const SurfaceReport& rep) {
    Json doc;
    Json pts = Json::array();
    for (const auto& pr : rep.points) {
        Json pj;
        pj["point"] = pr.data.point.str();
        pj["transverse"] = pr.data.transverse.str();
        pj["m"] = Json::array({pr.data.m[0], pr.data.m[1], pr.data.m[2]});
        pj["n"] = Json::array({pr.data.n[0], pr.data.n[1], pr.data.n[2]});
        pj["g"] = Json::array({rat_str(pr.data.g[0]), rat_str(pr.data.g[1]),
                               rat_str(pr.data.g[2])});
        pj["D"] = Json::array({pr.dets.D1, pr.dets.D2, pr.dets.D3});
        pj["K"] = pr.dets.K;
        pj["parshin"] = rat_str(pr.parshin);
        pj["refined"] = rat_str(pr.refined);
        pj["cyclic_pass"] = pr.cyclic_pass;
        pts.push_back(std::move(pj));
    }
    doc["points"] = std::move(pts);
    doc["parshin_product"] = rat_str(rep.parshin_product);
    doc["refined_product"] = rat_str(rep.refined_product);
    doc["parshin_pass"] = rep.parshin_pass;
    doc["refined_pass"] = rep.refined_pass;
    doc["cyclic_pass"] = rep.cyclic_pass;
    return doc;
}

Json lattice_report_json(const LatticeReport& rep) {
    Json doc;
    doc["kind"] = log_kind_name(rep.kind);
    doc["base_point"] = rep.base_point;
    Json pts = Json::array();
    for (const auto& e : rep.points)
        pts.push_back(Json{{"point", e.point}, {"log", json_complex(e.value)}});
    doc["points"] = std::move(pts);
    doc["sum"] = json_complex(rep.sum);
    doc["M"] = rep.M;
    doc["N"] = rep.N;
    doc["lattice_integer"] = rep.lattice_integer;
    doc["residual"] = rep.residual;
    doc["pass"] = rep.pass;
    return doc;
}

}  // namespace parsym
