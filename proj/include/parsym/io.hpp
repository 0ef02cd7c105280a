#pragma once

// Instance files and structured reports. Instances are JSON documents with
// rationals as strings ("p/q" or "p", positions may be "inf"); reports are
// single ordered JSON documents so identical runs emit identical bytes.

#include "parsym/logsym.hpp"
#include "parsym/parshin.hpp"
#include "parsym/surface.hpp"
#include "parsym/tate.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace parsym {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

using Instance = std::variant<TateInstance, SurfaceInstance>;

Instance parse_instance(const Json& doc);
Instance load_instance(const std::string& path);

Json instance_json(const TateInstance& inst);
Json instance_json(const SurfaceInstance& inst);

Json json_complex(const Cx& z);
Json json_point(const P1Point& p);

Json weil_report_json(const WeilReport& rep);
Json surface_report_json(const SurfaceReport& rep);
Json lattice_report_json(const LatticeReport& rep);

}  // namespace parsym
