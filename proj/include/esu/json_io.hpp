#pragma once

// JSON (de)serialisation for the public value types.
//
//   ModelParams       {"a","Lambda","m","xi","kappa","alpha":[5],"beta":[3]}
//                     (missing renormalisation arrays default to zeros)
//   SymmetricState    {"kind":"ground"} | {"kind":"kms","beta":x}
//                     | {"kind":"modes","coeffs":{"n":a_n,...}}
//   Classification    {"qf","full","boundary"}
//   SeriesValue       {"value","n_used","tail_bound"}
//   MinimizerResult   {"lambda","beta","residuals":[r1,r2],"entropy","state"}

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "esu/model.hpp"
#include "esu/semiclassical.hpp"
#include "esu/series.hpp"
#include "esu/states.hpp"
#include "esu/thermodynamics.hpp"

namespace esu {

using json = nlohmann::json;

inline ModelParams params_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("params: expected a JSON object");
    for (const char* key : {"a", "Lambda", "m", "xi", "kappa"})
        if (!j.contains(key) || !j.at(key).is_number())
            throw std::invalid_argument(std::string("params: missing numeric key \"") +
                                        key + "\"");
    RenormConstants rc;
    if (j.contains("alpha")) {
        const auto& arr = j.at("alpha");
        if (!arr.is_array() || arr.size() != 5)
            throw std::invalid_argument("params: \"alpha\" must be an array of 5 numbers");
        for (std::size_t i = 0; i < 5; ++i) rc.alpha[i] = arr.at(i).get<double>();
    }
    if (j.contains("beta")) {
        const auto& arr = j.at("beta");
        if (!arr.is_array() || arr.size() != 3)
            throw std::invalid_argument("params: \"beta\" must be an array of 3 numbers");
        for (std::size_t i = 0; i < 3; ++i) rc.beta[i] = arr.at(i).get<double>();
    }
    return ModelParams(j.at("a").get<double>(), j.at("Lambda").get<double>(),
                       j.at("m").get<double>(), j.at("xi").get<double>(),
                       j.at("kappa").get<double>(), rc);
}

inline json to_json(const ModelParams& p) {
    return json{{"a", p.a()},         {"Lambda", p.Lambda()}, {"m", p.m()},
                {"xi", p.xi()},       {"kappa", p.kappa()},
                {"alpha", p.renorm().alpha}, {"beta", p.renorm().beta}};
}

inline json to_json(const SymmetricState& s) {
    switch (s.kind()) {
        case SymmetricState::Kind::ground:
            return json{{"kind", "ground"}};
        case SymmetricState::Kind::kms:
            return json{{"kind", "kms"}, {"beta", s.beta()}};
        case SymmetricState::Kind::modes: {
            json coeffs = json::object();
            for (const auto& [n, an] : s.coeffs()) coeffs[std::to_string(n)] = an;
            return json{{"kind", "modes"}, {"coeffs", coeffs}};
        }
    }
    return json();
}

inline SymmetricState state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("state: expected an object with \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ground") return SymmetricState::ground();
    if (kind == "kms") return SymmetricState::kms(j.at("beta").get<double>());
    if (kind == "modes") {
        std::map<std::size_t, double> coeffs;
        for (const auto& [key, val] : j.at("coeffs").items())
            coeffs[static_cast<std::size_t>(std::stoull(key))] = val.get<double>();
        return SymmetricState::modes(std::move(coeffs));
    }
    throw std::invalid_argument("state: unknown kind \"" + kind + "\"");
}

inline json to_json(const Classification& c) {
    return json{{"qf", to_string(c.qf)}, {"full", to_string(c.full)},
                {"boundary", c.boundary}};
}

inline json to_json(const SeriesValue& v) {
    return json{{"value", v.value}, {"n_used", v.n_used}, {"tail_bound", v.tail_bound}};
}

inline json to_json(const MinimizerResult& r) {
    json j;
    j["lambda"] = std::isfinite(r.lambda) ? json(r.lambda) : json(nullptr);
    j["beta"] = std::isfinite(r.beta) ? json(r.beta) : json(nullptr);
    j["residuals"] = {r.residuals.first, r.residuals.second};
    j["entropy"] = r.entropy;
    j["state"] = to_json(r.state);
    return j;
}

}  // namespace esu
