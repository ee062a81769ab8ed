#include "anomdiff/model_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace anomdiff {

namespace {

using nlohmann::json;

double require_number(const json& obj, const char* field, const char* context) {
    if (!obj.contains(field))
        throw std::invalid_argument(std::string(context) + ": missing field \"" + field + "\"");
    if (!obj[field].is_number())
        throw std::invalid_argument(std::string(context) + ": field \"" + field +
                                    "\" must be a number");
    return obj[field].get<double>();
}

std::string require_string(const json& obj, const char* field, const char* context) {
    if (!obj.contains(field))
        throw std::invalid_argument(std::string(context) + ": missing field \"" + field + "\"");
    if (!obj[field].is_string())
        throw std::invalid_argument(std::string(context) + ": field \"" + field +
                                    "\" must be a string");
    return obj[field].get<std::string>();
}

json parse(const std::string& text, const char* context) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string(context) + ": malformed JSON");
    return j;
}

json levy_to_json_obj(const LevyModel& model) {
    json params;
    if (const auto* bm = std::get_if<BrownianMotion>(&model.params())) {
        params = {{"sigma", bm->sigma}};
    } else if (const auto* vg = std::get_if<VarianceGamma>(&model.params())) {
        params = {{"kappa", vg->kappa}, {"sigma", vg->sigma}, {"theta", vg->theta}};
    } else if (const auto* nig = std::get_if<NormalInverseGaussian>(&model.params())) {
        params = {{"kappa", nig->kappa}, {"sigma", nig->sigma}, {"theta", nig->theta}};
    } else {
        const auto& cg = std::get<Cgmy>(model.params());
        params = {{"c", cg.c}, {"g", cg.g}, {"m", cg.m}, {"y", cg.y}};
    }
    return {{"variant", model.variant_name()}, {"params", params},
            {"drift", model.drift_compensator()}};
}

LevyModel levy_from_json_obj(const json& j) {
    const char* ctx = "levy model";
    std::string variant = require_string(j, "variant", ctx);
    if (!j.contains("params") || !j["params"].is_object())
        throw std::invalid_argument("levy model: missing object field \"params\"");
    const json& p = j["params"];
    double drift = j.contains("drift") ? require_number(j, "drift", ctx) : 0.0;
    if (variant == "bm")
        return LevyModel(BrownianMotion{require_number(p, "sigma", ctx)}, drift);
    if (variant == "vg")
        return LevyModel(VarianceGamma{require_number(p, "kappa", ctx),
                                       require_number(p, "sigma", ctx),
                                       require_number(p, "theta", ctx)},
                         drift);
    if (variant == "nig")
        return LevyModel(NormalInverseGaussian{require_number(p, "kappa", ctx),
                                               require_number(p, "sigma", ctx),
                                               require_number(p, "theta", ctx)},
                         drift);
    if (variant == "cgmy")
        return LevyModel(Cgmy{require_number(p, "c", ctx), require_number(p, "g", ctx),
                              require_number(p, "m", ctx), require_number(p, "y", ctx)},
                         drift);
    throw std::invalid_argument("levy model: unknown variant \"" + variant + "\"");
}

} // namespace

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string levy_to_json(const LevyModel& model) { return levy_to_json_obj(model).dump(2); }

LevyModel levy_from_json(const std::string& text) {
    return levy_from_json_obj(parse(text, "levy model"));
}

std::string anomalous_to_json(const AnomalousModel& model) {
    std::string kind = model.kind == TimeChangeKind::SL
                           ? "sl"
                           : (model.kind == TimeChangeKind::DRD ? "drd" : "levy");
    json j = {{"kind", kind}, {"beta", model.beta}, {"levy", levy_to_json_obj(model.levy)}};
    return j.dump(2);
}

AnomalousModel anomalous_from_json(const std::string& text) {
    json j = parse(text, "anomalous model");
    std::string kind = require_string(j, "kind", "anomalous model");
    TimeChangeKind k;
    if (kind == "sl")
        k = TimeChangeKind::SL;
    else if (kind == "drd")
        k = TimeChangeKind::DRD;
    else if (kind == "levy")
        k = TimeChangeKind::Levy;
    else
        throw std::invalid_argument("anomalous model: unknown kind \"" + kind + "\"");
    double beta = k == TimeChangeKind::Levy && !j.contains("beta")
                      ? 1.0
                      : require_number(j, "beta", "anomalous model");
    if (!j.contains("levy"))
        throw std::invalid_argument("anomalous model: missing field \"levy\"");
    return AnomalousModel(levy_from_json_obj(j["levy"]), beta, k);
}

std::string calibration_result_to_json(const CalibrationResult& result) {
    json j = {{"family", result.family},
              {"params", result.params},
              {"beta", result.beta},
              {"rmse", result.rmse},
              {"generations", result.history.size()},
              {"evaluations", result.evaluations}};
    return j.dump(2);
}

ScenarioSpec scenario_from_json(const std::string& text) {
    json j = parse(text, "scenario spec");
    if (!j.contains("base"))
        throw std::invalid_argument("scenario spec: missing field \"base\"");
    std::string name = require_string(j, "scenario", "scenario spec");
    Scenario sc;
    if (name == "baseline")
        sc = Scenario::Baseline;
    else if (name == "shift_12m")
        sc = Scenario::Shift12m;
    else if (name == "shift_18m")
        sc = Scenario::Shift18m;
    else
        throw std::invalid_argument("scenario spec: unknown scenario \"" + name + "\"");
    return {levy_from_json_obj(j["base"]), sc};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << contents;
}

} // namespace anomdiff
