#include "reco/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "reco/errors.hpp"

namespace reco {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw ValidationError(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
        }
    }
}

double number_at(const json& obj, const std::string& key, const std::string& path) {
    const std::string where = path + "." + key;
    if (!obj.contains(key)) throw ValidationError(where, "missing field");
    const json& v = obj.at(key);
    if (!v.is_number()) throw ValidationError(where, "expected a number");
    return v.get<double>();
}

int count_at(const json& obj, const std::string& key, const std::string& path) {
    const std::string where = path + "." + key;
    if (!obj.contains(key)) throw ValidationError(where, "missing field");
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ValidationError(where, "expected a non-negative integer");
    }
    return v.get<int>();
}

QualityDistribution parse_quality(const json& j) {
    const std::string path = "quality";
    if (!j.is_object()) throw ValidationError(path, "expected an object");
    try {
        if (j.contains("Q") || j.contains("sigma") || j.contains("lambda")) {
            reject_unknown(j, path, {"Q", "sigma", "lambda"});
            const double Q = number_at(j, "Q", path);
            const double sigma = number_at(j, "sigma", path);
            const double lambda = j.contains("lambda") ? number_at(j, "lambda", path) : 1.0;
            return quality_from_params(Q, sigma, lambda);
        }
        reject_unknown(j, path, {"qH", "q1", "q2", "qL"});
        return QualityDistribution(number_at(j, "qH", path), number_at(j, "q1", path),
                                   number_at(j, "q2", path), number_at(j, "qL", path));
    } catch (const DomainError& e) {
        throw ValidationError(path, e.what());
    }
}

TypeDistribution parse_types(const json& j, const std::string& path) {
    if (!j.is_object()) throw ValidationError(path, "expected an object");
    if (!j.contains("kind") || !j.at("kind").is_string()) {
        throw ValidationError(path + ".kind", "expected one of uniform, power, piecewise_symmetric, tabulated");
    }
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "uniform") {
            reject_unknown(j, path, {"kind"});
            return TypeDistribution::uniform();
        }
        if (kind == "power") {
            reject_unknown(j, path, {"kind", "a"});
            return TypeDistribution::power(number_at(j, "a", path));
        }
        if (kind == "piecewise_symmetric") {
            reject_unknown(j, path, {"kind", "beta", "R_ref"});
            return TypeDistribution::piecewise_symmetric(number_at(j, "beta", path),
                                                         number_at(j, "R_ref", path));
        }
        if (kind == "tabulated") {
            reject_unknown(j, path, {"kind", "points"});
            const std::string where = path + ".points";
            if (!j.contains("points") || !j.at("points").is_array()) {
                throw ValidationError(where, "expected an array of [i, F(i)] pairs");
            }
            std::vector<std::pair<double, double>> pts;
            for (const auto& p : j.at("points")) {
                if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
                    throw ValidationError(where, "expected an array of [i, F(i)] pairs");
                }
                pts.emplace_back(p[0].get<double>(), p[1].get<double>());
            }
            return TypeDistribution::tabulated(std::move(pts));
        }
    } catch (const DomainError& e) {
        throw ValidationError(path, e.what());
    }
    throw ValidationError(path + ".kind", "unknown kind '" + kind + "'");
}

double checked_threshold(double r, const std::string& path) {
    try {
        validate_threshold(r);
    } catch (const DomainError& e) {
        throw ValidationError(path, e.what());
    }
    return r;
}

ThresholdSpec parse_threshold(const json& j) {
    const std::string path = "threshold";
    if (j.is_number()) return SingleThreshold{checked_threshold(j.get<double>(), path)};
    if (j.is_string()) {
        if (j.get<std::string>() == "infinite") return InfiniteThreshold{};
        throw ValidationError(path, "expected a number, an object or \"infinite\"");
    }
    if (!j.is_object()) throw ValidationError(path, "expected a number, an object or \"infinite\"");
    if (j.contains("R1") || j.contains("R2")) {
        reject_unknown(j, path, {"R1", "R2"});
        const double r1 = checked_threshold(number_at(j, "R1", path), path + ".R1");
        const double r2 = checked_threshold(number_at(j, "R2", path), path + ".R2");
        if (r2 < r1) throw ValidationError(path, "R1 must not exceed R2");
        return ThresholdPair(r1, r2);
    }
    const double r = checked_threshold(number_at(j, "R", path), path + ".R");
    if (!j.contains("b") && !j.contains("d")) {
        reject_unknown(j, path, {"R"});
        return SingleThreshold{r};
    }
    reject_unknown(j, path, {"R", "b", "d"});
    const int b = count_at(j, "b", path);
    const int d = count_at(j, "d", path);
    if (b + d < 1) throw ValidationError(path, "b + d must be at least 1");
    return MultiThreshold{r, MultiRecCount(b, d)};
}

json types_to_json(const TypeDistribution& f) {
    switch (f.family()) {
        case TypeDistribution::Family::Uniform: return {{"kind", "uniform"}};
        case TypeDistribution::Family::Power: return {{"kind", "power"}, {"a", f.shape()}};
        case TypeDistribution::Family::PiecewiseSymmetric:
            return {{"kind", "piecewise_symmetric"}, {"beta", f.beta_target()}, {"R_ref", f.r_ref()}};
        case TypeDistribution::Family::Tabulated: {
            json pts = json::array();
            for (const auto& [i, v] : f.points()) pts.push_back({i, v});
            return {{"kind", "tabulated"}, {"points", pts}};
        }
    }
    return {};
}

}  // namespace

RecommendationSystem Scenario::system_at(double r) const {
    if (receiver) return RecommendationSystem(quality, sender, *receiver, r);
    return RecommendationSystem(quality, sender, r);
}

double Scenario::single_threshold() const {
    if (const auto* s = std::get_if<SingleThreshold>(&threshold)) return s->r;
    if (const auto* m = std::get_if<MultiThreshold>(&threshold)) return m->r;
    throw ValidationError("threshold", "a single threshold R is required");
}

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("", std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("", "expected an object at top level");
    reject_unknown(doc, "", {"quality", "sender_types", "receiver_types", "threshold"});
    for (const char* key : {"quality", "sender_types", "threshold"}) {
        if (!doc.contains(key)) throw ValidationError(key, "missing field");
    }
    Scenario out{parse_quality(doc.at("quality")), parse_types(doc.at("sender_types"), "sender_types"),
                 std::nullopt, parse_threshold(doc.at("threshold"))};
    if (doc.contains("receiver_types")) out.receiver.emplace(parse_types(doc.at("receiver_types"), "receiver_types"));
    return out;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("", "cannot open scenario file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string dump_scenario(const Scenario& s) {
    const auto& q = s.quality;
    json doc;
    doc["quality"] = {{"qH", q.high()}, {"q1", q.pref1()}, {"q2", q.pref2()}, {"qL", q.low()}};
    doc["sender_types"] = types_to_json(s.sender);
    if (s.receiver) doc["receiver_types"] = types_to_json(*s.receiver);
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, SingleThreshold>) {
                doc["threshold"] = t.r;
            } else if constexpr (std::is_same_v<T, ThresholdPair>) {
                doc["threshold"] = {{"R1", t.r1}, {"R2", t.r2}};
            } else if constexpr (std::is_same_v<T, MultiThreshold>) {
                doc["threshold"] = {{"R", t.r}, {"b", t.counts.b}, {"d", t.counts.d}};
            } else {
                doc["threshold"] = "infinite";
            }
        },
        s.threshold);
    return doc.dump(2);
}

}  // namespace reco
