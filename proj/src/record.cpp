#include "reco/record.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace reco {

std::string format_number(double x) {
    if (!std::isfinite(x)) return "nan";
    if (x == 0.0) return "0";  // folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Record& Record::add(std::string key, Value v) {
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
}

const Record::Value* Record::find(const std::string& key) const {
    for (const auto& [k, v] : fields_) {
        if (k == key) return &v;
    }
    return nullptr;
}

namespace {

std::string json_value(const Record::Value& v) {
    struct Visitor {
        std::string operator()(std::nullptr_t) const { return "null"; }
        std::string operator()(double x) const {
            return std::isfinite(x) ? format_number(x) : "null";
        }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(const std::string& s) const { return nlohmann::json(s).dump(); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, v);
}

std::string csv_value(const Record::Value& v) {
    struct Visitor {
        std::string operator()(std::nullptr_t) const { return ""; }
        std::string operator()(double x) const { return format_number(x); }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(const std::string& s) const {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string out = "\"";
            for (char c : s) {
                if (c == '"') out += '"';
                out += c;
            }
            return out + "\"";
        }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, v);
}

}  // namespace

std::string Record::to_json() const {
    std::string out = "{";
    for (std::size_t k = 0; k < fields_.size(); ++k) {
        if (k) out += ", ";
        out += nlohmann::json(fields_[k].first).dump();
        out += ": ";
        out += json_value(fields_[k].second);
    }
    return out + "}";
}

std::string Record::csv_header() const {
    std::string out;
    for (std::size_t k = 0; k < fields_.size(); ++k) {
        if (k) out += ',';
        out += fields_[k].first;
    }
    return out;
}

std::string Record::csv_row() const {
    std::string out;
    for (std::size_t k = 0; k < fields_.size(); ++k) {
        if (k) out += ',';
        out += csv_value(fields_[k].second);
    }
    return out;
}

std::string to_json_array(const std::vector<Record>& records) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < records.size(); ++k) {
        os << (k ? ",\n  " : "\n  ") << records[k].to_json();
    }
    os << (records.empty() ? "]\n" : "\n]\n");
    return os.str();
}

std::string to_csv(const std::vector<Record>& records) {
    if (records.empty()) return "";
    std::ostringstream os;
    os << records.front().csv_header() << '\n';
    for (const auto& r : records) os << r.csv_row() << '\n';
    return os.str();
}

}  // namespace reco
