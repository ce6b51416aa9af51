#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace reco {

// Flat, ordered key/value record emitted by the CLI as JSON or CSV.
// Numbers print with 12 significant digits; non-finite numbers become null (JSON)
// or "nan" (CSV).
class Record {
public:
    using Value = std::variant<std::nullptr_t, double, std::int64_t, std::string, bool>;

    Record& add(std::string key, Value v);
    const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }
    const Value* find(const std::string& key) const;

    std::string to_json() const;
    std::string csv_header() const;
    std::string csv_row() const;

private:
    std::vector<std::pair<std::string, Value>> fields_;
};

std::string format_number(double x);

// One JSON document holding an array of records, one record per line.
std::string to_json_array(const std::vector<Record>& records);
std::string to_csv(const std::vector<Record>& records);

}  // namespace reco
