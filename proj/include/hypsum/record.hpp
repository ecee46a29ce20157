#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypsum/rational.hpp"
#include "hypsum/series.hpp"

namespace hypsum {

using Json = nlohmann::ordered_json;

inline Json json_rational(const Rational& value) { return to_string(value); }

inline Json json_rational_list(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& v : values) out.push_back(to_string(v));
    return out;
}

inline Json json_series(const TruncatedSeries& series) {
    return json_rational_list(series.coefficients());
}

/// Machine-readable outcome of one identity check. passed is true iff the
/// two sides are structurally equal (scalar) or coefficient-wise equal
/// (series); mismatch is populated iff passed is false.
struct VerificationRecord {
    std::string identity;
    Json inputs = Json::object();
    bool passed = false;
    Json lhs;
    Json rhs;
    std::optional<std::size_t> mismatch;
    std::string notes;

    Json to_json() const {
        Json out;
        out["identity"] = identity;
        out["inputs"] = inputs;
        out["passed"] = passed;
        out["lhs"] = lhs;
        out["rhs"] = rhs;
        out["mismatch"] = mismatch ? Json{{"index", *mismatch}} : Json(nullptr);
        out["notes"] = notes;
        return out;
    }
};

inline VerificationRecord make_scalar_record(std::string identity, Json inputs, const Rational& lhs,
                                             const Rational& rhs, std::string notes = {}) {
    VerificationRecord record;
    record.identity = std::move(identity);
    record.inputs = std::move(inputs);
    record.lhs = json_rational(lhs);
    record.rhs = json_rational(rhs);
    record.passed = (lhs == rhs);
    if (!record.passed) record.mismatch = 0;
    record.notes = std::move(notes);
    return record;
}

inline VerificationRecord make_series_record(std::string identity, Json inputs,
                                             const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                             std::string notes = {}) {
    VerificationRecord record;
    record.identity = std::move(identity);
    record.inputs = std::move(inputs);
    record.lhs = json_series(lhs);
    record.rhs = json_series(rhs);
    const auto mismatch = lhs.first_mismatch(rhs);
    record.passed = !mismatch.has_value();
    record.mismatch = mismatch;
    record.notes = std::move(notes);
    return record;
}

}  // namespace hypsum
