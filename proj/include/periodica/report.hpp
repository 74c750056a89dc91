#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <string>
#include <vector>

namespace periodica {

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> citations;

    nlohmann::json to_json() const;
    // Sorted keys, two-space indent, trailing newline.
    std::string dump() const;
    // One "key: value" line per result field.
    std::string text() const;
};

// "num/den", or "num" for integers.
std::string rational_json(const mpq_class& q);
// Replaces every exact rational string r with {"exact": r, "approx": double}.
nlohmann::json with_approximations(const nlohmann::json& j);

} // namespace periodica
