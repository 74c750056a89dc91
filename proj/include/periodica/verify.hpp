#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace periodica {

struct VerifyCheck {
    std::string id;
    std::string group;
    bool ok;
    std::string detail;
};

struct VerifyResult {
    std::vector<VerifyCheck> checks;
    std::map<std::string, std::string> fixture_hashes;

    bool ok() const;
    const VerifyCheck* first_failure() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& verify_groups();
// Runs every check group, or only `only`; an unknown group is a validation error.
VerifyResult verify_all(const std::optional<std::string>& only = std::nullopt);

} // namespace periodica
