#pragma once

#include "periodica/numtheory.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace periodica {

// PERIODICA_FIXTURES if set, else the bundled fixture directory.
std::string fixture_dir();
nlohmann::json load_fixture_json(const std::string& file);
// FNV-1a 64 over the file bytes, as 16 hex digits.
std::string fixture_hash(const std::string& file);

struct FieldRecord {
    u64 m;
    u64 h_K;
    std::optional<std::vector<u64>> ramified_norms;
    std::optional<mpq_class> eichler_constant;
};

std::map<u64, FieldRecord> load_fields();

// A ring element in a fixture: coefficient list, or {"a": [...], "b": [...]} for a + b j.
struct FixtureElement {
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
};

struct MilnorFixture {
    std::string name;
    std::string description;
    std::uint32_t p;
    std::vector<std::uint32_t> modulus;
    std::string variable = "x";
    std::optional<long> sigma_power; // crossed quaternion ring over F_p[x]/(f)
    std::vector<FixtureElement> U1, U2;
    std::optional<std::vector<FixtureElement>> expected_cosets;
    std::optional<std::vector<std::uint32_t>> expected_norms;
    std::optional<std::uint32_t> class_group_order;
    std::optional<std::vector<std::uint32_t>> action_x_image;
    std::map<std::string, std::string> ideal_labels;
    std::optional<std::vector<FixtureElement>> expected_distinct;
    std::optional<std::vector<FixtureElement>> expected_prime_field_intersection;
};

std::vector<MilnorFixture> load_milnor_fixtures();
MilnorFixture milnor_fixture(const std::string& name);

} // namespace periodica
