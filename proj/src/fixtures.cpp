#include "periodica/fixtures.hpp"

#include "periodica/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#ifndef PERIODICA_FIXTURE_DIR
#define PERIODICA_FIXTURE_DIR "fixtures"
#endif

namespace periodica {

using json = nlohmann::json;

std::string fixture_dir()
{
    if (const char* env = std::getenv("PERIODICA_FIXTURES"); env && *env)
        return env;
    return PERIODICA_FIXTURE_DIR;
}

namespace {

std::string read_file(const std::string& file)
{
    std::string path = fixture_dir() + "/" + file;
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FixtureRequiredError("fixture file not found: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<std::uint32_t> u32_list(const json& j, const std::string& what)
{
    require(j.is_array(), what + ": expected an array of integers");
    std::vector<std::uint32_t> out;
    for (const auto& v : j) {
        require(v.is_number_integer() && v.get<long>() >= 0, what + ": expected non-negative integers");
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

FixtureElement element(const json& j, const std::string& what)
{
    if (j.is_array())
        return {u32_list(j, what), {}};
    require(j.is_object(), what + ": expected a coefficient list or {a, b}");
    FixtureElement e;
    if (j.contains("a"))
        e.a = u32_list(j["a"], what);
    if (j.contains("b"))
        e.b = u32_list(j["b"], what);
    return e;
}

std::vector<FixtureElement> elements(const json& j, const std::string& what)
{
    require(j.is_array(), what + ": expected a list");
    std::vector<FixtureElement> out;
    for (const auto& e : j)
        out.push_back(element(e, what));
    return out;
}

} // namespace

json load_fixture_json(const std::string& file)
{
    try {
        return json::parse(read_file(file));
    } catch (const json::parse_error& e) {
        throw ValidationError("fixture " + file + " is not valid JSON: " + e.what());
    }
}

std::string fixture_hash(const std::string& file)
{
    std::string data = read_file(file);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::map<u64, FieldRecord> load_fields()
{
    json doc = load_fixture_json("fields.json");
    require(doc.contains("fields") && doc["fields"].is_object(), "fields.json: missing 'fields' object");
    std::map<u64, FieldRecord> out;
    for (const auto& [key, rec] : doc["fields"].items()) {
        FieldRecord r;
        r.m = std::stoull(key);
        require(rec.contains("h_K") && rec["h_K"].is_number_integer(), "fields.json: m=" + key + " lacks h_K");
        r.h_K = rec["h_K"].get<u64>();
        if (rec.contains("ramified_norms") && !rec["ramified_norms"].is_null()) {
            std::vector<u64> norms;
            for (const auto& v : rec["ramified_norms"])
                norms.push_back(v.get<u64>());
            r.ramified_norms = norms;
        }
        if (rec.contains("eichler_constant")) {
            mpq_class q;
            require(q.set_str(rec["eichler_constant"].get<std::string>(), 10) == 0,
                    "fields.json: m=" + key + " has a malformed eichler_constant");
            q.canonicalize();
            r.eichler_constant = q;
        }
        out.emplace(r.m, std::move(r));
    }
    return out;
}

std::vector<MilnorFixture> load_milnor_fixtures()
{
    json doc = load_fixture_json("milnor_fixtures.json");
    require(doc.contains("fixtures") && doc["fixtures"].is_array(), "milnor_fixtures.json: missing 'fixtures'");
    std::vector<MilnorFixture> out;
    for (const auto& j : doc["fixtures"]) {
        MilnorFixture f;
        f.name = j.at("name").get<std::string>();
        std::string what = "milnor fixture " + f.name;
        f.description = j.value("description", "");
        f.p = j.at("p").get<std::uint32_t>();
        f.modulus = u32_list(j.at("modulus_coeffs"), what);
        f.variable = j.value("variable", "x");
        if (j.contains("quaternion"))
            f.sigma_power = j["quaternion"].at("sigma_power").get<long>();
        f.U1 = elements(j.at("U1_generators"), what);
        f.U2 = elements(j.at("U2_generators"), what);
        if (j.contains("expected_cosets"))
            f.expected_cosets = elements(j["expected_cosets"], what);
        if (j.contains("expected_norms"))
            f.expected_norms = u32_list(j["expected_norms"], what);
        if (j.contains("class_group_order"))
            f.class_group_order = j["class_group_order"].get<std::uint32_t>();
        if (j.contains("action"))
            f.action_x_image = u32_list(j["action"].at("x_image"), what);
        if (j.contains("ideal_labels"))
            f.ideal_labels = j["ideal_labels"].get<std::map<std::string, std::string>>();
        if (j.contains("expected_distinct"))
            f.expected_distinct = elements(j["expected_distinct"], what);
        if (j.contains("expected_prime_field_intersection"))
            f.expected_prime_field_intersection = elements(j["expected_prime_field_intersection"], what);
        out.push_back(std::move(f));
    }
    return out;
}

MilnorFixture milnor_fixture(const std::string& name)
{
    for (auto& f : load_milnor_fixtures()) {
        if (f.name == name)
            return f;
    }
    throw ValidationError("unknown milnor fixture '" + name + "'");
}

} // namespace periodica
