#include "periodica/report.hpp"

#include <regex>
#include <sstream>

namespace periodica {

using json = nlohmann::json;

json Report::to_json() const
{
    return {{"command", command}, {"inputs", inputs}, {"results", results}, {"citations", citations}};
}

std::string Report::dump() const
{
    return to_json().dump(2) + "\n";
}

std::string Report::text() const
{
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [k, v] : results.items())
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return os.str();
}

std::string rational_json(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

json with_approximations(const json& j)
{
    static const std::regex rational(R"(-?[0-9]+/[0-9]+)");
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (!std::regex_match(s, rational))
            return j;
        mpq_class q(s);
        q.canonicalize();
        return json{{"exact", s}, {"approx", q.get_d()}};
    }
    if (j.is_array()) {
        json out = json::array();
        for (const auto& v : j)
            out.push_back(with_approximations(v));
        return out;
    }
    if (j.is_object()) {
        json out = json::object();
        for (const auto& [k, v] : j.items())
            out[k] = with_approximations(v);
        return out;
    }
    return j;
}

} // namespace periodica
