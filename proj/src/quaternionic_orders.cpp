#include "periodica/quaternionic_orders.hpp"

#include "periodica/errors.hpp"
#include "periodica/mass_formula.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace periodica {

OrderSpec validate_order_spec(std::vector<u64> indices)
{
    require(!indices.empty(), "order spec: indices must be nonempty");
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        require(indices[i] >= 1, "order spec: indices must be positive");
        require(i == 0 || indices[i] != indices[i - 1],
                "order spec: duplicate index " + std::to_string(indices[i]));
    }
    unsigned r = nu2(indices[0]);
    require(r >= 1, "order spec: index " + std::to_string(indices[0]) + " is odd (need nu_2 >= 1)");
    u64 l = 1;
    for (u64 n : indices) {
        require(nu2(n) == r, "order spec: nu_2 mismatch between " + std::to_string(indices[0]) + " and " +
                                 std::to_string(n) + " (" + std::to_string(r) + " vs " +
                                 std::to_string(nu2(n)) + ")");
        l = lcm(l, n);
    }
    return OrderSpec{std::move(indices), r, l / 2};
}

OrderSpec parse_order_spec(const std::string& text)
{
    std::string s;
    for (char c : text) {
        if (c != '{' && c != '}' && c != ' ')
            s += c;
    }
    std::vector<u64> idx;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        require(!item.empty() && std::all_of(item.begin(), item.end(), ::isdigit),
                "order spec: '" + item + "' is not a positive integer");
        idx.push_back(std::stoull(item));
    }
    return validate_order_spec(std::move(idx));
}

std::string to_string(const OrderSpec& spec)
{
    std::string s = "{";
    for (std::size_t i = 0; i < spec.indices.size(); ++i)
        s += (i ? "," : "") + std::to_string(spec.indices[i]);
    return s + "}";
}

bool ratio_edge(u64 a, u64 b)
{
    if (a == b)
        return false;
    u64 g = gcd(a, b);
    u64 x = a / g, y = b / g;
    if (x != 1 && y != 1)
        return false;
    u64 q = x == 1 ? y : x;
    return factor(q).size() == 1;
}

RatioGraph ratio_graph(const OrderSpec& spec)
{
    RatioGraph g;
    g.vertices = spec.indices;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            if (ratio_edge(g.vertices[i], g.vertices[j]))
                g.edges.emplace_back(g.vertices[i], g.vertices[j]);
        }
    }
    return g;
}

std::vector<std::vector<u64>> connected_components(const RatioGraph& g)
{
    std::map<u64, u64> parent;
    for (u64 v : g.vertices)
        parent[v] = v;
    std::function<u64(u64)> find = [&](u64 v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (auto [a, b] : g.edges)
        parent[find(a)] = find(b);
    std::map<u64, std::vector<u64>> groups;
    for (u64 v : g.vertices)
        groups[find(v)].push_back(v);
    std::vector<std::vector<u64>> out;
    for (auto& [root, members] : groups)
        out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

const std::set<u64>& sfc_singletons()
{
    static const std::set<u64> s{2, 4, 6, 8, 10, 12, 14, 18, 20, 24, 30};
    return s;
}

const std::vector<std::set<u64>>& forbidden_subsets()
{
    static const std::vector<std::set<u64>> f{{2, 14}, {6, 18}, {6, 30}, {4, 12}, {4, 20}, {8, 24}, {10, 30}};
    return f;
}

const std::vector<std::set<u64>>& connected_sfc_rows()
{
    static const std::vector<std::set<u64>> rows{{2, 6}, {2, 10}, {2, 18}, {2, 6, 10}, {2, 10, 18}};
    return rows;
}

const std::set<u64>& star_set(unsigned r)
{
    static const std::set<u64> r1{2, 6, 10, 14, 18, 30}, r2{4, 12, 20}, r3{8, 24}, none;
    switch (r) {
    case 1: return r1;
    case 2: return r2;
    case 3: return r3;
    default: return none;
    }
}

const std::vector<std::set<u64>>& sfc_literal_list()
{
    static const std::vector<std::set<u64>> list{
        {2}, {4}, {6}, {8}, {10}, {12}, {14}, {18}, {20}, {24}, {30},
        {2, 6}, {2, 10}, {2, 18}, {2, 30}, {6, 10}, {6, 14}, {10, 14}, {10, 18}, {14, 18}, {14, 30}, {18, 30},
        {2, 6, 10}, {2, 10, 18}, {2, 18, 30}, {6, 10, 14}, {10, 14, 18}, {14, 18, 30},
    };
    return list;
}

namespace {

struct SingletonFacts {
    bool degree_ok;
    bool numerator_checked;
    bool numerator_ok;
    mpq_class ei;
};

SingletonFacts singleton_facts(u64 m)
{
    static std::mutex mu;
    static std::map<u64, SingletonFacts> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
    }
    SingletonFacts f{sfc_degree_obstruction({m}), false, true, 0};
    if (f.degree_ok && m >= 3) {
        f.numerator_checked = true;
        f.ei = eichler_constant({m});
        f.numerator_ok = numerator_power_of_two_test({m});
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, f);
    return f;
}

std::string set_string(const std::vector<u64>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

bool component_sfc(const std::vector<u64>& comp, unsigned r, std::vector<SfcStep>& trace)
{
    std::string name = set_string(comp);
    if (comp.size() == 1) {
        u64 m = comp[0];
        SingletonFacts f = singleton_facts(m);
        if (!f.degree_ok) {
            trace.push_back({"degree-bound", name + ": [K:Q] = " + std::to_string(euler_phi(m) / 2) + " > 6"});
            ensure(!sfc_singletons().count(m), "degree obstruction contradicts singleton table");
            return false;
        }
        trace.push_back({"degree-bound", name + ": [K:Q] <= 6, not excluded"});
        if (f.numerator_checked) {
            if (!f.numerator_ok) {
                trace.push_back({"numerator-test", name + ": ei = " + f.ei.get_str() + ", numerator not a power of 2"});
                ensure(!sfc_singletons().count(m), "numerator obstruction contradicts singleton table");
                return false;
            }
            trace.push_back({"numerator-test", name + ": ei = " + f.ei.get_str() + ", not excluded"});
        }
        bool ok = sfc_singletons().count(m) > 0;
        trace.push_back({"singleton-table", name + (ok ? ": has SFC" : ": excluded by singleton table")});
        return ok;
    }
    const auto& star = star_set(r);
    for (u64 n : comp) {
        if (!star.count(n)) {
            trace.push_back({"star-condition", name + ": index " + std::to_string(n) + " outside the admissible set"});
            return false;
        }
    }
    trace.push_back({"star-condition", name + ": all indices admissible"});
    std::set<u64> cs(comp.begin(), comp.end());
    for (const auto& bad : forbidden_subsets()) {
        if (std::includes(cs.begin(), cs.end(), bad.begin(), bad.end())) {
            trace.push_back({"forbidden-subset", name + ": contains " + set_string({bad.begin(), bad.end()})});
            return false;
        }
    }
    trace.push_back({"forbidden-subset", name + ": no forbidden subset"});
    for (const auto& row : connected_sfc_rows()) {
        if (row == cs) {
            trace.push_back({"connected-row", name + ": has SFC"});
            return true;
        }
    }
    throw InternalError("connected component " + name + " not covered by the classification");
}

} // namespace

SfcVerdict has_sfc(const OrderSpec& spec)
{
    SfcVerdict v{true, {}};
    auto comps = connected_components(ratio_graph(spec));
    std::string detail = std::to_string(comps.size()) + " component(s):";
    for (const auto& c : comps)
        detail += " " + set_string(c);
    v.trace.push_back({"split", detail});
    for (const auto& c : comps) {
        if (!component_sfc(c, spec.r, v.trace))
            v.verdict = false;
    }
    return v;
}

OrderSpec q4n_noncancellation_witness(u64 n)
{
    if (n < 6)
        throw UnsupportedError("q4n_noncancellation_witness: n must be >= 6");
    static const std::map<u64, std::vector<u64>> special{
        {6, {4, 12}}, {7, {2, 14}}, {9, {6, 18}}, {10, {4, 20}}, {12, {8, 24}}, {15, {6, 30}},
    };
    auto it = special.find(n);
    OrderSpec spec = validate_order_spec(it != special.end() ? it->second : std::vector<u64>{2 * n});
    for (u64 k : spec.indices)
        ensure((2 * n) % k == 0 && n % k != 0, "witness index does not divide 2n exactly");
    ensure(!has_sfc(spec).verdict, "witness order has stably free cancellation");
    return spec;
}

std::string to_string(Tristate t)
{
    switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    default: return "unknown";
    }
}

Tristate defect_trivial(const OrderSpec& spec)
{
    static const std::vector<std::vector<u64>> trivial{{4, 12}, {4, 20}, {8, 24}, {6, 30}, {6, 42}};
    static const std::vector<std::vector<u64>> nontrivial{{2, 14}, {6, 18}, {2, 6, 18}};
    if (spec.indices.size() == 1)
        return Tristate::True;
    if (std::find(trivial.begin(), trivial.end(), spec.indices) != trivial.end())
        return Tristate::True;
    if (std::find(nontrivial.begin(), nontrivial.end(), spec.indices) != nontrivial.end())
        return Tristate::False;
    return Tristate::Unknown;
}

} // namespace periodica
