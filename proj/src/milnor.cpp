#include "periodica/milnor.hpp"

#include "periodica/errors.hpp"

#include <algorithm>
#include <set>

namespace periodica {

using json = nlohmann::json;

const UnitRing& MilnorSetup::ring() const
{
    if (quaternion)
        return *quaternion;
    return *base;
}

u32 MilnorSetup::element(const FixtureElement& e) const
{
    if (quaternion)
        return quaternion->make(base->encode(e.a), base->encode(e.b));
    require(e.b.empty(), "fixture " + fixture.name + ": j-part given for a commutative ring");
    return base->encode(e.a);
}

MilnorSetup build_milnor_setup(const MilnorFixture& fixture)
{
    MilnorSetup s;
    s.fixture = fixture;
    s.base = std::make_shared<const FiniteQuotientRing>(fixture.p, fixture.modulus, fixture.variable);
    if (fixture.sigma_power) {
        u32 x = s.base->encode({0, 1});
        require(s.base->is_unit(x), "fixture " + fixture.name + ": x is not a unit");
        long e = *fixture.sigma_power;
        u32 g = e < 0 ? s.base->power(s.base->inverse(x), static_cast<u64>(-e)) : s.base->power(x, static_cast<u64>(e));
        s.quaternion = std::make_shared<const CrossedQuaternionRing>(s.base, s.base->automorphism(g));
    }
    const UnitRing& R = s.ring();
    for (const auto& g : fixture.U1)
        s.U1.push_back(s.element(g));
    for (const auto& g : fixture.U2)
        s.U2.push_back(s.element(g));
    for (u32 g : s.U1)
        require(R.is_unit(g), "fixture " + fixture.name + ": U1 generator " + R.label(g) + " is not a unit");
    for (u32 g : s.U2)
        require(R.is_unit(g), "fixture " + fixture.name + ": U2 generator " + R.label(g) + " is not a unit");
    return s;
}

namespace {

class Checks {
public:
    template <class T, class U>
    bool expect(const std::string& id, const T& got, const U& want)
    {
        json g = got, w = want;
        bool ok = g == w;
        json c = {{"id", id}, {"ok", ok}, {"got", g}, {"expected", w}};
        if (!ok && first_.is_null())
            first_ = c;
        list_.push_back(c);
        return ok;
    }

    void finish(json& report) const
    {
        report["checks"] = list_;
        report["ok"] = first_.is_null();
        if (!first_.is_null())
            report["first_deviation"] = first_;
    }

private:
    json list_ = json::array();
    json first_;
};

std::vector<std::string> labels(const UnitRing& R, const DoubleCosetSpace& cosets, const std::vector<u32>& idx)
{
    std::vector<std::string> out;
    for (u32 i : idx)
        out.push_back(R.label(cosets.representatives[i]));
    return out;
}

std::vector<std::string> all_labels(const UnitRing& R, const std::vector<u32>& xs)
{
    std::vector<std::string> out;
    for (u32 x : xs)
        out.push_back(R.label(x));
    return out;
}

json coset_json(const UnitRing& R, const DoubleCosetSpace& cosets)
{
    json arr = json::array();
    for (std::size_t i = 0; i < cosets.representatives.size(); ++i)
        arr.push_back({{"representative", R.label(cosets.representatives[i])}, {"size", cosets.sizes[i]}});
    return arr;
}

std::vector<u32> expected_elements(const MilnorSetup& s, const std::vector<FixtureElement>& es)
{
    std::vector<u32> out;
    for (const auto& e : es)
        out.push_back(s.element(e));
    return out;
}

// Orbit count restricted to the cosets in `members`.
std::size_t orbits_within(const OrbitPartition& orbits, const std::vector<u32>& members)
{
    std::set<u32> m(members.begin(), members.end());
    std::size_t n = 0;
    for (const auto& o : orbits.orbits) {
        if (m.count(o.front()))
            ++n;
    }
    return n;
}

json base_report(const MilnorSetup& s)
{
    return {{"fixture", s.fixture.name}, {"p", s.fixture.p}, {"modulus_coeffs", s.fixture.modulus},
            {"ring_size", s.ring().size()}};
}

// Norm classes and the induced automorphism action on F_p[x]/(x^2+1) fibres.
json quadratic_fibre(const MilnorSetup& s, const DoubleCosetSpace& cosets, Checks& checks, json& report)
{
    const auto& R = *s.base;
    auto part = classify_by_norm_square_class(R, cosets, s.U1, s.U2);
    report["norms"] = part.norms;
    report["class_group_order"] = part.kernel_size;
    report["classes"] = {{"trivial", labels(R, cosets, part.trivial)},
                         {"nontrivial", labels(R, cosets, part.nontrivial)}};
    if (s.fixture.expected_norms)
        checks.expect("norms", part.norms, *s.fixture.expected_norms);
    if (s.fixture.class_group_order)
        checks.expect("class_group_order", part.kernel_size, *s.fixture.class_group_order);

    json orbit_info;
    if (s.fixture.action_x_image) {
        auto perm = R.automorphism(R.encode(*s.fixture.action_x_image));
        auto orbits = automorphism_orbit(R, cosets, perm, s.U1, s.U2);
        json arr = json::array();
        for (const auto& o : orbits.orbits)
            arr.push_back(labels(R, cosets, o));
        report["orbits"] = arr;
        orbit_info = {{"trivial", orbits_within(orbits, part.trivial)},
                      {"nontrivial", orbits_within(orbits, part.nontrivial)}};
    }
    return json{{"part", {{"trivial", part.trivial.size()}, {"nontrivial", part.nontrivial.size()}}},
                {"orbits", orbit_info}};
}

} // namespace

json q28_pipeline()
{
    auto s = build_milnor_setup(milnor_fixture("q28"));
    const auto& R = *s.base;
    json report = base_report(s);
    Checks checks;

    auto units = unit_group(R);
    report["unit_count"] = units.elements.size();
    checks.expect("unit_count", units.elements.size(), 48);

    auto cosets = double_cosets(R, s.U1, s.U2);
    report["cosets"] = coset_json(R, cosets);
    auto reps = all_labels(R, cosets.representatives);
    checks.expect("coset_count", cosets.representatives.size(), 4);
    checks.expect("coset_representatives", reps, std::vector<std::string>{"1", "1+j", "1+2j", "1+4j"});
    if (s.fixture.expected_cosets)
        checks.expect("fixture_cosets", reps, all_labels(R, expected_elements(s, *s.fixture.expected_cosets)));

    auto fibre = quadratic_fibre(s, cosets, checks, report);
    checks.expect("class_group_order_is_2", report["class_group_order"], 2);
    checks.expect("trivial_class", report["classes"]["trivial"], std::vector<std::string>{"1", "1+j"});
    checks.expect("nontrivial_class", report["classes"]["nontrivial"], std::vector<std::string>{"1+2j", "1+4j"});
    checks.expect("orbits", report.value("orbits", json()),
                  json::array({json::array({"1"}), json::array({"1+j"}), json::array({"1+2j", "1+4j"})}));

    json pre = fibre["part"], post = fibre["orbits"];
    report["minimal_class_sizes"] = {{"pre_action", pre}, {"post_action", post}};
    checks.expect("class_sizes_pre_action", pre, json{{"trivial", 2}, {"nontrivial", 2}});
    checks.expect("class_sizes_post_action", post, json{{"trivial", 2}, {"nontrivial", 1}});

    bool nc = pre.value("nontrivial", 0) > 1;
    bool nc_aut = post.is_object() && post.value("nontrivial", 0) > 1;
    report["noncancellation"] = nc;
    report["noncancellation_mod_aut"] = nc_aut;
    checks.expect("noncancellation", nc, true);
    checks.expect("noncancellation_mod_aut", nc_aut, false);

    json ideals = json::object();
    for (const auto& r : reps) {
        auto it = s.fixture.ideal_labels.find(r);
        if (it != s.fixture.ideal_labels.end())
            ideals[r] = it->second;
    }
    report["ideal_labels"] = ideals;
    checks.expect("nontrivial_ideal_labels",
                  json{ideals.value("1+2j", ""), ideals.value("1+4j", "")},
                  json{"(1+2y,1+x)", "(1+4y,1+x)"});

    checks.finish(report);
    return report;
}

json l218_pipeline()
{
    auto s = build_milnor_setup(milnor_fixture("l218"));
    const auto& R = *s.base;
    json report = base_report(s);
    Checks checks;

    auto units = unit_group(R);
    report["unit_count"] = units.elements.size();
    checks.expect("unit_count", units.elements.size(), 8);

    auto cosets = double_cosets(R, s.U1, s.U2);
    report["cosets"] = coset_json(R, cosets);
    auto reps = all_labels(R, cosets.representatives);
    checks.expect("coset_representatives", reps, std::vector<std::string>{"1", "1+j"});
    if (s.fixture.expected_cosets)
        checks.expect("fixture_cosets", reps, all_labels(R, expected_elements(s, *s.fixture.expected_cosets)));

    auto fibre = quadratic_fibre(s, cosets, checks, report);
    u32 kernel = report["class_group_order"].get<u32>();
    checks.expect("coset_count_equals_kernel", cosets.representatives.size(), kernel);
    checks.expect("one_coset_per_class", fibre["part"], json{{"trivial", 1}, {"nontrivial", 1}});
    report["stably_free_cancellation"] = fibre["part"].value("trivial", 0) == 1;

    checks.finish(report);
    return report;
}

json l1030_pipeline()
{
    auto s = build_milnor_setup(milnor_fixture("l1030"));
    ensure(s.quaternion != nullptr, "l1030 fixture must define a crossed quaternion ring");
    const auto& Q = *s.quaternion;
    const auto& F = *s.base;
    json report = base_report(s);
    Checks checks;

    auto units = unit_group(Q);
    report["unit_count"] = units.elements.size();
    checks.expect("unit_count", units.elements.size(), 5760);

    auto cosets = double_cosets(Q, s.U1, s.U2);
    report["coset_count"] = cosets.representatives.size();
    report["cosets"] = coset_json(Q, cosets);

    if (s.fixture.expected_distinct) {
        auto xs = expected_elements(s, *s.fixture.expected_distinct);
        std::set<u32> classes;
        for (u32 x : xs)
            classes.insert(cosets.find(x));
        report["distinct"] = all_labels(Q, xs);
        checks.expect("distinct_cosets", classes.size(), xs.size());
    }

    // Elements a + b j with a, b in F_3 lying in the coset of 1.
    std::vector<u32> meet;
    u32 c1 = cosets.find(Q.one());
    for (u32 a = 0; a < F.characteristic(); ++a) {
        for (u32 b = 0; b < F.characteristic(); ++b) {
            u32 x = Q.make(F.scalar(a), F.scalar(b));
            if (Q.is_unit(x) && cosets.find(x) == c1)
                meet.push_back(x);
        }
    }
    std::sort(meet.begin(), meet.end(), [&](u32 x, u32 y) { return canonical_less(Q, x, y); });
    report["prime_field_intersection"] = all_labels(Q, meet);
    if (s.fixture.expected_prime_field_intersection) {
        auto want = expected_elements(s, *s.fixture.expected_prime_field_intersection);
        std::sort(want.begin(), want.end(), [&](u32 x, u32 y) { return canonical_less(Q, x, y); });
        checks.expect("prime_field_intersection", all_labels(Q, meet), all_labels(Q, want));
    }
    report["one_ne_one_plus_j"] = cosets.find(Q.one()) != cosets.find(Q.make(F.one(), F.one()));
    checks.expect("one_ne_one_plus_j", report["one_ne_one_plus_j"], true);

    checks.finish(report);
    return report;
}

json run_milnor(const std::string& name)
{
    if (name == "q28")
        return q28_pipeline();
    if (name == "l218")
        return l218_pipeline();
    if (name == "l1030")
        return l1030_pipeline();
    auto s = build_milnor_setup(milnor_fixture(name));
    const auto& R = s.ring();
    json report = base_report(s);
    Checks checks;
    auto cosets = double_cosets(R, s.U1, s.U2);
    report["unit_count"] = cosets.unit_count;
    report["cosets"] = coset_json(R, cosets);
    if (s.fixture.expected_cosets)
        checks.expect("fixture_cosets", all_labels(R, cosets.representatives),
                      all_labels(R, expected_elements(s, *s.fixture.expected_cosets)));
    checks.finish(report);
    return report;
}

} // namespace periodica
