#include "periodica/cli.hpp"

#include "periodica/cyclotomic.hpp"
#include "periodica/errors.hpp"
#include "periodica/fixtures.hpp"
#include "periodica/mass_formula.hpp"
#include "periodica/milnor.hpp"
#include "periodica/periodic_groups.hpp"
#include "periodica/quaternionic_orders.hpp"
#include "periodica/report.hpp"
#include "periodica/swan.hpp"
#include "periodica/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

namespace periodica {

using json = nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct Options {
    bool text = false;
    bool approx = false;
    std::string group;
    std::string order;
    std::string fixture;
    u64 m = 0;
    std::optional<u64> h;
    std::vector<u64> ramified;
    bool unramified = false;
    u64 N = 0;
    std::vector<i64> mul;
    i64 r = 1;
    u64 induce = 0;
    u64 mh = 0;
    u64 n = 0;
    long s = -1;
    std::string only;
};

json interval_json(const Interval& v)
{
    return json::array({v.lo.to_string(20), v.hi.to_string(20)});
}

json trace_json(const SfcVerdict& v)
{
    json arr = json::array();
    for (const auto& s : v.trace)
        arr.push_back({{"rule", s.rule}, {"detail", s.detail}});
    return arr;
}

json bpq_json(const PeriodicGroupSpec& g)
{
    json arr = json::array();
    for (const auto& q : maximal_bpq(g))
        arr.push_back(q.name());
    return arr;
}

Report cmd_classify(const Options& o)
{
    auto g = parse_group_spec(o.group);
    validate(g);
    Report r{"classify", {{"group", o.group}}, {}, {"groups.classification"}};
    r.results = {{"type", to_string(classify_type(g))}, {"mH", m_H(g)}, {"spec", to_json(g)}, {"maximal_bpq", bpq_json(g)}};
    return r;
}

Report cmd_mh(const Options& o)
{
    auto g = parse_group_spec(o.group);
    validate(g);
    return Report{"mh", {{"group", o.group}}, {{"mH", m_H(g)}}, {"groups.m_H"}};
}

Report cmd_bpq(const Options& o)
{
    auto g = parse_group_spec(o.group);
    validate(g);
    json arr = bpq_json(g);
    return Report{"bpq", {{"group", o.group}}, {{"maximal_bpq", arr}, {"count", arr.size()}}, {"groups.maximal_bpq"}};
}

Report cmd_sfc(const Options& o)
{
    auto spec = parse_order_spec(o.order);
    auto v = has_sfc(spec);
    json comps = json::array();
    for (const auto& c : connected_components(ratio_graph(spec)))
        comps.push_back(c);
    return Report{"sfc",
                  {{"order", o.order}},
                  {{"order", to_string(spec)}, {"r", spec.r}, {"verdict", v.verdict}, {"components", comps},
                   {"trace", trace_json(v)}},
                  {"sfc.classifier"}};
}

Report cmd_defect(const Options& o)
{
    auto spec = parse_order_spec(o.order);
    return Report{"defect", {{"order", o.order}}, {{"order", to_string(spec)}, {"defect_trivial", to_string(defect_trivial(spec))}},
                  {"sfc.defect"}};
}

Report cmd_witness(const Options& o)
{
    auto spec = q4n_noncancellation_witness(o.n);
    return Report{"witness", {{"n", o.n}}, {{"order", to_string(spec)}, {"indices", spec.indices}, {"verdict", has_sfc(spec).verdict}},
                  {"sfc.q4n_witness"}};
}

Report cmd_mass(const Options& o)
{
    require(o.m >= 3, "mass: --m must be >= 3");
    Report r{"mass", {{"m", o.m}}, {}, {"eichler.mass"}};
    mpq_class ei = eichler_constant({o.m});
    r.results["m"] = o.m;
    r.results["ei"] = rational_json(ei);

    auto fields = load_fields();
    auto field = fields.find(o.m);
    std::optional<u64> h = o.h;
    if (h)
        r.inputs["h"] = *h;
    else if (field != fields.end())
        h = field->second.h_K;
    std::optional<std::vector<u64>> norms;
    if (o.unramified) {
        norms = std::vector<u64>{};
        r.inputs["unramified"] = true;
    } else if (!o.ramified.empty()) {
        norms = o.ramified;
        r.inputs["ramified"] = o.ramified;
    } else if (field != fields.end()) {
        norms = field->second.ramified_norms;
    }
    if (!h) {
        r.results["mass"] = nullptr;
        r.results["mass_unavailable"] = "fixture required: class number h_K for m=" + std::to_string(o.m);
        return r;
    }
    r.results["h_K"] = *h;
    try {
        auto mass = mass_class_set({o.m, norms}, *h);
        r.results["mass"] = rational_json(mass.value);
        r.results["decomposition"] = {{"eichler_constant", rational_json(mass.eichler_constant)},
                                      {"class_number_factor", rational_json(mass.class_number_factor)},
                                      {"ramification_factor", rational_json(mass.ramification_factor)}};
    } catch (const FixtureRequiredError& e) {
        r.results["mass"] = nullptr;
        r.results["mass_unavailable"] = e.what();
    }
    return r;
}

Report cmd_obstruction(const Options& o)
{
    require(o.m >= 3, "obstruction: --m must be >= 3");
    RealCyclotomicField K{o.m};
    bool degree_ok = sfc_degree_obstruction(K);
    Report r{"obstruction", {{"m", o.m}}, {}, {"eichler.obstruction"}};
    r.results = {{"degree", K.degree()}, {"degree_bound", degree_ok}};
    if (degree_ok) {
        mpq_class ei = eichler_constant(K);
        bool pow2 = numerator_power_of_two_test(K);
        r.results["ei"] = rational_json(ei);
        r.results["numerator_power_of_two"] = pow2;
        r.results["verdict"] = pow2 ? "not excluded" : "excluded: numerator of ei is not a power of 2";
        r.results["sfc_excluded"] = !pow2;
    } else {
        r.results["verdict"] = "excluded: degree exceeds 6";
        r.results["sfc_excluded"] = true;
    }
    return r;
}

Report cmd_milnor(const Options& o)
{
    json rep = run_milnor(o.fixture);
    ensure(rep.contains("ok"), "milnor report lacks status");
    return Report{"milnor", {{"fixture", o.fixture}}, rep, {"milnor." + o.fixture}};
}

Report cmd_swan(const Options& o)
{
    require(o.N >= 1, "swan: --N is required");
    Report r{"swan", {{"N", o.N}}, {}, {"swan.calculus"}};
    if (!o.mul.empty()) {
        r.inputs["mul"] = o.mul;
        SwanClass acc(o.N, 1);
        for (i64 x : o.mul)
            acc = swan_product(acc, SwanClass(o.N, x));
        r.results["product"] = {{"N", acc.N}, {"r", acc.r}, {"free", acc.is_free()}};
    }
    if (o.induce) {
        r.inputs["r"] = o.r;
        r.inputs["induce"] = o.induce;
        auto s = induce_swan(SwanClass(o.N, o.r), o.induce);
        r.results["induced"] = {{"N", s.N}, {"r", s.r}, {"free", s.is_free()}};
    }
    if (o.mul.empty() && !o.induce) {
        SwanClass s(o.N, o.r);
        r.inputs["r"] = o.r;
        r.results["class"] = {{"N", s.N}, {"r", s.r}, {"free", s.is_free()}};
    }
    return r;
}

Report cmd_cancel(const Options& o)
{
    auto v = cancellation_predicate_swan_class(parse_group_spec(o.group));
    return Report{"cancel", {{"group", o.group}}, {{"m_H", v.m_H}, {"cancellation", v.cancellation}, {"reason", v.reason}},
                  {"swan.cancellation"}};
}

Report cmd_bound(const Options& o)
{
    Report r{"bound", {}, {}, {"bound.class_set"}};
    if (o.m) {
        r.inputs["m"] = o.m;
        auto b = class_set_lower_bound(o.m);
        r.results["class_set"] = {{"m", b.m},
                                  {"t", b.t},
                                  {"delta", b.delta.get_str()},
                                  {"coefficient", rational_json(b.coefficient)},
                                  {"radicand", b.radicand.get_str()},
                                  {"pi_power", b.pi_power},
                                  {"value", interval_json(b.value)},
                                  {"log_value", interval_json(b.log_value)},
                                  {"certified_count", b.certified_count.get_str()}};
    }
    if (o.mh) {
        r.inputs["mh"] = o.mh;
        r.citations.push_back("bound.N_lower_bound");
        auto b = N_lower_bound(o.mh);
        r.results["N_lower_bound"] = {{"m_H", b.m_H},
                                      {"n0", b.n0},
                                      {"argmin_n", b.argmin_n},
                                      {"log_bound", interval_json(b.log_bound)},
                                      {"certified", b.certified.get_str()},
                                      {"n_cut", b.n_cut},
                                      {"tail_log_min", b.tail_log_min}};
    }
    require(o.m || o.mh, "bound: give --mh and/or --m");
    return r;
}

Report cmd_zeta(const Options& o)
{
    require(o.m >= 3, "zeta: --m must be >= 3");
    require(o.s == -1, "zeta: only s = -1 is supported");
    RealCyclotomicField K{o.m};
    return Report{"zeta",
                  {{"m", o.m}},
                  {{"degree", K.degree()},
                   {"zeta_minus_one", rational_json(zeta_minus_one(K))},
                   {"discriminant", disc_real_cyclotomic(K).get_str()}},
                  {"cyclotomic.zeta"}};
}

// Returns the exit code for a finished verification.
int cmd_verify(const Options& o, Report& r)
{
    std::optional<std::string> only;
    if (!o.only.empty()) {
        only = o.only;
        r.inputs["only"] = o.only;
    }
    auto res = verify_all(only);
    r.results = res.to_json();
    for (const auto& c : res.checks)
        r.citations.push_back(c.id);
    return res.ok() ? 0 : kExitInternal;
}

void emit(const Report& r, const Options& o, std::ostream& out)
{
    if (o.text) {
        out << r.text();
        return;
    }
    if (o.approx) {
        Report a = r;
        a.results = with_approximations(r.results);
        out << a.dump();
        return;
    }
    out << r.dump();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Periodic group, quaternionic order and Milnor square toolkit", "periodica"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--text", o.text, "Human-readable output");
    app.add_flag("--approx", o.approx, "Add decimal approximations next to exact rationals");

    auto group_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("--group,group", o.group, "Group spec, e.g. q28 or typeI:m=15,n=4,r=14")->required();
        return c;
    };
    auto* classify = group_cmd("classify", "Type and m_H of a periodic group");
    auto* mh = group_cmd("mh", "m_H of a periodic group");
    auto* bpq = group_cmd("bpq", "Maximal binary polyhedral quotients");
    auto* cancel = group_cmd("cancel", "Cancellation for the stable class of the Swan module");

    auto* sfc = app.add_subcommand("sfc", "Stably free cancellation for an order Lambda_{n1,...,nk}");
    sfc->add_option("order", o.order, "Indices, e.g. 10,30")->required();
    auto* defect = app.add_subcommand("defect", "Whether the defect group is known to be trivial");
    defect->add_option("order", o.order, "Indices, e.g. 4,12")->required();
    auto* witness = app.add_subcommand("witness", "Order without SFC that is a quotient of Z Q_{4n}");
    witness->add_option("--n,--q4n,n", o.n, "n >= 6")->required();

    auto* mass = app.add_subcommand("mass", "Eichler constant and mass of the class set");
    mass->add_option("--m", o.m, "Conductor m")->required();
    mass->add_option("--ramified", o.ramified, "Norms of ramified primes")->delimiter(',');
    mass->add_flag("--unramified", o.unramified, "Unramified at all finite primes");
    mass->add_option("--hK,--class-number", o.h, "Class number h_K");
    auto* obstruction = app.add_subcommand("obstruction", "Degree and numerator obstructions to SFC");
    obstruction->add_option("--m", o.m, "Conductor m")->required();
    auto* zeta = app.add_subcommand("zeta", "zeta_K(-1) and discriminant of Q(zeta_m)^+");
    zeta->add_option("--m", o.m, "Conductor m")->required();
    zeta->add_option("--s", o.s, "Argument of zeta_K, only -1");

    auto* milnor = app.add_subcommand("milnor", "Double-coset computation for a Milnor square fixture");
    milnor->add_option("fixture", o.fixture, "q28, l218 or l1030")->required();

    auto* swan = app.add_subcommand("swan", "Swan module arithmetic");
    swan->add_option("--N", o.N, "Group order")->required();
    swan->add_option("--mul", o.mul, "Multiply classes (I, r)")->delimiter(',');
    swan->add_option("--r", o.r, "Class (I, r)");
    swan->add_option("--induce", o.induce, "Quotient order M dividing N");

    auto* bound = app.add_subcommand("bound", "Certified lower bounds");
    bound->add_option("--mh", o.mh, "m_H >= 3");
    bound->add_option("--m", o.m, "Even m >= 6 for the class-set bound");

    auto* verify = app.add_subcommand("verify-paper", "Run every reference check");
    verify->add_option("--only", o.only, "Restrict to one check group");

    std::vector<std::string> argv = args;
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i - 1] == "zeta" && argv[i] == "-1")
            argv[i] = "--s=-1";
    }
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitValidation;
    }

    try {
        Report r;
        int code = 0;
        if (*classify)
            r = cmd_classify(o);
        else if (*mh)
            r = cmd_mh(o);
        else if (*bpq)
            r = cmd_bpq(o);
        else if (*cancel)
            r = cmd_cancel(o);
        else if (*sfc)
            r = cmd_sfc(o);
        else if (*defect)
            r = cmd_defect(o);
        else if (*witness)
            r = cmd_witness(o);
        else if (*mass)
            r = cmd_mass(o);
        else if (*obstruction)
            r = cmd_obstruction(o);
        else if (*zeta)
            r = cmd_zeta(o);
        else if (*milnor)
            r = cmd_milnor(o);
        else if (*swan)
            r = cmd_swan(o);
        else if (*bound)
            r = cmd_bound(o);
        else if (*verify) {
            r.command = "verify-paper";
            code = cmd_verify(o, r);
        }
        emit(r, o, out);
        if (code != 0 && r.results.contains("first_failure"))
            err << "verification failed: " << r.results["first_failure"].dump() << "\n";
        return code;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace periodica
