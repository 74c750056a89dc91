#include "periodica/verify.hpp"

#include "periodica/cyclotomic.hpp"
#include "periodica/errors.hpp"
#include "periodica/fixtures.hpp"
#include "periodica/mass_formula.hpp"
#include "periodica/milnor.hpp"
#include "periodica/periodic_groups.hpp"
#include "periodica/quaternionic_orders.hpp"
#include "periodica/report.hpp"
#include "periodica/swan.hpp"

#include <algorithm>
#include <functional>

namespace periodica {

using json = nlohmann::json;

bool VerifyResult::ok() const
{
    return first_failure() == nullptr;
}

const VerifyCheck* VerifyResult::first_failure() const
{
    for (const auto& c : checks) {
        if (!c.ok)
            return &c;
    }
    return nullptr;
}

json VerifyResult::to_json() const
{
    json arr = json::array();
    std::size_t failed = 0;
    for (const auto& c : checks) {
        arr.push_back({{"id", c.id}, {"group", c.group}, {"ok", c.ok}, {"detail", c.detail}});
        failed += !c.ok;
    }
    json out = {{"checks", arr},
                {"fixture_hashes", fixture_hashes},
                {"passed", checks.size() - failed},
                {"failed", failed},
                {"ok", failed == 0}};
    if (const auto* f = first_failure())
        out["first_failure"] = {{"id", f->id}, {"detail", f->detail}};
    return out;
}

namespace {

class Suite {
public:
    explicit Suite(std::string group, VerifyResult& out) : group_(std::move(group)), out_(out) {}

    // Runs fn; exceptions become failures of this check only.
    void check(const std::string& id, const std::function<std::pair<bool, std::string>()>& fn)
    {
        VerifyCheck c{group_ + "." + id, group_, false, ""};
        try {
            auto [ok, detail] = fn();
            c.ok = ok;
            c.detail = detail;
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        out_.checks.push_back(std::move(c));
    }

private:
    std::string group_;
    VerifyResult& out_;
};

std::pair<bool, std::string> equal(const std::string& got, const std::string& want)
{
    return {got == want, "got " + got + ", expected " + want};
}

void eichler_group(VerifyResult& out)
{
    Suite s("eichler", out);
    static const std::vector<std::pair<u64, std::string>> values{
        {16, "5/48"}, {22, "5/132"}, {26, "19/156"}, {28, "13/21"}, {36, "31/36"}, {42, "1/6"}};
    auto fields = load_fields();
    for (const auto& [m, want] : values) {
        s.check("m" + std::to_string(m), [&, m = m, want = want] {
            std::string got = rational_json(eichler_constant({m}));
            auto it = fields.find(m);
            if (it == fields.end() || !it->second.eichler_constant)
                return std::pair<bool, std::string>{false, "fields.json has no eichler_constant for m=" + std::to_string(m)};
            std::string fx = rational_json(*it->second.eichler_constant);
            return std::pair<bool, std::string>{got == want && fx == got,
                                                "computed " + got + ", expected " + want + ", fixture " + fx};
        });
    }
    for (u64 m : {16, 22, 26, 28, 36}) {
        s.check("numerator_m" + std::to_string(m), [m] {
            bool t = numerator_power_of_two_test({m});
            return std::pair<bool, std::string>{!t, t ? "numerator is a power of 2" : "numerator not a power of 2"};
        });
    }
    s.check("numerator_m42", [] {
        bool t = numerator_power_of_two_test({42});
        return std::pair<bool, std::string>{t, t ? "numerator is a power of 2" : "numerator not a power of 2"};
    });
    s.check("mass_m16_unramified", [] {
        return equal(rational_json(mass_class_set({16, std::vector<u64>{}}, 1).value), "5/48");
    });
}

void sfc_group(VerifyResult& out)
{
    Suite s("sfc", out);
    static const std::vector<std::pair<std::string, bool>> named{
        {"2,6", true}, {"2,18", true}, {"14,18,30", true}, {"2,14", false}, {"10,30", false}, {"8,24", false}};
    for (const auto& [spec, want] : named) {
        s.check("order_" + spec, [spec = spec, want = want] {
            bool v = has_sfc(parse_order_spec(spec)).verdict;
            return std::pair<bool, std::string>{v == want, std::string("verdict ") + (v ? "true" : "false")};
        });
    }
    s.check("literal_list_componentwise_le_42", [] {
        const auto& list = sfc_literal_list();
        auto listed = [&](const std::vector<u64>& c) {
            return std::find(list.begin(), list.end(), std::set<u64>(c.begin(), c.end())) != list.end();
        };
        std::size_t count = 0;
        for (unsigned r = 1; (u64{1} << r) <= 42; ++r) {
            std::vector<u64> pool;
            for (u64 n = u64{1} << r; n <= 42; n += u64{1} << (r + 1))
                pool.push_back(n);
            for (u64 mask = 1; mask < (u64{1} << pool.size()); ++mask) {
                std::vector<u64> idx;
                for (std::size_t i = 0; i < pool.size(); ++i) {
                    if (mask >> i & 1)
                        idx.push_back(pool[i]);
                }
                auto spec = validate_order_spec(idx);
                bool want = true;
                for (const auto& c : connected_components(ratio_graph(spec)))
                    want = want && listed(c);
                if (has_sfc(spec).verdict != want)
                    return std::pair<bool, std::string>{false, "disagreement at " + to_string(spec)};
                ++count;
            }
        }
        return std::pair<bool, std::string>{true, std::to_string(count) + " orders agree"};
    });
    s.check("q4n_witnesses_6_to_30", [] {
        for (u64 n = 6; n <= 30; ++n) {
            if (has_sfc(q4n_noncancellation_witness(n)).verdict)
                return std::pair<bool, std::string>{false, "witness for n=" + std::to_string(n) + " has SFC"};
        }
        return std::pair<bool, std::string>{true, "no witness has SFC"};
    });
}

void milnor_group(VerifyResult& out)
{
    Suite s("milnor", out);
    for (std::string name : {"q28", "l218", "l1030"}) {
        s.check(name, [name] {
            json r = run_milnor(name);
            bool ok = r.value("ok", false);
            return std::pair<bool, std::string>{ok, ok ? "all pipeline checks pass" : r["first_deviation"].dump()};
        });
    }
    s.check("q28_verdict_pair", [] {
        json r = q28_pipeline();
        bool nc = r.value("noncancellation", false), nca = r.value("noncancellation_mod_aut", true);
        return std::pair<bool, std::string>{nc && !nca, "noncancellation " + std::string(nc ? "true" : "false") +
                                                            ", mod aut " + (nca ? "true" : "false")};
    });
}

void groups_group(VerifyResult& out)
{
    Suite s("groups", out);
    s.check("q28_type_I_mH_3", [] {
        auto g = parse_group_spec("q28");
        return equal(to_string(classify_type(g)) + "/" + std::to_string(m_H(g)), "I/3");
    });
    s.check("q16_mH_2", [] { return equal(std::to_string(m_H(parse_group_spec("q16"))), "2"); });
    s.check("mH_wedderburn_2_to_200", [] {
        for (u64 n = 2; n <= 200; ++n) {
            u64 sum = 0;
            for (u64 d : divisors(2 * n)) {
                if (d >= 3 && n % d != 0)
                    sum += euler_phi(d) / 2;
            }
            if (sum != n / 2 || m_H(Quaternion{4 * n}) != n / 2)
                return std::pair<bool, std::string>{false, "mismatch at n=" + std::to_string(n)};
        }
        return std::pair<bool, std::string>{true, "floor(n/2) matches for 2 <= n <= 200"};
    });
}

void swan_group(VerifyResult& out)
{
    Suite s("swan", out);
    s.check("cancel_q28", [] {
        auto v = cancellation_predicate_swan_class(parse_group_spec("q28"));
        return std::pair<bool, std::string>{!v.cancellation && v.m_H == 3, v.reason};
    });
    s.check("cancel_q16", [] {
        auto v = cancellation_predicate_swan_class(parse_group_spec("q16"));
        return std::pair<bool, std::string>{v.cancellation, v.reason};
    });
    s.check("cancel_c11", [] {
        auto v = cancellation_predicate_swan_class(parse_group_spec("c11"));
        return std::pair<bool, std::string>{v.cancellation && v.m_H == 0, v.reason};
    });
    s.check("product_28_3_19", [] {
        auto p = swan_product(SwanClass(28, 3), SwanClass(28, 19));
        return std::pair<bool, std::string>{p.is_free(), "r = " + std::to_string(p.r)};
    });
    s.check("fork_q28_classes", [] {
        GradedStableClass nontrivial{{"1+2j", "1+4j"}, {{1, 0}}, 0};
        GradedStableClass trivial{{"1", "1+j"}, {{0, 1}}, 0};
        bool ok = !fork_cancellation(nontrivial) && fork_cancellation_mod_action(nontrivial) &&
                  !fork_cancellation(trivial) && !fork_cancellation_mod_action(trivial);
        return std::pair<bool, std::string>{ok, "nontrivial (false, true), trivial (false, false)"};
    });
}

void bound_group(VerifyResult& out)
{
    Suite s("bound", out);
    s.check("class_set_m16_below_1", [] {
        auto b = class_set_lower_bound(16);
        return std::pair<bool, std::string>{b.value.certainly_less(Interval::exact(mpz_class(1))),
                                            "value ~ " + b.value.hi.to_string(8)};
    });
    s.check("class_set_grows_102_to_202", [] {
        auto a = class_set_lower_bound(102), b = class_set_lower_bound(202);
        return std::pair<bool, std::string>{a.log_value.certainly_less(b.log_value),
                                            "log " + a.log_value.lo.to_string(8) + " < " + b.log_value.lo.to_string(8)};
    });
    s.check("N_lower_bound_50_exceeds_30", [] {
        auto a = N_lower_bound(30), b = N_lower_bound(50);
        return std::pair<bool, std::string>{a.log_bound.certainly_less(b.log_bound),
                                            "log " + a.log_bound.hi.to_string(8) + " < " + b.log_bound.lo.to_string(8)};
    });
}

void ambiguous_group(VerifyResult& out)
{
    Suite s("ambiguous", out);
    s.check("odd_primes_le_100", [] {
        for (u64 p = 3; p <= 100; p += 2) {
            if (is_prime(p) && ambiguous_class_number(p) != 1)
                return std::pair<bool, std::string>{false, "p=" + std::to_string(p)};
        }
        return std::pair<bool, std::string>{true, "value 1 for every odd prime p <= 100"};
    });
}

void discriminant_group(VerifyResult& out)
{
    Suite s("discriminant", out);
    for (u64 m : {5, 8, 12})
        s.check("quadratic_m" + std::to_string(m), [m] { return equal(disc_real_cyclotomic({m}).get_str(), std::to_string(m)); });
}

using GroupFn = void (*)(VerifyResult&);

const std::vector<std::pair<std::string, GroupFn>>& group_table()
{
    static const std::vector<std::pair<std::string, GroupFn>> t{
        {"eichler", eichler_group}, {"sfc", sfc_group},         {"milnor", milnor_group},
        {"groups", groups_group},   {"swan", swan_group},       {"bound", bound_group},
        {"ambiguous", ambiguous_group}, {"discriminant", discriminant_group},
    };
    return t;
}

} // namespace

const std::vector<std::string>& verify_groups()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : group_table())
            v.push_back(name);
        return v;
    }();
    return names;
}

VerifyResult verify_all(const std::optional<std::string>& only)
{
    if (only) {
        const auto& g = verify_groups();
        require(std::find(g.begin(), g.end(), *only) != g.end(), "verify-paper: unknown group '" + *only + "'");
    }
    VerifyResult out;
    for (std::string file : {"fields.json", "milnor_fixtures.json"})
        out.fixture_hashes[file] = fixture_hash(file);
    for (const auto& [name, fn] : group_table()) {
        if (!only || *only == name)
            fn(out);
    }
    return out;
}

} // namespace periodica
