#include "corpus.hpp"
#include "oracles.hpp"

#include "periodica/errors.hpp"
#include "periodica/periodic_groups.hpp"

#include <doctest.h>

#include <map>

using namespace periodica;

namespace {

std::set<std::string> names(const std::set<BinaryPolyhedral>& s)
{
    std::set<std::string> out;
    for (const auto& h : s)
        out.insert(h.name());
    return out;
}

bool congruent(long long x, long long y, u64 m)
{
    long long d = (x - y) % static_cast<long long>(m);
    return d == 0;
}

} // namespace

TEST_CASE("type classification")
{
    CHECK(classify_type(Quaternion{28}) == GroupType::I);
    CHECK(classify_type(Quaternion{8}) == GroupType::IIa);
    CHECK(classify_type(Quaternion{16}) == GroupType::IIb);
    CHECK(classify_type(Quaternion{24}) == GroupType::IIa);
    CHECK(classify_type(SL2{7}) == GroupType::Vb);
    CHECK(classify_type(SL2{3}) == GroupType::III);
    CHECK(classify_type(SL2{5}) == GroupType::Va);
    CHECK(classify_type(TL2{3}) == GroupType::IV);
    CHECK(classify_type(TL2{5}) == GroupType::VI);
    CHECK(classify_type(BinaryOcta{}) == GroupType::IV);
    CHECK(classify_type(Cyclic{11}) == GroupType::I);
    CHECK(to_string(GroupType::IIb) == "IIb");
}

TEST_CASE("validation names the failed congruence")
{
    auto msg = [](const PeriodicGroupSpec& g) {
        try {
            validate(g);
        } catch (const ValidationError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(msg(TypeI{7, 4, 2}).find("r^n = 1 mod m") != std::string::npos);
    CHECK(msg(TypeI{3, 12, 2}).find("gcd(m, n) = 1") != std::string::npos);
    CHECK(msg(TypeII{5, 1, 1, 3, 2, 4}).find("a^2 = 1 mod t") != std::string::npos);
    CHECK(msg(QFamily{3, 3, 3, 1}).find("pairwise coprime") != std::string::npos);
    CHECK_THROWS_AS(classify_type(Quaternion{6}), ValidationError);
}

TEST_CASE("type I quaternion quotients match a divisor scan")
{
    CHECK(quaternion_quotients_typeI({7, 4, 6}) == std::set<u64>{7});
    CHECK(quaternion_quotients_typeI({15, 4, 14}) == std::set<u64>{3, 5, 15});
    CHECK(quaternion_quotients_typeI({9, 4, 1}).empty());
    for (const auto& g : corpus::generate(300, 11)) {
        if (auto* t = std::get_if<TypeI>(&g)) {
            std::set<u64> want;
            for (u64 a : oracle::divisors(t->m)) {
                if (a > 1 && congruent(static_cast<long long>(t->r), -1, a))
                    want.insert(a);
            }
            CHECK(quaternion_quotients_typeI(*t) == want);
        }
    }
}

TEST_CASE("type II quaternion quotients match a congruence scan")
{
    CHECK(quaternion_quotients_typeII({3, 1, 1, 4, 1, 2}) == std::set<u64>{1, 3});
    u64 a = residue_from_crt({{-1, 3}, {1, 5}}), b = residue_from_crt({{1, 3}, {-1, 5}});
    CHECK(a == 11);
    CHECK(b == 4);
    CHECK(quaternion_quotients_typeII({15, 1, 1, 3, a, b}) == std::set<u64>{1, 3, 5});
    CHECK(quaternion_quotients_typeII({5, 1, 2, 4, 1, 4}) == std::set<u64>{1});
    for (const auto& g : corpus::generate(300, 12)) {
        if (auto* t = std::get_if<TypeII>(&g)) {
            std::set<u64> want;
            for (u64 m : oracle::divisors(t->t)) {
                if (!congruent(static_cast<long long>(t->r), 1, m))
                    continue;
                bool a1 = congruent(t->a, 1, m), am = congruent(t->a, -1, m);
                bool b1 = congruent(t->b, 1, m), bm = congruent(t->b, -1, m);
                bool ok = t->nExp == 3 ? (a1 && bm) || (am && b1) || (am && bm) : (a1 && bm);
                if (m == 1 || ok)
                    want.insert(m);
            }
            CHECK(quaternion_quotients_typeII(*t) == want);
        }
    }
}

TEST_CASE("maximal binary polyhedral quotients")
{
    CHECK(names(maximal_bpq(Quaternion{28})) == std::set<std::string>{"Q28"});
    CHECK(maximal_bpq(SL2{7}).empty());
    CHECK(names(maximal_bpq(SL2{5})) == std::set<std::string>{"Itilde"});
    u64 a = residue_from_crt({{-1, 3}, {1, 5}}), b = residue_from_crt({{1, 3}, {-1, 5}});
    CHECK(names(maximal_bpq(TypeII{15, 1, 1, 3, a, b})) == std::set<std::string>{"Q24", "Q40"});
    CHECK(maximal_bpq(Cyclic{11}).empty());
}

TEST_CASE("m_H values")
{
    CHECK(m_H(Quaternion{28}) == 3);
    CHECK(m_H(Quaternion{8}) == 1);
    CHECK(m_H(Quaternion{16}) == 2);
    CHECK(m_H(BinaryTetra{}) == 1);
    CHECK(m_H(BinaryOcta{}) == 2);
    CHECK(m_H(BinaryIcosa{}) == 2);
    CHECK(m_H(SL2{7}) == 0);
    CHECK(m_H(Cyclic{11}) == 0);
    u64 a = residue_from_crt({{-1, 3}, {1, 5}}), b = residue_from_crt({{1, 3}, {-1, 5}});
    CHECK(m_H(TypeII{15, 1, 1, 3, a, b}) == 7);
}

TEST_CASE("m_H(Q_4n) equals the Wedderburn count")
{
    for (u64 n = 2; n <= 200; ++n) {
        CHECK(m_H(Quaternion{4 * n}) == oracle::wedderburn_mH(n));
        CHECK(oracle::wedderburn_mH(n) == n / 2);
    }
}

TEST_CASE("random corpus lands in the classification rows")
{
    auto specs = corpus::generate(600, 2024);
    std::map<GroupType, std::size_t> seen;
    for (const auto& g : specs) {
        GroupType t = classify_type(g);
        auto bm = maximal_bpq(g);
        u64 mh = m_H(g);
        ++seen[t];
        switch (t) {
        case GroupType::I:
            CHECK(bm.size() <= 1);
            break;
        case GroupType::IIa:
            CHECK(bm.size() >= 1);
            CHECK(bm.size() <= 3);
            CHECK(mh % 2 == 1);
            break;
        case GroupType::IIb:
            CHECK(bm.size() == 1);
            CHECK(mh >= 2);
            CHECK(mh % 2 == 0);
            break;
        default:
            FAIL("unexpected type");
        }
        if (t == GroupType::IIa) {
            std::vector<u64> ms;
            for (const auto& h : bm)
                ms.push_back(h.n / 2);
            for (std::size_t i = 0; i < ms.size(); ++i)
                for (std::size_t j = i + 1; j < ms.size(); ++j)
                    CHECK(std::gcd(ms[i], ms[j]) == 1);
        }
        if (mh >= 3) {
            u64 n0 = std::max<u64>((2 * mh + 2) / 3, 6);
            bool found = false;
            for (const auto& h : bm)
                found = found || (h.kind == BinaryPolyhedral::Kind::Q && h.n >= n0);
            CHECK(found);
        }
        CHECK(spec_from_json(to_json(g)) == g);
    }
    CHECK(seen[GroupType::I] > 0);
    CHECK(seen[GroupType::IIa] > 0);
    CHECK(seen[GroupType::IIb] > 0);
}

TEST_CASE("Milgram criterion")
{
    CHECK(milgram_nonvanishing({3, 1, 3, 7}).nonvanishing);
    CHECK(milgram_nonvanishing({4, 1, 3, 1}).nonvanishing);
    auto v = milgram_nonvanishing({4, 1, 7, 1});
    CHECK_FALSE(v.nonvanishing);
    CHECK(v.reason.find("inapplicable") != std::string::npos);
    CHECK_THROWS_AS(milgram_nonvanishing({3, 3, 5, 7}), NotApplicableError);
    CHECK_THROWS_AS(milgram_nonvanishing({4, 1, 9, 1}), NotApplicableError);
    // q = 5 mod 8 branch: 3^3 = 1 mod 13 fails, no odd power of 3 is +-1 mod 5.
    CHECK_FALSE(milgram_nonvanishing({3, 1, 3, 13}).nonvanishing);
    CHECK(milgram_nonvanishing({3, 1, 3, 5}).nonvanishing);
}

TEST_CASE("automorphisms of Q_4n form a group")
{
    CHECK(aut_compose({3, 2}, {5, 1}, 7) == AutQ4n{1, 5});
    CHECK(aut_compose({1, 0}, {3, 4}, 7) == AutQ4n{3, 4});
    CHECK(aut_enumerate(7).size() == 84);
    CHECK_THROWS_AS(aut_enumerate(2), UnsupportedError);
    CHECK_THROWS_AS(aut_compose({1, 0}, {1, 0}, 2), UnsupportedError);
    for (u64 n = 3; n <= 9; ++n) {
        auto all = aut_enumerate(n);
        CHECK(all.size() == 2 * n * oracle::phi(2 * n));
        std::set<AutQ4n> set(all.begin(), all.end());
        for (const auto& f : all) {
            bool has_inverse = false;
            for (const auto& g : all) {
                auto h = aut_compose(f, g, n);
                CHECK(set.count(h) == 1);
                has_inverse = has_inverse || h == AutQ4n{1, 0};
            }
            CHECK(has_inverse);
        }
        for (std::size_t i = 0; i < all.size(); i += 7)
            for (std::size_t j = 0; j < all.size(); j += 5)
                for (std::size_t k = 0; k < all.size(); k += 11)
                    CHECK(aut_compose(aut_compose(all[i], all[j], n), all[k], n) ==
                          aut_compose(all[i], aut_compose(all[j], all[k], n), n));
    }
}

TEST_CASE("group spec parsing and serialization")
{
    CHECK(parse_group_spec("q28") == PeriodicGroupSpec{Quaternion{28}});
    CHECK(parse_group_spec("c11") == PeriodicGroupSpec{Cyclic{11}});
    CHECK(parse_group_spec("typeI:m=15,n=4,r=14") == PeriodicGroupSpec{TypeI{15, 4, 14}});
    CHECK(parse_group_spec("typeI:m=15,n=4,r=-1") == PeriodicGroupSpec{TypeI{15, 4, 14}});
    CHECK(parse_group_spec("Q(8;3,7)") == PeriodicGroupSpec{QFamily{3, 1, 3, 7}});
    CHECK(parse_group_spec("sl2:7") == PeriodicGroupSpec{SL2{7}});
    CHECK(parse_group_spec("ttilde") == PeriodicGroupSpec{BinaryTetra{}});
    CHECK(parse_group_spec(R"({"variant":"Quaternion","order":28})") == PeriodicGroupSpec{Quaternion{28}});
    CHECK(to_json(Quaternion{28}).dump() == R"({"order":28,"variant":"Quaternion"})");
    CHECK_THROWS_AS(parse_group_spec("typeI:m=15,n=4"), ValidationError);
    CHECK_THROWS_AS(parse_group_spec("frobnicate"), ValidationError);
    CHECK_THROWS_AS(parse_group_spec("q28x"), ValidationError);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"variant", "Cyclic"}}), ValidationError);

    auto q = qfamily_as_typeII({3, 1, 3, 7});
    CHECK(q.t == 21);
    CHECK(q.a == residue_from_crt({{-1, 3}, {1, 7}}));
    CHECK(q.b == residue_from_crt({{1, 3}, {-1, 7}}));
}
