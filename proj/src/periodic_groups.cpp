#include "periodica/periodic_groups.hpp"

#include "periodica/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace periodica {

using json = nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string str(u64 v)
{
    return std::to_string(v);
}

bool is_odd_prime(u64 p)
{
    return p % 2 == 1 && is_prime(p);
}

u64 mh_of(const BinaryPolyhedral& h)
{
    switch (h.kind) {
    case BinaryPolyhedral::Kind::Q:
        return h.n / 2;
    case BinaryPolyhedral::Kind::Ttilde:
        return 1;
    default:
        return 2;
    }
}

template <class T>
std::set<T> maximal_by_divisibility(const std::set<T>& s)
{
    std::set<T> out;
    for (T a : s) {
        bool maximal = true;
        for (T b : s) {
            if (b != a && b % a == 0)
                maximal = false;
        }
        if (maximal)
            out.insert(a);
    }
    return out;
}

} // namespace

std::string to_string(GroupType t)
{
    switch (t) {
    case GroupType::I: return "I";
    case GroupType::IIa: return "IIa";
    case GroupType::IIb: return "IIb";
    case GroupType::III: return "III";
    case GroupType::IV: return "IV";
    case GroupType::Va: return "Va";
    case GroupType::Vb: return "Vb";
    case GroupType::VI: return "VI";
    }
    return "?";
}

u64 BinaryPolyhedral::order() const
{
    switch (kind) {
    case Kind::Q: return 4 * n;
    case Kind::Ttilde: return 24;
    case Kind::Otilde: return 48;
    case Kind::Itilde: return 120;
    }
    return 0;
}

std::string BinaryPolyhedral::name() const
{
    switch (kind) {
    case Kind::Q: return "Q" + str(4 * n);
    case Kind::Ttilde: return "Ttilde";
    case Kind::Otilde: return "Otilde";
    case Kind::Itilde: return "Itilde";
    }
    return "?";
}

void validate(const PeriodicGroupSpec& spec)
{
    std::visit(overloaded{
        [](const Cyclic& g) { require(g.n >= 1, "Cyclic: n must be positive"); },
        [](const Quaternion& g) {
            require(g.order >= 8 && g.order % 4 == 0, "Quaternion: order must be 4n with n >= 2");
        },
        [](const TypeI& g) {
            require(g.m >= 1 && g.m % 2 == 1, "TypeI: m must be odd and positive");
            require(g.n4 >= 4 && g.n4 % 4 == 0, "TypeI: n must be a positive multiple of 4");
            require(gcd(g.m, g.n4) == 1, "TypeI: gcd(m, n) = 1 violated");
            require(gcd(g.r, g.m) == 1, "TypeI: r must be a unit mod m");
            require(powmod(g.r, g.n4, g.m) == 1 % g.m, "TypeI: r^n = 1 mod m violated");
        },
        [](const TypeII& g) {
            require(g.t >= 1 && g.t % 2 == 1, "TypeII: t must be odd and positive");
            require(g.s >= 1 && g.s % 2 == 1, "TypeII: s must be odd and positive");
            require(gcd(g.s, g.t) == 1, "TypeII: gcd(s, t) = 1 violated");
            require(g.nExp >= 3, "TypeII: nExp must be >= 3");
            require(gcd(g.r, g.t) == 1, "TypeII: r must be a unit mod t");
            require(gcd(g.a, g.t) == 1 && gcd(g.b, g.t) == 1, "TypeII: a, b must be units mod t");
            require(mulmod(g.a, g.a, g.t) == 1 % g.t, "TypeII: a^2 = 1 mod t violated");
            require(mulmod(g.b, g.b, g.t) == 1 % g.t, "TypeII: b^2 = 1 mod t violated");
        },
        [](const BinaryTetra&) {},
        [](const BinaryOcta&) {},
        [](const BinaryIcosa&) {},
        [](const SL2& g) { require(is_odd_prime(g.p), "SL2: p must be an odd prime"); },
        [](const TL2& g) { require(is_odd_prime(g.p), "TL2: p must be an odd prime"); },
        [](const QFamily& g) {
            require(g.nExp >= 3, "QFamily: nExp must be >= 3");
            for (u64 v : {g.a, g.b, g.c})
                require(v >= 1 && v % 2 == 1, "QFamily: a, b, c must be odd and positive");
            require(gcd(g.a, g.b) == 1 && gcd(g.a, g.c) == 1 && gcd(g.b, g.c) == 1,
                    "QFamily: a, b, c must be pairwise coprime");
        },
    }, spec);
}

u64 residue_from_crt(const std::vector<std::pair<i64, u64>>& parts)
{
    std::vector<std::pair<u64, u64>> res;
    for (auto [v, m] : parts)
        res.emplace_back(mod(v, m), m);
    return crt(res);
}

TypeII qfamily_as_typeII(const QFamily& q)
{
    validate(q);
    u64 t = q.a * q.b * q.c;
    u64 a = residue_from_crt({{-1, q.a}, {-1, q.b}, {1, q.c}});
    u64 b = residue_from_crt({{-1, q.a}, {1, q.b}, {-1, q.c}});
    return TypeII{t, 1, 1 % t, q.nExp, a % t, b % t};
}

GroupType classify_type(const PeriodicGroupSpec& spec)
{
    validate(spec);
    return std::visit(overloaded{
        [](const Cyclic&) { return GroupType::I; },
        [](const Quaternion& g) {
            u64 n = g.order / 4;
            if (n % 2 == 1)
                return GroupType::I;
            return nu2(n) == 1 ? GroupType::IIa : GroupType::IIb;
        },
        [](const TypeI&) { return GroupType::I; },
        [](const TypeII& g) { return g.nExp == 3 ? GroupType::IIa : GroupType::IIb; },
        [](const BinaryTetra&) { return GroupType::III; },
        [](const BinaryOcta&) { return GroupType::IV; },
        [](const BinaryIcosa&) { return GroupType::Va; },
        [](const SL2& g) {
            if (g.p == 3)
                return GroupType::III;
            return g.p == 5 ? GroupType::Va : GroupType::Vb;
        },
        [](const TL2& g) { return g.p == 3 ? GroupType::IV : GroupType::VI; },
        [](const QFamily& g) { return g.nExp == 3 ? GroupType::IIa : GroupType::IIb; },
    }, spec);
}

std::set<u64> quaternion_quotients_typeI(const TypeI& g)
{
    validate(g);
    std::set<u64> out;
    for (u64 a : divisors(g.m)) {
        if (a > 1 && (g.r + 1) % a == 0)
            out.insert(a);
    }
    return out;
}

std::set<u64> quaternion_quotients_typeII(const TypeII& g)
{
    validate(g);
    std::set<u64> out;
    for (u64 m : divisors(g.t)) {
        if (g.r % m != 1 % m)
            continue;
        u64 am = g.a % m, bm = g.b % m;
        u64 one = 1 % m, minus = m - 1;
        bool admissible;
        if (g.nExp == 3) {
            admissible = (am == one && bm == minus) || (am == minus && bm == one) ||
                         (am == minus && bm == minus);
        } else {
            admissible = am == one && bm == minus;
        }
        if (m == 1 || admissible)
            out.insert(m);
    }
    return out;
}

namespace {

void check_bm_row(GroupType t, std::size_t count)
{
    bool ok = false;
    switch (t) {
    case GroupType::I: ok = count <= 1; break;
    case GroupType::IIa: ok = count >= 1 && count <= 3; break;
    case GroupType::IIb:
    case GroupType::III:
    case GroupType::IV:
    case GroupType::Va: ok = count == 1; break;
    case GroupType::Vb:
    case GroupType::VI: ok = count == 0; break;
    }
    ensure(ok, "maximal quotient count " + std::to_string(count) + " outside the row for type " + to_string(t));
}

} // namespace

std::set<BinaryPolyhedral> maximal_bpq(const PeriodicGroupSpec& spec)
{
    using K = BinaryPolyhedral::Kind;
    GroupType type = classify_type(spec);
    std::set<BinaryPolyhedral> out;
    auto from_typeII = [&](const TypeII& g) {
        for (u64 m : maximal_by_divisibility(quaternion_quotients_typeII(g)))
            out.insert({K::Q, (u64{1} << (g.nExp - 2)) * m});
    };
    std::visit(overloaded{
        [](const Cyclic&) {},
        [&](const Quaternion& g) { out.insert({K::Q, g.order / 4}); },
        [&](const TypeI& g) {
            for (u64 a : maximal_by_divisibility(quaternion_quotients_typeI(g)))
                out.insert({K::Q, a});
        },
        [&](const TypeII& g) { from_typeII(g); },
        [&](const BinaryTetra&) { out.insert({K::Ttilde, 0}); },
        [&](const BinaryOcta&) { out.insert({K::Otilde, 0}); },
        [&](const BinaryIcosa&) { out.insert({K::Itilde, 0}); },
        [&](const SL2& g) {
            if (g.p == 3)
                out.insert({K::Ttilde, 0});
            else if (g.p == 5)
                out.insert({K::Itilde, 0});
        },
        [&](const TL2& g) {
            if (g.p == 3)
                out.insert({K::Otilde, 0});
        },
        [&](const QFamily& g) { from_typeII(qfamily_as_typeII(g)); },
    }, spec);
    check_bm_row(type, out.size());
    return out;
}

u64 m_H(const PeriodicGroupSpec& spec)
{
    GroupType type = classify_type(spec);
    auto bm = maximal_bpq(spec);
    if (bm.empty())
        return 0;
    if (bm.size() == 1)
        return mh_of(*bm.begin());
    ensure(type == GroupType::IIa, "several maximal quotients outside type IIa");
    u64 total = 1;
    for (const auto& h : bm) {
        ensure(h.kind == BinaryPolyhedral::Kind::Q && h.n % 2 == 0, "type IIa quotient must be Q(8m)");
        total += h.n / 2 - 1;
    }
    return total;
}

MilgramVerdict milgram_nonvanishing(const QFamily& q)
{
    validate(q);
    if (q.nExp == 3) {
        if (q.a != 1 || q.c == 1 || !is_odd_prime(q.b) || !is_odd_prime(q.c) || q.b == q.c)
            throw NotApplicableError("Milgram criterion (i) needs Q(8;p,q) with distinct odd primes p, q");
        u64 p = q.b, r = q.c;
        if (p % 4 == 3 && r % 4 == 3)
            return {true, "p, q = 3 mod 4"};
        if (p % 4 == 3 && r % 8 == 5) {
            u64 ord = mult_order(p % r, r);
            for (u64 n = 1; n <= ord; n += 2) {
                u64 v = powmod(p, n, r);
                if (v == 1 || v == r - 1)
                    return {false, "criterion inapplicable: p^" + str(n) + " = +-1 mod q"};
            }
            return {true, "p = 3 mod 4, q = 5 mod 8, p^n != +-1 mod q for all odd n"};
        }
        return {false, "criterion inapplicable: congruence conditions on p, q not met"};
    }
    if (q.a != 1 || q.c != 1 || !is_odd_prime(q.b))
        throw NotApplicableError("Milgram criterion (ii) needs Q(2^n;p,1) with p an odd prime");
    u64 p = q.b;
    u64 M = u64{1} << (q.nExp - 1);
    if (p % 8 == 1)
        return {false, "criterion inapplicable: p = 1 mod 8"};
    if (p % M == 1 || p % M == M - 1)
        return {false, "criterion inapplicable: p = +-1 mod " + str(M)};
    return {true, "p != 1 mod 8 and p != +-1 mod " + str(M)};
}

AutQ4n aut_compose(const AutQ4n& f, const AutQ4n& g, u64 n)
{
    if (n < 3)
        throw UnsupportedError("Aut(Q_4n) parametrization requires n >= 3");
    u64 N = 2 * n;
    require(gcd(f.a, N) == 1 && gcd(g.a, N) == 1, "automorphism a must be a unit mod 2n");
    return {mulmod(f.a, g.a, N), (mulmod(f.a, g.b, N) + f.b) % N};
}

std::vector<AutQ4n> aut_enumerate(u64 n)
{
    if (n < 3)
        throw UnsupportedError("Aut(Q_4n) parametrization requires n >= 3");
    u64 N = 2 * n;
    std::vector<AutQ4n> out;
    for (u64 a = 1; a < N; ++a) {
        if (gcd(a, N) != 1)
            continue;
        for (u64 b = 0; b < N; ++b)
            out.push_back({a, b});
    }
    return out;
}

json to_json(const PeriodicGroupSpec& spec)
{
    return std::visit(overloaded{
        [](const Cyclic& g) { return json{{"variant", "Cyclic"}, {"n", g.n}}; },
        [](const Quaternion& g) { return json{{"variant", "Quaternion"}, {"order", g.order}}; },
        [](const TypeI& g) { return json{{"variant", "TypeI"}, {"m", g.m}, {"n4", g.n4}, {"r", g.r}}; },
        [](const TypeII& g) {
            return json{{"variant", "TypeII"}, {"t", g.t}, {"s", g.s}, {"r", g.r},
                        {"nExp", g.nExp}, {"a", g.a}, {"b", g.b}};
        },
        [](const BinaryTetra&) { return json{{"variant", "BinaryTetra"}}; },
        [](const BinaryOcta&) { return json{{"variant", "BinaryOcta"}}; },
        [](const BinaryIcosa&) { return json{{"variant", "BinaryIcosa"}}; },
        [](const SL2& g) { return json{{"variant", "SL2"}, {"p", g.p}}; },
        [](const TL2& g) { return json{{"variant", "TL2"}, {"p", g.p}}; },
        [](const QFamily& g) {
            return json{{"variant", "QFamily"}, {"nExp", g.nExp}, {"a", g.a}, {"b", g.b}, {"c", g.c}};
        },
    }, spec);
}

namespace {

i64 json_int(const json& j, const char* key)
{
    require(j.contains(key), std::string("group spec: missing field '") + key + "'");
    require(j[key].is_number_integer(), std::string("group spec: field '") + key + "' must be an integer");
    return j[key].get<i64>();
}

u64 json_pos(const json& j, const char* key)
{
    i64 v = json_int(j, key);
    require(v > 0, std::string("group spec: field '") + key + "' must be positive");
    return static_cast<u64>(v);
}

u64 json_residue(const json& j, const char* key, u64 m)
{
    return mod(json_int(j, key), m);
}

} // namespace

PeriodicGroupSpec spec_from_json(const json& j)
{
    require(j.is_object() && j.contains("variant") && j["variant"].is_string(),
            "group spec: expected an object with a string 'variant'");
    std::string v = j["variant"].get<std::string>();
    PeriodicGroupSpec spec;
    if (v == "Cyclic") {
        spec = Cyclic{json_pos(j, "n")};
    } else if (v == "Quaternion") {
        spec = Quaternion{json_pos(j, "order")};
    } else if (v == "TypeI") {
        u64 m = json_pos(j, "m");
        spec = TypeI{m, json_pos(j, "n4"), json_residue(j, "r", m)};
    } else if (v == "TypeII") {
        u64 t = json_pos(j, "t");
        spec = TypeII{t, json_pos(j, "s"), json_residue(j, "r", t), static_cast<unsigned>(json_pos(j, "nExp")),
                      json_residue(j, "a", t), json_residue(j, "b", t)};
    } else if (v == "BinaryTetra") {
        spec = BinaryTetra{};
    } else if (v == "BinaryOcta") {
        spec = BinaryOcta{};
    } else if (v == "BinaryIcosa") {
        spec = BinaryIcosa{};
    } else if (v == "SL2") {
        spec = SL2{json_pos(j, "p")};
    } else if (v == "TL2") {
        spec = TL2{json_pos(j, "p")};
    } else if (v == "QFamily") {
        spec = QFamily{static_cast<unsigned>(json_pos(j, "nExp")), json_pos(j, "a"), json_pos(j, "b"),
                       json_pos(j, "c")};
    } else {
        throw ValidationError("group spec: unknown variant '" + v + "'");
    }
    validate(spec);
    return spec;
}

namespace {

std::string lower(std::string s)
{
    for (auto& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

i64 parse_int(const std::string& s)
{
    std::size_t pos = 0;
    i64 v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ValidationError("group spec: '" + s + "' is not an integer");
    }
    require(pos == s.size(), "group spec: '" + s + "' is not an integer");
    return v;
}

u64 parse_pos(const std::string& s)
{
    i64 v = parse_int(s);
    require(v > 0, "group spec: '" + s + "' must be positive");
    return static_cast<u64>(v);
}

std::map<std::string, std::string> parse_kv(const std::string& body)
{
    std::map<std::string, std::string> kv;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        require(eq != std::string::npos, "group spec: expected key=value, got '" + item + "'");
        kv[lower(item.substr(0, eq))] = item.substr(eq + 1);
    }
    return kv;
}

std::string take(std::map<std::string, std::string>& kv, const std::string& key, const char* fallback = nullptr)
{
    auto it = kv.find(key);
    if (it == kv.end()) {
        require(fallback != nullptr, "group spec: missing key '" + key + "'");
        return fallback;
    }
    std::string v = it->second;
    kv.erase(it);
    return v;
}

} // namespace

PeriodicGroupSpec parse_group_spec(const std::string& text)
{
    require(!text.empty(), "group spec: empty");
    if (text[0] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ValidationError(std::string("group spec: invalid JSON: ") + e.what());
        }
        return spec_from_json(j);
    }
    // Q(2^n a;b,c)
    if (text.size() > 3 && text[0] == 'Q' && text[1] == '(' && text.back() == ')') {
        std::string inner = text.substr(2, text.size() - 3);
        std::replace(inner.begin(), inner.end(), ';', ',');
        std::stringstream ss(inner);
        std::vector<u64> parts;
        std::string item;
        while (std::getline(ss, item, ','))
            parts.push_back(parse_pos(item));
        require(parts.size() == 3, "group spec: expected Q(2^n a;b,c)");
        unsigned e = nu2(parts[0]);
        PeriodicGroupSpec spec = QFamily{e, parts[0] >> e, parts[1], parts[2]};
        validate(spec);
        return spec;
    }
    std::string t = lower(text);
    std::string head = t, body;
    if (auto colon = t.find(':'); colon != std::string::npos) {
        head = t.substr(0, colon);
        body = text.substr(colon + 1);
    }
    PeriodicGroupSpec spec;
    auto kv = parse_kv(body.find('=') == std::string::npos ? std::string() : body);
    if (body.empty() && head.size() > 1 && (head[0] == 'q' || head[0] == 'c') &&
        std::all_of(head.begin() + 1, head.end(), ::isdigit)) {
        u64 v = parse_pos(head.substr(1));
        spec = head[0] == 'q' ? PeriodicGroupSpec{Quaternion{v}} : PeriodicGroupSpec{Cyclic{v}};
    } else if (head == "cyclic") {
        spec = Cyclic{parse_pos(take(kv, "n"))};
    } else if (head == "quaternion") {
        spec = Quaternion{parse_pos(take(kv, "order"))};
    } else if (head == "typei") {
        u64 m = parse_pos(take(kv, "m"));
        std::string n = kv.count("n4") ? take(kv, "n4") : take(kv, "n");
        spec = TypeI{m, parse_pos(n), mod(parse_int(take(kv, "r")), m)};
    } else if (head == "typeii") {
        u64 tt = parse_pos(take(kv, "t"));
        std::string n = kv.count("nexp") ? take(kv, "nexp") : take(kv, "n");
        spec = TypeII{tt, parse_pos(take(kv, "s", "1")), mod(parse_int(take(kv, "r", "1")), tt),
                      static_cast<unsigned>(parse_pos(n)), mod(parse_int(take(kv, "a")), tt),
                      mod(parse_int(take(kv, "b")), tt)};
    } else if (head == "qfam" || head == "qfamily") {
        std::string n = kv.count("nexp") ? take(kv, "nexp") : take(kv, "n");
        spec = QFamily{static_cast<unsigned>(parse_pos(n)), parse_pos(take(kv, "a", "1")),
                       parse_pos(take(kv, "b")), parse_pos(take(kv, "c", "1"))};
    } else if (head == "ttilde" || head == "binarytetra") {
        spec = BinaryTetra{};
    } else if (head == "otilde" || head == "binaryocta") {
        spec = BinaryOcta{};
    } else if (head == "itilde" || head == "binaryicosa") {
        spec = BinaryIcosa{};
    } else if (head == "sl2" || head == "tl2") {
        u64 p = kv.empty() ? parse_pos(body) : parse_pos(take(kv, "p"));
        spec = head == "sl2" ? PeriodicGroupSpec{SL2{p}} : PeriodicGroupSpec{TL2{p}};
    } else {
        throw ValidationError("group spec: unrecognized form '" + text + "'");
    }
    require(kv.empty(), "group spec: unexpected key '" + (kv.empty() ? std::string() : kv.begin()->first) + "'");
    validate(spec);
    return spec;
}

} // namespace periodica
