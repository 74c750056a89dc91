#pragma once

#include "periodica/numtheory.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <variant>
#include <vector>

namespace periodica {

struct Cyclic { u64 n; bool operator==(const Cyclic&) const = default; };
struct Quaternion { u64 order; bool operator==(const Quaternion&) const = default; };
struct TypeI { u64 m, n4, r; bool operator==(const TypeI&) const = default; };
// C_t x C_s extended by Q_{2^nExp}; (a, b) is the action of (x, y) on C_t, r the action on C_s.
struct TypeII { u64 t, s, r; unsigned nExp; u64 a, b; bool operator==(const TypeII&) const = default; };
struct BinaryTetra { bool operator==(const BinaryTetra&) const = default; };
struct BinaryOcta { bool operator==(const BinaryOcta&) const = default; };
struct BinaryIcosa { bool operator==(const BinaryIcosa&) const = default; };
struct SL2 { u64 p; bool operator==(const SL2&) const = default; };
struct TL2 { u64 p; bool operator==(const TL2&) const = default; };
// Q(2^nExp a; b, c).
struct QFamily { unsigned nExp; u64 a, b, c; bool operator==(const QFamily&) const = default; };

using PeriodicGroupSpec = std::variant<Cyclic, Quaternion, TypeI, TypeII, BinaryTetra, BinaryOcta,
                                       BinaryIcosa, SL2, TL2, QFamily>;

enum class GroupType { I, IIa, IIb, III, IV, Va, Vb, VI };
std::string to_string(GroupType t);

struct BinaryPolyhedral {
    enum class Kind { Q, Ttilde, Otilde, Itilde };
    Kind kind;
    u64 n = 0; // Q(4n)

    u64 order() const;
    std::string name() const;
    auto operator<=>(const BinaryPolyhedral&) const = default;
};

struct AutQ4n {
    u64 a, b;
    auto operator<=>(const AutQ4n&) const = default;
};

void validate(const PeriodicGroupSpec& spec);

// TypeII spec equivalent to Q(2^nExp a; b, c).
TypeII qfamily_as_typeII(const QFamily& q);

// Residue mod the product of the moduli from per-modulus residues (signed).
u64 residue_from_crt(const std::vector<std::pair<i64, u64>>& parts);

GroupType classify_type(const PeriodicGroupSpec& spec);
std::set<u64> quaternion_quotients_typeI(const TypeI& g);
std::set<u64> quaternion_quotients_typeII(const TypeII& g);
std::set<BinaryPolyhedral> maximal_bpq(const PeriodicGroupSpec& spec);
u64 m_H(const PeriodicGroupSpec& spec);

struct MilgramVerdict {
    bool nonvanishing;
    std::string reason;
};
MilgramVerdict milgram_nonvanishing(const QFamily& q);

AutQ4n aut_compose(const AutQ4n& f, const AutQ4n& g, u64 n);
std::vector<AutQ4n> aut_enumerate(u64 n);

nlohmann::json to_json(const PeriodicGroupSpec& spec);
PeriodicGroupSpec spec_from_json(const nlohmann::json& j);
// Short forms such as "q28", "typeI:m=15,n=4,r=14", "sl2:7"; a leading '{' parses JSON.
PeriodicGroupSpec parse_group_spec(const std::string& text);

} // namespace periodica
