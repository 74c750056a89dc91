#pragma once

#include "periodica/interval.hpp"
#include "periodica/periodic_groups.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace periodica {

// Swan module (I, r) over a group of order N; r is stored reduced mod N.
struct SwanClass {
    u64 N;
    u64 r;

    SwanClass(u64 N, i64 r);
    bool is_free() const { return r == 1 % N; }
    bool operator==(const SwanClass&) const = default;
};

SwanClass swan_product(const SwanClass& a, const SwanClass& b);
SwanClass induce_swan(const SwanClass& a, u64 M);
bool swan_trivializes_under(i64 psi_augmentation, i64 r);

struct CancellationVerdict {
    u64 m_H;
    bool cancellation;
    std::string reason;
};

CancellationVerdict cancellation_predicate_swan_class(const PeriodicGroupSpec& spec);

// Minimal level of a fork-shaped stable class; actions are permutations of the vertex list.
struct GradedStableClass {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::size_t>> action;
    int grade_offset = 0;
};

bool fork_cancellation(const GradedStableClass& cls);
bool fork_cancellation_mod_action(const GradedStableClass& cls);
std::size_t fork_orbit_count(const GradedStableClass& cls);

struct SwanFact {
    std::string group;
    std::string statement;
};

// Recorded T_G facts for small quaternion groups; nullopt when none is recorded.
std::optional<SwanFact> tg_fact(const std::string& group);

struct NLowerBound {
    u64 m_H;
    u64 n0;
    u64 argmin_n;        // n >= n0 attaining the finite minimum
    Interval log_bound;  // enclosure of log(bound(2n)/(2n phi(2n))) at argmin_n
    mpz_class certified; // max(1, ceil(exp(log_bound.lo)))
    u64 n_cut;           // n >= n_cut covered by the analytic tail estimate
    double tail_log_min; // lower bound of the log over the tail
};

// Infimum over n >= n0 of class_set_lower_bound(2n) / (2n phi(2n)), n0 = max(ceil(2 m_H / 3), 6).
NLowerBound N_lower_bound(u64 m_H);

} // namespace periodica
