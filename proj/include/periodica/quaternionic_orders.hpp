#pragma once

#include "periodica/numtheory.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace periodica {

struct OrderSpec {
    std::vector<u64> indices; // sorted, distinct
    unsigned r;               // common 2-adic valuation
    u64 ambient;              // smallest n with n_i not dividing n and n_i | 2n
};

OrderSpec validate_order_spec(std::vector<u64> indices);
OrderSpec parse_order_spec(const std::string& text);
std::string to_string(const OrderSpec& spec);

struct RatioGraph {
    std::vector<u64> vertices;
    std::vector<std::pair<u64, u64>> edges;
};

// a/b or b/a is a power of a single prime.
bool ratio_edge(u64 a, u64 b);
RatioGraph ratio_graph(const OrderSpec& spec);
std::vector<std::vector<u64>> connected_components(const RatioGraph& g);

struct SfcStep {
    std::string rule;
    std::string detail;
};

struct SfcVerdict {
    bool verdict;
    std::vector<SfcStep> trace;
};

SfcVerdict has_sfc(const OrderSpec& spec);

// Data tables behind the classifier.
const std::set<u64>& sfc_singletons();
const std::vector<std::set<u64>>& forbidden_subsets();
const std::vector<std::set<u64>>& connected_sfc_rows();
const std::set<u64>& star_set(unsigned r);
// Orders with stably free cancellation as a flat list.
const std::vector<std::set<u64>>& sfc_literal_list();

OrderSpec q4n_noncancellation_witness(u64 n);

enum class Tristate { False, True, Unknown };
std::string to_string(Tristate t);
Tristate defect_trivial(const OrderSpec& spec);

} // namespace periodica
