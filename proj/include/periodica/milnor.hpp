#pragma once

#include "periodica/finite_ring.hpp"
#include "periodica/fixtures.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace periodica {

struct MilnorSetup {
    MilnorFixture fixture;
    std::shared_ptr<const FiniteQuotientRing> base;
    std::shared_ptr<const CrossedQuaternionRing> quaternion; // null unless the fixture asks for R[j]
    std::vector<u32> U1, U2;

    const UnitRing& ring() const;
    u32 element(const FixtureElement& e) const;
};

MilnorSetup build_milnor_setup(const MilnorFixture& fixture);

// Each pipeline returns {"ok", "checks", "first_deviation"?, ...results}.
nlohmann::json q28_pipeline();
nlohmann::json l218_pipeline();
nlohmann::json l1030_pipeline();
// Dispatches the three named pipelines; other fixtures get cosets and expected_cosets only.
nlohmann::json run_milnor(const std::string& name);

} // namespace periodica
