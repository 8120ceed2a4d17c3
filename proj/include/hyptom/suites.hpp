#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyptom/constructions.hpp"
#include "hyptom/io.hpp"

namespace hyptom {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;     // measured quantity
    double tolerance = 0.0; // bound it was held against
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::string anchor;
    std::string statement;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteReport> run_all_suites(std::uint64_t seed);

json to_json(const SuiteReport& R);

// shared fixtures
HPoint fix_origin();
Geodesic fix_axis();   // the line through uhp(0,1) and uhp(0,e)
Geodesic fix_gamma();  // perpendicular to it at uhp(0,1)
Body fix_reuleaux();   // center uhp(0,1), circumradius 1

} // namespace hyptom
