#ifndef CIM_ACCEPTANCE_HPP
#define CIM_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cim/config.hpp"

namespace cim {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full verification matrix; one result per criterion. Progress
// lines go to `log` when non-null.
std::vector<CriterionResult> run_acceptance(const Caps& caps, std::ostream* log = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

// The worked 4x4 example collection used across the suite.
std::string sample_collection_json();

} // namespace cim

#endif
