#pragma once

#include <string>

#include <json.hpp>

#include "arrtop/complement.hpp"
#include "arrtop/koszul.hpp"
#include "arrtop/milnor.hpp"

namespace arrtop {

using ordered_json = nlohmann::ordered_json;

// [{"degree": 0, "rank": 1, "torsion": []}, ...], ascending degree.
ordered_json homology_to_json(const GradedAbelianGroup& group);

std::string complement_report_to_text(const ComplementReport& report);
ordered_json complement_report_to_json(const ComplementReport& report);

std::string milnor_report_to_text(const MilnorReport& report,
                                  const MonomialIdeal& ideal);
ordered_json milnor_report_to_json(const MilnorReport& report,
                                   const MonomialIdeal& ideal);

std::string formality_report_to_text(const KoszulModel& model,
                                     const FormalityReport& report);
ordered_json formality_report_to_json(const KoszulModel& model,
                                      const FormalityReport& report);

// One generator per line ("1" for the unit ideal, no lines for the zero
// ideal) — grep- and diff-friendly.
std::string union_ideal_to_text(const MonomialIdeal& ideal);
ordered_json union_ideal_to_json(const MonomialIdeal& ideal);

}  // namespace arrtop
