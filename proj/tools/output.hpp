#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "umbral/catalogue.hpp"
#include "umbral/functions.hpp"

namespace umbral::cli {

enum class Format { Text, Json, Csv };

nlohmann::ordered_json cyc_json(const CycNum& c);
nlohmann::ordered_json series_json(const QSeries& s);
nlohmann::ordered_json jacobi_json(const JacobiSeries& j);

/// "q^{1/24}"; "y^{-1/2}"
std::string power(const char* var, const Rat& e);
/// Bare rationals as is, anything else in parentheses.
std::string coeff_text(const CycNum& c);

void write_expansion(std::ostream& os, const Expansion& e, Format f);
void write_catalogue(std::ostream& os, const std::vector<const IdentityRecord*>& recs, Format f);
void write_reports(std::ostream& os, const std::vector<VerifyReport>& reps, Format f);

}  // namespace umbral::cli
