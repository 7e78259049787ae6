#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "umbral/qseries.hpp"

namespace umbral {

/// Builds one side of an identity; the argument is a working order and
/// the result may fall short of it (verification retries with headroom).
using SeriesFn = std::function<QSeries(const Rat& order)>;

/// A named identity lhs = rhs. When the printed form of a formula is known
/// to be wrong, the printed side is kept next to the corrected one.
struct IdentityRecord {
  std::string name;
  std::string citation;
  Rat default_order;
  std::string status_notes;
  std::vector<std::string> tags;
  SeriesFn lhs, rhs;
  SeriesFn printed_lhs, printed_rhs;

  bool has_printed_variant() const { return bool(printed_lhs) || bool(printed_rhs); }
};

/// Every identity, in a fixed order. Built once, never modified.
const std::vector<IdentityRecord>& catalogue();

/// "all", an exact name, or else every record whose name starts with the
/// selector or that carries it as a tag. Catalogue order is kept.
std::vector<const IdentityRecord*> select_records(const std::string& selector);

struct VerifyOptions {
  std::optional<Rat> order;      // default_order when empty
  bool strict_typos = false;     // use the printed variants
  std::optional<Rat> fault_at;   // add q^e to the right-hand side
};

enum class VerifyStatus { Pass, Mismatch, Error };
const char* status_name(VerifyStatus s);

struct VerifyReport {
  std::string name;
  std::string citation;
  Rat order;
  VerifyStatus status = VerifyStatus::Pass;
  Rat checked_to;            // Pass
  Rat exponent;              // Mismatch: first differing exponent
  CycNum lhs_coeff, rhs_coeff;
  std::string error;         // Error: what the builder threw
  bool used_printed = false;
};

VerifyReport verify(const IdentityRecord& record, const VerifyOptions& opt = {});

}  // namespace umbral
