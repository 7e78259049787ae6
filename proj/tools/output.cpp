#include "output.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

namespace umbral::cli {

using json = nlohmann::ordered_json;

namespace {

json big(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct JTerm {
  Rat q, y;
  CycNum c;
};

std::vector<JTerm> jacobi_terms(const JacobiSeries& j) {
  std::vector<JTerm> out;
  for (const auto& [l2, col] : j.columns()) {
    Rat y(l2, 2);
    y.canonicalize();
    col.truncate(j.q_valid_to()).for_each_term([&](const Rat& e, const CycNum& c) { out.push_back({e, y, c}); });
  }
  std::sort(out.begin(), out.end(), [](const JTerm& a, const JTerm& b) { return std::tie(a.q, a.y) < std::tie(b.q, b.y); });
  return out;
}

}  // namespace

json cyc_json(const CycNum& c) {
  json coeffs = json::array();
  const auto& v = c.coeffs();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    coeffs.push_back({k, big(v[k].get_num()), big(v[k].get_den())});
  }
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

json series_json(const QSeries& s) {
  json terms = json::array();
  s.for_each_term([&](const Rat& e, const CycNum& c) {
    terms.push_back({{"exp_num", big(e.get_num())}, {"exp_den", big(e.get_den())}, {"coeff", cyc_json(c)}});
  });
  return {{"min_exp", s.min_exp().get_str()}, {"valid_to", s.valid_to().get_str()}, {"terms", terms}};
}

json jacobi_json(const JacobiSeries& j) {
  json terms = json::array();
  Rat lowest = j.q_valid_to();
  for (const auto& t : jacobi_terms(j)) {
    lowest = std::min(lowest, t.q);
    terms.push_back({{"y_num", big(t.y.get_num())},
                     {"y_den", big(t.y.get_den())},
                     {"exp_num", big(t.q.get_num())},
                     {"exp_den", big(t.q.get_den())},
                     {"coeff", cyc_json(t.c)}});
  }
  Rat lo(j.lo2(), 2), hi(j.hi2(), 2);
  lo.canonicalize();
  hi.canonicalize();
  return {{"min_exp", lowest.get_str()},
          {"valid_to", j.q_valid_to().get_str()},
          {"y_window", {lo.get_str(), hi.get_str()}},
          {"terms", terms}};
}

std::string power(const char* var, const Rat& e) { return std::string(var) + "^{" + e.get_str() + "}"; }

std::string coeff_text(const CycNum& c) {
  if (c.to_rational()) return c.to_string();
  return "(" + c.to_string() + ")";
}

void write_expansion(std::ostream& os, const Expansion& e, Format f) {
  if (e.jacobi) {
    const auto terms = jacobi_terms(*e.jacobi);
    switch (f) {
      case Format::Json:
        os << jacobi_json(*e.jacobi).dump(2) << "\n";
        return;
      case Format::Csv:
        os << "y_num,y_den,exp_num,exp_den,coeff\n";
        for (const auto& t : terms) {
          os << t.y.get_num().get_str() << "," << t.y.get_den().get_str() << "," << t.q.get_num().get_str() << ","
             << t.q.get_den().get_str() << "," << csv_field(t.c.to_string()) << "\n";
        }
        return;
      case Format::Text:
        for (const auto& t : terms) os << coeff_text(t.c) << " · " << power("y", t.y) << " " << power("q", t.q) << "\n";
        os << "O(" << power("q", e.jacobi->q_valid_to()) << ")\n";
        return;
    }
  }
  switch (f) {
    case Format::Json:
      os << series_json(e.q).dump(2) << "\n";
      return;
    case Format::Csv:
      os << "exp_num,exp_den,coeff\n";
      e.q.for_each_term([&](const Rat& x, const CycNum& c) {
        os << x.get_num().get_str() << "," << x.get_den().get_str() << "," << csv_field(c.to_string()) << "\n";
      });
      return;
    case Format::Text:
      e.q.for_each_term([&](const Rat& x, const CycNum& c) { os << coeff_text(c) << " · " << power("q", x) << "\n"; });
      os << "O(" << power("q", e.q.valid_to()) << ")\n";
      return;
  }
}

void write_catalogue(std::ostream& os, const std::vector<const IdentityRecord*>& recs, Format f) {
  switch (f) {
    case Format::Json: {
      json out = json::array();
      for (const auto* r : recs) {
        out.push_back({{"name", r->name},
                       {"citation", r->citation},
                       {"default_order", r->default_order.get_str()},
                       {"status_notes", r->status_notes}});
      }
      os << out.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      os << "name,citation,default_order,status_notes\n";
      for (const auto* r : recs) {
        os << csv_field(r->name) << "," << csv_field(r->citation) << "," << r->default_order.get_str() << ","
           << csv_field(r->status_notes) << "\n";
      }
      return;
    case Format::Text:
      for (const auto* r : recs) {
        os << r->name << "  [" << r->citation << "]  order " << r->default_order.get_str();
        if (!r->status_notes.empty()) os << "  -- " << r->status_notes;
        os << "\n";
      }
      return;
  }
}

void write_reports(std::ostream& os, const std::vector<VerifyReport>& reps, Format f) {
  std::size_t passed = 0;
  for (const auto& r : reps) passed += r.status == VerifyStatus::Pass;
  switch (f) {
    case Format::Json: {
      json results = json::array();
      for (const auto& r : reps) {
        json j = {{"name", r.name},
                  {"citation", r.citation},
                  {"status", status_name(r.status)},
                  {"order", r.order.get_str()},
                  {"printed_variant", r.used_printed}};
        j["checked_to"] = r.status == VerifyStatus::Pass ? json(r.checked_to.get_str()) : json(nullptr);
        if (r.status == VerifyStatus::Mismatch) {
          j["mismatch"] = {{"exponent", r.exponent.get_str()}, {"lhs", cyc_json(r.lhs_coeff)}, {"rhs", cyc_json(r.rhs_coeff)}};
        } else {
          j["mismatch"] = nullptr;
        }
        if (r.status == VerifyStatus::Error) j["error"] = r.error;
        results.push_back(std::move(j));
      }
      json out = {{"results", results},
                  {"summary", {{"total", reps.size()}, {"passed", passed}, {"failed", reps.size() - passed}}}};
      os << out.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      os << "name,citation,status,order,checked_to,mismatch_exponent,lhs,rhs\n";
      for (const auto& r : reps) {
        const bool mm = r.status == VerifyStatus::Mismatch;
        os << csv_field(r.name) << "," << csv_field(r.citation) << "," << status_name(r.status) << ","
           << r.order.get_str() << "," << (r.status == VerifyStatus::Pass ? r.checked_to.get_str() : "") << ","
           << (mm ? r.exponent.get_str() : "") << "," << (mm ? csv_field(r.lhs_coeff.to_string()) : "") << ","
           << (mm ? csv_field(r.rhs_coeff.to_string()) : "") << "\n";
      }
      return;
    case Format::Text:
      for (const auto& r : reps) {
        switch (r.status) {
          case VerifyStatus::Pass:
            os << "PASS  " << r.name << "  [" << r.citation << "]  to " << power("q", r.checked_to);
            break;
          case VerifyStatus::Mismatch:
            os << "FAIL  " << r.name << "  [" << r.citation << "]  first mismatch at " << power("q", r.exponent) << ": lhs "
               << r.lhs_coeff.to_string() << ", rhs " << r.rhs_coeff.to_string();
            break;
          case VerifyStatus::Error:
            os << "ERROR " << r.name << "  [" << r.citation << "]  " << r.error;
            break;
        }
        if (r.used_printed) os << "  (printed variant)";
        os << "\n";
      }
      os << reps.size() << " identities, " << passed << " passed, " << reps.size() - passed << " failed\n";
      return;
  }
}

}  // namespace umbral::cli
