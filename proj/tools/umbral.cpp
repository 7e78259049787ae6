#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "output.hpp"

using namespace umbral;
using umbral::cli::Format;

namespace {

constexpr int kPass = 0, kMismatch = 1, kUsage = 2;

struct Settings {
  std::string order = "20";
  std::string format = "text";
  unsigned jobs = 1;
  bool strict_typos = false;
  std::string fault;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw ParamError("parameters are key=value, got '" + it + "'");
    if (!p.emplace(it.substr(0, eq), it.substr(eq + 1)).second) throw ParamError("parameter given twice: '" + it + "'");
  }
  return p;
}

std::vector<VerifyReport> run_all(const std::vector<const IdentityRecord*>& recs, const VerifyOptions& opt,
                                  unsigned jobs) {
  std::vector<VerifyReport> out(recs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < recs.size();) out[i] = verify(*recs[i], opt);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(recs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series of umbral McKay-Thompson series, mock theta functions and cone traces"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  auto* order_opt = app.add_option("--order", s.order, "q-order as a rational, e.g. 20 or 41/2")->capture_default_str();
  app.add_option("--format", s.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", s.jobs, "parallel verification jobs (0: one per core)")->capture_default_str();
  app.add_flag("--strict-typos", s.strict_typos, "use the printed form of known misprints instead of the corrected one");
  app.add_option("--inject-fault", s.fault, "add q^EXP to every right-hand side (checks the failure path)");
  app.set_config("--config", "", "key=value file mirroring the flags; command-line flags win");

  std::string fn_name;
  std::vector<std::string> fn_params;
  auto* expand = app.add_subcommand("expand", "expand a named function");
  expand->add_option("name", fn_name, "registry name, e.g. eta, mock:f, chi:K, cone_trace")->required();
  expand->add_option("params", fn_params, "key=value parameters");

  std::string selector = "all";
  auto* verify_cmd = app.add_subcommand("verify", "verify identities");
  verify_cmd->add_option("selector", selector, "identity name, name prefix, tag, or all")->capture_default_str();

  std::string filter = "all";
  auto* list = app.add_subcommand("list", "list catalogued identities");
  list->add_option("filter", filter, "name prefix, tag, or all")->capture_default_str();

  auto* functions = app.add_subcommand("functions", "list the names accepted by expand");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  const Format fmt = parse_format(s.format);
  try {
    const Rat order = parse_rational(s.order);
    std::optional<Rat> fault;
    if (!s.fault.empty()) fault = parse_rational(s.fault);

    if (*functions) {
      for (const auto& f : named_functions()) {
        std::cout << f.name;
        for (const auto& p : f.params) std::cout << " " << p;
        std::cout << "  -- " << f.summary << "\n";
      }
      return kPass;
    }
    if (*list) {
      cli::write_catalogue(std::cout, select_records(filter), fmt);
      return kPass;
    }
    if (*expand) {
      if (order <= 0) throw ParamError("--order must be positive");
      const Expansion e = expand_function(fn_name, parse_params(fn_params), order);
      cli::write_expansion(std::cout, e, fmt);
      return kPass;
    }
    const auto recs = select_records(selector);
    if (recs.empty()) throw ParamError("no identity matches '" + selector + "'");
    VerifyOptions opt;
    if (order_opt->count() > 0) opt.order = order;
    opt.strict_typos = s.strict_typos;
    opt.fault_at = fault;
    const unsigned jobs = s.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : s.jobs;
    const auto reports = run_all(recs, opt, jobs);
    cli::write_reports(std::cout, reports, fmt);
    const bool ok = std::all_of(reports.begin(), reports.end(),
                                [](const VerifyReport& r) { return r.status == VerifyStatus::Pass; });
    return ok ? kPass : kMismatch;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
