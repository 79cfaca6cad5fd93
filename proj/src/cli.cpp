#include "fermat/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "fermat/error.hpp"
#include "fermat/report.hpp"
#include "fermat/suites.hpp"

namespace fermat {

namespace {

using Clock = std::chrono::steady_clock;

/// Full-group verification is capped here unless --allow-large is given.
constexpr std::int64_t kFullDepthBound = 31;

struct Stopwatch {
  Clock::time_point start = Clock::now();
  std::map<std::string, double> laps;

  void lap(const std::string& stage) {
    const auto now = Clock::now();
    laps[stage] = std::chrono::duration<double, std::milli>(now - start).count();
    start = now;
  }
};

struct CommonFlags {
  std::int64_t p = 0;
  std::string format = "text";
  bool timings = false;
};

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime:
    case ErrorCode::kTooSmall:
    case ErrorCode::kTooLarge:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kInvalidArgument:
      return true;
    default:
      return false;
  }
}

void fill_orbits(Report& r, const PrimeContext& ctx) {
  r.p = ctx.p();
  r.orbits = summarize(orbit_partition(ctx));
  if (ctx.has_gamma()) r.gamma_roots = std::vector<Residue>{ctx.gamma_pair()->first, ctx.gamma_pair()->second};
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  out << (format == "json" ? to_json_text(r) : to_text(r));
}

std::vector<IsogenyDecomposition> decompositions(const PrimeContext& ctx, const std::string& level,
                                                 std::optional<AuditMethod> method) {
  std::vector<IsogenyDecomposition> out;
  if (level != "fine") out.push_back(decompose_coarse(ctx, method));
  if (level != "coarse") out.push_back(decompose_fine(ctx, method));
  return out;
}

void add_decompositions(Report& r, const std::vector<IsogenyDecomposition>& ds) {
  for (const auto& d : ds) {
    r.decompositions.push_back(summarize(d));
    const auto checks = audit_checks(d);
    r.checks.insert(r.checks.end(), checks.begin(), checks.end());
    if (d.refinement) r.refinement = summarize(*d.refinement);
  }
  if (!ds.empty()) r.provenance.audit_method = std::string(to_string(ds.front().audit.method));
}

Report orbits_report(const PrimeContext& ctx) {
  Report r;
  r.command = "orbits";
  fill_orbits(r, ctx);
  r.provenance.audit_method = "none";
  return r;
}

Report decompose_report(const PrimeContext& ctx, const std::string& level, std::optional<AuditMethod> method,
                        bool timings) {
  Stopwatch clock;
  Report r;
  r.command = "decompose";
  fill_orbits(r, ctx);
  clock.lap("orbits");
  add_decompositions(r, decompositions(ctx, level, method));
  clock.lap("decompose");
  if (timings) r.provenance.timings_ms = clock.laps;
  return r;
}

/// Basic depth: orbit law, both decompositions with their audits, monomial
/// relations. Full depth adds the dual genus oracle and the certificates.
Report verify_report(const PrimeContext& ctx, bool full, std::int64_t triple_bound, bool timings) {
  Stopwatch clock;
  Report r;
  r.command = "verify";
  fill_orbits(r, ctx);
  r.checks = orbit_law_checks(ctx);
  clock.lap("orbits");
  try {
    add_decompositions(r, decompositions(ctx, "both", std::nullopt));
  } catch (const Error& e) {
    r.checks.push_back({"decompose", false, e.what()});
  }
  clock.lap("decompose");
  const auto mono = monomial_checks(ctx);
  r.checks.insert(r.checks.end(), mono.begin(), mono.end());
  r.monomial = monomial_summary(ctx);
  clock.lap("monomial");
  if (full) {
    const FermatGroup group(ctx);
    const auto triple = find_generating_triple(group, triple_bound);
    r.provenance.triple = std::vector<std::string>{group.to_string(triple.c2), group.to_string(triple.c3),
                                                   group.to_string(triple.c2p)};
    const auto dual = dual_oracle_checks(group, triple);
    r.checks.insert(r.checks.end(), dual.begin(), dual.end());
    clock.lap("dual_oracle");
    const auto cert = certificate_checks(group, triple);
    r.checks.insert(r.checks.end(), cert.begin(), cert.end());
    clock.lap("certificates");
  }
  if (timings) r.provenance.timings_ms = clock.laps;
  return r;
}

struct SweepRow {
  std::int64_t p = 0;
  bool passed = false;
  std::string coarse;
  std::string fine;
  std::int64_t orbit_count = 0;
  std::int64_t orbit_size_sum = 0;
  std::string first_failure;
};

SweepRow sweep_row(std::int64_t p, bool full, std::int64_t triple_bound) {
  SweepRow row;
  row.p = p;
  try {
    const auto r = verify_report(make_context(p), full, triple_bound, false);
    row.passed = r.passed();
    for (const auto& d : r.decompositions) (d.level == "coarse" ? row.coarse : row.fine) = d.text;
    row.orbit_count = static_cast<std::int64_t>(r.orbits.orbits.size());
    for (const auto& o : r.orbits.orbits) row.orbit_size_sum += static_cast<std::int64_t>(o.elements.size());
    for (const auto& c : r.checks) {
      if (!c.pass) {
        row.first_failure = c.name;
        break;
      }
    }
  } catch (const Error& e) {
    row.passed = false;
    row.first_failure = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const std::vector<std::int64_t>& primes, bool full, std::int64_t triple_bound,
                                unsigned jobs) {
  std::vector<SweepRow> rows(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) rows[i] = sweep_row(primes[i], full, triple_bound);
  };
  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(primes.size(), 1));
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

void emit_sweep(const std::vector<SweepRow>& rows, std::int64_t from, std::int64_t to, const std::string& depth,
                const std::string& format, std::ostream& out) {
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed; });
  if (format == "json") {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
      rows_json.push_back({{"p", r.p},
                           {"passed", r.passed},
                           {"coarse", r.coarse},
                           {"fine", r.fine},
                           {"orbit_count", r.orbit_count},
                           {"orbit_size_sum", r.orbit_size_sum},
                           {"first_failure", r.first_failure}});
    }
    const nlohmann::json j{{"schema_version", kSchemaVersion},
                           {"command", "sweep"},
                           {"from", from},
                           {"to", to},
                           {"depth", depth},
                           {"rows", rows_json},
                           {"primes", rows.size()},
                           {"passed", passed}};
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& r : rows) {
    out << r.p << "  " << (r.passed ? "PASS" : "FAIL") << "  " << r.coarse << "  |  " << r.fine << "  orbits "
        << r.orbit_count << ", sizes sum " << r.orbit_size_sum;
    if (!r.first_failure.empty()) out << "  first failure: " << r.first_failure;
    out << "\n";
  }
  out << rows.size() << " primes, " << passed << " PASS\n";
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isogeny decomposition of Fermat curve Jacobians, p >= 5 prime"};
  app.name("fermat");
  app.require_subcommand(1);

  CommonFlags orbit_flags;
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit partition of {1, ..., p-2} under S3");
  orbits_cmd->add_option("--p", orbit_flags.p, "Prime p >= 5")->required();
  add_common(orbits_cmd, orbit_flags);

  CommonFlags dec_flags;
  std::string level = "both";
  std::string audit_method;
  auto* decompose_cmd = app.add_subcommand("decompose", "Coarse and fine decomposition of JF(p) with audits");
  decompose_cmd->add_option("--p", dec_flags.p, "Prime p >= 5")->required();
  decompose_cmd->add_option("--level", level, "coarse, fine or both")
      ->check(CLI::IsMember({"coarse", "fine", "both"}));
  decompose_cmd->add_option("--audit-method", audit_method, "Kani-Rosen audit: explicit or structured")
      ->check(CLI::IsMember({"explicit", "structured"}));
  decompose_cmd->add_flag("--timings", dec_flags.timings, "Include stage timings");
  add_common(decompose_cmd, dec_flags);

  CommonFlags ver_flags;
  std::string depth = "basic";
  bool allow_large = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--p", ver_flags.p, "Prime p >= 5")->required();
  verify_cmd->add_option("--depth", depth, "basic or full")->check(CLI::IsMember({"basic", "full"}));
  verify_cmd->add_flag("--allow-large", allow_large, "Allow --depth full above p = 31");
  verify_cmd->add_flag("--timings", ver_flags.timings, "Include stage timings");
  add_common(verify_cmd, ver_flags);

  CommonFlags sweep_flags;
  std::int64_t from = 0, to = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string sweep_depth = "basic";
  bool sweep_allow_large = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every prime in [from, to]");
  sweep_cmd->add_option("--from", from, "Lower bound, at least 5")->required();
  sweep_cmd->add_option("--to", to, "Upper bound")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--depth", sweep_depth, "basic or full")->check(CLI::IsMember({"basic", "full"}));
  sweep_cmd->add_flag("--allow-large", sweep_allow_large, "Allow --depth full above p = 31");
  add_common(sweep_cmd, sweep_flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (orbits_cmd->parsed()) {
      emit(orbits_report(make_context(orbit_flags.p)), orbit_flags.format, out);
      return kExitOk;
    }
    if (decompose_cmd->parsed()) {
      const auto ctx = make_context(dec_flags.p);
      std::optional<AuditMethod> method;
      if (!audit_method.empty()) method = parse_audit_method(audit_method);
      const auto r = decompose_report(ctx, level, method, dec_flags.timings);
      emit(r, dec_flags.format, out);
      if (!r.passed()) {
        const auto bad = std::find_if(r.checks.begin(), r.checks.end(), [](const CheckEntry& c) { return !c.pass; });
        err << "AUDIT_FAIL: " << bad->name << "\n";
        return kExitAuditFail;
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto ctx = make_context(ver_flags.p);
      const bool full = depth == "full";
      if (full && ctx.p() > kFullDepthBound && !allow_large) {
        err << "error: --depth full is limited to p <= " << kFullDepthBound << "; pass --allow-large to override\n";
        return kExitUsage;
      }
      const auto bound = std::max(kDefaultTripleSearchBound, ctx.p());
      const auto r = verify_report(ctx, full, bound, ver_flags.timings);
      emit(r, ver_flags.format, out);
      const auto bad = std::find_if(r.checks.begin(), r.checks.end(), [](const CheckEntry& c) { return !c.pass; });
      if (bad != r.checks.end()) {
        err << "FAIL: " << bad->name << "  " << bad->detail << "\n";
        return kExitVerifyFail;
      }
      return kExitOk;
    }
    if (sweep_cmd->parsed()) {
      if (from < 5 || from > to || to > kMaxPrime) {
        err << "error: need 5 <= from <= to <= " << kMaxPrime << "\n";
        return kExitUsage;
      }
      const bool full = sweep_depth == "full";
      if (full && to > kFullDepthBound && !sweep_allow_large) {
        err << "error: --depth full is limited to p <= " << kFullDepthBound << "; pass --allow-large to override\n";
        return kExitUsage;
      }
      std::vector<std::int64_t> primes;
      for (std::int64_t n = from; n <= to; ++n) {
        if (is_prime(n)) primes.push_back(n);
      }
      const auto rows = run_sweep(primes, full, std::max(kDefaultTripleSearchBound, to), jobs);
      emit_sweep(rows, from, to, sweep_depth, sweep_flags.format, out);
      const bool all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed; });
      return all ? kExitOk : kExitVerifyFail;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (is_input_error(e.code())) return kExitUsage;
    if (e.code() == ErrorCode::kAuditFail) return kExitAuditFail;
    return kExitVerifyFail;
  }
  return kExitUsage;
}

}  // namespace fermat
