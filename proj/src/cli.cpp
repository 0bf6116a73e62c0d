#include "lcmquad/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "lcmquad/constants.hpp"
#include "lcmquad/error.hpp"
#include "lcmquad/lcm.hpp"
#include "lcmquad/serialize.hpp"

namespace lcmquad::cli {

using nlohmann::json;

namespace {

u64 parse_u64(std::string_view text, const std::string& flag) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError(flag, flag + ": expected a non-negative integer, got '" +
                               std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Format effective_format(const RunConfig& c) {
  if (c.format) return *c.format;
  switch (c.command) {
    case Command::table:
    case Command::roots:
      return Format::csv;
    case Command::lcm:
      return c.exact ? Format::text : Format::json;
    default:
      return Format::json;
  }
}

std::string sig(double v) { return format_significant(v, 15); }

void emit_constant(const RunConfig& c, Format fmt, std::ostream& os) {
  const BfBreakdown b = B_f(*c.poly);
  switch (fmt) {
    case Format::json:
      os << to_json(b) << '\n';
      break;
    case Format::text:
      os << "B_f " << sig(b.B) << '\n'
         << "C_0 " << sig(b.C0) << '\n'
         << "C_d " << sig(b.Cd) << " (d = " << b.d << ")\n"
         << "C(f) " << sig(b.Cf) << '\n';
      break;
    case Format::csv:
      os << "series,index,value,tail_bound\n";
      for (const auto& t : b.terms) {
        os << t.series << ',' << t.index << ',' << format_double(t.value) << ','
           << format_double(t.tail_bound) << '\n';
      }
      os << "B," << 0 << ',' << format_double(b.B) << ",0\n";
      break;
  }
}

void emit_lcm(const RunConfig& c, Format fmt, std::ostream& os, std::ostream& err, int& status) {
  SieveOptions opts;
  opts.workers = c.workers;
  opts.keep_exponent_map = c.oracle_check || fmt == Format::csv;
  json arr = json::array();
  for (u64 n : c.ns) {
    LcmResult r;
    if (c.exact) {
      r = lcm_bigint_oracle(*c.poly, n);
    } else {
      r = log_lcm(*c.poly, n, opts);
    }
    bool oracle_ok = true;
    if (c.oracle_check) {
      const ExponentMap map = r.exponent_map ? *r.exponent_map : beta_map(*c.poly, n, opts);
      oracle_ok = oracle_agrees(*c.poly, map);
      if (!oracle_ok) {
        err << "oracle mismatch at n = " << n << '\n';
        status = 2;
      }
    }
    switch (fmt) {
      case Format::text:
        if (r.exact_value) {
          os << *r.exact_value << '\n';
        } else {
          os << n << ' ' << sig(r.log_lcm) << '\n';
        }
        break;
      case Format::csv:
        if (!r.exponent_map) r.exponent_map = beta_map(*c.poly, n, opts);
        os << to_csv(*r.exponent_map);
        break;
      case Format::json: {
        json j = json::parse(to_json(r));
        if (c.oracle_check) j["oracle_check"] = oracle_ok ? "pass" : "fail";
        arr.push_back(std::move(j));
        break;
      }
    }
  }
  if (fmt == Format::json) os << (arr.size() == 1 ? arr[0].dump() : arr.dump()) << '\n';
}

void emit_table(const RunConfig& c, Format fmt, std::ostream& os) {
  SieveOptions opts;
  opts.workers = c.workers;
  const double B = B_f(*c.poly).B;
  const auto results = log_lcm_ladder(*c.poly, c.ns, opts);
  json arr = json::array();
  if (fmt == Format::csv) os << "n,log_lcm,E_f\n";
  for (const auto& r : results) {
    const double e = r.log_lcm - r.n_log_n() - B * static_cast<double>(r.n);
    switch (fmt) {
      case Format::csv:
        os << r.n << ',' << format_double(r.log_lcm) << ',' << format_double(e) << '\n';
        break;
      case Format::text:
        os << r.n << ' ' << sig(r.log_lcm) << ' ' << sig(e) << '\n';
        break;
      case Format::json:
        arr.push_back({{"n", r.n}, {"log_lcm", r.log_lcm}, {"E_f", e}});
        break;
    }
  }
  if (fmt == Format::json) os << arr.dump() << '\n';
}

void emit_roots(const RunConfig& c, Format fmt, std::ostream& os) {
  const auto samples = root_samples(*c.poly, *c.x, c.progression, c.workers);
  switch (fmt) {
    case Format::csv:
      os << to_csv(samples);
      break;
    case Format::json:
      os << to_json(samples) << '\n';
      break;
    case Format::text:
      for (const auto& s : samples) os << s.p << ' ' << s.nu << ' ' << sig(s.frac) << '\n';
      break;
  }
}

void emit_discrepancy(const RunConfig& c, Format fmt, std::ostream& os) {
  const auto samples = root_samples(*c.poly, *c.x, c.progression, c.workers);
  std::vector<double> fracs;
  fracs.reserve(samples.size());
  for (const auto& s : samples) fracs.push_back(s.frac);
  const double dstar = fracs.empty() ? 0.0 : star_discrepancy(fracs);
  std::vector<std::pair<u64, TSums>> sums;
  for (u64 n : c.ns) sums.emplace_back(n, t_sums(*c.poly, n));
  switch (fmt) {
    case Format::json: {
      json j;
      j["x"] = *c.x;
      j["samples"] = samples.size();
      j["star_discrepancy"] = dstar;
      json ts = json::array();
      for (const auto& [n, t] : sums) ts.push_back(json::parse(to_json(t, n)));
      j["t_sums"] = std::move(ts);
      os << j.dump() << '\n';
      break;
    }
    case Format::csv:
      os << "x,samples,star_discrepancy\n"
         << *c.x << ',' << samples.size() << ',' << format_double(dstar) << '\n';
      if (!sums.empty()) {
        os << "n,T1,T2,prime_bound\n";
        for (const auto& [n, t] : sums) {
          os << n << ',' << format_double(t.T1) << ',' << format_double(t.T2) << ','
             << t.prime_bound << '\n';
        }
      }
      break;
    case Format::text:
      os << "x " << *c.x << " samples " << samples.size() << " D* " << sig(dstar) << '\n';
      for (const auto& [n, t] : sums) {
        os << "n " << n << " T1 " << sig(t.T1) << " T2 " << sig(t.T2) << '\n';
      }
      break;
  }
}

void emit_reducible(const RunConfig& c, Format fmt, std::ostream& os) {
  SieveOptions opts;
  opts.workers = c.workers;
  const double K = reducible_asymptotic_constant(*c.poly);
  json arr = json::array();
  if (fmt == Format::csv) os << "n,log_lcm,constant,ratio\n";
  for (u64 n : c.ns) {
    const LcmResult r = log_lcm_reducible(*c.poly, n, opts);
    const double ratio = r.log_lcm / (K * static_cast<double>(n));
    switch (fmt) {
      case Format::csv:
        os << n << ',' << format_double(r.log_lcm) << ',' << format_double(K) << ','
           << format_double(ratio) << '\n';
        break;
      case Format::text:
        os << n << ' ' << sig(r.log_lcm) << ' ' << sig(K) << ' ' << sig(ratio) << '\n';
        break;
      case Format::json:
        arr.push_back({{"n", n}, {"log_lcm", r.log_lcm}, {"constant", K}, {"ratio", ratio}});
        break;
    }
  }
  if (fmt == Format::json) os << (arr.size() == 1 ? arr[0].dump() : arr.dump()) << '\n';
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "constant") return Command::constant;
  if (name == "lcm") return Command::lcm;
  if (name == "table") return Command::table;
  if (name == "roots") return Command::roots;
  if (name == "discrepancy") return Command::discrepancy;
  if (name == "reducible") return Command::reducible;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  return std::nullopt;
}

std::vector<u64> parse_n_list(std::string_view text) {
  std::vector<u64> ns;
  for (auto part : split(text, ',')) {
    const u64 n = parse_u64(part, "--n");
    if (n == 0) throw UsageError("--n", "--n: values must be positive");
    ns.push_back(n);
  }
  return ns;
}

Progression parse_progression(std::string_view text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw UsageError("--progression", "--progression: expected r,m");
  }
  Progression p{parse_u64(parts[0], "--progression"), parse_u64(parts[1], "--progression")};
  if (p.modulus == 0) throw UsageError("--progression", "--progression: modulus must be positive");
  return p;
}

void validate(const RunConfig& c) {
  if (!c.poly) throw UsageError("--poly", "--poly is required");
  if (c.workers == 0) throw UsageError("--workers", "--workers must be at least 1");
  switch (c.command) {
    case Command::lcm:
    case Command::table:
    case Command::reducible:
      if (c.ns.empty()) throw UsageError("--n", "--n is required for this command");
      break;
    case Command::roots:
    case Command::discrepancy:
      if (!c.x) throw UsageError("--x", "--x is required for this command");
      break;
    case Command::constant:
      break;
  }
  if (c.exact && c.command != Command::lcm) {
    throw UsageError("--exact", "--exact only applies to lcm");
  }
  if (c.exact) {
    for (u64 n : c.ns) {
      if (n > kOracleMaxN) {
        throw UsageError("--exact", "--exact supports n <= " + std::to_string(kOracleMaxN));
      }
    }
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }
  std::ofstream file;
  std::ostream* os = &out;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "usage error: --out: cannot open '" << config.out << "'\n";
      return 1;
    }
    os = &file;
  }
  const Format fmt = effective_format(config);
  std::ostringstream buffer;
  int status = 0;
  try {
    switch (config.command) {
      case Command::constant:
        emit_constant(config, fmt, buffer);
        break;
      case Command::lcm:
        emit_lcm(config, fmt, buffer, err, status);
        break;
      case Command::table:
        emit_table(config, fmt, buffer);
        break;
      case Command::roots:
        emit_roots(config, fmt, buffer);
        break;
      case Command::discrepancy:
        emit_discrepancy(config, fmt, buffer);
        break;
      case Command::reducible:
        emit_reducible(config, fmt, buffer);
        break;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  }
  *os << buffer.str();
  os->flush();
  return status;
}

}  // namespace lcmquad::cli
