#include "lcmquad/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace lcmquad {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return std::to_string(v);
  return std::string(buf, ptr);
}

std::string format_significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string to_json(const LcmResult& r) {
  json j;
  j["n"] = r.n;
  j["log_lcm"] = r.log_lcm;
  j["n_log_n"] = r.n_log_n();
  j["residual_count"] = r.residual_count;
  if (r.exact_value) j["exact"] = *r.exact_value;
  return j.dump();
}

std::string to_csv(const ExponentMap& map) {
  std::ostringstream os;
  os << "p,beta\n";
  for (const auto& e : map.entries) os << e.p << ',' << e.beta << '\n';
  for (u64 q : map.residual_primes) os << q << ",1\n";
  return os.str();
}

std::string to_json(const BfBreakdown& b) {
  json j;
  j["B"] = b.B;
  j["C0"] = b.C0;
  j["Cd"] = b.Cd;
  j["Cf"] = b.Cf;
  j["d"] = b.d;
  j["q"] = b.q;
  json terms = json::array();
  for (const auto& t : b.terms) {
    terms.push_back({{"series", t.series},
                     {"index", t.index},
                     {"value", t.value},
                     {"tail_bound", t.tail_bound}});
  }
  j["terms"] = std::move(terms);
  return j.dump(2);
}

BfBreakdown breakdown_from_json(const std::string& text) {
  const json j = json::parse(text);
  BfBreakdown b;
  b.B = j.at("B").get<double>();
  b.C0 = j.at("C0").get<double>();
  b.Cd = j.at("Cd").get<double>();
  b.Cf = j.at("Cf").get<double>();
  b.d = j.at("d").get<i64>();
  b.q = j.at("q").get<i64>();
  for (const auto& t : j.at("terms")) {
    b.terms.push_back({t.at("series").get<std::string>(), t.at("index").get<long>(),
                       t.at("value").get<double>(), t.at("tail_bound").get<double>()});
  }
  return b;
}

std::string to_csv(std::span<const RootSample> samples) {
  std::ostringstream os;
  os << "p,nu,frac\n";
  for (const auto& s : samples) os << s.p << ',' << s.nu << ',' << format_double(s.frac) << '\n';
  return os.str();
}

std::string to_json(std::span<const RootSample> samples) {
  json arr = json::array();
  for (const auto& s : samples) arr.push_back({{"p", s.p}, {"nu", s.nu}, {"frac", s.frac}});
  return arr.dump();
}

std::string to_json(const TSums& t, u64 n) {
  json j;
  j["n"] = n;
  j["T1"] = t.T1;
  j["T2"] = t.T2;
  j["prime_bound"] = t.prime_bound;
  return j.dump();
}

}  // namespace lcmquad
