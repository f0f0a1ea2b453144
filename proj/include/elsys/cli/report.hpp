#pragma once

// Verification reports: claims with a locator, a computed value (enclosure or
// exact text), a target and a verdict.  JSON via nlohmann::json.

#include "elsys/agm/interval.hpp"
#include "elsys/exact/quadratic.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <unistd.h>

namespace elsys::cli {

using Endpoint = std::variant<double, std::string>;

struct Enclosure {
  Endpoint lo, hi;
  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

using ClaimValue = std::variant<Enclosure, std::string>;

struct Claim {
  std::string id;
  std::string paper;  // locator of the claim being checked
  ClaimValue value;
  std::string target;
  bool pass = false;
  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Report {
  std::string command;
  std::vector<Claim> claims;
  double ms = 0;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.pass;
    return n;
  }
  friend bool operator==(const Report&, const Report&) = default;
};

// "a+b*sqrtD" with both parts always present.
template <int D>
std::string canonical_string(const exact::Quadratic<D>& x) {
  const auto& b = x.root_part();
  std::string head = exact::to_string(x.rational_part());
  std::string tail = "*sqrt" + std::to_string(D);
  if (b < 0) return head + "-" + exact::to_string(exact::Rational(-b)) + tail;
  return head + "+" + exact::to_string(b) + tail;
}

inline Enclosure enclosure_of(const agm::Interval& x) { return {x.lo_double(), x.hi_double()}; }

// Extended endpoints as 40-digit decimals rounded outward.
template <unsigned Bits>
Enclosure enclosure_of(const agm::BasicInterval<agm::DyadicRounding<Bits>>& x) {
  return {exact::to_decimal(x.lo_rational(), 40, false), exact::to_decimal(x.hi_rational(), 40, true)};
}

inline void to_json(nlohmann::json& j, const Endpoint& e) {
  std::visit([&](const auto& v) { j = v; }, e);
}

inline void from_json(const nlohmann::json& j, Endpoint& e) {
  if (j.is_string()) {
    e = j.get<std::string>();
  } else {
    e = j.get<double>();
  }
}

inline void to_json(nlohmann::json& j, const Claim& c) {
  j = nlohmann::json{{"id", c.id}, {"paper", c.paper}, {"target", c.target}, {"pass", c.pass}};
  if (const auto* e = std::get_if<Enclosure>(&c.value)) {
    nlohmann::json lo, hi;
    to_json(lo, e->lo);
    to_json(hi, e->hi);
    j["value"] = {{"lo", lo}, {"hi", hi}};
  } else {
    j["value"] = std::get<std::string>(c.value);
  }
}

inline void from_json(const nlohmann::json& j, Claim& c) {
  c.id = j.at("id").get<std::string>();
  c.paper = j.at("paper").get<std::string>();
  c.target = j.at("target").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  const auto& v = j.at("value");
  if (v.is_object()) {
    Enclosure e;
    from_json(v.at("lo"), e.lo);
    from_json(v.at("hi"), e.hi);
    c.value = e;
  } else {
    c.value = v.get<std::string>();
  }
}

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"command", r.command}, {"claims", r.claims}, {"ms", r.ms}};
}

inline void from_json(const nlohmann::json& j, Report& r) {
  r.command = j.at("command").get<std::string>();
  r.claims = j.at("claims").get<std::vector<Claim>>();
  r.ms = j.at("ms").get<double>();
}

inline std::string emit_json(const Report& r, int indent = 2) { return nlohmann::json(r).dump(indent); }

inline Report parse_json(const std::string& s) { return nlohmann::json::parse(s).get<Report>(); }

// Schema check for one report object; returns an empty string when valid.
inline std::string schema_error(const nlohmann::json& j) {
  if (!j.is_object()) return "report is not an object";
  if (!j.contains("command") || !j["command"].is_string()) return "missing string 'command'";
  if (!j.contains("ms") || !j["ms"].is_number()) return "missing number 'ms'";
  if (!j.contains("claims") || !j["claims"].is_array()) return "missing array 'claims'";
  for (const auto& c : j["claims"]) {
    for (const char* key : {"id", "paper", "target"})
      if (!c.contains(key) || !c[key].is_string()) return std::string("claim without string '") + key + "'";
    if (!c.contains("pass") || !c["pass"].is_boolean()) return "claim without boolean 'pass'";
    if (!c.contains("value")) return "claim without 'value'";
    const auto& v = c["value"];
    if (v.is_object()) {
      for (const char* key : {"lo", "hi"})
        if (!v.contains(key) || !(v[key].is_number() || v[key].is_string())) return "enclosure without lo/hi";
    } else if (!v.is_string()) {
      return "value is neither an enclosure nor a string";
    }
  }
  return {};
}

inline std::string value_text(const ClaimValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  const auto& e = std::get<Enclosure>(v);
  auto one = [](const Endpoint& p) {
    if (const auto* s = std::get_if<std::string>(&p)) return *s;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(p));
    return std::string(buf);
  };
  return "[" + one(e.lo) + ", " + one(e.hi) + "]";
}

inline bool use_color() {
  const char* nc = std::getenv("NO_COLOR");
  return (nc == nullptr || *nc == '\0') && isatty(STDOUT_FILENO);
}

inline void print_text(std::ostream& os, const Report& r, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  os << r.command << ": " << r.passed() << "/" << r.claims.size() << " claims pass (" << r.ms << " ms)\n";
  for (const auto& c : r.claims) {
    os << "  " << (c.pass ? green : red) << (c.pass ? "PASS" : "FAIL") << reset << "  " << c.id << "  "
       << value_text(c.value) << "  target " << c.target << "  (" << c.paper << ")\n";
  }
}

}  // namespace elsys::cli
