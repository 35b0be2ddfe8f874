#include "fsig/cli/report.hpp"

#include <cstdio>

#include "fsig/parser.hpp"

namespace fsig::cli {

namespace {

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

std::string csv_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den")) {
    std::string num = csv_text(v["num"]), den = csv_text(v["den"]);
    return den == "1" ? num : num + "/" + den;
  }
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = csv_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

Json rational_json(const Rational& r) {
  Json j = Json::object();
  j["num"] = big_json(boost::multiprecision::numerator(r));
  j["den"] = big_json(boost::multiprecision::denominator(r));
  return j;
}

Json real_json(const Rational& r) { return to_decimal(r, 12); }

Json polynomials_json(const std::vector<Polynomial>& gens, const PolyRing& ring) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(render(g, ring));
  return out;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fingerprint(const RingPresentation& ring) { return fnv1a_hex(ring.normalized_text()); }

Json envelope(const Report& report, const RingPresentation* ring, const Timing& timing) {
  Json out = Json::object();
  out["tool"] = "fsig-lab";
  out["version"] = kToolVersion;
  out["command"] = report.command;
  if (ring) {
    Json r = Json::object();
    r["fingerprint"] = fingerprint(*ring);
    r["p"] = ring->characteristic();
    r["vars"] = ring->poly_ring().names();
    r["relations"] = polynomials_json(ring->relations(), ring->poly_ring());
    r["order"] = std::string(to_string(ring->poly_ring().order().kind));
    out["ring"] = r;
  } else {
    out["ring"] = nullptr;
  }
  out["parameters"] = report.parameters;
  out["rows"] = report.rows;
  out["estimates"] = report.estimates;
  out["error_bounds"] = report.error_bounds;
  if (timing.enabled) {
    Json t = Json::object();
    t["seconds"] = to_decimal(timing.seconds, 6);
    t["cache_hit"] = timing.cache_hit;
    out["timing"] = t;
  }
  return out;
}

void write_json(std::ostream& out, const Json& envelope) { out << envelope.dump(2) << '\n'; }

void write_csv(std::ostream& out, const Report& report) {
  Json rows = report.rows;
  if (rows.empty()) {
    Json flat = Json::object();
    for (const auto& [k, v] : report.estimates.items()) flat[k] = v;
    for (const auto& [k, v] : report.error_bounds.items()) flat["error_" + k] = v;
    rows.push_back(flat);
  }
  bool first = true;
  for (const auto& [k, v] : rows.front().items()) {
    out << (first ? "" : ",") << csv_cell(Json(k));
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [k, v] : rows.front().items()) {
      out << (first ? "" : ",") << (row.contains(k) ? csv_cell(row[k]) : std::string());
      first = false;
    }
    out << '\n';
  }
}

}  // namespace fsig::cli
