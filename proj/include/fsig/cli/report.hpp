#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsig/polynomial.hpp"
#include "fsig/rational.hpp"
#include "fsig/ring.hpp"

namespace fsig::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
// Bumped whenever cached payloads change shape.
inline constexpr int kCacheVersion = 1;

// {"num": n, "den": d}; components that do not fit in 64 bits become strings.
Json rational_json(const Rational& r);
// Decimal string with 12 significant digits.
Json real_json(const Rational& r);
Json polynomials_json(const std::vector<Polynomial>& gens, const PolyRing& ring);

// FNV-1a 64 of the normalized ring text, as 16 hex digits.
std::string fingerprint(const RingPresentation& ring);
std::string fnv1a_hex(const std::string& text);

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json rows = Json::array();
  Json estimates = Json::object();
  Json error_bounds = Json::object();
};

struct Timing {
  bool enabled = false;
  double seconds = 0;
  bool cache_hit = false;
};

// Envelope: tool, version, command, ring, parameters, rows, estimates,
// error_bounds and, when enabled, timing.
Json envelope(const Report& report, const RingPresentation* ring, const Timing& timing);

void write_json(std::ostream& out, const Json& envelope);
// Header from the keys of the first row; nested values are written as
// compact JSON, quoted.
void write_csv(std::ostream& out, const Report& report);

}  // namespace fsig::cli
