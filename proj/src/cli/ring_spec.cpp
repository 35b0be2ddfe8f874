#include "fsig/cli/ring_spec.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "fsig/parser.hpp"

namespace fsig::cli {

namespace {

struct Field {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;  // of the first value character
};

struct Item {
  std::string text;
  std::size_t column = 0;
};

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits on commas, trimming blanks; columns are absolute.
std::vector<Item> split_list(const Field& f) {
  std::vector<Item> out;
  std::size_t start = 0;
  const std::string& v = f.value;
  for (std::size_t i = 0; i <= v.size(); ++i) {
    if (i < v.size() && v[i] != ',') continue;
    std::size_t b = start, e = i;
    while (b < e && blank(v[b])) ++b;
    while (e > b && blank(v[e - 1])) --e;
    out.push_back({v.substr(b, e - b), f.column + b});
    start = i + 1;
  }
  return out;
}

std::string strip_offset(const std::string& what) {
  auto at = what.rfind(" at offset ");
  return at == std::string::npos ? what : what.substr(0, at);
}

}  // namespace

SpecError::SpecError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

RingPresentation parse_ring_spec(std::string_view text, RingSpec* spec_out) {
  std::map<std::string, Field> fields;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t b = 0;
    while (b < line.size() && blank(line[b])) ++b;
    if (b == line.size()) {
      if (nl == text.size()) break;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw SpecError("expected `key = value`", lineno, b + 1);
    std::size_t ke = eq;
    while (ke > b && blank(line[ke - 1])) --ke;
    std::string key = line.substr(b, ke - b);
    if (key != "p" && key != "vars" && key != "relations" && key != "order")
      throw SpecError("unknown key '" + key + "'", lineno, b + 1);
    if (fields.count(key)) throw SpecError("duplicate key '" + key + "'", lineno, b + 1);
    std::size_t vb = eq + 1;
    while (vb < line.size() && blank(line[vb])) ++vb;
    std::size_t ve = line.size();
    while (ve > vb && blank(line[ve - 1])) --ve;
    fields[key] = {line.substr(vb, ve - vb), lineno, vb + 1};
    if (nl == text.size()) break;
  }

  RingSpec spec;
  auto need = [&](const char* key) -> const Field& {
    auto it = fields.find(key);
    if (it == fields.end()) throw SpecError(std::string("missing required key '") + key + "'", lineno, 1);
    return it->second;
  };

  const Field& pf = need("p");
  {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(pf.value.data(), pf.value.data() + pf.value.size(), v);
    if (ec != std::errc() || end != pf.value.data() + pf.value.size() || pf.value.empty())
      throw SpecError("p must be a decimal integer", pf.line, pf.column);
    if (v >= (std::uint64_t{1} << 31)) throw SpecError("p must be below 2^31", pf.line, pf.column);
    spec.p = static_cast<std::uint32_t>(v);
  }

  const Field& vf = need("vars");
  for (const auto& item : split_list(vf)) {
    if (!is_valid_variable_name(item.text))
      throw SpecError("invalid variable name '" + item.text + "'", vf.line, item.column);
    for (const auto& seen : spec.vars)
      if (seen == item.text) throw SpecError("duplicate variable '" + item.text + "'", vf.line, item.column);
    spec.vars.push_back(item.text);
  }
  if (spec.vars.empty()) throw SpecError("at least one variable is required", vf.line, vf.column);

  if (auto it = fields.find("order"); it != fields.end()) {
    try {
      spec.order = parse_order_kind(it->second.value);
    } catch (const DomainError& e) {
      throw SpecError(e.what(), it->second.line, it->second.column);
    }
  }

  PolyRingPtr ring;
  try {
    ring = std::make_shared<const PolyRing>(spec.p, spec.vars, TermOrder{spec.order, 0});
  } catch (const DomainError& e) {
    throw SpecError(e.what(), pf.line, pf.column);
  }

  std::vector<Polynomial> relations;
  if (auto it = fields.find("relations"); it != fields.end() && !it->second.value.empty()) {
    const Field& rf = it->second;
    for (const auto& item : split_list(rf)) {
      if (item.text.empty()) throw SpecError("empty relation", rf.line, item.column);
      try {
        relations.push_back(parse_polynomial(item.text, *ring));
      } catch (const ParseError& e) {
        throw SpecError(strip_offset(e.what()), rf.line, item.column + e.offset());
      } catch (const OverflowError& e) {
        throw SpecError(e.what(), rf.line, item.column);
      }
      spec.relations.push_back(item.text);
    }
    try {
      RingPresentation out(ring, relations);
      if (spec_out) *spec_out = spec;
      return out;
    } catch (const DomainError& e) {
      throw SpecError(e.what(), rf.line, rf.column);
    }
  }
  if (spec_out) *spec_out = spec;
  return RingPresentation(ring, relations);
}

RingPresentation load_ring_spec(const std::string& path, RingSpec* spec_out) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read ring spec '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ring_spec(ss.str(), spec_out);
}

}  // namespace fsig::cli
