#include "fsig/golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fsig {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GoldenValues GoldenValues::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read golden values file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

GoldenValues GoldenValues::parse(const std::string& text) {
  GoldenValues g;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("golden values line " + std::to_string(lineno) + ": expected `id = value`");
    std::string id = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (id.empty() || value.empty())
      throw std::runtime_error("golden values line " + std::to_string(lineno) + ": empty id or value");
    if (!g.values_.emplace(id, value).second)
      throw std::runtime_error("golden values line " + std::to_string(lineno) + ": duplicate id " + id);
  }
  return g;
}

void GoldenValues::set(const std::string& id, const std::string& value) { values_[id] = value; }

void GoldenValues::set(const std::string& id, std::uint64_t value) { values_[id] = std::to_string(value); }

void GoldenValues::set(const std::string& id, const boost::multiprecision::cpp_rational& value) {
  values_[id] = value.str();
}

const std::string& GoldenValues::text(const std::string& id) const {
  auto it = values_.find(id);
  if (it == values_.end()) throw std::out_of_range("no golden value for " + id);
  return it->second;
}

std::uint64_t GoldenValues::integer(const std::string& id) const {
  const std::string& t = text(id);
  std::size_t used = 0;
  std::uint64_t v = std::stoull(t, &used);
  if (used != t.size()) throw std::runtime_error("golden value " + id + " is not an integer: " + t);
  return v;
}

boost::multiprecision::cpp_rational GoldenValues::rational(const std::string& id) const {
  return boost::multiprecision::cpp_rational(text(id));
}

bool GoldenValues::boolean(const std::string& id) const {
  const std::string& t = text(id);
  if (t == "true") return true;
  if (t == "false") return false;
  throw std::runtime_error("golden value " + id + " is not a boolean: " + t);
}

std::string GoldenValues::serialize(const std::string& header) const {
  std::ostringstream out;
  if (!header.empty()) {
    std::istringstream h(header);
    std::string line;
    while (std::getline(h, line)) out << "# " << line << '\n';
    out << '\n';
  }
  for (const auto& [id, value] : values_) out << id << " = " << value << '\n';
  return out.str();
}

void GoldenValues::save(const std::string& path, const std::string& header) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write golden values file " + path);
  out << serialize(header);
}

}  // namespace fsig
