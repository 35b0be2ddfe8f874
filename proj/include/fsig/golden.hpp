#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsig {

// Frozen reference values, one `id = value` per line; `#` starts a comment.
// Values are decimal integers, rationals "num/den", `true`/`false` or
// `INFINITE`.
class GoldenValues {
 public:
  static GoldenValues load(const std::string& path);
  static GoldenValues parse(const std::string& text);

  void set(const std::string& id, const std::string& value);
  void set(const std::string& id, std::uint64_t value);
  void set(const std::string& id, const boost::multiprecision::cpp_rational& value);

  bool has(const std::string& id) const { return values_.count(id) != 0; }
  // Throws std::out_of_range for unknown ids.
  const std::string& text(const std::string& id) const;
  std::uint64_t integer(const std::string& id) const;
  boost::multiprecision::cpp_rational rational(const std::string& id) const;
  bool boolean(const std::string& id) const;

  const std::map<std::string, std::string>& entries() const noexcept { return values_; }
  std::string serialize(const std::string& header = {}) const;
  void save(const std::string& path, const std::string& header = {}) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace fsig
