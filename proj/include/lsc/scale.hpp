#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lsc {

// Element of the free abelian group over named generators: a finite map from
// generator name to nonzero exponent, kept canonical (zero exponents dropped,
// names ordered). The empty map is the neutral element, printed "1".
//
// Exponent arithmetic is checked; overflowing int64 raises ErrorCode::overflow.
class Scale {
public:
  Scale() = default;  // neutral element

  static Scale one() { return Scale(); }
  static Scale generator(const std::string& name, std::int64_t exp = 1);
  static Scale from_exponents(
      const std::vector<std::pair<std::string, std::int64_t>>& exps);

  bool is_one() const { return exps_.empty(); }

  Scale mul(const Scale& other) const;
  Scale inverse() const;

  const std::map<std::string, std::int64_t>& exponents() const { return exps_; }

  // Canonical text: "1", or '*'-joined "name" / "name^exp" factors with names
  // ascending and "^1" omitted, e.g. "a^2*b^-1".
  std::string str() const;

  bool operator==(const Scale&) const = default;
  bool operator<(const Scale& other) const { return exps_ < other.exps_; }

private:
  std::map<std::string, std::int64_t> exps_;
};

inline Scale operator*(const Scale& a, const Scale& b) { return a.mul(b); }

}  // namespace lsc
