#include "calab/ring.hpp"

#include <set>

namespace calab {

namespace {

bool valid_var_name(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (s[0] == '@') start = 1;  // internal fresh variables
  if (start >= s.size()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[start]))) return false;
  for (std::size_t i = start + 1; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

}  // namespace

RingPtr Ring::create(uint32_t characteristic, std::vector<std::string> vars) {
  Field f(characteristic);  // validates primality / word size
  if (vars.empty()) throw DomainError("ring needs at least one variable");
  if (vars.size() > 32) {
    throw DomainError("rings are capped at 32 variables at desk scale");
  }
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_var_name(v)) {
      throw DomainError("invalid variable name '" + v + "'");
    }
    if (!seen.insert(v).second) {
      throw DomainError("duplicate variable name '" + v + "'");
    }
  }
  return RingPtr(new Ring(f, std::move(vars)));
}

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace calab
