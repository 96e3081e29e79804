#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "calab/scalar.hpp"

namespace calab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ambient polynomial ring descriptor: coefficient field plus ordered
/// variable names. Immutable and shared; polynomials keep a pointer to it.
/// Names starting with '@' are reserved for internal fresh variables and are
/// rejected by the user-facing parser but allowed here.
class Ring {
 public:
  static RingPtr create(uint32_t characteristic,
                        std::vector<std::string> vars);

  const Field& field() const noexcept { return field_; }
  uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  const std::vector<std::string>& var_names() const noexcept { return vars_; }
  std::optional<std::size_t> var_index(const std::string& name) const;

  /// Structural identity: same characteristic and same variable list.
  bool same_ring(const Ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }

  Scalar scalar(long long v) const { return Scalar::from_int(field_, v); }

 private:
  Ring(Field f, std::vector<std::string> vars)
      : field_(f), vars_(std::move(vars)) {}

  Field field_;
  std::vector<std::string> vars_;
};

}  // namespace calab
