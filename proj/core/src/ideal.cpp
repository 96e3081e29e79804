#include "calab/ideal.hpp"

#include "calab/groebner.hpp"

namespace calab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      cache_mu_(std::make_unique<std::mutex>()) {
  for (const auto& g : gens_) {
    if (!g.ring()->same_ring(*ring_)) {
      throw DomainError("ideal generator lives in a different ring");
    }
  }
  if (gens_.empty()) gens_.push_back(Polynomial::zero(ring_));
}

Ideal::Ideal(RingPtr ring) : Ideal(ring, {}) {}

Ideal::Ideal(const Ideal& o)
    : ring_(o.ring_),
      gens_(o.gens_),
      cache_mu_(std::make_unique<std::mutex>()) {
  std::lock_guard<std::mutex> lk(*o.cache_mu_);
  cache_ = o.cache_;
}

Ideal& Ideal::operator=(const Ideal& o) {
  if (this == &o) return *this;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> copy;
  {
    std::lock_guard<std::mutex> lk(*o.cache_mu_);
    copy = o.cache_;
  }
  ring_ = o.ring_;
  gens_ = o.gens_;
  cache_mu_ = std::make_unique<std::mutex>();
  cache_ = std::move(copy);
  return *this;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(
    const MonomialOrder& ord) const {
  const std::string key = ord.key();
  {
    std::lock_guard<std::mutex> lk(*cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto gb = std::make_shared<GroebnerBasis>(buchberger(gens_, ord));
  std::lock_guard<std::mutex> lk(*cache_mu_);
  // Insert-once: a concurrent computation may have landed first; keep it.
  auto [it, inserted] = cache_.emplace(key, std::move(gb));
  return it->second;
}

bool Ideal::is_zero_ideal() const {
  for (const auto& g : gens_) {
    if (!g.is_zero()) return false;
  }
  return true;
}

bool Ideal::is_unit() const {
  return groebner(MonomialOrder::grevlex())->is_unit();
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
  if (!f.ring()->same_ring(*I.ring())) {
    throw DomainError("membership probe lives in a different ring");
  }
  if (f.is_zero()) return true;
  auto gb = I.groebner(MonomialOrder::grevlex());
  return normal_form(f, *gb).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  for (const auto& g : inner.gens()) {
    if (!ideal_member(g, outer)) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_ring(*b.ring())) {
    throw DomainError("ideal sum across different rings");
  }
  std::vector<Polynomial> gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_ring(*b.ring())) {
    throw DomainError("ideal product across different rings");
  }
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace calab
