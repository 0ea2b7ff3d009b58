#include "permahank/ideal.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace permahank {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::variables(const Ring& ring, std::size_t first, std::size_t last) {
  std::vector<Polynomial> gens;
  for (std::size_t i = first; i < last; ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(order); it != cache_->bases.end()) return it->second;
  }
  // Computed outside the lock; concurrent callers may duplicate work but
  // produce the identical reduced basis.
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(generators_, order));
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.emplace(order, std::move(basis)).first->second;
}

void Ideal::seed_basis(GroebnerBasis basis) const {
  const MonomialOrder order = basis.order;
  std::lock_guard lock(cache_->mutex);
  cache_->bases.emplace(order, std::make_shared<const GroebnerBasis>(std::move(basis)));
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) return true;
  const auto gb = groebner_basis(MonomialOrder::lex());
  if (gb->elements.empty()) return false;
  return normal_form(f, gb->elements, gb->order).is_zero();
}

bool Ideal::is_unit() const { return groebner_basis()->is_unit_ideal(); }

bool member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& base = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(base);

  const Ring ext = base->extended("t");
  const MonomialOrder elim = MonomialOrder::elimination(1);
  const Polynomial t = Polynomial::variable(ext, 0, 1, elim);
  const Polynomial t_minus_one = t - Polynomial::constant(ext, 1, elim);

  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const auto& f : a.generators()) gens.push_back(t * lift_to_extended(f, ext, elim));
  for (const auto& g : b.generators()) {
    gens.push_back(t_minus_one * lift_to_extended(g, ext, elim));
  }
  const GroebnerBasis gb = buchberger(gens, elim);

  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements) {
    if (g.leading_monomial()[0] == 0) {
      kept.push_back(project_from_extended(g, base, MonomialOrder::lex()));
    }
  }
  // The t-free part of a reduced elim(1) basis is the reduced lex basis of
  // the elimination ideal, since elim(1) with lex blocks restricts to lex.
  Ideal result(base, kept);
  result.seed_basis(GroebnerBasis{std::move(kept), MonomialOrder::lex(), true, true});
  return result;
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (f.is_constant()) return ideal;
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> quotients;
  quotients.reserve(meet.generators().size());
  const Polynomial divisor = f.with_order(MonomialOrder::lex());
  for (const auto& g : meet.generators()) quotients.push_back(divide_exact(g, divisor));
  return Ideal(ideal.ring(), std::move(quotients));
}

unsigned default_saturation_cap() {
  if (const char* env = std::getenv("PERMAHANK_MAX_ITERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 64;
}

Saturation saturate(const Ideal& ideal, const Polynomial& f, unsigned max_iterations) {
  require_same_ring(ideal.ring(), f.ring());
  Ideal current = ideal;
  for (unsigned n = 0; n <= max_iterations; ++n) {
    Ideal next = colon(current, f);
    if (equal(current, next).equal) return Saturation{std::move(current), n};
    current = std::move(next);
  }
  throw std::runtime_error("saturation did not stabilize within " +
                           std::to_string(max_iterations) + " iterations");
}

bool radical_member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) return true;
  const Ring ext = ideal.ring()->extended("y");
  const MonomialOrder elim = MonomialOrder::elimination(1);
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const auto& g : ideal.generators()) gens.push_back(lift_to_extended(g, ext, elim));
  const Polynomial y = Polynomial::variable(ext, 0, 1, elim);
  gens.push_back(Polynomial::constant(ext, 1, elim) - y * lift_to_extended(f, ext, elim));
  return buchberger(gens, elim).is_unit_ideal();
}

Equality equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const auto ga = a.groebner_basis();
  const auto gb = b.groebner_basis();
  if (ga->elements == gb->elements) return Equality{};
  for (const auto& g : ga->elements) {
    if (!b.contains(g)) return Equality{false, g};
  }
  for (const auto& g : gb->elements) {
    if (!a.contains(g)) return Equality{false, g};
  }
  throw std::logic_error("reduced bases differ but the ideals contain each other");
}

bool is_subset(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

}  // namespace permahank
