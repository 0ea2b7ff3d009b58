#include "permahank/groebner.hpp"

#include <algorithm>
#include <set>

namespace permahank {

namespace {

struct Reducer {
  const Polynomial* poly;
  Monomial lead;
  FieldElement inv_lead_coeff;
};

class ReducerSet {
 public:
  explicit ReducerSet(const MonomialOrder& order) : order_(order) {}

  /// poly must already be sorted under the set's order and outlive the set.
  void add(const Polynomial& poly) {
    if (poly.is_zero()) return;
    reducers_.push_back(Reducer{&poly, poly.leading_monomial(), poly.leading_coeff().inverse()});
  }

  const Reducer* find(const Monomial& m) const {
    for (const Reducer& r : reducers_) {
      if (r.lead.divides(m)) return &r;
    }
    return nullptr;
  }

  Polynomial reduce(const Polynomial& f) const {
    std::vector<Term> remainder;
    std::vector<Term> h(f.terms().begin(), f.terms().end());
    std::vector<Term> scratch;
    std::size_t pos = 0;
    while (pos < h.size()) {
      const Reducer* r = find(h[pos].monomial);
      if (!r) {
        remainder.push_back(std::move(h[pos++]));
        continue;
      }
      // The leading terms cancel exactly; merge the two tails.
      const FieldElement c = -(h[pos].coeff * r->inv_lead_coeff);
      const Monomial m = h[pos].monomial / r->lead;
      scratch.clear();
      merge_tail(h, pos + 1, r->poly->terms().subspan(1), c, m, scratch);
      std::swap(h, scratch);
      pos = 0;
    }
    return Polynomial::from_sorted_terms(f.ring(), std::move(remainder), order_);
  }

 private:
  // out = a[from..] + c * m * b, moving the terms of a.
  void merge_tail(std::vector<Term>& a, std::size_t from, std::span<const Term> b,
                  const FieldElement& c, const Monomial& m, std::vector<Term>& out) const {
    out.reserve(a.size() - from + b.size());
    std::size_t i = from;
    std::size_t j = 0;
    Monomial bm = j < b.size() ? b[j].monomial * m : Monomial();
    auto advance_b = [&] {
      if (++j < b.size()) bm = b[j].monomial * m;
    };
    while (i < a.size() && j < b.size()) {
      const auto cmp = order_.compare(a[i].monomial, bm);
      if (cmp > 0) {
        out.push_back(std::move(a[i++]));
      } else if (cmp < 0) {
        out.push_back(Term{b[j].coeff * c, bm});
        advance_b();
      } else {
        a[i].coeff += b[j].coeff * c;
        if (!a[i].coeff.is_zero()) out.push_back(std::move(a[i]));
        ++i;
        advance_b();
      }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(Term{b[j].coeff * c, b[j].monomial * m});
  }

  MonomialOrder order_;
  std::vector<Reducer> reducers_;
};

std::vector<Polynomial> sorted_copies(std::span<const Polynomial> polys,
                                      const MonomialOrder& order) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.with_order(order));
  return out;
}

void sort_basis(std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(), b.leading_monomial());
  });
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class PairQueue {
 public:
  explicit PairQueue(const MonomialOrder& order)
      : pairs_([order](const Pair& a, const Pair& b) {
          const auto c = order.compare(a.lcm, b.lcm);
          if (c != 0) return c < 0;
          return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        }) {}

  bool empty() const { return pairs_.empty(); }
  Pair pop() {
    Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    return p;
  }
  void push(Pair p) { pairs_.insert(std::move(p)); }
  template <typename Pred>
  void erase_if(Pred pred) {
    std::erase_if(pairs_, pred);
  }

 private:
  std::set<Pair, std::function<bool(const Pair&, const Pair&)>> pairs_;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const BuchbergerOptions& options, BuchbergerStats* stats)
      : order_(order), options_(options), stats_(stats), queue_(order) {}

  void insert(Polynomial h) {
    h = h.monic();
    const std::size_t k = basis_.size();
    const Monomial lead = h.leading_monomial();

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!redundant_[i]) fresh.push_back(Pair{i, k, lcm(leads_[i], lead)});
    }
    auto disjoint = [&](const Pair& p) {
      return options_.coprime_criterion && coprime(leads_[p.i], lead);
    };

    std::vector<Pair> kept;
    if (options_.chain_criterion) {
      // Pairs with h whose lcm is divisible by another pair's lcm are
      // dropped (one representative survives among equal lcms).
      std::vector<bool> alive(fresh.size(), true);
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (disjoint(fresh[a])) continue;
        for (std::size_t b = 0; b < fresh.size(); ++b) {
          if (b == a || !alive[b]) continue;
          if (fresh[b].lcm.divides(fresh[a].lcm)) {
            alive[a] = false;
            break;
          }
        }
      }
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (alive[a] && !disjoint(fresh[a])) kept.push_back(fresh[a]);
      }
      queue_.erase_if([&](const Pair& p) {
        return lead.divides(p.lcm) && !(lcm(leads_[p.i], lead) == p.lcm) &&
               !(lcm(leads_[p.j], lead) == p.lcm);
      });
      for (std::size_t i = 0; i < k; ++i) {
        if (!redundant_[i] && lead.divides(leads_[i])) redundant_[i] = true;
      }
    } else {
      for (const Pair& p : fresh) {
        if (!disjoint(p)) kept.push_back(p);
      }
    }
    if (stats_) stats_->pairs_considered += fresh.size();
    for (Pair& p : kept) queue_.push(std::move(p));

    basis_.push_back(std::move(h));
    leads_.push_back(lead);
    redundant_.push_back(false);
  }

  Polynomial reduce(const Polynomial& f) const {
    ReducerSet set(order_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!redundant_[i]) set.add(basis_[i]);
    }
    return set.reduce(f);
  }

  void run() {
    while (!queue_.empty()) {
      const Pair p = queue_.pop();
      if (stats_) ++stats_->pairs_reduced;
      Polynomial r = reduce(s_polynomial(basis_[p.i], basis_[p.j], order_));
      if (r.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      insert(std::move(r));
    }
  }

  std::vector<Polynomial> result() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!redundant_[i]) out.push_back(basis_[i]);
    }
    return out;
  }

 private:
  MonomialOrder order_;
  BuchbergerOptions options_;
  BuchbergerStats* stats_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
  std::vector<bool> redundant_;
  PairQueue queue_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> reducers,
                       const MonomialOrder& order) {
  const std::vector<Polynomial> sorted = sorted_copies(reducers, order);
  ReducerSet set(order);
  for (const auto& g : sorted) {
    require_same_ring(f.ring(), g.ring());
    set.add(g);
  }
  return set.reduce(f.with_order(order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Polynomial ff = f.with_order(order);
  const Polynomial gg = g.with_order(order);
  const Monomial l = lcm(ff.leading_monomial(), gg.leading_monomial());
  const Polynomial left =
      ff.times_term(ff.leading_coeff().inverse(), l / ff.leading_monomial());
  return left.minus_term_multiple(gg.leading_coeff().inverse(), l / gg.leading_monomial(), gg);
}

GroebnerBasis reduce_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<Polynomial> elems;
  for (const auto& p : basis) {
    if (!p.is_zero()) elems.push_back(p.with_order(order).monic());
  }
  // Smallest leading monomial first, so the first survivor of each divisibility
  // chain is kept.
  std::sort(elems.begin(), elems.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(b.leading_monomial(), a.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& p : elems) {
    const bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!covered) minimal.push_back(std::move(p));
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    ReducerSet set(order);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) set.add(minimal[j]);
    }
    const Polynomial& g = minimal[i];
    const auto terms = g.terms();
    std::vector<Term> tail(terms.begin() + 1, terms.end());
    Polynomial r = set.reduce(Polynomial::from_terms(g.ring(), std::move(tail), order));
    r += Polynomial::from_terms(g.ring(), {g.leading_term()}, order);
    reduced.push_back(std::move(r));
  }
  sort_basis(reduced, order);
  return GroebnerBasis{std::move(reduced), order, true, true};
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& options, BuchbergerStats* stats) {
  Buchberger engine(order, options, stats);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial r = engine.reduce(g.with_order(order));
    if (!r.is_zero()) engine.insert(std::move(r));
  }
  engine.run();
  std::vector<Polynomial> basis = engine.result();
  if (options.reduce) return reduce_basis(basis, order);
  sort_basis(basis, order);
  return GroebnerBasis{std::move(basis), order, options.chain_criterion, false};
}

GroebnerCheck is_groebner(std::span<const Polynomial> basis, const MonomialOrder& order) {
  const std::vector<Polynomial> sorted = sorted_copies(basis, order);
  ReducerSet set(order);
  for (const auto& g : sorted) set.add(g);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      Polynomial r = set.reduce(s_polynomial(sorted[i], sorted[j], order));
      if (!r.is_zero()) return GroebnerCheck{false, i, j, std::move(r)};
    }
  }
  return GroebnerCheck{};
}

}  // namespace permahank
