#include "toric/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace toric {

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Exponent l = lcm(f.leading_exponent(), g.leading_exponent());
  MultiPoly a = f.times_monomial(exponent_quotient(l, f.leading_exponent()), 1 / f.leading_coefficient());
  MultiPoly b = g.times_monomial(exponent_quotient(l, g.leading_exponent()), 1 / g.leading_coefficient());
  return a - b;
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors) {
  MultiPoly work = p;
  MultiPoly remainder(p.num_vars());
  while (!work.is_zero()) {
    const Exponent lead = work.leading_exponent();
    const Rational coeff = work.leading_coefficient();
    const MultiPoly* hit = nullptr;
    for (const MultiPoly& d : divisors) {
      if (!d.is_zero() && divides(d.leading_exponent(), lead)) {
        hit = &d;
        break;
      }
    }
    if (hit) {
      work -= hit->times_monomial(exponent_quotient(lead, hit->leading_exponent()), coeff / hit->leading_coefficient());
    } else {
      remainder.add_term(lead, coeff);
      work.add_term(lead, -coeff);
    }
  }
  return remainder;
}

namespace {

MultiPoly monic(const MultiPoly& p) { return p * (1 / p.leading_coefficient()); }

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
};

}  // namespace

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  std::vector<MultiPoly> g;
  for (const MultiPoly& p : generators)
    if (!p.is_zero()) g.push_back(monic(p));
  if (g.empty()) return {};
  const std::size_t nv = g.front().num_vars();
  for (const MultiPoly& p : g)
    if (total_degree(p.leading_exponent()) == 0) return {MultiPoly::constant(nv, 1)};

  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({i, k, lcm(g[i].leading_exponent(), g[k].leading_exponent())});
      ++st.pairs_created;
    }
  };
  for (std::size_t k = 1; k < g.size(); ++k) add_pairs_for(k);

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
  };

  DegRevLexGreater greater;
  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first, index order on ties.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm != b.lcm) return greater(b.lcm, a.lcm);
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pair = *best;
    pairs.erase(best);

    if (coprime(g[pair.i].leading_exponent(), g[pair.j].leading_exponent())) {
      ++st.product_criterion_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (divides(g[k].leading_exponent(), pair.lcm) && !pending(pair.i, k) && !pending(pair.j, k)) chain = true;
    }
    if (chain) {
      ++st.chain_criterion_skips;
      continue;
    }

    MultiPoly s = reduce(s_polynomial(g[pair.i], g[pair.j]), g);
    if (s.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    g.push_back(monic(s));
    ++st.basis_additions;
    if (total_degree(g.back().leading_exponent()) == 0) return {MultiPoly::constant(nv, 1)};
    add_pairs_for(g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Exponent& la = g[a].leading_exponent();
      const Exponent& lb = g[b].leading_exponent();
      if (divides(lb, la) && (la != lb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }

  // Tail-reduce each element by the others.
  std::vector<MultiPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MultiPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    MultiPoly head = MultiPoly::monomial(minimal[a].leading_exponent(), 1);
    MultiPoly tail = minimal[a] - head;
    reduced.push_back(head + reduce(tail, others));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return greater(a.leading_exponent(), b.leading_exponent());
  });
  return reduced;
}

bool is_reduced(const std::vector<MultiPoly>& basis) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].is_zero() || basis[a].leading_coefficient() != 1) return false;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (const auto& [e, c] : basis[a].terms())
        if (divides(basis[b].leading_exponent(), e)) return false;
    }
  }
  return true;
}

bool is_groebner_basis(const std::vector<MultiPoly>& basis) {
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!reduce(s_polynomial(basis[a], basis[b]), basis).is_zero()) return false;
  return true;
}

}  // namespace toric
