#include "braid/stabchain.hpp"

#include <stdexcept>

namespace braid {

StabChain::StabChain(unsigned degree, const std::vector<Perm>& gens,
                     const std::vector<unsigned>& base_hint)
    : degree_(degree), hint_(base_hint) {
  std::vector<Perm> nontrivial;
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  for (unsigned b : hint_) add_level(b);
  if (nontrivial.empty()) {
    order_ = 1;
    for (size_t i = 0; i < levels_.size(); ++i) recompute_orbit(i);
    return;
  }
  if (levels_.empty()) {
    const Perm& g = nontrivial[0];
    for (unsigned p = 0; p < degree_; ++p)
      if (g[p] != p) {
        add_level(p);
        break;
      }
  }
  levels_[0].gens = nontrivial;
  complete(0);
  order_ = 1;
  for (const Level& l : levels_) order_ *= (unsigned long)l.orbit.size();
}

void StabChain::add_level(unsigned point) {
  Level l;
  l.b = point;
  l.where.assign(degree_, -1);
  levels_.push_back(std::move(l));
  recompute_orbit(levels_.size() - 1);
}

void StabChain::recompute_orbit(size_t i) {
  Level& l = levels_[i];
  l.where.assign(degree_, -1);
  l.orbit.clear();
  l.transversal.clear();
  l.orbit.push_back(l.b);
  l.transversal.push_back(Perm(degree_));
  l.where[l.b] = 0;
  for (size_t k = 0; k < l.orbit.size(); ++k) {
    unsigned p = l.orbit[k];
    for (const Perm& s : l.gens) {
      unsigned q = s[p];
      if (l.where[q] < 0) {
        l.where[q] = (int)l.orbit.size();
        l.orbit.push_back(q);
        l.transversal.push_back(l.transversal[k] * s);
      }
    }
  }
}

bool StabChain::strip(const Perm& g, size_t from, Perm& residue, size_t& stuck) const {
  Perm h = g;
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    unsigned p = h[l.b];
    if (p == l.b) continue;
    if (l.where[p] < 0) {
      residue = h;
      stuck = i;
      return false;
    }
    h = h * l.transversal[l.where[p]].inverse();
  }
  residue = h;
  stuck = levels_.size();
  return h.is_identity();
}

void StabChain::complete(size_t i) {
  recompute_orbit(i);
  // levels_ may reallocate inside the loop (add_level), so index every access
  for (size_t k = 0; k < levels_[i].orbit.size(); ++k) {
    for (size_t si = 0; si < levels_[i].gens.size(); ++si) {
      unsigned p = levels_[i].orbit[k];
      const Perm s = levels_[i].gens[si];
      int wq = levels_[i].where[s[p]];
      Perm schreier = levels_[i].transversal[k] * s * levels_[i].transversal[wq].inverse();
      Perm residue;
      size_t stuck;
      if (strip(schreier, i + 1, residue, stuck)) continue;
      if (stuck == levels_.size()) {
        unsigned bp = 0;
        for (unsigned q = 0; q < degree_; ++q)
          if (residue[q] != q) {
            bp = q;
            break;
          }
        add_level(bp);
      }
      for (size_t t = i + 1; t <= stuck; ++t) levels_[t].gens.push_back(residue);
      for (size_t t = stuck; t > i; --t) complete(t);
    }
  }
}

std::vector<unsigned> StabChain::base() const {
  std::vector<unsigned> b;
  for (const Level& l : levels_) b.push_back(l.b);
  return b;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  Perm residue;
  size_t stuck;
  return strip(g, 0, residue, stuck);
}

Perm StabChain::sift(const Perm& g, size_t* levels_passed) const {
  Perm residue;
  size_t stuck;
  strip(g, 0, residue, stuck);
  if (levels_passed) *levels_passed = stuck;
  return residue;
}

Perm StabChain::random_element(std::mt19937_64& rng) const {
  Perm g(degree_);
  for (const Level& l : levels_) {
    size_t k = (size_t)(rng() % l.transversal.size());
    g = g * l.transversal[k];
  }
  return g;
}

mpz_class StabChain::stabilizer_order(size_t k) const {
  mpz_class o = 1;
  for (size_t i = k; i < levels_.size(); ++i) o *= (unsigned long)levels_[i].orbit.size();
  return o;
}

std::vector<Perm> StabChain::stabilizer_generators(size_t k, std::mt19937_64& rng) const {
  mpz_class target = stabilizer_order(k);
  std::vector<Perm> gens;
  if (target == 1) return gens;
  for (int tries = 0; tries < 4096; ++tries) {
    Perm g = random_element(rng);
    // push g into the stabilizer of the first k base points
    for (size_t i = 0; i < k; ++i) {
      const Level& l = levels_[i];
      g = g * l.transversal[l.where[g[l.b]]].inverse();
    }
    if (g.is_identity()) continue;
    gens.push_back(g);
    if (gens.size() < 2 && target > 1) continue;
    StabChain probe(degree_, gens);
    if (probe.order() == target) return gens;
  }
  throw std::runtime_error("stabilizer generator search did not converge");
}

} // namespace braid
