#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "braid/perm.hpp"

namespace braid {

// Deterministic Schreier-Sims stabilizer chain with explicit transversals.
// Supports membership sifting, exact order, uniform random elements and
// extraction of point stabilizers (via a forced initial base prefix).
class StabChain {
public:
  StabChain() = default;
  // base_hint: points forced to the front of the base, in order.
  StabChain(unsigned degree, const std::vector<Perm>& gens,
            const std::vector<unsigned>& base_hint = {});

  unsigned degree() const { return degree_; }
  const mpz_class& order() const { return order_; }
  std::vector<unsigned> base() const;

  bool contains(const Perm& g) const;
  // Strips g; returns the residue and the number of levels passed.
  Perm sift(const Perm& g, size_t* levels_passed = nullptr) const;

  Perm random_element(std::mt19937_64& rng) const;

  // Generators of the stabilizer of base()[0..k-1], found by sifting random
  // elements until the stabilizer's full order is reached.
  std::vector<Perm> stabilizer_generators(size_t k, std::mt19937_64& rng) const;
  mpz_class stabilizer_order(size_t k) const;

private:
  struct Level {
    unsigned b = 0;
    std::vector<Perm> gens;
    std::vector<int> where;        // point -> index into transversal, -1 if absent
    std::vector<Perm> transversal; // u with u[b] == point
    std::vector<unsigned> orbit;
  };

  void add_level(unsigned point);
  void recompute_orbit(size_t i);
  bool strip(const Perm& g, size_t from, Perm& residue, size_t& stuck) const;
  void complete(size_t i);

  unsigned degree_ = 0;
  std::vector<Level> levels_;
  mpz_class order_ = 1;
  std::vector<unsigned> hint_;
};

} // namespace braid
