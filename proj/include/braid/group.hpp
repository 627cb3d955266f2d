#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braid/perm.hpp"
#include "braid/stabchain.hpp"

namespace braid {

// All tau in S_n with a_i^tau = b_i for every i (the full solution coset).
// Found by image propagation over the orbits of <b>; node_cap bounds the
// backtrack size for intransitive tuples.
std::vector<Perm> simultaneous_conjugators(unsigned degree, const std::vector<Perm>& a,
                                           const std::vector<Perm>& b,
                                           size_t node_cap = 1u << 22);

bool is_transitive(unsigned degree, const std::vector<Perm>& gens);

// |<gens>| via a stabilizer chain.
mpz_class group_order(const std::vector<Perm>& gens);

class FiniteGroup {
public:
  FiniteGroup(unsigned degree, std::vector<Perm> gens, std::string name = "");

  static FiniteGroup from_file(const std::string& path);
  void write_file(const std::string& path) const;

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::string& name() const { return name_; }

  const StabChain& chain() const;
  const mpz_class& order() const { return chain().order(); }
  // order as uint64, throws if it does not fit
  unsigned long long order_u64() const;

  bool contains(const Perm& g) const { return chain().contains(g); }
  bool is_transitive() const;
  unsigned long long center_order() const;
  void require_trivial_center() const;

  Perm random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }

private:
  unsigned degree_;
  std::vector<Perm> gens_;
  std::string name_;
  mutable std::unique_ptr<StabChain> chain_;
  mutable std::optional<unsigned long long> center_order_;
};

} // namespace braid
