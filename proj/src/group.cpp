#include "braid/group.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace braid {

namespace {

// Assigns tau on the <b>-orbit of seed, starting from tau(seed) = val.
// Forced rule: tau(b_i(p)) = a_i(tau(p)). Returns false on conflict.
bool propagate(const std::vector<Perm>& a, const std::vector<Perm>& b, unsigned seed,
               unsigned val, std::vector<int>& tau, std::vector<unsigned>& touched) {
  tau[seed] = (int)val;
  touched.push_back(seed);
  std::vector<unsigned> queue{seed};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    unsigned p = queue[qi];
    unsigned q = (unsigned)tau[p];
    for (size_t i = 0; i < b.size(); ++i) {
      unsigned pn = a[i][p];
      unsigned qn = b[i][q];
      if (tau[pn] < 0) {
        tau[pn] = (int)qn;
        touched.push_back(pn);
        queue.push_back(pn);
      } else if (tau[pn] != (int)qn) {
        return false;
      }
    }
  }
  return true;
}

void search(unsigned degree, const std::vector<Perm>& a, const std::vector<Perm>& b,
            const std::vector<unsigned>& orbit_reps, size_t level, std::vector<int>& tau,
            std::vector<Perm>& out, size_t node_cap, size_t& nodes) {
  if (level == orbit_reps.size()) {
    std::vector<uint8_t> img(degree);
    std::vector<bool> used(degree, false);
    for (unsigned i = 0; i < degree; ++i) {
      if (tau[i] < 0 || used[tau[i]]) return;
      used[tau[i]] = true;
      img[i] = (uint8_t)tau[i];
    }
    out.push_back(Perm(std::move(img)));
    return;
  }
  unsigned seed = orbit_reps[level];
  if (tau[seed] >= 0) {
    search(degree, a, b, orbit_reps, level + 1, tau, out, node_cap, nodes);
    return;
  }
  for (unsigned val = 0; val < degree; ++val) {
    if (++nodes > node_cap) throw std::runtime_error("conjugator search exceeded node cap");
    std::vector<unsigned> touched;
    if (propagate(a, b, seed, val, tau, touched))
      search(degree, a, b, orbit_reps, level + 1, tau, out, node_cap, nodes);
    for (unsigned p : touched) tau[p] = -1;
  }
}

} // namespace

std::vector<Perm> simultaneous_conjugators(unsigned degree, const std::vector<Perm>& a,
                                           const std::vector<Perm>& b, size_t node_cap) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple length mismatch");
  // orbit representatives of <a> on points
  std::vector<bool> seen(degree, false);
  std::vector<unsigned> reps;
  for (unsigned p = 0; p < degree; ++p) {
    if (seen[p]) continue;
    reps.push_back(p);
    std::vector<unsigned> queue{p};
    seen[p] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (const Perm& g : a) {
        unsigned q = g[queue[qi]];
        if (!seen[q]) {
          seen[q] = true;
          queue.push_back(q);
        }
      }
  }
  std::vector<int> tau(degree, -1);
  std::vector<Perm> out;
  size_t nodes = 0;
  search(degree, a, b, reps, 0, tau, out, node_cap, nodes);
  return out;
}

bool is_transitive(unsigned degree, const std::vector<Perm>& gens) {
  if (degree == 0) return true;
  std::vector<bool> seen(degree, false);
  std::vector<unsigned> queue{0};
  seen[0] = true;
  size_t count = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Perm& g : gens) {
      unsigned q = g[queue[qi]];
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        queue.push_back(q);
      }
    }
  return count == degree;
}

mpz_class group_order(const std::vector<Perm>& gens) {
  if (gens.empty()) throw std::invalid_argument("group_order: no generators");
  unsigned degree = gens[0].degree();
  return StabChain(degree, gens).order();
}

FiniteGroup::FiniteGroup(unsigned degree, std::vector<Perm> gens, std::string name)
    : degree_(degree), gens_(std::move(gens)), name_(std::move(name)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (gens_.empty()) gens_.push_back(Perm(degree_));
}

FiniteGroup FiniteGroup::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::string line;
  unsigned degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (!have_degree) {
      std::string kw;
      ss >> kw;
      if (kw != "degree" || !(ss >> degree) || degree == 0 || degree > 255)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'degree N'");
      have_degree = true;
      continue;
    }
    std::vector<unsigned> images;
    unsigned v;
    while (ss >> v) images.push_back(v);
    if (images.size() != degree)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(degree) + " images");
    gens.push_back(Perm::from_images_1based(images));
  }
  if (!have_degree) throw std::runtime_error(path + ": missing degree line");
  std::string name = path;
  size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return FiniteGroup(degree, std::move(gens), name);
}

void FiniteGroup::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write group file: " + path);
  out << "degree " << degree_ << "\n";
  for (const Perm& g : gens_) out << g.to_image_string() << "\n";
}

const StabChain& FiniteGroup::chain() const {
  if (!chain_) chain_ = std::make_unique<StabChain>(degree_, gens_);
  return *chain_;
}

unsigned long long FiniteGroup::order_u64() const {
  const mpz_class& o = order();
  if (!o.fits_ulong_p()) throw std::runtime_error("group order does not fit in 64 bits");
  return mpz_get_ui(o.get_mpz_t());
}

bool FiniteGroup::is_transitive() const { return braid::is_transitive(degree_, gens_); }

unsigned long long FiniteGroup::center_order() const {
  if (center_order_) return *center_order_;
  std::vector<Perm> cands = simultaneous_conjugators(degree_, gens_, gens_);
  unsigned long long c = 0;
  for (const Perm& t : cands)
    if (contains(t)) ++c;
  center_order_ = c;
  return c;
}

void FiniteGroup::require_trivial_center() const {
  if (center_order() != 1)
    throw std::invalid_argument("group has non-trivial center (order " +
                                std::to_string(center_order()) + ")");
}

} // namespace braid
