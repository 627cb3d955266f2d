#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braid {

// Permutation on {0,...,degree-1}, stored as the image list p[i].
// Products compose left to right: (p*q)[i] = q[p[i]], and g^t = t^-1 g t,
// so (p*q) means "apply p, then q".
class Perm {
public:
  Perm() = default;
  explicit Perm(unsigned degree);               // identity
  explicit Perm(std::vector<uint8_t> images);

  static Perm identity(unsigned degree) { return Perm(degree); }
  // Parses disjoint cycles like "(1,2,3)(4,5)" with 1-based points.
  static Perm from_cycles(unsigned degree, const std::string& cycles);
  // Parses "i1 i2 ... iN" as 1-based images.
  static Perm from_images_1based(const std::vector<unsigned>& images);

  unsigned degree() const { return (unsigned)img_.size(); }
  uint8_t operator[](unsigned i) const { return img_[i]; }
  const std::vector<uint8_t>& images() const { return img_; }

  bool is_identity() const;
  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  Perm operator*(const Perm& o) const;          // left-to-right
  Perm inverse() const;
  Perm conjugated_by(const Perm& t) const;      // t^-1 * (*this) * t
  Perm power(long long k) const;

  unsigned order() const;
  // Multiset of cycle lengths, descending, fixed points included.
  std::vector<unsigned> cycle_type() const;
  unsigned fixed_points() const;
  int sign() const;                             // +1 even, -1 odd

  std::string to_cycle_string() const;          // 1-based, "()" for identity
  std::string to_image_string() const;          // 1-based images, space separated

private:
  std::vector<uint8_t> img_;
};

// In-place r = p * q without reallocation; r may not alias p or q.
void mul_into(Perm& r, const Perm& p, const Perm& q);

} // namespace braid
