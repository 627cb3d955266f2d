#include "braid/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braid {

Perm::Perm(unsigned degree) : img_(degree) {
  for (unsigned i = 0; i < degree; ++i) img_[i] = (uint8_t)i;
}

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
  if (img_.size() > 255) throw std::invalid_argument("degree > 255 not supported");
  std::vector<bool> seen(img_.size(), false);
  for (uint8_t v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("image list is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(unsigned degree, const std::string& cycles) {
  std::vector<uint8_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = (uint8_t)i;
  size_t pos = 0;
  while (pos < cycles.size()) {
    while (pos < cycles.size() && (cycles[pos] == ' ' || cycles[pos] == ',')) ++pos;
    if (pos >= cycles.size()) break;
    if (cycles[pos] != '(') throw std::invalid_argument("expected '(' in cycle string");
    ++pos;
    std::vector<unsigned> cyc;
    while (pos < cycles.size() && cycles[pos] != ')') {
      while (pos < cycles.size() && (cycles[pos] == ' ' || cycles[pos] == ',')) ++pos;
      if (pos < cycles.size() && cycles[pos] == ')') break;
      unsigned v = 0;
      bool any = false;
      while (pos < cycles.size() && isdigit((unsigned char)cycles[pos])) {
        v = v * 10 + (unsigned)(cycles[pos] - '0');
        ++pos;
        any = true;
      }
      if (!any) throw std::invalid_argument("bad cycle string");
      if (v == 0 || v > degree) throw std::invalid_argument("cycle point out of range");
      cyc.push_back(v - 1);
    }
    if (pos >= cycles.size()) throw std::invalid_argument("unterminated cycle");
    ++pos; // ')'
    for (size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = (uint8_t)cyc[(i + 1) % cyc.size()];
  }
  return Perm(std::move(img));
}

Perm Perm::from_images_1based(const std::vector<unsigned>& images) {
  std::vector<uint8_t> img(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0 || images[i] > images.size())
      throw std::invalid_argument("1-based image out of range");
    img[i] = (uint8_t)(images[i] - 1);
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  Perm r;
  mul_into(r, *this, o);
  return r;
}

void mul_into(Perm& r, const Perm& p, const Perm& q) {
  const unsigned n = p.degree();
  std::vector<uint8_t> img(n);
  const auto& pi = p.images();
  const auto& qi = q.images();
  for (unsigned i = 0; i < n; ++i) img[i] = qi[pi[i]];
  r = Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<uint8_t> img(degree());
  for (unsigned i = 0; i < degree(); ++i) img[img_[i]] = (uint8_t)i;
  return Perm(std::move(img));
}

Perm Perm::conjugated_by(const Perm& t) const {
  // (t^-1 * g * t)[i]: i -> t^-1(i) -> g -> t
  std::vector<uint8_t> img(degree());
  const auto& ti = t.images();
  for (unsigned i = 0; i < degree(); ++i) img[ti[i]] = ti[img_[i]];
  return Perm(std::move(img));
}

Perm Perm::power(long long k) const {
  unsigned n = order();
  long long e = k % (long long)n;
  if (e < 0) e += n;
  Perm r(degree());
  Perm b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

unsigned Perm::order() const {
  unsigned n = degree();
  std::vector<bool> seen(n, false);
  unsigned long long ord = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i]) continue;
    unsigned len = 0, j = i;
    do {
      seen[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, (unsigned long long)len);
  }
  return (unsigned)ord;
}

std::vector<unsigned> Perm::cycle_type() const {
  unsigned n = degree();
  std::vector<bool> seen(n, false);
  std::vector<unsigned> type;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i]) continue;
    unsigned len = 0, j = i;
    do {
      seen[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

unsigned Perm::fixed_points() const {
  unsigned c = 0;
  for (unsigned i = 0; i < degree(); ++i)
    if (img_[i] == i) ++c;
  return c;
}

int Perm::sign() const {
  int s = 1;
  for (unsigned l : cycle_type())
    if (l % 2 == 0) s = -s;
  return s;
}

std::string Perm::to_cycle_string() const {
  unsigned n = degree();
  std::vector<bool> seen(n, false);
  std::string out;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    unsigned j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      seen[j] = true;
      j = img_[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string Perm::to_image_string() const {
  std::string out;
  for (unsigned i = 0; i < degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(img_[i] + 1);
  }
  return out;
}

} // namespace braid
