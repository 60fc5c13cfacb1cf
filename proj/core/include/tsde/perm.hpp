#ifndef TSDE_PERM_HPP
#define TSDE_PERM_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tsde {

/// Permutation of {0..k-1}, stored as the image vector. The text formats
/// are 1-based; everything internal is 0-based.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}

  static Perm identity(int k) {
    Perm p;
    p.img.resize(k);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  static Perm transposition(int k, int a, int b) {
    Perm p = identity(k);
    p.img[a] = b;
    p.img[b] = a;
    return p;
  }

  /// k-cycle i -> i+1 (mod k).
  static Perm cycle(int k) {
    Perm p;
    p.img.resize(k);
    for (int i = 0; i < k; ++i) p.img[i] = (i + 1) % k;
    return p;
  }

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }

  bool is_bijection() const {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      if (v < 0 || v >= static_cast<int>(img.size()) || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  Perm inverse() const {
    Perm p;
    p.img.resize(img.size());
    for (int i = 0; i < size(); ++i) p.img[img[i]] = i;
    return p;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img <=> b.img; }
};

/// (p * q)(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r;
  r.img.resize(q.img.size());
  for (int i = 0; i < q.size(); ++i) r.img[i] = p.img[q.img[i]];
  return r;
}

inline int perm_cycle_count(const Perm& p) {
  std::vector<bool> seen(p.img.size(), false);
  int cycles = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p.img[j]) seen[j] = true;
  }
  return cycles;
}

/// Calls fn(perm) for every element of S_k in lexicographic order.
template <typename Fn>
void for_each_perm(int k, Fn&& fn) {
  Perm p = Perm::identity(k);
  do {
    fn(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
}

}  // namespace tsde

#endif
