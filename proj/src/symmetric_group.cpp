#include "sigchar/symmetric_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sigchar {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<int>(i);
  return inv;
}

Perm perm_transposition(int n, int i, int j) {
  Perm p = perm_identity(n);
  std::swap(p[i], p[j]);
  return p;
}

Perm perm_simple(int n, int i) {
  if (i < 1 || i > n - 1) throw std::domain_error("perm_simple: index out of range");
  return perm_transposition(n, i - 1, i);
}

Partition cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

Perm class_representative(const Partition& mu) {
  Perm p(mu.n());
  int pos = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) p[pos + k] = pos + (k + 1) % len;
    pos += len;
  }
  return p;
}

std::vector<Perm> all_permutations(int n) {
  if (n > 8) throw std::domain_error("all_permutations: n > 8 not supported");
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupIndex::GroupIndex(int n) : n_(n), elements_(all_permutations(n)) {
  if (n <= 6) {
    std::size_t order = elements_.size();
    mult_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        mult_[a * order + b] = rank(perm_compose(elements_[a], elements_[b]));
      }
    }
  }
}

int GroupIndex::rank(const Perm& p) const {
  // Lexicographic rank via the Lehmer code.
  int n = n_;
  std::int64_t r = 0;
  std::int64_t f = factorial(n - 1);
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 0; v < p[i]; ++v) {
      if (!(used >> v & 1)) ++smaller;
    }
    r += smaller * f;
    used |= 1u << p[i];
    if (i + 1 < n) f /= (n - 1 - i);
  }
  return static_cast<int>(r);
}

BlockLevi::BlockLevi(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int s : sizes_) {
    if (s < 1) throw std::domain_error("BlockLevi: block sizes must be positive");
    offsets_.push_back(N_);
    N_ += s;
  }
}

std::int64_t BlockLevi::order() const {
  std::int64_t o = 1;
  for (int s : sizes_) o *= factorial(s);
  return o;
}

bool BlockLevi::contains(const Perm& p) const {
  for (int b = 0; b < blocks(); ++b) {
    for (int k = 0; k < sizes_[b]; ++k) {
      int v = p[offsets_[b] + k];
      if (v < offsets_[b] || v >= offsets_[b] + sizes_[b]) return false;
    }
  }
  return true;
}

Perm BlockLevi::component(const Perm& p, int b) const {
  Perm c(sizes_[b]);
  for (int k = 0; k < sizes_[b]; ++k) c[k] = p[offsets_[b] + k] - offsets_[b];
  return c;
}

Perm BlockLevi::w0m() const {
  Perm p(N_);
  int r = blocks();
  for (int b = 0; b < r; ++b) {
    int mb = r - 1 - b;
    if (sizes_[b] != sizes_[mb]) {
      throw std::domain_error("BlockLevi::w0m: block sizes must be palindromic");
    }
    for (int k = 0; k < sizes_[b]; ++k) p[offsets_[b] + k] = offsets_[mb] + k;
  }
  return p;
}

std::vector<Perm> BlockLevi::coset_transversal() const {
  std::vector<Perm> out;
  for (const auto& z : all_permutations(N_)) {
    bool minimal = true;
    for (int b = 0; b < blocks() && minimal; ++b) {
      for (int k = 0; k + 1 < sizes_[b] && minimal; ++k) {
        if (z[offsets_[b] + k] > z[offsets_[b] + k + 1]) minimal = false;
      }
    }
    if (minimal) out.push_back(z);
  }
  return out;
}

}  // namespace sigchar
