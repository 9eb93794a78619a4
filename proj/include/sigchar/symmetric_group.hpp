#pragma once

#include <cstdint>
#include <vector>

#include "sigchar/partition.hpp"

namespace sigchar {

// Permutation of {0..n-1} as the image vector; (a*b)(i) = a(b(i)).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm perm_transposition(int n, int i, int j);
// Simple reflection s_i swapping positions i-1 and i (1-based i <= n-1).
Perm perm_simple(int n, int i);

Partition cycle_type(const Perm& p);

// Canonical representative of the conjugacy class with the given cycle type.
Perm class_representative(const Partition& mu);

// All n! permutations in lexicographic order.  n <= 8.
std::vector<Perm> all_permutations(int n);

// Enumeration of the symmetric group with constant-time rank lookup,
// used as the basis index of the regular module.
class GroupIndex {
 public:
  explicit GroupIndex(int n);

  int n() const { return n_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int idx) const { return elements_[idx]; }
  int rank(const Perm& p) const;  // Lehmer code
  // rank of element(a) * element(b); table-backed for n <= 6
  int product_rank(int a, int b) const {
    return mult_.empty() ? rank(perm_compose(elements_[a], elements_[b]))
                         : mult_[static_cast<std::size_t>(a) * elements_.size() + b];
  }

 private:
  int n_;
  std::vector<Perm> elements_;
  std::vector<int> mult_;  // flattened multiplication table (n <= 6)
};

// Block structure N_1,...,N_r summing to N: the Levi W_M inside S_N.
class BlockLevi {
 public:
  explicit BlockLevi(std::vector<int> sizes);

  int N() const { return N_; }
  int blocks() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  int offset(int b) const { return offsets_[b]; }

  std::int64_t order() const;  // #W_M
  bool contains(const Perm& p) const;
  // Component of p in block b, renumbered to S_{N_b}.
  Perm component(const Perm& p, int b) const;
  // Block-reversing permutation: minimal length in W_M w_0 W_M.
  Perm w0m() const;
  // Minimal-length representatives of W/W_M (those increasing on each block),
  // enumerated deterministically.
  std::vector<Perm> coset_transversal() const;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int N_ = 0;
};

}  // namespace sigchar
