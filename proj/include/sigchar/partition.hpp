#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sigchar {

// Weakly decreasing positive parts.  Doubles as cycle type, Jordan type and
// label of an irreducible S_n-representation ((n) = trivial, (1^n) = sign).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < size() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Descending lexicographic: (n) is the largest, (1^n) the smallest.
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  // "2,1,1" with exponent shorthand accepted on input: "2,1^2".
  static Partition parse(std::string_view s);
  std::string str() const;         // plain comma-joined: "2,1,1"
  std::string str_compact() const; // exponent form used in signature rendering: "2,1^2"

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// All partitions of n in descending lexicographic order; this is the canonical
// index order for signature-character coefficient vectors.  1 <= n <= 20.
const std::vector<Partition>& partitions(int n);

// Index of p inside partitions(p.n()).
int partition_index(const Partition& p);

// Number of partitions of n (independent recurrence, exposed for tests).
std::int64_t partition_count(int n);

// Every prefix sum of p is <= that of q (p, q of the same n).
bool dominance_leq(const Partition& p, const Partition& q);

// Hook length formula.
std::int64_t dim_irrep(const Partition& p);

// Size of the conjugacy class with cycle type mu: n! / z_mu.
std::int64_t class_size(const Partition& mu);

std::int64_t factorial(int n);

// Cycle type of the order-reversing permutation i -> n+1-i.
Partition w0_cycle_type(int n);

}  // namespace sigchar
