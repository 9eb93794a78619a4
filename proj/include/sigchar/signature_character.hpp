#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sigchar/multisegment.hpp"
#include "sigchar/partition.hpp"

namespace sigchar {

enum class Provenance { proven, conjectural };

// Integer vector indexed by partitions(n) in canonical order, together with
// a provenance tag.  Any arithmetic with a conjectural operand yields a
// conjectural result with merged conjecture names.
class SignatureCharacter {
 public:
  SignatureCharacter() = default;
  SignatureCharacter(int n, std::vector<std::int64_t> coeffs,
                     Provenance prov = Provenance::proven,
                     std::vector<std::string> uses = {});

  static SignatureCharacter zero(int n);

  int n() const { return n_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  Provenance provenance() const { return prov_; }
  bool conjectural() const { return prov_ == Provenance::conjectural; }
  const std::vector<std::string>& conjecture_uses() const { return uses_; }

  std::int64_t coeff(const Partition& lambda) const;
  std::int64_t coeff_sgn() const;      // coefficient at (1^n)
  std::int64_t coeff_trivial() const;  // coefficient at (n)

  SignatureCharacter& mark_conjectural(const std::string& use);

  friend SignatureCharacter operator+(const SignatureCharacter& a, const SignatureCharacter& b);
  friend SignatureCharacter operator-(const SignatureCharacter& a, const SignatureCharacter& b);
  friend SignatureCharacter operator*(std::int64_t c, const SignatureCharacter& a);

  // Equality of coefficient vectors only; provenance is compared separately.
  friend bool operator==(const SignatureCharacter& a, const SignatureCharacter& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SignatureCharacter& a, const SignatureCharacter& b) {
    return !(a == b);
  }

  // Paper notation, smallest partition first: "-(1^4)-(2,1^2)+(2^2)".
  std::string str(bool include_zeros = false) const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> coeffs_;
  Provenance prov_ = Provenance::proven;
  std::vector<std::string> uses_;
};

std::ostream& operator<<(std::ostream& os, const SignatureCharacter& s);

// W-type multiplicities of the standard module X(m): vector over
// partitions(N) with entry K_{d^t, jordan_type(m)} at d.
std::vector<std::int64_t> standard_w_multiplicities(const Multisegment& m);

// The unique maximal W-type occurring in X(m) and in L(m): the transpose of
// the Jordan type.
Partition max_lambda(const Multisegment& m);

// Coefficients permuted by lambda -> transpose(lambda); the effect of the
// Zelevinsky involution on signature characters.
SignatureCharacter sgn_twist(const SignatureCharacter& s);

// Flip the global sign if needed so that coeffs[lambda_max] = +1.  Requires
// |coeffs[lambda_max]| = 1.
SignatureCharacter normalize(const SignatureCharacter& s, const Partition& lambda_max);

}  // namespace sigchar
