#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <vector>

#include "sigchar/partition.hpp"
#include "sigchar/rational.hpp"
#include "sigchar/signature_character.hpp"
#include "sigchar/symmetric_group.hpp"
#include "sigchar/walls.hpp"

namespace sigchar {

// Scalar of one rank-one factor: <alpha_i, s_{i-1}...s_1(nu)>.
struct FactorScalar {
  int simple_index;  // 1-based letter of the reduced word
  Rational c;
};

// The long intertwining operator A_{w_0}(nu) on the N!-dimensional standard
// module, realized as right multiplication by the group-algebra element
// prod_j (c_j t_{s_j} - 1).  Factor scalars are kept for the determinant
// order bookkeeping; exact arithmetic uses GMP rationals internally.
class OperatorOnRegularModule {
 public:
  OperatorOnRegularModule(int N, std::vector<FactorScalar> factors, const GroupIndex& index);

  int N() const { return N_; }
  int dim() const { return static_cast<int>(rho_.size()); }
  const std::vector<FactorScalar>& factors() const { return factors_; }
  const GroupIndex& index() const { return index_; }

  // Coefficient vector of rho = prod (c_j t_{s_j} - 1) on the group basis.
  const std::vector<mpq_class>& rho() const { return rho_; }
  // rho scaled integral: rho = rho_num / rho_den componentwise.
  const std::vector<mpz_class>& rho_num() const { return rho_num_; }
  const mpz_class& rho_den() const { return rho_den_; }

  // Matrix entry A[u][w] (t_w |-> sum_u A[u][w] t_u).
  mpq_class entry(int u, int w) const;
  // Image of a coefficient vector under A.
  std::vector<mpq_class> apply(const std::vector<mpq_class>& v) const;

  bool is_symmetric() const;  // rho[g] == rho[g^{-1}]

 private:
  int N_;
  std::vector<FactorScalar> factors_;
  const GroupIndex& index_;
  std::vector<mpq_class> rho_;
  std::vector<mpz_class> rho_num_;
  mpz_class rho_den_;
};

// Letters of the fixed reduced word for w_0, in application order (the first
// factor uses the first letter).  word_choice 0 is (s_1)(s_2 s_1)... read
// right to left; word_choice 1 is the mirrored word (used by the
// well-definedness test).
std::vector<int> reduced_word_w0(int N, int word_choice = 0);

// Shared long-lived group enumeration per N.
const GroupIndex& group_index(int N);

OperatorOnRegularModule build_A(const HermitianParameter& nu, int word_choice = 0);

struct IsotypicCounts {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  std::int64_t zero = 0;
  std::int64_t signature() const { return positive - negative; }
};

// Eigenvalue sign counts of A on the lambda-isotypic component.  The block
// acts as id (x) pi_lambda(rho), so the exact characteristic polynomial of
// the multiplicity-space matrix is recovered from power-sum traces and the
// real roots are counted by Descartes' rule.  The zero-eigenvalue count is
// checked against dim(lambda) * ([X:lambda] - [L:lambda]).
IsotypicCounts isotypic_counts(const OperatorOnRegularModule& A, const Partition& lambda,
                               const HermitianParameter& nu);

// Signature on the lambda-isotypic component divided by dim(lambda).
std::int64_t isotypic_signature(const OperatorOnRegularModule& A, const Partition& lambda,
                                const HermitianParameter& nu);

// Vanishing order of t -> det A(nu0 + t*direction) at t = 0; direction is
// given in full nu coordinates (antisymmetric).
int det_order_check(const HermitianParameter& nu0, const std::vector<Rational>& direction);

// Full oracle value: per-lambda signatures, normalized at the maximal W-type.
SignatureCharacter oracle_signature(const HermitianParameter& nu);

}  // namespace sigchar
