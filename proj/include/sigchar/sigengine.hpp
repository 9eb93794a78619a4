#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigchar/classification.hpp"
#include "sigchar/multisegment.hpp"
#include "sigchar/signature_character.hpp"
#include "sigchar/walls.hpp"

namespace sigchar {

enum class Mode { proven_only, allow_conjectures, oracle };

// Raised when a value needs an unproven conjecture in proven_only mode.
class ConjectureRequired : public std::runtime_error {
 public:
  ConjectureRequired(std::string what, std::vector<std::string> names);
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

// Block structure and per-block tempered W-type multiplicities of U; the
// input of the signature-at-infinity trace formula.
struct InfinityInput {
  std::vector<int> block_sizes;                     // palindromic
  std::vector<std::vector<std::int64_t>> tempered_mults;  // over partitions(N_b)

  static InfinityInput from_langlands(const LanglandsDatum& l);
  void validate() const;
  int N() const;
};

// sigma_{infinity,lambda} = (#W)^{-1} sum_mu N(mu) chi_lambda(mu) Tr(f^{w(mu)}).
// Exact; N <= 8.
SignatureCharacter sig_at_infinity(const InfinityInput& inp);

// Signature of a unitary parameter: all-plus on the W-type multiplicities of
// the irreducible quotient L(m).  Requires is_unitary(m).
SignatureCharacter sig_unitary(const Multisegment& m);

// W-type multiplicities of L(m): equal to those of X(m) when X is
// irreducible, otherwise computed through the Zelevinsky dual (which must
// then have an irreducible standard module).
std::vector<std::int64_t> l_multiplicities(const Multisegment& m);

// Family point: m singleton pairs nu_1 > ... > nu_m > 0 together with
// [N/2]-m copies of [-1/2,1/2] (plus a [0] for odd N); r = #{nu_i > 1/2}.
struct FamilyPoint {
  int N = 0;
  int m = 0;  // number of singleton pairs
  int r = 0;

  void validate() const;
};

// Sigma^N(m,r) via the wall-crossing induction: an alternating binomial
// combination of Kostka columns.  Proven for r = 0 and for the unramified
// family (m = [N/2]) with r in {0, 1, [N/2]}; conjectural otherwise.
SignatureCharacter sigma_family(int N, int m, int r);

// Height-one crossing (Theorem on height-one walls, unramified):
// returns (sigma_plus, sigma_wall) = (minus - 2*Mprime, minus - Mprime).
std::pair<SignatureCharacter, SignatureCharacter> cross_height1(
    const SignatureCharacter& sigma_minus, const SignatureCharacter& sigma_Mprime);

// Height-two crossing: sides agree; epsilon = sgn-coeff(side)*sgn-coeff(M');
// wall = side - epsilon*M'.  Throws if either sgn-coefficient vanishes.
struct Height2Result {
  SignatureCharacter sigma_otherside;
  SignatureCharacter sigma_wall;
  int epsilon;
};
Height2Result cross_height2(const SignatureCharacter& sigma_side,
                            const SignatureCharacter& sigma_Mprime);

// Full unramified pipeline: chamber values from sigma_family, height-one
// walls by averaging the flanking chambers, height-two walls via
// cross_height2 with Sigma(L(M')) computed recursively, isolated unitary
// points via sig_unitary.  mode=oracle delegates to the intertwining
// operator (N <= 6).
SignatureCharacter signature_unramified(const HermitianParameter& p, Mode mode);

// Signature character of L(m) for a Hermitian multisegment whose parameter
// is wall-free within its own Langlands family, by unitarity / family
// membership / the infinity chamber / conjectural wall crossings from the
// unitary cone.  On-wall inputs are resolved with the crossing theorems.
SignatureCharacter sig_hermitian(const Multisegment& m, Mode mode);

struct KostkaIdentityReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> violations;
};

// chi_lambda(w_0) = sum_i (-2)^i C([N/2],i) K_{lambda^t,(2^i,1^{N-2i})} for
// every partition lambda of N.
KostkaIdentityReport kostka_identity_check(int N);

// True iff the parameter of m stays wall-free along t*nu for all t >= 1,
// i.e. m lies in the infinity chamber of its family.
bool at_infinity(const Multisegment& m);

// Detects membership in the M^N family (distinct singleton pairs, [-1/2,1/2]
// blocks, optional central [0]); returns (m, r) when wall-free.
std::optional<FamilyPoint> family_point(const Multisegment& m);

}  // namespace sigchar
