#include "sigchar/intertwiner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sigchar/characters.hpp"
#include "sigchar/classification.hpp"
#include "sigchar/sigengine.hpp"

namespace sigchar {

std::vector<int> reduced_word_w0(int N, int word_choice) {
  // (s_1)(s_2 s_1)(s_3 s_2 s_1)... read right to left gives the application
  // order; the mirrored variant swaps i -> N-i.
  std::vector<int> letters;
  for (int blockk = 1; blockk <= N - 1; ++blockk) {
    for (int i = blockk; i >= 1; --i) letters.push_back(i);
  }
  std::reverse(letters.begin(), letters.end());
  if (word_choice == 1) {
    for (int& l : letters) l = N - l;
  }
  return letters;
}

const GroupIndex& group_index(int N) {
  static std::mutex mu;
  static std::map<int, GroupIndex> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, GroupIndex(N)).first;
  return it->second;
}

OperatorOnRegularModule::OperatorOnRegularModule(int N, std::vector<FactorScalar> factors,
                                                 const GroupIndex& index)
    : N_(N), factors_(std::move(factors)), index_(index) {
  int order = index_.order();
  // Work with a scaled-integral rho to keep the convolutions gcd-free.
  rho_num_.assign(order, mpz_class(0));
  rho_num_[index_.rank(perm_identity(N_))] = 1;
  rho_den_ = 1;
  std::vector<mpz_class> next(order);
  for (const auto& f : factors_) {
    Perm s = perm_simple(N_, f.simple_index);
    // The factor t_w -> t_w (t_alpha alpha - 1) lands in the target module
    // H (x) C_{s_i...s_1 nu}, so alpha evaluates against the reflected
    // weight: the effective scalar is -c with c = <alpha_i, s_{i-1}...s_1 nu>.
    // This is what kills the maximal submodule (the image must be L).
    mpz_class p(static_cast<long>(-f.c.num()));
    mpz_class q(static_cast<long>(f.c.den()));
    // rho <- rho * (p t_s - q) / q: new[g] = p * old[g s] - q * old[g].
    int si = index_.rank(s);
    for (int g = 0; g < order; ++g) {
      next[g] = p * rho_num_[index_.product_rank(g, si)] - q * rho_num_[g];
    }
    rho_num_.swap(next);
    rho_den_ *= q;
  }
  rho_.reserve(order);
  for (int g = 0; g < order; ++g) rho_.emplace_back(mpq_class(rho_num_[g], rho_den_));
  for (auto& v : rho_) v.canonicalize();
}

mpq_class OperatorOnRegularModule::entry(int u, int w) const {
  Perm winv_u = perm_compose(perm_inverse(index_.element(w)), index_.element(u));
  return rho_[index_.rank(winv_u)];
}

std::vector<mpq_class> OperatorOnRegularModule::apply(const std::vector<mpq_class>& v) const {
  int order = index_.order();
  std::vector<mpq_class> out(order, mpq_class(0));
  // A(t_w) = t_w * rho = sum_y rho[y] t_{w y}.
  for (int w = 0; w < order; ++w) {
    if (v[w] == 0) continue;
    for (int y = 0; y < order; ++y) {
      if (rho_[y] == 0) continue;
      out[index_.product_rank(w, y)] += v[w] * rho_[y];
    }
  }
  return out;
}

bool OperatorOnRegularModule::is_symmetric() const {
  int order = index_.order();
  for (int g = 0; g < order; ++g) {
    int ginv = index_.rank(perm_inverse(index_.element(g)));
    if (rho_[g] != rho_[ginv]) return false;
  }
  return true;
}

OperatorOnRegularModule build_A(const HermitianParameter& nu, int word_choice) {
  int N = nu.N();
  if (N > 7) throw std::domain_error("build_A: N > 7 not supported");
  auto letters = reduced_word_w0(N, word_choice);
  std::vector<FactorScalar> factors;
  factors.reserve(letters.size());
  std::vector<Rational> cur = nu.nu();
  for (int l : letters) {
    factors.push_back(FactorScalar{l, cur[l - 1] - cur[l]});
    std::swap(cur[l - 1], cur[l]);
  }
  return OperatorOnRegularModule(N, std::move(factors), group_index(N));
}

namespace {

// Expected zero-eigenvalue count on the lambda-isotypic block:
// dim(lambda) * ([X:lambda] - [L:lambda]).
std::int64_t expected_zeros(const Partition& lambda, const HermitianParameter& nu) {
  Multisegment m = nu.to_multisegment();
  auto x_mult = standard_w_multiplicities(m);
  auto l_mult = l_multiplicities(m);
  int idx = partition_index(lambda);
  return dim_irrep(lambda) * (x_mult[idx] - l_mult[idx]);
}

int sign_variations(const std::vector<mpq_class>& coeffs) {
  int var = 0;
  int prev = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

IsotypicCounts isotypic_counts(const OperatorOnRegularModule& A, const Partition& lambda,
                               const HermitianParameter& nu) {
  const GroupIndex& gi = A.index();
  int order = gi.order();
  std::int64_t dim = dim_irrep(lambda);
  auto x_mult = standard_w_multiplicities(nu.to_multisegment());
  std::int64_t mult = x_mult[partition_index(lambda)];
  IsotypicCounts counts;
  if (mult == 0) return counts;
  std::int64_t want_zero = expected_zeros(lambda, nu);

  // On the lambda-isotypic block A acts as id (x) pi_lambda(rho) on
  // V_lambda (x) Hom_W(V_lambda, X), so its eigenvalues are those of the
  // mult x mult matrix pi_lambda(rho), each dim(lambda) times.  The exact
  // characteristic polynomial of pi_lambda(rho) comes from the power sums
  // tr pi_lambda(rho^k) = sum_g rho^k[g] chi_lambda(g) by Newton's
  // identities; all roots are real (A is self-adjoint), so Descartes' rule
  // counts positive and negative eigenvalues exactly.
  const auto& types = partitions(A.N());
  std::vector<std::int64_t> chi(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) chi[i] = character(lambda, types[i]);
  std::vector<std::int64_t> chi_of(order);
  for (int g = 0; g < order; ++g) {
    chi_of[g] = chi[partition_index(cycle_type(gi.element(g)))];
  }

  // Power sums of the scaled-integral rho: all arithmetic stays in Z, and
  // the uniform positive scaling by rho_den leaves eigenvalue signs alone.
  int n = static_cast<int>(mult);
  std::vector<mpz_class> power(order, mpz_class(0));
  power[gi.rank(perm_identity(A.N()))] = 1;
  std::vector<mpq_class> psum(n + 1, mpq_class(0));
  psum[0] = n;
  const auto& rnum = A.rho_num();
  for (int k = 1; k <= n; ++k) {
    std::vector<mpz_class> next(order, mpz_class(0));
    for (int a = 0; a < order; ++a) {
      if (power[a] == 0) continue;
      for (int b = 0; b < order; ++b) {
        if (rnum[b] == 0) continue;
        next[gi.product_rank(a, b)] += power[a] * rnum[b];
      }
    }
    power.swap(next);
    mpz_class tr(0);
    for (int g = 0; g < order; ++g) {
      if (chi_of[g] != 0 && power[g] != 0) tr += power[g] * chi_of[g];
    }
    psum[k] = mpq_class(tr);
  }
  // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
  std::vector<mpq_class> e(n + 1, mpq_class(0));
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpq_class acc(0);
    for (int i = 1; i <= k; ++i) {
      mpq_class term = e[k - i] * psum[i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    e[k] = acc / k;
  }
  // char poly x^n - e1 x^{n-1} + e2 x^{n-2} - ...
  std::vector<mpq_class> cp(n + 1);
  for (int i = 0; i <= n; ++i) cp[i] = (i % 2 == 0) ? e[i] : -e[i];
  int zeros = 0;
  for (int k = n; k >= 1 && cp[k] == 0; --k) ++zeros;
  std::vector<mpq_class> pos_seq(cp.begin(), cp.end() - zeros);
  std::vector<mpq_class> neg_seq = pos_seq;
  for (std::size_t k = 0; k < neg_seq.size(); ++k) {
    if ((n - zeros - static_cast<int>(k)) % 2 == 1) neg_seq[k] = -neg_seq[k];
  }
  counts.positive = dim * sign_variations(pos_seq);
  counts.negative = dim * sign_variations(neg_seq);
  counts.zero = dim * zeros;

  if (counts.zero != want_zero) {
    throw std::logic_error("isotypic_counts: zero-eigenvalue count mismatch");
  }
  if (counts.positive + counts.negative + counts.zero != dim * mult) {
    throw std::logic_error("isotypic_counts: eigenvalue count mismatch");
  }
  return counts;
}

std::int64_t isotypic_signature(const OperatorOnRegularModule& A, const Partition& lambda,
                                const HermitianParameter& nu) {
  IsotypicCounts c = isotypic_counts(A, lambda, nu);
  std::int64_t dim = dim_irrep(lambda);
  if (c.signature() % dim != 0) {
    throw std::logic_error("isotypic_signature: signature not divisible by dim(lambda)");
  }
  return c.signature() / dim;
}

int det_order_check(const HermitianParameter& nu0, const std::vector<Rational>& direction) {
  int N = nu0.N();
  if (static_cast<int>(direction.size()) != N) {
    throw std::domain_error("det_order_check: direction must have length N");
  }
  auto letters = reduced_word_w0(N, 0);
  // beta_j = s_{a_1}...s_{a_{j-1}}(alpha_{a_j}); c_j = <beta_j, nu>.
  std::vector<Rational> cur0 = nu0.nu();
  std::vector<Rational> curd = direction;
  int order2 = static_cast<int>(factorial(N) / 2);
  int total = 0;
  for (int l : letters) {
    Rational c0 = cur0[l - 1] - cur0[l];
    Rational cd = curd[l - 1] - curd[l];
    if (c0 == Rational(1)) {
      if (cd.is_zero()) {
        throw std::domain_error("det_order_check: direction stays inside the wall");
      }
      total += 1;
    }
    std::swap(cur0[l - 1], cur0[l]);
    std::swap(curd[l - 1], curd[l]);
  }
  return total * order2;
}

SignatureCharacter oracle_signature(const HermitianParameter& nu) {
  OperatorOnRegularModule A = build_A(nu);
  const auto& all = partitions(nu.N());
  std::vector<std::int64_t> coeffs(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    coeffs[i] = isotypic_signature(A, all[i], nu);
  }
  SignatureCharacter raw(nu.N(), std::move(coeffs), Provenance::proven);
  return normalize(raw, max_lambda(nu.to_multisegment()));
}

}  // namespace sigchar
