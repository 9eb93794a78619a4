#include "sigchar/sigengine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "sigchar/characters.hpp"
#include "sigchar/intertwiner.hpp"
#include "sigchar/symmetric_group.hpp"

namespace sigchar {

namespace {

constexpr const char* kConjHeightOne = "Conj 9.11";
constexpr const char* kConjFamily = "Conj 10.1";

std::int64_t binomial(int n, int k) {
  std::int64_t b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

ConjectureRequired::ConjectureRequired(std::string what, std::vector<std::string> names)
    : std::runtime_error(std::move(what)), names_(std::move(names)) {}

int InfinityInput::N() const {
  int n = 0;
  for (int b : block_sizes) n += b;
  return n;
}

void InfinityInput::validate() const {
  int r = static_cast<int>(block_sizes.size());
  if (r == 0 || tempered_mults.size() != block_sizes.size()) {
    throw std::domain_error("InfinityInput: inconsistent blocks");
  }
  for (int b = 0; b < r; ++b) {
    if (block_sizes[b] != block_sizes[r - 1 - b]) {
      throw std::domain_error("InfinityInput: block sizes must be palindromic");
    }
    if (tempered_mults[b].size() != partitions(block_sizes[b]).size()) {
      throw std::domain_error("InfinityInput: multiplicity vector has wrong length");
    }
    if (tempered_mults[b] != tempered_mults[r - 1 - b]) {
      throw std::domain_error("InfinityInput: mirrored blocks must carry equal data");
    }
  }
}

InfinityInput InfinityInput::from_langlands(const LanglandsDatum& l) {
  InfinityInput inp;
  inp.block_sizes = l.block_sizes;
  for (const auto& u : l.tempered_parts) {
    if (!is_tempered(u)) throw std::domain_error("InfinityInput: block data not tempered");
    inp.tempered_mults.push_back(standard_w_multiplicities(u));
  }
  inp.validate();
  return inp;
}

SignatureCharacter sig_at_infinity(const InfinityInput& inp) {
  inp.validate();
  int N = inp.N();
  if (N > 8) throw std::domain_error("sig_at_infinity: N > 8 not supported");
  BlockLevi levi(inp.block_sizes);
  int r = levi.blocks();
  Perm w0m = levi.w0m();
  std::vector<Perm> transversal = levi.coset_transversal();
  const auto& classes = partitions(N);

  // Tr(f^{w(mu)}) per conjugacy class, independent of lambda.
  std::vector<std::int64_t> traces(classes.size(), 0);
  auto run_class = [&](std::size_t ci) {
    Perm w = class_representative(classes[ci]);
    std::int64_t total = 0;
    for (const auto& z : transversal) {
      Perm zinv = perm_inverse(z);
      Perm x = perm_compose(perm_compose(zinv, perm_compose(w, z)), w0m);
      if (!levi.contains(x)) continue;
      std::int64_t term = 1;
      for (int b = 0; b < (r + 1) / 2 && term != 0; ++b) {
        int mb = r - 1 - b;
        // Tr((x_b (x) x_mb) o swap | U_b (x) U_b) = Tr(x_b x_mb | U_b);
        // the middle block of an odd composition contributes its character.
        Partition t = (b == mb)
                          ? cycle_type(levi.component(x, b))
                          : cycle_type(perm_compose(levi.component(x, b), levi.component(x, mb)));
        std::int64_t tr = 0;
        const auto& parts_b = partitions(levi.sizes()[b]);
        for (std::size_t li = 0; li < parts_b.size(); ++li) {
          if (inp.tempered_mults[b][li] != 0) {
            tr += inp.tempered_mults[b][li] * character(parts_b[li], t);
          }
        }
        term *= tr;
      }
      total += term;
    }
    traces[ci] = total;
  };

  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(classes.size()));
  if (workers > 1 && N >= 6) {
    std::vector<std::thread> pool;
    std::mutex next_mutex;
    std::size_t next = 0;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        while (true) {
          std::size_t ci;
          {
            std::lock_guard<std::mutex> lock(next_mutex);
            if (next >= classes.size()) return;
            ci = next++;
          }
          run_class(ci);
        }
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t ci = 0; ci < classes.size(); ++ci) run_class(ci);
  }

  std::int64_t order = factorial(N);
  std::vector<std::int64_t> coeffs(classes.size(), 0);
  for (std::size_t li = 0; li < classes.size(); ++li) {
    std::int64_t sum = 0;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      if (traces[ci] == 0) continue;
      sum += class_size(classes[ci]) * character(classes[li], classes[ci]) * traces[ci];
    }
    if (sum % order != 0) throw std::logic_error("sig_at_infinity: non-integral signature");
    coeffs[li] = sum / order;
  }
  return SignatureCharacter(N, std::move(coeffs), Provenance::proven);
}

std::vector<std::int64_t> l_multiplicities(const Multisegment& m) {
  if (is_irreducible_standard(m)) return standard_w_multiplicities(m);
  // Height-one wall: 0 -> L(M') -> X(M) -> L(M) -> 0 with L(M') = X(M').
  if (preceding_pairs(m).size() == 1) {
    Multisegment mprime = m;
    for (int i = 0; i < m.size(); ++i) {
      for (int j = i + 1; j < m.size(); ++j) {
        if (linked(m.segments()[i], m.segments()[j])) mprime = elementary_operation(m, i, j);
      }
    }
    if (is_irreducible_standard(mprime)) {
      auto x = standard_w_multiplicities(m);
      auto sub = standard_w_multiplicities(mprime);
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] -= sub[i];
        if (x[i] < 0) throw std::logic_error("l_multiplicities: negative multiplicity");
      }
      return x;
    }
  }
  Multisegment dual = zelevinsky(m);
  if (!is_irreducible_standard(dual)) {
    throw std::domain_error("l_multiplicities: neither X(m) nor X(m^#) is irreducible");
  }
  auto k = standard_w_multiplicities(dual);
  const auto& all = partitions(m.N());
  std::vector<std::int64_t> out(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    out[i] = k[partition_index(all[i].transpose())];
  }
  return out;
}

SignatureCharacter sig_unitary(const Multisegment& m) {
  if (!is_unitary(m)) throw std::domain_error("sig_unitary: parameter is not unitary");
  return SignatureCharacter(m.N(), l_multiplicities(m), Provenance::proven);
}

void FamilyPoint::validate() const {
  int M = N / 2;
  if (N < 1 || m < 0 || r < 0 || r > m || m > M) {
    throw std::domain_error("FamilyPoint: need 0 <= r <= m <= [N/2]");
  }
}

namespace {

// Asserted once per N: the unramified infinity value equals chi_lambda(w_0).
void assert_family_infinity(int N) {
  static std::mutex mu;
  static std::set<int> done;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (done.count(N)) return;
  }
  if (N > 14) return;
  int M = N / 2;
  const auto& all = partitions(N);
  Partition w0t = w0_cycle_type(N);
  for (std::size_t li = 0; li < all.size(); ++li) {
    std::int64_t sum = 0;
    for (int i = 0; i <= M; ++i) {
      std::vector<int> parts(i, 2);
      for (int k = 0; k < N - 2 * i; ++k) parts.push_back(1);
      std::int64_t sign = (i % 2 == 0) ? 1 : -1;
      sum += sign * (std::int64_t(1) << i) * binomial(M, i) *
             kostka(all[li].transpose(), Partition(parts));
    }
    if (sum != character(all[li], w0t)) {
      throw std::logic_error("sigma_family: unramified infinity value disagrees with chi(w0)");
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  done.insert(N);
}

}  // namespace

SignatureCharacter sigma_family(int N, int m, int r) {
  FamilyPoint fp{N, m, r};
  fp.validate();
  int M = N / 2;
  int b = M - m;  // number of [-1/2,1/2] blocks at this family point
  const auto& all = partitions(N);
  std::vector<std::int64_t> coeffs(all.size(), 0);
  for (int i = 0; i <= r; ++i) {
    std::vector<int> parts(b + i, 2);
    for (int k = 0; k < N - 2 * (b + i); ++k) parts.push_back(1);
    Partition e(parts);
    std::int64_t factor = ((i % 2 == 0) ? 1 : -1) * (std::int64_t(1) << i) * binomial(r, i);
    for (std::size_t li = 0; li < all.size(); ++li) {
      coeffs[li] += factor * kostka(all[li].transpose(), e);
    }
  }
  bool proven = (r == 0) || (m == M && (r <= 1 || r == M));
  if (m == M && r == M) assert_family_infinity(N);
  SignatureCharacter out(N, std::move(coeffs),
                         proven ? Provenance::proven : Provenance::conjectural);
  if (!proven) {
    out.mark_conjectural(kConjHeightOne);
    out.mark_conjectural(kConjFamily);
  }
  return out;
}

std::pair<SignatureCharacter, SignatureCharacter> cross_height1(
    const SignatureCharacter& sigma_minus, const SignatureCharacter& sigma_Mprime) {
  if (sigma_minus.n() != sigma_Mprime.n()) throw std::domain_error("cross_height1: size mismatch");
  return {sigma_minus - 2 * sigma_Mprime, sigma_minus - sigma_Mprime};
}

Height2Result cross_height2(const SignatureCharacter& sigma_side,
                            const SignatureCharacter& sigma_Mprime) {
  if (sigma_side.n() != sigma_Mprime.n()) throw std::domain_error("cross_height2: size mismatch");
  std::int64_t s1 = sigma_side.coeff_sgn();
  std::int64_t s2 = sigma_Mprime.coeff_sgn();
  if (s1 == 0 || s2 == 0) {
    throw std::domain_error("cross_height2: sgn-coefficient vanishes, epsilon undefined");
  }
  int eps = ((s1 > 0) == (s2 > 0)) ? 1 : -1;
  return {sigma_side, sigma_side - eps * sigma_Mprime, eps};
}

namespace {

// ----- family geometry helpers -------------------------------------------

// The two preceding pairs of a genuine height-two wall are Hermitian mirror
// images of each other; two unrelated walls meeting at a point are not.
bool mirrored_pair_structure(const Multisegment& m,
                             const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.size() != 2) return false;
  auto dual_of = [](const Segment& s) { return Segment(-s.end(), s.length); };
  const auto& segs = m.segments();
  const Segment a1 = segs[pairs[0].first], b1 = segs[pairs[0].second];
  const Segment a2 = segs[pairs[1].first], b2 = segs[pairs[1].second];
  return (a2 == dual_of(b1) && b2 == dual_of(a1)) || (a1 == dual_of(b2) && b1 == dual_of(a2));
}

// Merge linked pairs until none remain; at a single-wall point this yields
// the multisegment M' with X(M') irreducible.
Multisegment merge_to_mprime(const Multisegment& m) {
  Multisegment cur = m;
  while (true) {
    bool merged = false;
    for (int i = 0; i < cur.size() && !merged; ++i) {
      for (int j = i + 1; j < cur.size() && !merged; ++j) {
        if (linked(cur.segments()[i], cur.segments()[j])) {
          cur = elementary_operation(cur, i, j);
          merged = true;
        }
      }
    }
    if (!merged) break;
  }
  return cur;
}

struct Family {
  std::vector<int> block_sizes;
  std::vector<Multisegment> tempered_parts;  // centers 0
  std::vector<Rational> nu;                  // current parameter
  int N = 0;

  Multisegment at(const std::vector<Rational>& nu_values) const {
    LanglandsDatum l{block_sizes, tempered_parts, nu_values};
    return langlands_to_bz(l);
  }
};

Family family_of(const Multisegment& m) {
  LanglandsDatum l = kl_to_langlands(bz_to_kl(m));
  Family f;
  f.block_sizes = l.block_sizes;
  f.tempered_parts = l.tempered_parts;
  f.nu = l.nu;
  f.N = m.N();
  return f;
}

bool hermitian_family(const Family& f) {
  int r = static_cast<int>(f.block_sizes.size());
  for (int i = 0; i < r; ++i) {
    int mi = r - 1 - i;
    if (f.block_sizes[i] != f.block_sizes[mi]) return false;
    if (f.nu[i] + f.nu[mi] != Rational(0)) return false;
    if (!(f.tempered_parts[i] == f.tempered_parts[mi])) return false;
  }
  return true;
}

// Crossing events of the straight path nu(u) = P + u*(T - P), 0 < u < 1:
// parameter values where two segments from different blocks become linked.
// The relative offset of b above a is r(u) = (b.start + nu_j(u)) - (a.start
// + nu_i(u)); the pair is linked at offset k iff linked([0..la), [k..k+lb)).
std::vector<Rational> crossing_times(const Family& f, const std::vector<Rational>& P,
                                     const std::vector<Rational>& T) {
  std::set<Rational> times;
  int r = static_cast<int>(f.block_sizes.size());
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      for (const auto& a : f.tempered_parts[i].segments()) {
        for (const auto& b : f.tempered_parts[j].segments()) {
          Rational c = b.start - a.start + P[j] - P[i];
          Rational d = (T[j] - P[j]) - (T[i] - P[i]);
          if (d.is_zero()) continue;
          int bound = a.length + b.length;
          for (int k = -bound; k <= bound; ++k) {
            Rational u = (Rational(k) - c) / d;
            if (!(Rational(0) < u && u < Rational(1))) continue;
            if (linked(Segment(Rational(0), a.length), Segment(Rational(k), b.length))) {
              times.insert(u);
            }
          }
        }
      }
    }
  }
  return std::vector<Rational>(times.begin(), times.end());
}

std::vector<Rational> lerp(const std::vector<Rational>& P, const std::vector<Rational>& T,
                           const Rational& u) {
  std::vector<Rational> out(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) out[i] = P[i] + u * (T[i] - P[i]);
  return out;
}

// A parameter in the open unitary cone 0 < nu_q < ... < nu_1 < 1/2 of the
// family (middle block stays at 0 for an odd number of blocks).
std::vector<Rational> unitary_box_point(const Family& f, int jitter) {
  int r = static_cast<int>(f.block_sizes.size());
  int q = r / 2;
  std::vector<Rational> nu(r, Rational(0));
  for (int k = 0; k < q; ++k) {
    nu[k] = Rational(q - k, 2 * (q + 1)) + Rational(jitter, 64 * (q + 1) * (1009 + k));
    nu[r - 1 - k] = -nu[k];
  }
  return nu;
}

SignatureCharacter chamber_value(const Multisegment& m, Mode mode, int depth);

// Height-one crossing from a known side; the side labels cancel because the
// sgn-coefficient flips across the wall: Sigma_across = Sigma_here -
// 2*s*Sigma', s = sgn(here)*sgn(M').  Only mixed families walk, so every
// such crossing invokes the height-one conjecture.
SignatureCharacter cross_from(const SignatureCharacter& here, const SignatureCharacter& mprime) {
  std::int64_t s1 = here.coeff_sgn();
  std::int64_t s2 = mprime.coeff_sgn();
  if (s1 == 0 || s2 == 0) {
    throw std::domain_error("height-one crossing: sgn-coefficient vanishes");
  }
  std::int64_t s = ((s1 > 0) == (s2 > 0)) ? 1 : -1;
  SignatureCharacter out = here - (2 * s) * mprime;
  out.mark_conjectural(kConjHeightOne);
  return out;
}

// Wall-free mixed-family value by crossing walls from the unitary cone.
SignatureCharacter walk_family(const Multisegment& m, Mode mode, int depth) {
  Family f = family_of(m);
  if (!hermitian_family(f)) {
    throw std::domain_error("sig_hermitian: multisegment is not Hermitian");
  }
  std::vector<Rational> target = f.nu;

  for (int jitter = 0; jitter < 16; ++jitter) {
    std::vector<Rational> P = unitary_box_point(f, jitter);
    auto times = crossing_times(f, P, target);
    Multisegment start = f.at(P);
    if (!preceding_pairs(start).empty() || !is_unitary(start)) continue;

    SignatureCharacter cur = sig_unitary(start);
    bool ok = true;
    for (const auto& u : times) {
      Multisegment at_wall = f.at(lerp(P, target, u));
      auto pairs = preceding_pairs(at_wall);
      if (pairs.size() == 1) {
        Multisegment mprime = merge_to_mprime(at_wall);
        if (!preceding_pairs(mprime).empty()) {
          ok = false;
          break;
        }
        SignatureCharacter sp = chamber_value(mprime, mode, depth + 1);
        cur = cross_from(cur, sp);
      } else if (pairs.size() == 2 && mirrored_pair_structure(at_wall, pairs)) {
        // Height-two transparency is a theorem for unramified families only,
        // and unramified parameters never walk.
        throw std::domain_error(
            "sig_hermitian: the value would require crossing a height-two wall of a "
            "mixed family, for which no proven or conjectured rule exists");
      } else {
        ok = false;  // degenerate event: several walls met at once
        break;
      }
    }
    if (ok) return cur;
  }
  throw std::domain_error("sig_hermitian: could not find a transversal path from the unitary cone");
}

SignatureCharacter chamber_value(const Multisegment& m, Mode mode, int depth) {
  if (depth > 16) throw std::logic_error("sig_hermitian: recursion too deep");
  if (is_unitary(m)) return sig_unitary(m);
  // The trace formula proves infinity-chamber values but enumerates W.
  if (m.N() <= 8 && at_infinity(m)) {
    return sig_at_infinity(InfinityInput::from_langlands(kl_to_langlands(bz_to_kl(m))));
  }
  if (auto fp = family_point(m)) return sigma_family(fp->N, fp->m, fp->r);
  return walk_family(m, mode, depth);
}

// Perturbs an on-wall family parameter to both flanking chambers.
std::pair<Multisegment, Multisegment> flanks_of_wall(const Multisegment& m) {
  Family f = family_of(m);
  auto pairs = preceding_pairs(m);
  if (pairs.empty()) throw std::logic_error("flanks_of_wall: not on a wall");
  // Pick a block of the first preceding pair that is free to move.
  const Segment& a = m.segments()[pairs[0].first];
  const Segment& b = m.segments()[pairs[0].second];
  int r = static_cast<int>(f.block_sizes.size());
  int ia = -1, ib = -1;
  for (int i = 0; i < r; ++i) {
    if (f.nu[i] == a.center()) ia = i;
    if (f.nu[i] == b.center()) ib = i;
  }
  if (ia < 0 || ib < 0) throw std::logic_error("flanks_of_wall: pair blocks not found");
  int mv = (f.nu[ia].is_zero()) ? ib : ia;  // middle block cannot move
  int mirror = r - 1 - mv;
  if (f.nu[mv].is_zero()) throw std::logic_error("flanks_of_wall: degenerate pair");

  // Direction: move block mv (and its mirror, antisymmetrically).
  std::vector<Rational> dir(r, Rational(0));
  dir[mv] = Rational(1);
  dir[mirror] = dir[mirror] - Rational(1);  // mirror may equal mv only if nu=0, excluded

  // Largest safe |t|: half the first crossing/collision time along dir.
  Rational tmax(1, 2);
  auto consider = [&](const Rational& t) {
    if (t.is_zero()) return;
    Rational a_t = t.sign() > 0 ? t : -t;
    if (a_t < tmax * Rational(2)) tmax = a_t / Rational(2);
  };
  // Block collisions.
  for (int i = 0; i + 1 < r; ++i) {
    Rational dd = dir[i] - dir[i + 1];
    if (!dd.is_zero()) consider((f.nu[i + 1] - f.nu[i]) / dd);
  }
  // Wall events along the line nu + t*dir.
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      for (const auto& sa : f.tempered_parts[i].segments()) {
        for (const auto& sb : f.tempered_parts[j].segments()) {
          Rational c = sb.start - sa.start + f.nu[j] - f.nu[i];
          Rational d = dir[j] - dir[i];
          if (d.is_zero()) continue;
          int bound = sa.length + sb.length;
          for (int k = -bound; k <= bound; ++k) {
            if (linked(Segment(Rational(0), sa.length), Segment(Rational(k), sb.length))) {
              consider((Rational(k) - c) / d);
            }
          }
        }
      }
    }
  }
  auto nup = f.nu;
  auto num = f.nu;
  for (int i = 0; i < r; ++i) {
    nup[i] += tmax * dir[i];
    num[i] -= tmax * dir[i];
  }
  Multisegment mp = f.at(nup);
  Multisegment mm = f.at(num);
  if (!preceding_pairs(mp).empty() || !preceding_pairs(mm).empty()) {
    throw std::logic_error("flanks_of_wall: perturbation landed on a wall");
  }
  return {mm, mp};
}

}  // namespace

bool at_infinity(const Multisegment& m) {
  if (!preceding_pairs(m).empty()) return false;
  Family f = family_of(m);
  // Arrangement chambers are convex, so m lies in the infinity chamber iff
  // the outward ray nu(t) = t*nu, t >= 1, never meets a wall.  Linking of a
  // segment pair requires an integer start offset of bounded size, so the
  // events along the ray are finitely many and exactly solvable.
  int r = static_cast<int>(f.block_sizes.size());
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      Rational d = f.nu[j] - f.nu[i];
      if (d.is_zero()) continue;
      for (const auto& a : f.tempered_parts[i].segments()) {
        for (const auto& b : f.tempered_parts[j].segments()) {
          Rational c = b.start - a.start;
          int bound = a.length + b.length;
          for (int k = -bound; k <= bound; ++k) {
            Rational t = (Rational(k) - c) / d;
            if (!(Rational(1) < t)) continue;
            if (linked(Segment(Rational(0), a.length), Segment(Rational(k), b.length))) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

std::optional<FamilyPoint> family_point(const Multisegment& m) {
  int N = m.N();
  int M = N / 2;
  std::vector<Rational> xs;
  int blocks = 0;
  bool middle = false;
  for (const auto& s : m.segments()) {
    if (s.length == 2 && s.center() == Rational(0)) {
      ++blocks;
    } else if (s.length == 1) {
      if (s.start.is_zero()) {
        if (middle) return std::nullopt;  // repeated central singleton
        middle = true;
      } else if (s.start.sign() > 0) {
        xs.push_back(s.start);
      }
    } else {
      return std::nullopt;
    }
  }
  if ((N % 2 == 1) != middle) return std::nullopt;
  int pairs = static_cast<int>(xs.size());
  if (blocks + pairs != M) return std::nullopt;
  // necessary: the negatives mirror the positives and all xs distinct
  std::set<Rational> xset(xs.begin(), xs.end());
  if (static_cast<int>(xset.size()) != pairs) return std::nullopt;
  if (!is_hermitian(m)) return std::nullopt;
  if (!preceding_pairs(m).empty()) return std::nullopt;  // on a wall: not a chamber point
  for (const auto& x : xs) {
    if (x == Rational(1, 2)) return std::nullopt;
  }
  int r = 0;
  for (const auto& x : xs) {
    if (Rational(1, 2) < x) ++r;
  }
  return FamilyPoint{N, pairs, r};
}

SignatureCharacter sig_hermitian(const Multisegment& m, Mode mode) {
  if (!is_hermitian(m)) throw std::domain_error("sig_hermitian: multisegment is not Hermitian");
  auto pairs = preceding_pairs(m);
  SignatureCharacter result = SignatureCharacter::zero(std::max(m.N(), 1));
  if (pairs.empty()) {
    result = chamber_value(m, mode, 0);
  } else if (is_unitary(m)) {
    result = sig_unitary(m);
  } else if (pairs.size() == 1) {
    auto [mm, mp] = flanks_of_wall(m);
    SignatureCharacter a = chamber_value(mm, mode, 0);
    SignatureCharacter b = chamber_value(mp, mode, 0);
    std::vector<std::int64_t> avg(a.coeffs());
    for (std::size_t i = 0; i < avg.size(); ++i) {
      std::int64_t sum = avg[i] + b.coeffs()[i];
      if (sum % 2 != 0) throw std::logic_error("sig_hermitian: flank sum is odd");
      avg[i] = sum / 2;
    }
    std::vector<std::string> uses = a.conjecture_uses();
    uses.insert(uses.end(), b.conjecture_uses().begin(), b.conjecture_uses().end());
    result = SignatureCharacter(m.N(), std::move(avg),
                                (a.conjectural() || b.conjectural()) ? Provenance::conjectural
                                                                     : Provenance::proven,
                                std::move(uses));
    // The averaging at a height-one wall is a theorem only for unramified
    // families; elsewhere it is the height-one conjecture.
    if (!is_unramified(m)) result.mark_conjectural(kConjHeightOne);
  } else if (pairs.size() == 2 && mirrored_pair_structure(m, pairs)) {
    auto [mm, mp] = flanks_of_wall(m);
    SignatureCharacter a = chamber_value(mm, mode, 0);
    SignatureCharacter b = chamber_value(mp, mode, 0);
    if (a != b) throw std::logic_error("sig_hermitian: height-two wall is not transparent");
    Multisegment mprime = merge_to_mprime(m);
    if (!preceding_pairs(mprime).empty()) {
      throw std::domain_error("sig_hermitian: M' still reducible (multiple walls?)");
    }
    SignatureCharacter sp = chamber_value(mprime, mode, 0);
    Height2Result h2 = cross_height2(a, sp);
    result = h2.sigma_wall;
    if (!is_unramified(m)) result.mark_conjectural(kConjHeightOne);
  } else {
    // Height >= 3: fall back to the Zelevinsky involution.
    Multisegment dual = zelevinsky(m);
    if (!preceding_pairs(dual).empty() && !is_unitary(dual)) {
      throw std::domain_error("sig_hermitian: dual of a high wall is itself on a wall");
    }
    result = sgn_twist(sig_hermitian(dual, mode));
  }
  if (mode == Mode::proven_only && result.conjectural()) {
    throw ConjectureRequired("requires conjecture: " +
                                 [&] {
                                   std::string s;
                                   for (const auto& u : result.conjecture_uses()) {
                                     if (!s.empty()) s += ", ";
                                     s += u;
                                   }
                                   return s;
                                 }(),
                             result.conjecture_uses());
  }
  return result;
}

SignatureCharacter signature_unramified(const HermitianParameter& p, Mode mode) {
  int N = p.N();
  if (mode == Mode::oracle) {
    if (N > 6) throw std::domain_error("signature_unramified: oracle mode limited to N <= 6");
    return oracle_signature(p);
  }
  if (N > 12) throw std::domain_error("signature_unramified: N > 12 not supported");
  int M = p.M();
  Multisegment m = p.to_multisegment();
  auto active = walls_through(p);
  SignatureCharacter result = SignatureCharacter::zero(N);

  if (active.empty()) {
    int r = 0;
    for (int i = 1; i <= M; ++i) {
      if (Rational(1, 2) < p.x(i)) ++r;
    }
    result = sigma_family(N, M, r);
  } else if (active.size() == 1) {
    const WallDescriptor& w = active[0];
    if (wall_height(w) == 1) {
      int r_minus = 0;
      for (int i = 1; i <= M; ++i) {
        if (i != w.i && Rational(1, 2) < p.x(i)) ++r_minus;
      }
      SignatureCharacter lo = sigma_family(N, M, r_minus);
      SignatureCharacter hi = sigma_family(N, M, r_minus + 1);
      std::vector<std::int64_t> avg(lo.coeffs());
      for (std::size_t i = 0; i < avg.size(); ++i) {
        std::int64_t sum = avg[i] + hi.coeffs()[i];
        if (sum % 2 != 0) throw std::logic_error("signature_unramified: flank sum is odd");
        avg[i] = sum / 2;
      }
      result = SignatureCharacter(N, std::move(avg),
                                  (lo.conjectural() || hi.conjectural())
                                      ? Provenance::conjectural
                                      : Provenance::proven);
      for (const auto& u : lo.conjecture_uses()) result.mark_conjectural(u);
      for (const auto& u : hi.conjecture_uses()) result.mark_conjectural(u);
    } else {
      int r = 0;
      for (int i = 1; i <= M; ++i) {
        if (Rational(1, 2) < p.x(i)) ++r;
      }
      SignatureCharacter side = sigma_family(N, M, r);
      Multisegment mprime = merge_to_mprime(m);
      if (!preceding_pairs(mprime).empty()) {
        throw std::domain_error("signature_unramified: M' reducible at a height-two wall");
      }
      SignatureCharacter sp = sig_hermitian(mprime, mode);
      Height2Result h2 = cross_height2(side, sp);
      result = h2.sigma_wall;
      // The wall value agrees with the sgn-twist of Sigma(L(M')) up to
      // normalization whenever the wall multisegment is the dual of M'.
      if (zelevinsky(mprime) == m) {
        SignatureCharacter tw = sgn_twist(sp);
        if (!(result == tw || result == -1 * tw)) {
          throw std::logic_error("signature_unramified: height-two twist cross-check failed");
        }
      }
    }
  } else if (is_isolated_unitary(p)) {
    result = sig_unitary(m);
  } else {
    throw std::domain_error(
        "signature_unramified: parameter lies on several walls but is not an isolated point");
  }

  if (mode == Mode::proven_only && result.conjectural()) {
    std::string s;
    for (const auto& u : result.conjecture_uses()) {
      if (!s.empty()) s += ", ";
      s += u;
    }
    throw ConjectureRequired("requires conjecture: " + s, result.conjecture_uses());
  }
  return result;
}

KostkaIdentityReport kostka_identity_check(int N) {
  if (N < 1 || N > 12) throw std::domain_error("kostka_identity_check: N out of range [1,12]");
  KostkaIdentityReport rep;
  int r = N / 2;
  Partition w0t = w0_cycle_type(N);
  for (const auto& lambda : partitions(N)) {
    std::int64_t sum = 0;
    for (int i = 0; i <= r; ++i) {
      std::vector<int> parts(i, 2);
      for (int k = 0; k < N - 2 * i; ++k) parts.push_back(1);
      std::int64_t sign = (i % 2 == 0) ? 1 : -1;
      sum += sign * (std::int64_t(1) << i) * binomial(r, i) *
             kostka(lambda.transpose(), Partition(parts));
    }
    ++rep.checked;
    if (sum != character(lambda, w0t)) {
      rep.ok = false;
      rep.violations.push_back("lambda=(" + lambda.str() + "): " + std::to_string(sum) +
                               " != " + std::to_string(character(lambda, w0t)));
    }
  }
  return rep;
}

}  // namespace sigchar
