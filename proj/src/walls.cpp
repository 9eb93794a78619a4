#include "sigchar/walls.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "sigchar/classification.hpp"

namespace sigchar {

HermitianParameter::HermitianParameter(std::vector<Rational> nu) : nu_(std::move(nu)) {
  int n = static_cast<int>(nu_.size());
  if (n < 1) throw std::domain_error("HermitianParameter: empty");
  for (int i = 0; i + 1 < n; ++i) {
    if (!(nu_[i + 1] < nu_[i])) {
      throw std::domain_error("HermitianParameter: nu must be strictly decreasing");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (nu_[i] + nu_[n - 1 - i] != Rational(0)) {
      throw std::domain_error("HermitianParameter: nu_i + nu_{N+1-i} must be 0");
    }
  }
}

HermitianParameter HermitianParameter::from_x(int N, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != N / 2) {
    throw std::domain_error("HermitianParameter: expected N/2 folded coordinates");
  }
  std::vector<Rational> nu(x);
  if (N % 2 == 1) nu.push_back(Rational(0));
  for (int i = N / 2 - 1; i >= 0; --i) nu.push_back(-x[i]);
  return HermitianParameter(std::move(nu));
}

std::vector<Rational> HermitianParameter::x_coords() const {
  return std::vector<Rational>(nu_.begin(), nu_.begin() + M());
}

Multisegment HermitianParameter::to_multisegment() const {
  std::vector<Segment> segs;
  segs.reserve(nu_.size());
  for (const auto& v : nu_) segs.emplace_back(v, 1);
  return Multisegment(std::move(segs));
}

std::string HermitianParameter::str() const {
  std::string out;
  for (std::size_t i = 0; i < nu_.size(); ++i) {
    if (i) out += ',';
    out += nu_[i].str();
  }
  return out;
}

std::string WallDescriptor::str() const {
  switch (kind) {
    case Kind::minus: return "minus(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::plus: return "plus(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::half: return "half(" + std::to_string(i) + ")";
    case Kind::one: return "one(" + std::to_string(i) + ")";
  }
  return "";
}

bool operator<(const WallDescriptor& a, const WallDescriptor& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

std::ostream& operator<<(std::ostream& os, const WallDescriptor& w) { return os << w.str(); }

std::vector<WallDescriptor> all_walls(int N) {
  int M = N / 2;
  std::vector<WallDescriptor> out;
  for (int i = 1; i <= M; ++i) out.push_back({WallDescriptor::Kind::half, i, 0});
  if (N % 2 == 1) {
    for (int i = 1; i <= M; ++i) out.push_back({WallDescriptor::Kind::one, i, 0});
  }
  for (int i = 1; i <= M; ++i) {
    for (int j = i + 1; j <= M; ++j) {
      out.push_back({WallDescriptor::Kind::minus, i, j});
      out.push_back({WallDescriptor::Kind::plus, i, j});
    }
  }
  return out;
}

Rational wall_equation(const WallDescriptor& w, const std::vector<Rational>& x) {
  switch (w.kind) {
    case WallDescriptor::Kind::half: return x[w.i - 1] - Rational(1, 2);
    case WallDescriptor::Kind::one: return x[w.i - 1] - Rational(1);
    case WallDescriptor::Kind::minus: return x[w.i - 1] - x[w.j - 1] - Rational(1);
    case WallDescriptor::Kind::plus: return x[w.i - 1] + x[w.j - 1] - Rational(1);
  }
  throw std::logic_error("wall_equation: bad kind");
}

std::vector<WallDescriptor> walls_through(const HermitianParameter& p) {
  std::vector<WallDescriptor> out;
  auto x = p.x_coords();
  for (const auto& w : all_walls(p.N())) {
    if (wall_equation(w, x).is_zero()) out.push_back(w);
  }
  return out;
}

int wall_height(const WallDescriptor& w) {
  return w.kind == WallDescriptor::Kind::half ? 1 : 2;
}

std::vector<std::pair<int, int>> linking_pairs(const HermitianParameter& p) {
  std::vector<std::pair<int, int>> out;
  const auto& nu = p.nu();
  for (int i = 0; i < p.N(); ++i) {
    for (int j = i + 1; j < p.N(); ++j) {
      if (nu[i] - nu[j] == Rational(1)) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

namespace {

// Normal vector of the wall in D_M coordinates.
std::vector<Rational> wall_normal(const WallDescriptor& w, int M) {
  std::vector<Rational> n(M, Rational(0));
  switch (w.kind) {
    case WallDescriptor::Kind::half:
    case WallDescriptor::Kind::one:
      n[w.i - 1] = Rational(1);
      break;
    case WallDescriptor::Kind::minus:
      n[w.i - 1] = Rational(1);
      n[w.j - 1] = Rational(-1);
      break;
    case WallDescriptor::Kind::plus:
      n[w.i - 1] = Rational(1);
      n[w.j - 1] = Rational(1);
      break;
  }
  return n;
}

int rank_of(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    if (++rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

bool in_open_cone(const std::vector<Rational>& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (!(x[i + 1] < x[i])) return false;
  }
  return !x.empty() && Rational(0) < x.back();
}

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

}  // namespace

bool is_isolated_unitary(const HermitianParameter& p) {
  auto active = walls_through(p);
  if (active.empty()) return false;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(active.size());
  for (const auto& w : active) rows.push_back(wall_normal(w, p.M()));
  if (rank_of(std::move(rows)) != p.M()) return false;
  // Cross-assertion: isolated points must also pass Tadic's criterion.
  if (!is_unitary(p.to_multisegment())) {
    throw std::logic_error("is_isolated_unitary: isolated point fails the unitarity criterion");
  }
  return true;
}

std::vector<WallCrossing> chamber_path(const HermitianParameter& base,
                                       const HermitianParameter& target) {
  if (base.N() != target.N()) throw std::domain_error("chamber_path: size mismatch");
  if (!walls_through(base).empty() || !walls_through(target).empty()) {
    throw std::domain_error("chamber_path: endpoints must be wall-free");
  }
  int N = base.N();
  int M = base.M();
  std::vector<Rational> from = base.x_coords();
  const std::vector<Rational> to = target.x_coords();

  std::int64_t den_bound = 1;
  for (const auto& v : from) den_bound = std::max(den_bound, v.den());
  for (const auto& v : to) den_bound = std::max(den_bound, v.den());

  auto attempt = [&](const std::vector<Rational>& start,
                     std::vector<WallCrossing>& out) -> bool {
    out.clear();
    std::map<Rational, WallCrossing> hits;
    for (const auto& w : all_walls(N)) {
      // Solve wall_equation(w, start + t*(to-start)) = 0, linear in t.
      Rational f0 = wall_equation(w, start);
      std::vector<Rational> end_x = to;
      Rational f1 = wall_equation(w, end_x);
      if (f0 == f1) continue;  // path parallel to the wall
      Rational t = f0 / (f0 - f1);
      if (!(Rational(0) < t && t < Rational(1))) continue;
      std::vector<Rational> pt(M);
      for (int k = 0; k < M; ++k) pt[k] = start[k] + t * (to[k] - start[k]);
      if (!in_open_cone(pt)) return false;
      HermitianParameter hp = HermitianParameter::from_x(N, pt);
      if (walls_through(hp).size() != 1) return false;
      if (hits.count(t)) return false;
      hits.emplace(t, WallCrossing{t, w, pt});
    }
    for (auto& [t, c] : hits) out.push_back(c);
    return true;
  };

  std::vector<WallCrossing> out;
  if (attempt(from, out)) return out;

  // Deterministic perturbation: x_k += c/P_k with P_k the k-th prime
  // exceeding the denominator bound, c the smallest positive integer that
  // restores transversality.
  std::vector<std::int64_t> primes;
  for (std::int64_t v = std::max<std::int64_t>(den_bound, 997) + 1;
       static_cast<int>(primes.size()) < M; ++v) {
    if (is_prime(v)) primes.push_back(v);
  }
  for (std::int64_t c = 1; c <= 64; ++c) {
    std::vector<Rational> jittered = base.x_coords();
    for (int k = 0; k < M; ++k) jittered[k] += Rational(c, primes[k]);
    if (!in_open_cone(jittered)) continue;
    HermitianParameter hp = HermitianParameter::from_x(N, jittered);
    if (!walls_through(hp).empty()) continue;
    if (attempt(jittered, out)) return out;
  }
  throw std::domain_error("chamber_path: perturbation failed to restore transversality");
}

}  // namespace sigchar
