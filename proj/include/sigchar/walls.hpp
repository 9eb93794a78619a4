#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sigchar/multisegment.hpp"
#include "sigchar/rational.hpp"

namespace sigchar {

// Unramified Hermitian parameter: nu strictly decreasing of length N with
// nu_i + nu_{N+1-i} = 0.  Folded coordinates x = (nu_1,...,nu_M), M = [N/2].
class HermitianParameter {
 public:
  explicit HermitianParameter(std::vector<Rational> nu);

  // Build from D_M coordinates (strictly decreasing, positive).
  static HermitianParameter from_x(int N, const std::vector<Rational>& x);

  int N() const { return static_cast<int>(nu_.size()); }
  int M() const { return N() / 2; }
  const std::vector<Rational>& nu() const { return nu_; }
  Rational x(int i) const { return nu_[i - 1]; }  // 1-based, i <= M
  std::vector<Rational> x_coords() const;

  Multisegment to_multisegment() const;  // singletons
  std::string str() const;

 private:
  std::vector<Rational> nu_;
};

// Reducibility wall in D_M coordinates.
struct WallDescriptor {
  enum class Kind { minus, plus, half, one };
  Kind kind;
  int i = 0;  // 1-based
  int j = 0;  // used by minus/plus only; i < j

  std::string str() const;
  friend bool operator==(const WallDescriptor& a, const WallDescriptor& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const WallDescriptor& a, const WallDescriptor& b);
};

std::ostream& operator<<(std::ostream& os, const WallDescriptor& w);

// All wall descriptors for the given N (one(i) exists only for odd N).
std::vector<WallDescriptor> all_walls(int N);

// Value of the wall's defining linear form minus its constant: zero on the wall.
Rational wall_equation(const WallDescriptor& w, const std::vector<Rational>& x);

// Walls whose defining equation p satisfies exactly.
std::vector<WallDescriptor> walls_through(const HermitianParameter& p);

// half -> 1; minus, plus, one -> 2.
int wall_height(const WallDescriptor& w);

// All ordered pairs (i,j), i<j, 1-based over the full nu, with nu_i - nu_j = 1.
std::vector<std::pair<int, int>> linking_pairs(const HermitianParameter& p);

// The affine span of the active walls meets D_M in exactly {p}.
bool is_isolated_unitary(const HermitianParameter& p);

struct WallCrossing {
  Rational t;  // position along the straight path, in (0,1)
  WallDescriptor wall;
  std::vector<Rational> point;  // D_M coordinates
};

// Straight-line crossings from base to target (both wall-free), sorted by t.
// Each crossing lies on exactly one wall; if not achievable, base is
// perturbed deterministically and the search repeats.
std::vector<WallCrossing> chamber_path(const HermitianParameter& base,
                                       const HermitianParameter& target);

}  // namespace sigchar
