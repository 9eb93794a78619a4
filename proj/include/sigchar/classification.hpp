#pragma once

#include <vector>

#include "sigchar/multisegment.hpp"
#include "sigchar/partition.hpp"
#include "sigchar/rational.hpp"

namespace sigchar {

// Kazhdan-Lusztig pair (s,e): the diagonal of the semisimple element together
// with the Jordan type, kept as per-segment blocks sorted by weakly
// decreasing center.
struct KLDatum {
  std::vector<Rational> s;       // concatenated arithmetic progressions
  Partition e;                   // Jordan type
  std::vector<Segment> blocks;   // (start, length) per block, center-sorted
};

// Langlands triple (S,U,nu): S as the ordered block-size composition,
// U as one tempered multisegment per block (all centers 0), nu strictly
// decreasing.
struct LanglandsDatum {
  std::vector<int> block_sizes;
  std::vector<Multisegment> tempered_parts;
  std::vector<Rational> nu;

  int N() const;
};

KLDatum bz_to_kl(const Multisegment& m);
LanglandsDatum kl_to_langlands(const KLDatum& k);
Multisegment langlands_to_bz(const LanglandsDatum& l);

// All segment centers zero.
bool is_tempered(const Multisegment& m);
// All segments singletons with pairwise distinct centers.
bool is_unramified(const Multisegment& m);
// No two segments linked.
bool is_irreducible_standard(const Multisegment& m);

// Tadic's criterion: the (length, center) multiset decomposes into blocks of
// type (I) (a centered string of equal-length segments) or type (II) (a
// string pair shifted by +-alpha, 0 < alpha < 1/2).
bool is_unitary(const Multisegment& m);

}  // namespace sigchar
