#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sigchar/partition.hpp"
#include "sigchar/rational.hpp"

namespace sigchar {

// Arithmetic progression [start, start+1, ..., start+length-1] of step 1.
struct Segment {
  Rational start;
  int length = 1;

  Segment() = default;
  Segment(Rational s, int len);

  Rational end() const { return start + Rational(length - 1); }
  Rational center() const { return start + Rational(length - 1, 2); }

  bool contains_value(const Rational& v) const;
  bool contains(const Segment& o) const;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.start == b.start && a.length == b.length;
  }
  friend bool operator!=(const Segment& a, const Segment& b) { return !(a == b); }
};

// Neither contains the other and the union is again a segment.
bool linked(const Segment& a, const Segment& b);
// Linked with a starting strictly earlier.
bool precedes(const Segment& a, const Segment& b);

// Finite multiset of segments, stored in the canonical total order:
// descending by start, ties broken by descending end.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  int size() const { return static_cast<int>(segs_.size()); }
  int N() const;

  friend bool operator==(const Multisegment& a, const Multisegment& b) {
    return a.segs_ == b.segs_;
  }
  friend bool operator!=(const Multisegment& a, const Multisegment& b) { return !(a == b); }
  friend bool operator<(const Multisegment& a, const Multisegment& b);

  // Grammar: MSEG := SEG (";" SEG)*; SEG := "[" RAT ("," RAT)* "]" | RAT.
  // Entries inside brackets must increase by exactly 1.
  static Multisegment parse(std::string_view s);
  std::string str() const;

 private:
  std::vector<Segment> segs_;
};

std::ostream& operator<<(std::ostream& os, const Multisegment& m);

// Replace the linked segments at positions i, j by union and (if nonempty)
// intersection.  Throws if they are not linked.
Multisegment elementary_operation(const Multisegment& m, int i, int j);

// m1 reachable from m2 by elementary operations (reflexively).
bool preceq(const Multisegment& m1, const Multisegment& m2);

// Number of ordered pairs of distinct members (a,b) with a preceding b.
int height(const Multisegment& m);

Multisegment hermitian_dual(const Multisegment& m);
bool is_hermitian(const Multisegment& m);

// Moeglin-Waldspurger dual, computed independently within each class of
// starts mod Z.  Involution; preserves the multiset of rational entries.
Multisegment zelevinsky(const Multisegment& m);

// Segment lengths, sorted descending: the Jordan type of the nilpotent.
Partition jordan_type(const Multisegment& m);

// All ordered position pairs (i,j) with segment i preceding segment j.
std::vector<std::pair<int, int>> preceding_pairs(const Multisegment& m);

// Multiset of all rational entries of all segments (sorted); the central
// character, preserved by the Zelevinsky involution.
std::vector<Rational> content(const Multisegment& m);

}  // namespace sigchar
