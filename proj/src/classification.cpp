#include "sigchar/classification.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sigchar {

int LanglandsDatum::N() const {
  int n = 0;
  for (int b : block_sizes) n += b;
  return n;
}

KLDatum bz_to_kl(const Multisegment& m) {
  KLDatum k;
  k.blocks = m.segments();
  std::stable_sort(k.blocks.begin(), k.blocks.end(), [](const Segment& a, const Segment& b) {
    if (a.center() != b.center()) return b.center() < a.center();
    return a.length > b.length;
  });
  for (const auto& seg : k.blocks) {
    for (int i = 0; i < seg.length; ++i) k.s.push_back(seg.start + Rational(i));
  }
  k.e = jordan_type(m);
  return k;
}

LanglandsDatum kl_to_langlands(const KLDatum& k) {
  LanglandsDatum l;
  std::size_t i = 0;
  while (i < k.blocks.size()) {
    Rational center = k.blocks[i].center();
    std::vector<Segment> shifted;
    int size = 0;
    while (i < k.blocks.size() && k.blocks[i].center() == center) {
      shifted.emplace_back(k.blocks[i].start - center, k.blocks[i].length);
      size += k.blocks[i].length;
      ++i;
    }
    l.block_sizes.push_back(size);
    l.tempered_parts.emplace_back(std::move(shifted));
    l.nu.push_back(center);
  }
  return l;
}

Multisegment langlands_to_bz(const LanglandsDatum& l) {
  if (l.block_sizes.size() != l.tempered_parts.size() || l.block_sizes.size() != l.nu.size()) {
    throw std::domain_error("langlands_to_bz: inconsistent datum");
  }
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < l.block_sizes.size(); ++i) {
    if (i > 0 && !(l.nu[i] < l.nu[i - 1])) {
      throw std::domain_error("langlands_to_bz: nu must be strictly decreasing");
    }
    int total = 0;
    for (const auto& seg : l.tempered_parts[i].segments()) {
      if (seg.center() != Rational(0)) {
        throw std::domain_error("langlands_to_bz: tempered part has nonzero center");
      }
      segs.emplace_back(seg.start + l.nu[i], seg.length);
      total += seg.length;
    }
    if (total != l.block_sizes[i]) {
      throw std::domain_error("langlands_to_bz: block size mismatch");
    }
  }
  return Multisegment(std::move(segs));
}

bool is_tempered(const Multisegment& m) {
  for (const auto& s : m.segments()) {
    if (s.center() != Rational(0)) return false;
  }
  return true;
}

bool is_unramified(const Multisegment& m) {
  std::set<std::pair<std::int64_t, std::int64_t>> centers;
  for (const auto& s : m.segments()) {
    if (s.length != 1) return false;
    if (!centers.insert({s.start.num(), s.start.den()}).second) return false;
  }
  return true;
}

bool is_irreducible_standard(const Multisegment& m) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      if (linked(m.segments()[i], m.segments()[j])) return false;
    }
  }
  return true;
}

namespace {

// Per segment length, decide whether the center multiset decomposes into
// centered strings (type I) and +-alpha shifted string pairs (type II).
bool decompose_centers(std::multiset<Rational>& centers,
                       std::map<std::vector<std::pair<std::int64_t, std::int64_t>>, bool>& memo) {
  if (centers.empty()) return true;
  std::vector<std::pair<std::int64_t, std::int64_t>> key;
  for (const auto& c : centers) key.emplace_back(c.num(), c.den());
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  bool ok = false;
  Rational top = *centers.rbegin();

  auto try_remove = [&](const std::vector<Rational>& vals) {
    std::multiset<Rational> rest = centers;
    for (const auto& v : vals) {
      auto pos = rest.find(v);
      if (pos == rest.end()) return false;
      rest.erase(pos);
    }
    return decompose_centers(rest, memo);
  };

  // Type I: top is the head of a centered string of length l, so l = 2*top+1.
  {
    Rational l2 = top * Rational(2) + Rational(1);
    if (l2.is_integer() && l2.num() >= 1) {
      int l = static_cast<int>(l2.num());
      std::vector<Rational> vals;
      for (int j = 0; j < l; ++j) vals.push_back(Rational(1 - l, 2) + Rational(j));
      if (try_remove(vals)) ok = true;
    }
  }
  // Type II: top = (l-1)/2 + alpha with 0 < alpha < 1/2; remove both strings.
  if (!ok) {
    for (int l = 1; l <= static_cast<int>(centers.size()) / 2; ++l) {
      Rational alpha = top - Rational(l - 1, 2);
      if (!(Rational(0) < alpha && alpha < Rational(1, 2))) continue;
      std::vector<Rational> vals;
      for (int j = 0; j < l; ++j) {
        Rational base = Rational(1 - l, 2) + Rational(j);
        vals.push_back(base + alpha);
        vals.push_back(base - alpha);
      }
      if (try_remove(vals)) {
        ok = true;
        break;
      }
    }
  }
  memo.emplace(std::move(key), ok);
  return ok;
}

}  // namespace

bool is_unitary(const Multisegment& m) {
  std::map<int, std::multiset<Rational>> by_length;
  for (const auto& s : m.segments()) by_length[s.length].insert(s.center());
  for (auto& [len, centers] : by_length) {
    std::map<std::vector<std::pair<std::int64_t, std::int64_t>>, bool> memo;
    if (!decompose_centers(centers, memo)) return false;
  }
  return true;
}

}  // namespace sigchar
