#include "sigchar/multisegment.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>

namespace sigchar {

Segment::Segment(Rational s, int len) : start(s), length(len) {
  if (len < 1) throw std::domain_error("Segment: length must be >= 1");
}

bool Segment::contains_value(const Rational& v) const {
  if (!(v - start).is_integer()) return false;
  return start <= v && v <= end();
}

bool Segment::contains(const Segment& o) const {
  if (!(o.start - start).is_integer()) return false;
  return start <= o.start && o.end() <= end();
}

bool linked(const Segment& a, const Segment& b) {
  if (!(a.start - b.start).is_integer()) return false;
  if (a.contains(b) || b.contains(a)) return false;
  // Union is a segment iff the two progressions overlap or are adjacent.
  const Segment& lo = a.start <= b.start ? a : b;
  const Segment& hi = a.start <= b.start ? b : a;
  return hi.start <= lo.end() + Rational(1);
}

bool precedes(const Segment& a, const Segment& b) { return linked(a, b) && a.start < b.start; }

namespace {

bool canonical_before(const Segment& a, const Segment& b) {
  if (a.start != b.start) return b.start < a.start;
  return b.end() < a.end();
}

}  // namespace

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end(), canonical_before);
}

int Multisegment::N() const {
  int n = 0;
  for (const auto& s : segs_) n += s.length;
  return n;
}

bool operator<(const Multisegment& a, const Multisegment& b) {
  auto key = [](const Segment& s) { return std::pair(s.start, s.length); };
  return std::lexicographical_compare(
      a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end(),
      [&](const Segment& x, const Segment& y) { return key(x) < key(y); });
}

Multisegment Multisegment::parse(std::string_view s) {
  std::vector<Segment> segs;
  std::size_t pos = 0;
  auto strip = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  while (pos <= s.size()) {
    std::size_t semi = s.find(';', pos);
    std::string_view tok =
        strip(s.substr(pos, semi == std::string_view::npos ? s.size() - pos : semi - pos));
    if (tok.empty()) throw std::invalid_argument("Multisegment: empty segment token");
    if (tok.front() == '[') {
      if (tok.back() != ']') throw std::invalid_argument("Multisegment: missing ']'");
      tok = tok.substr(1, tok.size() - 2);
      std::vector<Rational> vals;
      std::size_t p = 0;
      while (p <= tok.size()) {
        std::size_t c = tok.find(',', p);
        std::string_view e =
            strip(tok.substr(p, c == std::string_view::npos ? tok.size() - p : c - p));
        vals.push_back(Rational::parse(e));
        if (c == std::string_view::npos) break;
        p = c + 1;
      }
      for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] - vals[i - 1] != Rational(1)) {
          throw std::invalid_argument("Multisegment: entries must increase by exactly 1");
        }
      }
      segs.emplace_back(vals.front(), static_cast<int>(vals.size()));
    } else {
      segs.emplace_back(Rational::parse(tok), 1);
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return Multisegment(std::move(segs));
}

std::string Multisegment::str() const {
  std::string out;
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i) out += ';';
    const Segment& s = segs_[i];
    if (s.length == 1) {
      out += s.start.str();
    } else {
      out += '[';
      for (int k = 0; k < s.length; ++k) {
        if (k) out += ',';
        out += (s.start + Rational(k)).str();
      }
      out += ']';
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Multisegment& m) { return os << m.str(); }

Multisegment elementary_operation(const Multisegment& m, int i, int j) {
  const auto& segs = m.segments();
  if (i < 0 || j < 0 || i >= m.size() || j >= m.size() || i == j) {
    throw std::domain_error("elementary_operation: bad indices");
  }
  const Segment& a = segs[i];
  const Segment& b = segs[j];
  if (!linked(a, b)) throw std::domain_error("elementary_operation: segments not linked");
  const Segment& lo = a.start <= b.start ? a : b;
  const Segment& hi = a.start <= b.start ? b : a;
  std::vector<Segment> out;
  for (int k = 0; k < m.size(); ++k) {
    if (k != i && k != j) out.push_back(segs[k]);
  }
  Rational ue = std::max(lo.end(), hi.end());
  out.emplace_back(lo.start, static_cast<int>(((ue - lo.start).num())) + 1);
  if (hi.start <= lo.end()) {  // nonempty intersection
    Rational ie = std::min(lo.end(), hi.end());
    out.emplace_back(hi.start, static_cast<int>((ie - hi.start).num()) + 1);
  }
  return Multisegment(std::move(out));
}

namespace {

std::mutex g_preceq_mutex;
std::map<std::string, std::set<std::string>> g_preceq_cache;

}  // namespace

bool preceq(const Multisegment& m1, const Multisegment& m2) {
  if (m1.N() != m2.N()) throw std::domain_error("preceq: different N");
  if (m2.N() > 12 || m2.size() > 8) throw std::domain_error("preceq: beyond practical bound");
  std::string from = m2.str();
  {
    std::lock_guard<std::mutex> lock(g_preceq_mutex);
    auto it = g_preceq_cache.find(from);
    if (it != g_preceq_cache.end()) return it->second.count(m1.str()) > 0;
  }
  std::set<std::string> seen{from};
  std::vector<Multisegment> frontier{m2};
  while (!frontier.empty()) {
    std::vector<Multisegment> next;
    for (const auto& cur : frontier) {
      for (int i = 0; i < cur.size(); ++i) {
        for (int j = i + 1; j < cur.size(); ++j) {
          if (!linked(cur.segments()[i], cur.segments()[j])) continue;
          Multisegment r = elementary_operation(cur, i, j);
          if (seen.insert(r.str()).second) next.push_back(r);
        }
      }
    }
    frontier = std::move(next);
  }
  bool found = seen.count(m1.str()) > 0;
  std::lock_guard<std::mutex> lock(g_preceq_mutex);
  g_preceq_cache.emplace(std::move(from), std::move(seen));
  return found;
}

int height(const Multisegment& m) {
  int h = 0;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (i != j && precedes(m.segments()[i], m.segments()[j])) ++h;
    }
  }
  return h;
}

std::vector<std::pair<int, int>> preceding_pairs(const Multisegment& m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (i != j && precedes(m.segments()[i], m.segments()[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

Multisegment hermitian_dual(const Multisegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m.segments()) out.emplace_back(-s.end(), s.length);
  return Multisegment(std::move(out));
}

bool is_hermitian(const Multisegment& m) { return hermitian_dual(m) == m; }

namespace {

// One Moeglin-Waldspurger pass on a single mod-Z class; consumes `segs`.
std::vector<Segment> mw_class(std::vector<Segment> segs) {
  std::vector<Segment> dual;
  while (!segs.empty()) {
    Rational delta = segs[0].end();
    for (const auto& s : segs) delta = std::max(delta, s.end());
    // Chain start: a segment ending at delta, maximal in the canonical order.
    int cur = -1;
    for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
      if (segs[i].end() != delta) continue;
      if (cur < 0 || canonical_before(segs[i], segs[cur])) cur = i;
    }
    std::vector<int> chain{cur};
    Rational want = delta - Rational(1);
    while (true) {
      int best = -1;
      for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
        if (segs[i].end() != want) continue;
        bool used = false;
        for (int c : chain) used = used || c == i;
        if (used) continue;
        if (!precedes(segs[i], segs[chain.back()])) continue;
        if (best < 0 || canonical_before(segs[i], segs[best])) best = i;
      }
      if (best < 0) break;
      chain.push_back(best);
      want -= Rational(1);
    }
    int r = static_cast<int>(chain.size()) - 1;
    dual.emplace_back(delta - Rational(r), r + 1);
    std::vector<Segment> rest;
    std::vector<bool> in_chain(segs.size(), false);
    for (int c : chain) in_chain[c] = true;
    for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
      if (!in_chain[i]) {
        rest.push_back(segs[i]);
      } else if (segs[i].length > 1) {
        rest.emplace_back(segs[i].start, segs[i].length - 1);
      }
    }
    segs = std::move(rest);
  }
  return dual;
}

}  // namespace

Multisegment zelevinsky(const Multisegment& m) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Segment>> classes;
  for (const auto& s : m.segments()) {
    Rational f = s.start.frac();
    classes[{f.num(), f.den()}].push_back(s);
  }
  std::vector<Segment> out;
  for (auto& [key, segs] : classes) {
    auto dual = mw_class(std::move(segs));
    out.insert(out.end(), dual.begin(), dual.end());
  }
  return Multisegment(std::move(out));
}

Partition jordan_type(const Multisegment& m) {
  std::vector<int> lens;
  lens.reserve(m.size());
  for (const auto& s : m.segments()) lens.push_back(s.length);
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

std::vector<Rational> content(const Multisegment& m) {
  std::vector<Rational> vals;
  for (const auto& s : m.segments()) {
    for (int k = 0; k < s.length; ++k) vals.push_back(s.start + Rational(k));
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

}  // namespace sigchar
