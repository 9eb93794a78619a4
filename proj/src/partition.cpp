#include "sigchar/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "sigchar/rational.hpp"

namespace sigchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::domain_error("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::domain_error("Partition: parts must be weakly decreasing");
    }
    n_ += parts_[i];
  }
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int i = 1; i <= (parts_.empty() ? 0 : parts_[0]); ++i) {
    int c = 0;
    for (int p : parts_) {
      if (p >= i) ++c;
    }
    t.push_back(c);
  }
  return Partition(std::move(t));
}

Partition Partition::parse(std::string_view s) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    pos = comma == std::string_view::npos ? s.size() : comma + 1;
    int exp = 1;
    auto caret = tok.find('^');
    std::string_view base = tok;
    if (caret != std::string_view::npos) {
      exp = std::stoi(std::string(tok.substr(caret + 1)));
      base = tok.substr(0, caret);
    }
    int v = std::stoi(std::string(base));
    for (int k = 0; k < exp; ++k) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::str_compact() const {
  std::string out;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::mutex g_partitions_mutex;
std::map<int, std::vector<Partition>> g_partitions_cache;

}  // namespace

const std::vector<Partition>& partitions(int n) {
  if (n < 1 || n > 20) throw std::domain_error("partitions: n out of range [1,20]");
  std::lock_guard<std::mutex> lock(g_partitions_mutex);
  auto it = g_partitions_cache.find(n);
  if (it == g_partitions_cache.end()) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    it = g_partitions_cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

int partition_index(const Partition& p) {
  const auto& all = partitions(p.n());
  auto it = std::lower_bound(all.begin(), all.end(), p,
                             [](const Partition& a, const Partition& b) { return b < a; });
  if (it == all.end() || !(*it == p)) throw std::logic_error("partition_index: not found");
  return static_cast<int>(it - all.begin());
}

std::int64_t partition_count(int n) {
  // Euler's pentagonal number recurrence, independent of the generator above.
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      std::int64_t s = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) p[m] += s * p[m - g1];
      if (g2 <= m) p[m] += s * p[m - g2];
    }
  }
  return p[n];
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.n() != q.n()) throw std::domain_error("dominance_leq: partitions of different n");
  int sp = 0, sq = 0;
  int k = std::max(p.size(), q.size());
  for (int i = 0; i < k; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) return false;
  }
  return true;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::domain_error("factorial: n out of range [0,20]");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t dim_irrep(const Partition& p) {
  Partition t = p.transpose();
  unsigned __int128 hooks = 1;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.parts()[i]; ++j) {
      hooks *= static_cast<unsigned>(p.parts()[i] - j + t.parts()[j] - i - 1);
    }
  }
  return static_cast<std::int64_t>(static_cast<unsigned __int128>(factorial(p.n())) / hooks);
}

std::int64_t class_size(const Partition& mu) {
  std::int64_t z = 1;
  int i = 0;
  while (i < mu.size()) {
    int j = i;
    while (j < mu.size() && mu.parts()[j] == mu.parts()[i]) ++j;
    for (int r = 0; r < j - i; ++r) z *= mu.parts()[i];
    z *= factorial(j - i);
    i = j;
  }
  return factorial(mu.n()) / z;
}

Partition w0_cycle_type(int n) {
  if (n < 1) throw std::domain_error("w0_cycle_type: n must be positive");
  std::vector<int> parts(n / 2, 2);
  if (n % 2 == 1) parts.push_back(1);
  return Partition(std::move(parts));
}

}  // namespace sigchar
