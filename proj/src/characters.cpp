#include "sigchar/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace sigchar {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex g_char_mutex;
std::map<Key, std::int64_t> g_char_cache;

// chi_lambda(mu) with mu given as a plain part list (largest part removed first).
std::int64_t mn(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return 1;
  {
    std::lock_guard<std::mutex> lock(g_char_mutex);
    auto it = g_char_cache.find({lambda, mu});
    if (it != g_char_cache.end()) return it->second;
  }
  int k = mu[0];
  std::vector<int> mu_rest(mu.begin() + 1, mu.end());
  std::int64_t total = 0;
  int rows = static_cast<int>(lambda.size());
  // Border strip occupying rows r..s: in rows r..s-1 it reaches down to the
  // next row's end, so rho_i = lambda_{i+1}-1 there; row s absorbs the rest.
  for (int r = 0; r < rows; ++r) {
    for (int s = r; s < rows; ++s) {
      std::vector<int> rho = lambda;
      int removed = 0;
      bool ok = true;
      for (int i = r; i < s; ++i) {
        int v = lambda[i + 1] - 1;
        if (v < 0) {
          ok = false;
          break;
        }
        removed += lambda[i] - v;
        rho[i] = v;
      }
      if (!ok) continue;
      int rest = k - removed;
      int v_s = lambda[s] - rest;
      int below = s + 1 < rows ? lambda[s + 1] : 0;
      if (rest < 1 || v_s < below || v_s < 0) continue;
      rho[s] = v_s;
      while (!rho.empty() && rho.back() == 0) rho.pop_back();
      bool valid = true;
      for (std::size_t i = 1; i < rho.size(); ++i) {
        if (rho[i] > rho[i - 1]) {
          valid = false;
          break;
        }
      }
      if (!valid) continue;
      std::int64_t sign = ((s - r) % 2 == 0) ? 1 : -1;
      total += sign * mn(rho, mu_rest);
    }
  }
  std::lock_guard<std::mutex> lock(g_char_mutex);
  g_char_cache.emplace(Key{lambda, mu}, total);
  return total;
}

std::mutex g_kostka_mutex;
std::map<Key, std::int64_t> g_kostka_cache;

// K_{lambda,mu}: peel the largest content letter as a horizontal strip.
std::int64_t kostka_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    auto it = g_kostka_cache.find({lambda, mu});
    if (it != g_kostka_cache.end()) return it->second;
  }
  int strip = mu.back();
  std::vector<int> mu_rest(mu.begin(), mu.end() - 1);
  std::int64_t total = 0;
  // Enumerate rho with rho interlacing lambda (horizontal strip) and
  // |lambda| - |rho| == strip.
  std::vector<int> rho(lambda.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == lambda.size()) {
      if (left != 0) return;
      std::vector<int> r = rho;
      while (!r.empty() && r.back() == 0) r.pop_back();
      total += kostka_rec(r, mu_rest);
      return;
    }
    int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    lo = std::max(lo, lambda[i] - left);
    int hi = lambda[i];
    if (i > 0) hi = std::min(hi, rho[i - 1]);  // keep rho weakly decreasing
    for (int v = lo; v <= hi; ++v) {
      rho[i] = v;
      self(self, i + 1, left - (lambda[i] - v));
    }
    rho[i] = 0;
  };
  rec(rec, 0, strip);
  std::lock_guard<std::mutex> lock(g_kostka_mutex);
  g_kostka_cache.emplace(Key{lambda, mu}, total);
  return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw std::domain_error("character: size mismatch");
  if (lambda.n() > 14) throw std::domain_error("character: n > 14 not supported");
  return mn(lambda.parts(), mu.parts());
}

std::int64_t kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw std::domain_error("kostka: size mismatch");
  if (lambda.n() > 20) throw std::domain_error("kostka: n > 20 not supported");
  return kostka_rec(lambda.parts(), mu.parts());
}

std::vector<std::int64_t> kostka_column(const Partition& e) {
  const auto& all = partitions(e.n());
  std::vector<std::int64_t> out;
  out.reserve(all.size());
  for (const auto& d : all) out.push_back(kostka(d.transpose(), e));
  return out;
}

}  // namespace sigchar
