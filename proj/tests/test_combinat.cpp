#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "sigchar/characters.hpp"
#include "sigchar/partition.hpp"
#include "sigchar/rational.hpp"
#include "sigchar/symmetric_group.hpp"

using namespace sigchar;

namespace {

// Brute-force irreducible characters of S_n, built independently of the
// Murnaghan-Nakayama implementation: permutation characters of Young
// subgroups, then Gram-Schmidt along the dominance order.
struct BruteCharacters {
  int n;
  std::vector<Partition> parts;                 // canonical order
  std::vector<std::vector<std::int64_t>> chi;   // chi[lambda][class]

  explicit BruteCharacters(int n_in) : n(n_in), parts(partitions(n_in)) {
    auto perms = all_permutations(n);
    std::vector<int> class_of(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
      class_of[i] = partition_index(cycle_type(perms[i]));
    }
    // permutation character of Ind_{S_mu}(1): number of ordered set
    // partitions with block sizes mu fixed by w (blocks are unions of
    // cycles).
    auto xi = [&](const Partition& mu, const Perm& w) {
      std::vector<std::vector<int>> cycles;
      std::vector<bool> seen(n, false);
      for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[j]) {
          seen[j] = true;
          cyc.push_back(j);
          j = w[j];
        }
        cycles.push_back(cyc);
      }
      std::int64_t count = 0;
      auto rec = [&](auto&& self, std::size_t ci, std::vector<int> room) -> void {
        if (ci == cycles.size()) {
          ++count;
          return;
        }
        for (std::size_t b = 0; b < room.size(); ++b) {
          if (room[b] >= static_cast<int>(cycles[ci].size())) {
            room[b] -= static_cast<int>(cycles[ci].size());
            self(self, ci + 1, room);
            room[b] += static_cast<int>(cycles[ci].size());
          }
        }
      };
      std::vector<int> room(mu.parts().begin(), mu.parts().end());
      rec(rec, 0, room);
      return count;
    };

    std::vector<std::int64_t> class_count(parts.size(), 0);
    for (std::size_t i = 0; i < perms.size(); ++i) ++class_count[class_of[i]];

    auto inner = [&](const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& g) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < parts.size(); ++c) s += class_count[c] * f[c] * g[c];
      return s / factorial(n);
    };

    chi.resize(parts.size());
    for (std::size_t li = 0; li < parts.size(); ++li) {
      std::vector<std::int64_t> f(parts.size());
      for (std::size_t c = 0; c < parts.size(); ++c) {
        f[c] = xi(parts[li], class_representative(parts[c]));
      }
      for (std::size_t mj = 0; mj < li; ++mj) {
        std::int64_t m = inner(f, chi[mj]);
        for (std::size_t c = 0; c < parts.size(); ++c) f[c] -= m * chi[mj][c];
      }
      REQUIRE(inner(f, f) == 1);
      chi[li] = f;
    }
  }
};

std::int64_t brute_ssyt(const Partition& shape, const Partition& content) {
  // direct semistandard filling, cell by cell
  std::vector<std::vector<int>> t(shape.size());
  for (int i = 0; i < shape.size(); ++i) t[i].assign(shape.parts()[i], 0);
  std::vector<int> left(content.size());
  for (int i = 0; i < content.size(); ++i) left[i] = content.parts()[i];
  std::int64_t count = 0;
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == shape.size()) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape.parts()[r]) {
      nr = r + 1;
      nc = 0;
    }
    for (int v = 1; v <= content.size(); ++v) {
      if (left[v - 1] == 0) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && static_cast<int>(t[r - 1].size()) > c && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      --left[v - 1];
      self(self, nr, nc);
      ++left[v - 1];
      t[r][c] = 0;
    }
  };
  rec(rec, 0, 0);
  return count;
}

std::int64_t brute_syt(const Partition& shape) {
  std::vector<int> ones(shape.n(), 1);
  return brute_ssyt(shape, Partition(ones));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-4, 8) == Rational(-1, 2));
  CHECK(Rational::parse("7/3").num() == 7);
  CHECK(Rational(3, 2).frac() == Rational(1, 2));
  CHECK(Rational(-1, 2).frac() == Rational(1, 2));
  CHECK(Rational(5).frac() == Rational(0));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
}

TEST_CASE("partitions enumeration and canonical order") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(1)[0] == Partition({1}));

  const auto& p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[3] == Partition({2, 1, 1}));
  CHECK(p4[4] == Partition({1, 1, 1, 1}));

  CHECK(partitions(12).size() == 77);
  for (int n = 1; n <= 14; ++n) {
    CHECK(static_cast<std::int64_t>(partitions(n).size()) == partition_count(n));
  }
  CHECK_THROWS_AS(partitions(0), std::domain_error);
  CHECK_THROWS_AS(partitions(21), std::domain_error);

  for (int n = 1; n <= 8; ++n) {
    const auto& all = partitions(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(partition_index(all[i]) == static_cast<int>(i));
    }
  }
}

TEST_CASE("partition parsing") {
  CHECK(Partition::parse("2,1,1") == Partition({2, 1, 1}));
  CHECK(Partition::parse("2,1^2") == Partition({2, 1, 1}));
  CHECK(Partition::parse("3^2,1") == Partition({3, 3, 1}));
  CHECK(Partition({2, 1, 1}).str_compact() == "2,1^2");
  CHECK_THROWS(Partition::parse("1,2"));
}

TEST_CASE("transpose") {
  CHECK(Partition({5}).transpose() == Partition({1, 1, 1, 1, 1}));
  CHECK(Partition({2, 2}).transpose() == Partition({2, 2}));
  CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : partitions(n)) {
      CHECK(p.transpose().transpose() == p);
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition({1, 1, 1, 1}), Partition({4})));
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), std::domain_error);
  // anti-automorphism under transpose
  for (const auto& p : partitions(6)) {
    for (const auto& q : partitions(6)) {
      CHECK(dominance_leq(p, q) == dominance_leq(q.transpose(), p.transpose()));
    }
  }
}

TEST_CASE("dim_irrep by hooks vs standard tableaux") {
  CHECK(dim_irrep(Partition({7})) == 1);
  CHECK(dim_irrep(Partition({2, 1})) == 2);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : partitions(n)) {
      CHECK(dim_irrep(p) == brute_syt(p));
    }
  }
  for (int n = 1; n <= 10; ++n) {
    std::int64_t burnside = 0;
    for (const auto& p : partitions(n)) burnside += dim_irrep(p) * dim_irrep(p);
    CHECK(burnside == factorial(n));
  }
}

TEST_CASE("class sizes") {
  CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
  CHECK(class_size(Partition({2, 1})) == 3);
  // brute force over S_4
  std::map<int, int> counts;
  for (const auto& w : all_permutations(4)) ++counts[partition_index(cycle_type(w))];
  for (const auto& mu : partitions(4)) {
    CHECK(class_size(mu) == counts[partition_index(mu)]);
  }
  CHECK(class_size(Partition({2, 2})) == 3);
}

TEST_CASE("w0 cycle type") {
  CHECK(w0_cycle_type(2) == Partition({2}));
  CHECK(w0_cycle_type(3) == Partition({2, 1}));
  CHECK(w0_cycle_type(6) == Partition({2, 2, 2}));
  for (int n = 2; n <= 8; ++n) {
    Perm w0(n);
    for (int i = 0; i < n; ++i) w0[i] = n - 1 - i;
    CHECK(cycle_type(w0) == w0_cycle_type(n));
  }
}

TEST_CASE("Murnaghan-Nakayama against brute force") {
  CHECK(character(Partition({6}), Partition({3, 2, 1})) == 1);
  CHECK(character(Partition({1, 1, 1, 1}), Partition({2, 2})) == 1);
  CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK_THROWS_AS(character(Partition({2}), Partition({3})), std::domain_error);
  for (int n = 2; n <= 5; ++n) {
    BruteCharacters brute(n);
    const auto& all = partitions(n);
    for (std::size_t li = 0; li < all.size(); ++li) {
      for (std::size_t c = 0; c < all.size(); ++c) {
        CHECK(character(all[li], all[c]) == brute.chi[li][c]);
      }
    }
  }
}

TEST_CASE("character orthogonality") {
  for (int n = 2; n <= 8; ++n) {
    const auto& all = partitions(n);
    // rows
    for (const auto& l1 : all) {
      for (const auto& l2 : all) {
        std::int64_t s = 0;
        for (const auto& mu : all) s += class_size(mu) * character(l1, mu) * character(l2, mu);
        CHECK(s == (l1 == l2 ? factorial(n) : 0));
      }
    }
    // columns
    for (const auto& mu : all) {
      for (const auto& nu : all) {
        std::int64_t s = 0;
        for (const auto& l : all) s += character(l, mu) * character(l, nu);
        CHECK(s == (mu == nu ? factorial(n) / class_size(mu) : 0));
      }
    }
  }
}

TEST_CASE("sign twist of characters") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& l : partitions(n)) {
      for (const auto& mu : partitions(n)) {
        std::int64_t sign = ((n - mu.size()) % 2 == 0) ? 1 : -1;
        CHECK(character(l.transpose(), mu) == sign * character(l, mu));
      }
    }
  }
}

TEST_CASE("Kostka numbers") {
  CHECK(kostka(Partition({2, 2}), Partition({2, 1, 1})) == 1);
  CHECK(kostka(Partition({2, 1, 1}), Partition({2, 1, 1})) == 1);
  CHECK_THROWS_AS(kostka(Partition({2}), Partition({1})), std::domain_error);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& l : partitions(n)) {
      // SSYT with all-distinct entries are standard tableaux
      CHECK(kostka(l, Partition(std::vector<int>(n, 1))) == dim_irrep(l));
      for (const auto& mu : partitions(n)) {
        std::int64_t k = kostka(l, mu);
        CHECK(k == brute_ssyt(l, mu));
        CHECK((k > 0) == dominance_leq(mu, l));
      }
      CHECK(kostka(l, l) == 1);
    }
  }
}

TEST_CASE("kostka_column is the standard-module multiplicity vector") {
  auto col = kostka_column(Partition({1, 1, 1, 1}));
  CHECK(col == std::vector<std::int64_t>{1, 3, 2, 3, 1});
  auto steinberg = kostka_column(Partition({4}));
  CHECK(steinberg == std::vector<std::int64_t>{0, 0, 0, 0, 1});
}
