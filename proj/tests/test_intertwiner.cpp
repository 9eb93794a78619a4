#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "sigchar/intertwiner.hpp"
#include "sigchar/sigengine.hpp"

using namespace sigchar;

namespace {

HermitianParameter hx(int N, std::vector<Rational> x) {
  return HermitianParameter::from_x(N, x);
}

// dense determinant over mpq (test-side, for the factor-determinant check)
mpq_class dense_det(std::vector<std::vector<mpq_class>> a) {
  int n = static_cast<int>(a.size());
  mpq_class det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if (a[r][c] != 0) { piv = r; break; }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<std::vector<mpq_class>> matrix_of(const OperatorOnRegularModule& A) {
  int n = A.dim();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) m[u][w] = A.entry(u, w);
  }
  return m;
}

}  // namespace

TEST_CASE("reduced word evaluates to w0") {
  for (int N = 2; N <= 6; ++N) {
    for (int wc : {0, 1}) {
      auto letters = reduced_word_w0(N, wc);
      CHECK(static_cast<int>(letters.size()) == N * (N - 1) / 2);
      Perm w = perm_identity(N);
      for (int l : letters) w = perm_compose(perm_simple(N, l), w);
      for (int i = 0; i < N; ++i) CHECK(w[i] == N - 1 - i);
    }
  }
}

TEST_CASE("N=2 closed form") {
  HermitianParameter p({Rational(1, 4), Rational(-1, 4)});
  OperatorOnRegularModule A = build_A(p);
  const GroupIndex& gi = A.index();
  int e = gi.rank(perm_identity(2));
  int s = gi.rank(perm_simple(2, 1));
  // A(t_e) = -2 nu_1 t_s - t_e, A(t_s) = -2 nu_1 t_e - t_s: the factor
  // scalar evaluates against the target weight, so A kills the maximal
  // submodule (at nu_1 = 1/2 that is the sign line t_e - t_s).
  CHECK(A.entry(s, e) == mpq_class(-1, 2));
  CHECK(A.entry(e, e) == mpq_class(-1));
  CHECK(A.entry(e, s) == mpq_class(-1, 2));
  CHECK(A.entry(s, s) == mpq_class(-1));
  HermitianParameter wall({Rational(1, 2), Rational(-1, 2)});
  OperatorOnRegularModule W = build_A(wall);
  // A(t_e - t_s) = 0 and A(t_e + t_s) = -2 (t_e + t_s)
  CHECK(W.entry(e, e) - W.entry(s, e) == mpq_class(0));
  CHECK(W.entry(e, e) + W.entry(s, e) == mpq_class(-2));
}

TEST_CASE("well-definedness: two reduced words give the same operator") {
  for (int N = 2; N <= 4; ++N) {
    std::vector<Rational> x;
    for (int i = 0; i < N / 2; ++i) x.emplace_back(2 * (N / 2 - i) - 1, 5);
    HermitianParameter p = hx(N, x);
    OperatorOnRegularModule A0 = build_A(p, 0);
    OperatorOnRegularModule A1 = build_A(p, 1);
    CHECK(A0.rho() == A1.rho());
  }
}

TEST_CASE("self-adjointness and the module-map property") {
  HermitianParameter p = hx(4, {Rational(3, 5), Rational(1, 5)});
  OperatorOnRegularModule A = build_A(p);
  CHECK(A.is_symmetric());
  auto m = matrix_of(A);
  for (int u = 0; u < A.dim(); ++u) {
    for (int w = 0; w < A.dim(); ++w) CHECK(m[u][w] == m[w][u]);
  }
  // commutes with left multiplication by the simple generators
  const GroupIndex& gi = A.index();
  for (int gen = 1; gen <= 3; ++gen) {
    Perm z = perm_simple(4, gen);
    for (int w = 0; w < A.dim(); ++w) {
      std::vector<mpq_class> v(A.dim(), 0);
      v[w] = 1;
      auto av = A.apply(v);
      // ell_z in the basis: t_u -> t_{z u}
      std::vector<mpq_class> zav(A.dim(), 0), zv(A.dim(), 0);
      for (int u = 0; u < A.dim(); ++u) {
        zav[gi.rank(perm_compose(z, gi.element(u)))] += av[u];
        zv[gi.rank(perm_compose(z, gi.element(u)))] += v[u];
      }
      CHECK(A.apply(zv) == zav);
    }
  }
}

TEST_CASE("determinant of each factor and of A") {
  for (int N : {2, 3}) {
    std::vector<Rational> x;
    for (int i = 0; i < N / 2; ++i) x.emplace_back(3 - 2 * i, 7);
    HermitianParameter p = hx(N, x);
    OperatorOnRegularModule A = build_A(p);
    mpq_class expected = 1;
    int half = static_cast<int>(factorial(N) / 2);
    for (const auto& f : A.factors()) {
      mpq_class c(static_cast<long>(f.c.num()), static_cast<long>(f.c.den()));
      mpq_class base = (c - 1) * (-c - 1);
      for (int k = 0; k < half; ++k) expected *= base;
    }
    CHECK(dense_det(matrix_of(A)) == expected);
  }
}

TEST_CASE("isotypic signatures for N=2") {
  HermitianParameter quarter({Rational(1, 4), Rational(-1, 4)});
  OperatorOnRegularModule A = build_A(quarter);
  // raw signs: trivial eigenvalue -2nu-1 < 0, sign eigenvalue 2nu-1 < 0
  CHECK(isotypic_signature(A, Partition({2}), quarter) == -1);
  CHECK(isotypic_signature(A, Partition({1, 1}), quarter) == -1);
  CHECK(oracle_signature(quarter) ==
        SignatureCharacter(2, {1, 1}));  // normalized: (1^2)+(2)

  HermitianParameter threequarter({Rational(3, 4), Rational(-3, 4)});
  OperatorOnRegularModule B = build_A(threequarter);
  CHECK(isotypic_signature(B, Partition({2}), threequarter) == -1);
  CHECK(isotypic_signature(B, Partition({1, 1}), threequarter) == 1);
  CHECK(oracle_signature(threequarter) == SignatureCharacter(2, {1, -1}));
}

TEST_CASE("isotypic counts at the N=3 height-two wall") {
  HermitianParameter p({Rational(1), Rational(0), Rational(-1)});
  OperatorOnRegularModule A = build_A(p);
  IsotypicCounts c21 = isotypic_counts(A, Partition({2, 1}), p);
  CHECK(c21.zero == 4);
  CHECK(c21.signature() == 0);
  IsotypicCounts c3 = isotypic_counts(A, Partition({3}), p);
  CHECK(c3.zero == 0);
  IsotypicCounts c111 = isotypic_counts(A, Partition({1, 1, 1}), p);
  CHECK(c111.zero == 1);
  CHECK(c111.signature() == 0);
  CHECK(oracle_signature(p) == SignatureCharacter(3, {1, 0, 0}));
}

TEST_CASE("det order check") {
  // N=2 at the half wall: order 1 = dim L(M')
  HermitianParameter p2({Rational(1, 2), Rational(-1, 2)});
  CHECK(det_order_check(p2, {Rational(1), Rational(-1)}) == 1);
  // N=3 at the height-two wall: order #W = 6
  HermitianParameter p3({Rational(1), Rational(0), Rational(-1)});
  CHECK(det_order_check(p3, {Rational(1), Rational(0), Rational(-1)}) == 6);
  // wall-free: order 0
  HermitianParameter q({Rational(1, 4), Rational(-1, 4)});
  CHECK(det_order_check(q, {Rational(1), Rational(-1)}) == 0);
  // direction inside the wall is rejected
  HermitianParameter p4 = hx(4, {Rational(3, 2), Rational(1, 2)});
  CHECK_THROWS_AS(det_order_check(p4, {Rational(0), Rational(0), Rational(0), Rational(0)}),
                  std::domain_error);
}

TEST_CASE("oracle agrees with the engine at sample points") {
  struct Sample {
    int N;
    std::vector<Rational> x;
  };
  std::vector<Sample> samples = {
      {2, {Rational(1, 4)}},          {2, {Rational(1, 2)}},
      {2, {Rational(5, 4)}},          {3, {Rational(1, 2)}},
      {3, {Rational(3, 4)}},          {3, {Rational(1)}},
      {3, {Rational(8, 5)}},          {4, {Rational(2, 5), Rational(1, 5)}},
      {4, {Rational(1), Rational(1, 2)}},
      {4, {Rational(13, 10), Rational(3, 10)}},
      {4, {Rational(3, 2), Rational(1, 2)}},
  };
  for (const auto& s : samples) {
    HermitianParameter p = hx(s.N, s.x);
    CHECK(oracle_signature(p) == signature_unramified(p, Mode::allow_conjectures));
  }
}
