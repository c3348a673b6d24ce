#include "qtrace/ribbon.hpp"

namespace qtrace {

RibbonConstants RibbonConstants::of(int n) {
  if (n < 2) throw Error("ribbon constants need n >= 2");
  long sign = (n - 1) % 2 == 0 ? 1 : -1;
  RibbonConstants c{n, RootScalar::h_power(2 * n * (1 - n * n), sign), RootScalar(), RootScalar::h_power(n * (1 - n * n)),
                    RootScalar()};
  c.zeta_bar_inv = c.zeta_bar.unit_inverse();
  for (int k = 1; k <= n; ++k) c.quantum_n += RootScalar::q_power(n, 2 * k - n - 1);
  return c;
}

RootScalar minus_q_power(int n, int k) {
  return RootScalar::q_power(n, k) * RootScalar(k % 2 == 0 ? 1 : -1);
}

ScalarMatrix uturn_lambda(int n, const RootScalar& lambda) {
  ScalarMatrix m(n, n, RootScalar());
  for (int i = 1; i <= n; ++i) m(i - 1, n - i) = lambda * minus_q_power(n, i - n);
  return m;
}

ScalarMatrix uturn_matrix(UTurnKind kind, int n) {
  RibbonConstants rc = RibbonConstants::of(n);
  // Bottom-left entry sigma_bar q^{(n-1)/2}; ratio -q moving up the antidiagonal.
  RootScalar bottom_left = rc.sigma_bar * RootScalar::q_power(n, n - 1, 2);
  ScalarMatrix u = uturn_lambda(n, bottom_left);
  if (!kind.decreasing) u = u.transpose();
  if (kind.decreasing != kind.clockwise) u = mat_scale(u, rc.zeta_bar_inv);
  return u;
}

namespace {

int pair(int n, int i, int j) { return (i - 1) * n + (j - 1); }

}  // namespace

ScalarMatrix crossing_same(int n) {
  RootScalar q = RootScalar::q_power(n, 1), qi = RootScalar::q_power(n, -1);
  RootScalar pre = RootScalar::q_power(n, 1, n);
  ScalarMatrix c(n * n, n * n, RootScalar());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int col = pair(n, i, j);
      if (i == j) {
        c(pair(n, i, i), col) = pre * qi;
      } else if (i < j) {
        c(pair(n, i, j), col) = pre * (qi - q);
        c(pair(n, j, i), col) = pre;
      } else {
        c(pair(n, j, i), col) = pre;
      }
    }
  return c;
}

ScalarMatrix crossing_same_inverse(int n) {
  // Matrix of the braiding c_{V,V} inverse to the one above.
  RootScalar q = RootScalar::q_power(n, 1), qi = RootScalar::q_power(n, -1);
  RootScalar pre = RootScalar::q_power(n, -1, n);
  ScalarMatrix c(n * n, n * n, RootScalar());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int col = pair(n, i, j);
      if (i == j) {
        c(pair(n, i, i), col) = pre * q;
      } else {
        c(pair(n, j, i), col) = pre;
        if (i > j) c(pair(n, i, j), col) = pre * (q - qi);
      }
    }
  return c;
}

ScalarMatrix crossing_opp(int n) {
  RootScalar q = RootScalar::q_power(n, 1), qi = RootScalar::q_power(n, -1);
  RootScalar pre = RootScalar::q_power(n, -1, n);
  ScalarMatrix c(n * n, n * n, RootScalar());
  // Domain basis (i,j) = (-q)^{n-i} e*_{n-i+1} (x) e^j; codomain (a,b) = e^a (x) (-q)^{n-b} e*_{n-b+1}.
  // The raw vector e^a (x) e*_k is (-q)^{-(k-1)} times codomain element (a, n-k+1).
  auto add = [&](int col, int a, int k, const RootScalar& v) {
    c(pair(n, a, n - k + 1), col) += v * minus_q_power(n, -(k - 1));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int col = pair(n, i, j);
      int dual = n - i + 1;
      RootScalar scale = pre * minus_q_power(n, n - i);
      if (dual == j) {
        add(col, dual, dual, scale * q);
        for (int k = 1; k < dual; ++k) add(col, k, k, scale * (q - qi));
      } else {
        add(col, j, dual, scale);
      }
    }
  return c;
}

ScalarMatrix crossing_opp_inverse(int n) { return unit_pivot_inverse(crossing_opp(n)); }

ScalarMatrix crossing_matrix(CrossingKind kind, int n) {
  if (kind.same_direction) return kind.positive ? crossing_same(n) : crossing_same_inverse(n);
  return kind.positive ? crossing_opp_inverse(n) : crossing_opp(n);
}

DualityReport duality_lemma(int n, const RootScalar& lambda) {
  RibbonConstants rc = RibbonConstants::of(n);
  RootScalar sign = RootScalar((n - 1) % 2 == 0 ? 1 : -1);
  RootScalar lambda_inv = lambda.unit_inverse();
  ScalarMatrix u = uturn_lambda(n, lambda);
  ScalarMatrix ut = u.transpose();

  // b'(1) = (-1)^{n-1} lambda sum_k q^{2k-n-1} e*_k (x) e^k in basis (-q)^{n-i} e*_{n-i+1} (x) e^j.
  // d'(e^i (x) e*_j) = (-1)^{n-1} lambda^{-1} q^{n-2i+1} delta_ij in basis e^i (x) (-q)^{n-j} e*_{n-j+1}.
  // b(1) = lambda sum_k e^k (x) e*_k in basis e^i (x) (-q)^{n-j} e*_{n-j+1}.
  // d(e*_i (x) e^j) = lambda^{-1} delta_ij in basis (-q)^{n-i} e*_{n-i+1} (x) e^j.
  ScalarMatrix bp(n, n, RootScalar()), dp(n, n, RootScalar()), b(n, n, RootScalar()), d(n, n, RootScalar());
  for (int k = 1; k <= n; ++k) {
    int i = n - k + 1;
    bp(i - 1, k - 1) = sign * lambda * RootScalar::q_power(n, 2 * k - n - 1) * minus_q_power(n, -(k - 1));
    b(k - 1, i - 1) = lambda * minus_q_power(n, -(k - 1));
  }
  for (int i = 1; i <= n; ++i) {
    int j = n - i + 1;  // e*_{n-j+1} = e*_i
    dp(i - 1, j - 1) = sign * lambda_inv * RootScalar::q_power(n, n - 2 * i + 1) * minus_q_power(n, n - j);
    d(i - 1, n - i) = minus_q_power(n, n - i) * lambda_inv;
  }
  DualityReport r{true, true, true, true};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.b_prime = r.b_prime && bp(i, j) == u(j, i);
      r.d_prime = r.d_prime && dp(i, j) == rc.zeta_bar_inv * u(j, i);
      r.b = r.b && b(i, j) == ut(i, j);
      r.d = r.d && d(i, j) == rc.zeta_bar_inv * ut(i, j);
    }
  return r;
}

}  // namespace qtrace
