#include "gridhom/k0serre.hpp"

#include <stdexcept>

namespace gridhom {

SerreK0Matrix serre_k0_matrix(const GridLattice& L) {
  ZMat Z = L.zeta_matrix();
  ZMat M = Z.transpose() * Z.inverse_unitriangular();
  // convention lock: column x of M*Z (the image of [P_x]) must be the
  // support column of I_x, i.e. column x of Z^T
  if (!(M * Z == Z.transpose()))
    throw std::logic_error("serre_k0_matrix: projective classes do not map to injective ones");
  return SerreK0Matrix{std::move(M)};
}

CoxeterOrderReport coxeter_order_check(int m, int n) {
  CoxeterOrderReport R;
  R.m = m;
  R.n = n;
  R.exponent = m + n + 1;
  R.sign = (m % 2 == 1 && n % 2 == 1) ? -1 : 1;
  GridLattice L(m, n);
  ZMat P = serre_k0_matrix(L).M.power(static_cast<unsigned>(R.exponent));
  ZMat expected = ZMat::identity(L.size()).scaled(R.sign);
  R.holds = P == expected;
  if (!R.holds) {
    for (std::size_t i = 0; i < P.rows() && !R.first_failure; ++i)
      for (std::size_t j = 0; j < P.cols(); ++j)
        if (P.at(i, j) != expected.at(i, j)) {
          R.first_failure = {i, j};
          break;
        }
  }
  return R;
}

std::vector<Int> coxeter_polynomial(const GridLattice& L) {
  QMat A = serre_k0_matrix(L).M.to_rational().scaled(Rat(-1));
  std::size_t N = A.rows();
  auto trace = [](const QMat& X) {
    Rat t = 0;
    for (std::size_t i = 0; i < X.rows(); ++i) t += X.at(i, i);
    return t;
  };
  // Faddeev-LeVerrier: every division by k is exact for integer input
  std::vector<Rat> c(N + 1);
  c[N] = 1;
  QMat B = A;
  Rat ck = -trace(B);
  c[N - 1] = ck;
  for (std::size_t k = 2; k <= N; ++k) {
    B = A * (B + QMat::identity(N).scaled(ck));
    ck = -trace(B) / static_cast<int>(k);
    c[N - k] = ck;
  }
  std::vector<Int> out(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    if (boost::multiprecision::denominator(c[i]) != 1)
      throw std::logic_error("coxeter_polynomial: non-integer coefficient");
    out[i] = boost::multiprecision::numerator(c[i]);
  }
  return out;
}

}  // namespace gridhom
