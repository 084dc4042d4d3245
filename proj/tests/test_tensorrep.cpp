#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <yhe/tensorrep.hpp>

using namespace yhe;

namespace {

const std::vector<std::pair<int, int>> kSmall = {{2, 2}, {3, 2}, {2, 3}};

OpMatrix op_identity(const TensorSpace& ts) {
  return OpMatrix::identity(ts.r(), ts.dim());
}

// the correction sum appearing in the commutation relations between the
// Jimbo operators and the diagonal ones, with the root-of-unity weights
OpMatrix weighted_correction(const TensorSpace& ts, int j) {
  int r = ts.r();
  auto h = vandermonde_adjugate(r);
  OpMatrix Tprev = op_T(ts, j - 1), Tcur = op_T(ts, j);
  OpMatrix sum(r, ts.dim());
  for (int c1 = 1; c1 <= r; c1++)
    for (int c2 = c1 + 1; c2 <= r; c2++) {
      Scalar w = Scalar::zeta_pow(r, c2) - Scalar::zeta_pow(r, c1);
      sum += (op_F(ts, h, c1, Tprev) * op_F(ts, h, c2, Tcur)).scaled(w);
    }
  Scalar delta = vandermonde_det(r);
  return sum.scaled(Scalar::q_minus_qinv(r) * (delta * delta).invert());
}

}  // namespace

TEST_CASE("tensor operators satisfy the defining relations") {
  for (auto [r, n] : kSmall) {
    CAPTURE(r);
    CAPTURE(n);
    TensorSpace ts(r, n);
    OpMatrix id = op_identity(ts);
    for (int k = 1; k <= n; k++) {
      OpMatrix pow = id;
      for (int s = 0; s < r; s++) pow *= op_T(ts, k);
      CHECK(pow == id);
    }
    for (int k = 1; k <= n; k++)
      for (int l = k + 1; l <= n; l++)
        CHECK(op_T(ts, k) * op_T(ts, l) == op_T(ts, l) * op_T(ts, k));
    for (int i = 1; i < n; i++) {
      OpMatrix G = op_G(ts, i), E = op_E(ts, i);
      // quadratic relation
      CHECK(G * G == id + (E * G).scaled(Scalar::q_minus_qinv(r)));
      // T moves across G by swapping the index
      CHECK(op_T(ts, i) * G == G * op_T(ts, i + 1));
      CHECK(op_T(ts, i + 1) * G == G * op_T(ts, i));
      for (int k = 1; k <= n; k++)
        if (k != i && k != i + 1) CHECK(op_T(ts, k) * G == G * op_T(ts, k));
      // E commutes with G and absorbs into the quadratic term
      CHECK(E * G == G * E);
    }
    for (int i = 1; i + 1 < n; i++) {
      OpMatrix a = op_G(ts, i), b = op_G(ts, i + 1);
      CHECK(a * b * a == b * a * b);
    }
  }
  // far commutation needs four strands
  TensorSpace ts(2, 4);
  CHECK(op_G(ts, 1) * op_G(ts, 3) == op_G(ts, 3) * op_G(ts, 1));
}

TEST_CASE("the averaged projector agrees with the diagonal one") {
  for (auto [r, n] : kSmall) {
    CAPTURE(r);
    CAPTURE(n);
    TensorSpace ts(r, n);
    for (int i = 1; i < n; i++)
      CHECK(rho(ts, YElement::e_gen(r, n, i)) == op_E(ts, i));
  }
}

TEST_CASE("rho is an algebra homomorphism") {
  for (auto [r, n] : kSmall) {
    CAPTURE(r);
    CAPTURE(n);
    TensorSpace ts(r, n);
    std::vector<YElement> samples = {
        YElement::g_gen(r, n, 1) * YElement::t_gen(r, n, n),
        YElement::e_gen(r, n, 1) + YElement::t_pow(r, n, 1, r - 1).scaled(Scalar::q(r)),
        jm(r, n, n),
        m_of(r, enumerate_multipartitions(r, n).front()),
    };
    for (const auto& a : samples)
      for (const auto& b : samples) CHECK(rho(ts, a * b) == rho(ts, a) * rho(ts, b));
    CHECK(rho(ts, YElement::one(r, n)) == op_identity(ts));
    CHECK(rho(ts, YElement::g_inv(r, n, 1)) * op_G(ts, 1) == op_identity(ts));
  }
}

TEST_CASE("the representation is faithful: image rank equals r^n n!") {
  CHECK(faithfulness_rank(1, 2) == 2);
  CHECK(faithfulness_rank(2, 2) == 8);
  CHECK(faithfulness_rank(3, 2) == 18);
  CHECK(faithfulness_rank(2, 3) == 48);
}

TEST_CASE("adjugate of the root-of-unity Vandermonde matrix") {
  for (int r = 1; r <= 4; r++) {
    CAPTURE(r);
    auto h = vandermonde_adjugate(r);
    Scalar delta = vandermonde_det(r);
    // A * adj(A) = det(A) * I, and the determinant is the product of
    // differences of the roots of unity
    for (int i = 1; i <= r; i++) {
      for (int k = 1; k <= r; k++) {
        Scalar entry = Scalar::zero(r);
        for (int j = 1; j <= r; j++)
          entry += Scalar::zeta_pow(r, (long)j * (i - 1)) * h[j - 1][k - 1];
        CHECK(entry == (i == k ? delta : Scalar::zero(r)));
      }
    }
  }
}

TEST_CASE("Jimbo operators differ from the braid operators by the interpolation sum") {
  for (auto [r, n] : kSmall) {
    CAPTURE(r);
    CAPTURE(n);
    TensorSpace ts(r, n);
    for (int i = 2; i <= n; i++)
      CHECK(op_G(ts, i - 1) == op_H(ts, i) - mak_correction(ts, i));
  }
}

TEST_CASE("Jimbo and diagonal operators satisfy the cyclotomic relations") {
  for (auto [r, n] : kSmall) {
    CAPTURE(r);
    CAPTURE(n);
    TensorSpace ts(r, n);
    OpMatrix id = op_identity(ts);
    for (int j = 2; j <= n; j++) {
      OpMatrix H = op_H(ts, j);
      // (h - q)(h + q^{-1}) = 0
      CHECK(((H - id.scaled(Scalar::q(r))) * (H + id.scaled(Scalar::q_pow(r, -1)))).is_zero());
      // the omega generators have the r-th roots of unity as eigenvalues
      OpMatrix prod = id;
      for (int s = 1; s <= r; s++) prod *= op_T(ts, j) - id.scaled(Scalar::zeta_pow(r, s));
      CHECK(prod.is_zero());
      // mixed commutation with the correction sum
      OpMatrix corr = weighted_correction(ts, j);
      CHECK(H * op_T(ts, j) == op_T(ts, j - 1) * H + corr);
      CHECK(H * op_T(ts, j - 1) == op_T(ts, j) * H - corr);
      for (int l = 1; l <= n; l++)
        if (l != j && l != j - 1) CHECK(H * op_T(ts, l) == op_T(ts, l) * H);
    }
    for (int j = 2; j + 1 <= n; j++)
      CHECK(op_H(ts, j) * op_H(ts, j + 1) * op_H(ts, j) ==
            op_H(ts, j + 1) * op_H(ts, j) * op_H(ts, j + 1));
  }
  TensorSpace far(2, 4);
  CHECK(op_H(far, 2) * op_H(far, 4) == op_H(far, 4) * op_H(far, 2));
}

TEST_CASE("matrix algebra decomposition dimension count") {
  for (int r = 1; r <= 3; r++)
    for (int n = 1; n <= 4; n++) {
      CAPTURE(r);
      CAPTURE(n);
      CHECK(structure_dimension_identity(r, n));
    }
}

TEST_CASE("colored tensors with descending indices detect the block structure") {
  int r = 3, n = 3;
  TensorSpace ts(r, n);
  for (const SetPartition& A : all_setpartitions(n)) {
    CAPTURE(A.str());
    // one color per block, lower indices decreasing n..1 along the factors
    long x = 0;
    for (int pos = 1; pos <= n; pos++) {
      int i = n + 1 - pos;
      int t = A.block_of(pos);
      x += (long)((i - 1) * r + t) * ts.stride(pos);
    }
    OpMatrix PA = rho(ts, YElement::E_of(r, A));
    REQUIRE(PA.row(x).size() == 1);
    CHECK(PA.row(x).begin()->first == x);
    CHECK(PA.row(x).begin()->second == Scalar::one(r));
    for (const SetPartition& B : all_setpartitions(n)) {
      OpMatrix PB = rho(ts, YElement::E_of(r, B));
      if (B.refines(A)) {
        CHECK(PB.row(x).size() == 1);
      } else {
        CHECK(PB.row(x).empty());
      }
    }
    // on such tensors the braid operators act by permuting the factors
    for (int i = 1; i < n; i++) {
      OpMatrix G = op_G(ts, i);
      const auto& row = G.row(x);
      REQUIRE(row.size() == 1);
      CHECK(row.begin()->first == ts.with_factors_swapped(x, i));
      CHECK(row.begin()->second == Scalar::one(r));
    }
  }
}
