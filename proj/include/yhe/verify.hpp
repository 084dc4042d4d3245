#pragma once

// Named verification suites behind `yhe verify`.  Each suite re-runs a
// family of identities at the requested size and reports one PASS/FAIL line
// per check, with a witness describing the first failure.  Randomized
// checks draw from a seeded generator so runs are reproducible.

#include <yhe/braidsties.hpp>
#include <yhe/tensorrep.hpp>

#include <random>
#include <sstream>

namespace yhe {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::string suite;
  unsigned long seed = 0;
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void sort() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  int r = 2;
  int n = 3;
  Partition alpha;  // empty means all types
  long long budget = 10000;
  unsigned long seed = 0;
};

namespace detail {

inline void check(Report& rep, const std::string& name, bool pass,
                  const std::string& witness = "") {
  for (auto& c : rep.checks)
    if (c.name == name) {
      if (c.pass && !pass) {
        c.pass = false;
        c.witness = witness;
      }
      return;
    }
  rep.checks.push_back({name, pass, pass ? "" : witness});
}

inline void require_budget(long long size, const VerifyOptions& opt) {
  if (size > opt.budget)
    throw BudgetError("basis size " + std::to_string(size) + " exceeds budget " +
                      std::to_string(opt.budget));
}

inline long long y_dim(int r, int n) {
  long long d = factorial(n);
  for (int i = 0; i < n; i++) d *= r;
  return d;
}

inline long long et_dim(int n) {
  long long b = 0;
  for (const auto& alpha : all_partitions(n)) b += faa_di_bruno(alpha);
  return b * factorial(n);
}

inline std::string at(int r, int n) {
  return " at r=" + std::to_string(r) + " n=" + std::to_string(n);
}

// one-column standard multitableaux; their diagonal cellular elements are a
// complete family of orthogonal idempotents
inline std::vector<MultiTableau> one_column_tableaux(int r, int n) {
  std::vector<MultiTableau> out;
  for (const auto& shape : enumerate_multipartitions(r, n)) {
    bool one_col = true;
    for (const auto& p : shape.comp)
      for (int part : p)
        if (part != 1) one_col = false;
    if (!one_col) continue;
    for (const auto& s : enumerate_std(shape)) out.push_back(s);
  }
  return out;
}

// the root-of-unity weighted interpolation sum in the mixed commutation
// relations between the Jimbo and diagonal operators
inline OpMatrix weighted_interpolation(const TensorSpace& ts, int j) {
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

inline EtElement random_et_basis(int n, std::mt19937& rng) {
  auto parts = all_setpartitions(n);
  auto perms = all_perms(n);
  return EtElement::E_of(parts[rng() % parts.size()]) *
         EtElement::g_of(n, perms[rng() % perms.size()]);
}

// ---- individual suites --------------------------------------------------

inline void suite_relations_y(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  YElement one = YElement::one(r, n);
  auto T = [&](int j) { return YElement::t_gen(r, n, j); };
  auto G = [&](int i) { return YElement::g_gen(r, n, i); };
  auto E = [&](int i) { return YElement::e_gen(r, n, i); };
  for (int i = 1; i <= n; i++) {
    YElement p = one;
    for (int s = 0; s < r; s++) p *= T(i);
    check(rep, "framing order", p == one, "t" + std::to_string(i) + at(r, n));
    for (int j = 1; j <= n; j++)
      check(rep, "framing commute", T(i) * T(j) == T(j) * T(i),
            "t" + std::to_string(i) + ",t" + std::to_string(j) + at(r, n));
  }
  for (int i = 1; i < n; i++) {
    Perm si = Perm::s(n, i);
    for (int j = 1; j <= n; j++)
      check(rep, "framing across braid", T(j) * G(i) == G(i) * T(si.of(j)),
            "t" + std::to_string(j) + ",g" + std::to_string(i) + at(r, n));
    check(rep, "quadratic",
          G(i) * G(i) == one + (E(i) * G(i)).scaled(Scalar::q_minus_qinv(r)),
          "g" + std::to_string(i) + at(r, n));
    check(rep, "inverse",
          G(i) * YElement::g_inv(r, n, i) == one &&
              YElement::g_inv(r, n, i) * G(i) == one,
          "g" + std::to_string(i) + at(r, n));
    for (int j = i + 2; j < n; j++)
      check(rep, "far commute", G(i) * G(j) == G(j) * G(i),
            "g" + std::to_string(i) + ",g" + std::to_string(j) + at(r, n));
    if (i + 1 < n)
      check(rep, "braid", G(i) * G(i + 1) * G(i) == G(i + 1) * G(i) * G(i + 1),
            "g" + std::to_string(i) + at(r, n));
  }
}

inline void suite_relations_et(Report& rep, const VerifyOptions& opt) {
  int n = opt.n;
  require_budget(et_dim(n), opt);
  EtElement id = EtElement::one(n);
  Scalar dq = Scalar::q_minus_qinv(1);
  auto g = [&](int i) { return EtElement::g_gen(n, i); };
  auto e = [&](int i) { return EtElement::e_gen(n, i); };
  auto w = [&](int i, int j) {
    return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " n=" + std::to_string(n);
  };
  for (int i = 1; i < n; i++) {
    check(rep, "tie idempotent", e(i) * e(i) == e(i), w(i, i));
    check(rep, "tie commutes with own braid", g(i) * e(i) == e(i) * g(i), w(i, i));
    check(rep, "quadratic", g(i) * g(i) == id + (e(i) * g(i)).scaled(dq), w(i, i));
    check(rep, "inverse",
          g(i) * EtElement::g_inv(n, i) == id && EtElement::g_inv(n, i) * g(i) == id,
          w(i, i));
    for (int j = 1; j < n; j++) {
      check(rep, "ties commute", e(i) * e(j) == e(j) * e(i), w(i, j));
      if (std::abs(i - j) > 1) {
        check(rep, "far braids commute", g(i) * g(j) == g(j) * g(i), w(i, j));
        check(rep, "far tie commutes", g(i) * e(j) == e(j) * g(i), w(i, j));
      }
      if (std::abs(i - j) == 1) {
        check(rep, "braid", g(i) * g(j) * g(i) == g(j) * g(i) * g(j), w(i, j));
        check(rep, "tie slides along braids",
              e(i) * g(j) * g(i) == g(j) * g(i) * e(j), w(i, j));
        check(rep, "adjacent tie absorption",
              e(i) * e(j) * g(j) == e(i) * g(j) * e(i) &&
                  e(i) * e(j) * g(j) == g(j) * e(i) * e(j),
              w(i, j));
      }
    }
  }
}

inline void suite_tensor_rep(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  TensorSpace ts(r, n);
  OpMatrix id = OpMatrix::identity(r, ts.dim());
  for (int i = 1; i < n; i++) {
    OpMatrix G = op_G(ts, i), E = op_E(ts, i);
    check(rep, "operator quadratic",
          G * G == id + (E * G).scaled(Scalar::q_minus_qinv(r)),
          "i=" + std::to_string(i) + at(r, n));
    check(rep, "operator framing shift",
          op_T(ts, i) * G == G * op_T(ts, i + 1) &&
              op_T(ts, i + 1) * G == G * op_T(ts, i),
          "i=" + std::to_string(i) + at(r, n));
    check(rep, "averaged projector matches diagonal",
          rho(ts, YElement::e_gen(r, n, i)) == E, "i=" + std::to_string(i) + at(r, n));
  }
  for (int i = 1; i + 1 < n; i++)
    check(rep, "operator braid",
          op_G(ts, i) * op_G(ts, i + 1) * op_G(ts, i) ==
              op_G(ts, i + 1) * op_G(ts, i) * op_G(ts, i + 1),
          "i=" + std::to_string(i) + at(r, n));
  std::vector<YElement> samples = {
      YElement::g_gen(r, n, 1) * YElement::t_gen(r, n, n),
      YElement::e_gen(r, n, 1) + YElement::t_pow(r, n, 1, r - 1).scaled(Scalar::q(r)),
      jm(r, n, n),
  };
  for (const auto& a : samples)
    for (const auto& b : samples)
      check(rep, "homomorphism", rho(ts, a * b) == rho(ts, a) * rho(ts, b), at(r, n));
  check(rep, "unit", rho(ts, YElement::one(r, n)) == id, at(r, n));
}

inline void suite_faithful(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  int rank = faithfulness_rank(r, n);
  check(rep, "image rank equals algebra dimension", rank == y_dim(r, n),
        "rank " + std::to_string(rank) + " vs " + std::to_string(y_dim(r, n)) + at(r, n));
}

inline void suite_shoji(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  TensorSpace ts(r, n);
  for (int i = 2; i <= n; i++)
    check(rep, "braid operator equals Jimbo minus interpolation",
          op_G(ts, i - 1) == op_H(ts, i) - mak_correction(ts, i),
          "i=" + std::to_string(i) + at(r, n));
}

inline void suite_mak(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  TensorSpace ts(r, n);
  OpMatrix id = OpMatrix::identity(r, ts.dim());
  for (int j = 2; j <= n; j++) {
    OpMatrix H = op_H(ts, j);
    check(rep, "Jimbo quadratic",
          ((H - id.scaled(Scalar::q(r))) * (H + id.scaled(Scalar::q_pow(r, -1)))).is_zero(),
          "j=" + std::to_string(j) + at(r, n));
    OpMatrix prod = id;
    for (int s = 1; s <= r; s++) prod *= op_T(ts, j) - id.scaled(Scalar::zeta_pow(r, s));
    check(rep, "cyclotomic polynomial", prod.is_zero(), "j=" + std::to_string(j) + at(r, n));
    OpMatrix corr = weighted_interpolation(ts, j);
    check(rep, "mixed commutation down",
          H * op_T(ts, j) == op_T(ts, j - 1) * H + corr, "j=" + std::to_string(j) + at(r, n));
    check(rep, "mixed commutation up",
          H * op_T(ts, j - 1) == op_T(ts, j) * H - corr, "j=" + std::to_string(j) + at(r, n));
    for (int l = 1; l <= n; l++)
      if (l != j && l != j - 1)
        check(rep, "far framing commutes", H * op_T(ts, l) == op_T(ts, l) * H,
              "j=" + std::to_string(j) + " l=" + std::to_string(l) + at(r, n));
  }
  for (int j = 2; j + 1 <= n; j++)
    check(rep, "Jimbo braid",
          op_H(ts, j) * op_H(ts, j + 1) * op_H(ts, j) ==
              op_H(ts, j + 1) * op_H(ts, j) * op_H(ts, j + 1),
          "j=" + std::to_string(j) + at(r, n));
  if (n >= 4)
    check(rep, "Jimbo far commute", op_H(ts, 2) * op_H(ts, 4) == op_H(ts, 4) * op_H(ts, 2),
          at(r, n));
}

inline void suite_lusztig(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  auto std1 = one_column_tableaux(r, n);
  long long rn = 1;
  for (int i = 0; i < n; i++) rn *= r;
  check(rep, "idempotent count", (long long)std1.size() == rn, at(r, n));
  std::map<MultiTableau, YElement> f;
  YElement sum(r, n);
  for (const auto& s : std1) {
    f.emplace(s, m_cell(r, s.shape(), s, s));
    sum += f.at(s);
  }
  check(rep, "resolution of identity", sum == YElement::one(r, n), at(r, n));
  for (const auto& s : std1)
    for (const auto& t : std1) {
      YElement prod = f.at(s) * f.at(t);
      check(rep, "orthogonal idempotents",
            s == t ? prod == f.at(s) : prod.is_zero(), at(r, n));
    }
  for (int i = 1; i <= n; i++) {
    YElement rhs(r, n);
    for (const auto& s : std1) rhs += f.at(s).scaled(Scalar::zeta_pow(r, s.p(i)));
    check(rep, "framing spectral decomposition", YElement::t_gen(r, n, i) == rhs,
          "i=" + std::to_string(i) + at(r, n));
  }
  for (int i = 1; i < n; i++) {
    YElement G = YElement::g_gen(r, n, i);
    for (const auto& s : std1) {
      MultiTableau target = s.p(i) == s.p(i + 1) ? s : s.act(Perm::s(n, i));
      check(rep, "braid conjugates idempotents",
            f.at(s) * G == G * f.at(target), "i=" + std::to_string(i) + at(r, n));
    }
    YElement corr(r, n);
    for (const auto& s : std1)
      if (s.p(i) == s.p(i + 1)) corr += f.at(s) * G;
    check(rep, "quadratic in idempotent form",
          G * G == YElement::one(r, n) + corr.scaled(Scalar::q_minus_qinv(r)),
          "i=" + std::to_string(i) + at(r, n));
  }
}

inline void suite_cellular_y(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  YCoords coords(r, n);
  auto labels = y_cell_labels(r, n);
  check(rep, "basis count", (long long)labels.size() == y_dim(r, n), at(r, n));
  std::vector<SVec> vecs;
  for (const auto& lab : labels) vecs.push_back(coords.vec(m_cell(r, lab.shape, lab.s, lab.t)));
  BasisSolver solver(vecs);
  check(rep, "change of basis invertible", solver.rank() == coords.dim(), at(r, n));
  auto std1 = one_column_tableaux(r, n);
  YElement sum(r, n);
  for (const auto& s : std1) sum += m_cell(r, s.shape(), s, s);
  check(rep, "resolution of identity", sum == YElement::one(r, n), at(r, n));
  for (int i = 1; i <= n; i++) {
    YElement rhs(r, n);
    for (const auto& s : std1)
      rhs += m_cell(r, s.shape(), s, s).scaled(Scalar::zeta_pow(r, s.p(i)));
    check(rep, "framing spectral decomposition", YElement::t_gen(r, n, i) == rhs,
          "i=" + std::to_string(i) + at(r, n));
  }
  for (const auto& lab : labels)
    check(rep, "star swaps tableaux",
          m_cell(r, lab.shape, lab.s, lab.t).star() == m_cell(r, lab.shape, lab.t, lab.s),
          at(r, n));
}

inline void suite_jm(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  std::vector<YElement> L;
  for (int k = 1; k <= n; k++) L.push_back(jm(r, n, k));
  for (int k = 1; k <= n; k++) L.push_back(YElement::t_gen(r, n, k));
  for (const auto& a : L) {
    check(rep, "star invariant", a.star() == a, at(r, n));
    for (const auto& b : L) check(rep, "commuting family", a * b == b * a, at(r, n));
  }
  YCoords coords(r, n);
  auto labels = y_cell_labels(r, n);
  std::vector<SVec> vecs;
  for (const auto& lab : labels) vecs.push_back(coords.vec(m_cell(r, lab.shape, lab.s, lab.t)));
  BasisSolver solver(vecs);
  for (const auto& shape : enumerate_multipartitions(r, n)) {
    MultiTableau tc = t_canonical(shape);
    for (const auto& t : enumerate_std(shape)) {
      for (int which = 0; which < 2 * n; which++) {
        YElement Lk = L[which];
        Scalar content = which < n ? Scalar::q_pow(r, 2 * t.res(which + 1))
                                   : Scalar::zeta_pow(r, t.p(which - n + 1));
        auto sol = solver.solve(coords.vec(m_cell(r, shape, tc, t) * Lk));
        if (!sol) {
          check(rep, "triangular action", false, "expansion failed" + at(r, n));
          continue;
        }
        bool saw_diag = false, tri = true;
        for (const auto& [idx, coeff] : *sol) {
          const YCellLabel& lab = labels[idx];
          if (lab.shape == shape) {
            if (lab.s != tc) tri = false;
            if (lab.t == t) {
              saw_diag = true;
              if (coeff != Frac(content)) tri = false;
            } else if (dominance(lab.t, t) != Cmp::greater) {
              tri = false;
            }
          } else if (dominance(lab.shape, shape) != Cmp::greater) {
            tri = false;
          }
        }
        if (!content.is_zero() && !saw_diag) tri = false;
        check(rep, "triangular action", tri, "tableau " + t.str() + at(r, n));
      }
    }
  }
}

inline void suite_mobius(Report& rep, const VerifyOptions& opt) {
  int n = opt.n;
  require_budget(et_dim(n), opt);
  auto parts = all_setpartitions(n);
  EtElement sum(n);
  for (const SetPartition& A : parts) {
    EtElement EA = ebb_of(A);
    sum += EA;
    check(rep, "idempotent", EA * EA == EA, A.str());
    check(rep, "star fixed", EA.star() == EA, A.str());
    for (const SetPartition& B : parts) {
      if (B != A)
        check(rep, "orthogonal", (EA * ebb_of(B)).is_zero(), A.str() + " " + B.str());
      EtElement prod = EA * EtElement::E_of(B);
      check(rep, "absorption", B.refines(A) ? prod == EA : prod.is_zero(),
            A.str() + " " + B.str());
    }
  }
  check(rep, "partition of unity", sum == EtElement::one(n), "n=" + std::to_string(n));
  for (const SetPartition& A : parts)
    for (const Perm& w : all_perms(n))
      check(rep, "conjugation permutes idempotents",
            ebb_of(A) * EtElement::g_of(n, w) == EtElement::g_of(n, w) * ebb_of(A.act(w)),
            A.str() + " " + w.str());
}

inline void suite_decompose(Report& rep, const VerifyOptions& opt) {
  int n = opt.n;
  require_budget(et_dim(n), opt);
  std::mt19937 rng(opt.seed);
  std::vector<EtElement> samples;
  for (int k = 0; k < 4; k++) samples.push_back(random_et_basis(n, rng));
  EtElement sum(n);
  EtCoords coords(n);
  for (const Partition& alpha : all_partitions(n)) {
    EtElement c = ebb_alpha(n, alpha);
    sum += c;
    check(rep, "central idempotent", c * c == c, partition_str(alpha));
    for (const auto& x : samples)
      check(rep, "centrality", c * x == x * c, partition_str(alpha));
    for (const Partition& beta : all_partitions(n))
      if (beta != alpha)
        check(rep, "orthogonal", (c * ebb_alpha(n, beta)).is_zero(),
              partition_str(alpha) + " " + partition_str(beta));
    // dimension of the type component
    RowReducer rr;
    for (const SetPartition& A : all_setpartitions(n)) {
      if (A.type() != alpha) continue;
      for (const Perm& w : all_perms(n))
        rr.add_row(coords.vec(ebb_of(A) * EtElement::g_of(n, w)));
    }
    check(rep, "component dimension",
          (long long)rr.rank() == faa_di_bruno(alpha) * factorial(n),
          partition_str(alpha) + " rank " + std::to_string(rr.rank()));
  }
  check(rep, "partition of unity", sum == EtElement::one(n), "n=" + std::to_string(n));
}

inline void suite_counting(Report& rep, const VerifyOptions& opt) {
  int n = opt.n;
  long long bn = 0;
  std::map<Partition, long long> bn_alpha;
  for (const auto& alpha : all_partitions(n)) {
    bn_alpha[alpha] = faa_di_bruno(alpha);
    bn += bn_alpha[alpha];
  }
  require_budget(bn * factorial(n), opt);
  long long formula = 0, enumerated = 0;
  std::map<Partition, long long> per_type;
  for (const auto& L : enumerate_lambda_shapes(n)) {
    long long c = count_std_shape(L);
    long long e = (long long)enumerate_std_lambda(L).size();
    check(rep, "closed formula matches enumeration", c == e,
          L.str() + ": " + std::to_string(c) + " vs " + std::to_string(e));
    formula += c * c;
    enumerated += e * e;
    per_type[L.type()] += c * c;
  }
  check(rep, "square sum equals algebra dimension",
        formula == bn * factorial(n) && enumerated == bn * factorial(n),
        std::to_string(formula) + " vs " + std::to_string(bn * factorial(n)));
  for (const auto& [alpha, s] : per_type)
    check(rep, "per type refinement", s == bn_alpha[alpha] * factorial(n),
          partition_str(alpha) + ": " + std::to_string(s));
}

inline void suite_cellular_et(Report& rep, const VerifyOptions& opt) {
  int n = opt.n;
  require_budget(et_dim(n), opt);
  auto labels = et_cell_labels(n);
  EtCoords coords(n);
  check(rep, "basis count", (long long)labels.size() == et_dim(n),
        "n=" + std::to_string(n));
  std::vector<SVec> vecs;
  for (const auto& lab : labels) vecs.push_back(coords.vec(et_m_cell(lab.shape, lab.s, lab.t)));
  BasisSolver solver(vecs);
  check(rep, "change of basis invertible", solver.rank() == coords.dim(),
        "rank " + std::to_string(solver.rank()));
  for (const auto& lab : labels)
    check(rep, "star swaps tableaux",
          et_m_cell(lab.shape, lab.s, lab.t).star() == et_m_cell(lab.shape, lab.t, lab.s),
          lab.shape.str());
  std::mt19937 rng(opt.seed);
  for (int trial = 0; trial < 100; trial++) {
    const auto& lab = labels[rng() % labels.size()];
    EtElement h = random_et_basis(n, rng);
    auto coeffs = solver.solve(coords.vec(et_m_cell(lab.shape, lab.s, lab.t) * h));
    if (!coeffs) {
      check(rep, "cell order", false, "expansion failed");
      continue;
    }
    bool good = true;
    for (const auto& [j, c] : *coeffs) {
      const auto& out = labels[j];
      if (dominance(out.shape, lab.shape) == Cmp::greater) continue;
      if (!(out.shape == lab.shape && out.s == lab.s)) good = false;
    }
    check(rep, "cell order", good, "trial " + std::to_string(trial));
  }
}

inline void suite_psi(Report& rep, const VerifyOptions& opt) {
  int n = opt.n;
  require_budget(et_dim(n), opt);
  std::vector<Partition> types;
  if (opt.alpha.empty())
    types = all_partitions(n);
  else
    types = {opt.alpha};
  EtCoords coords(n);
  for (const Partition& alpha : types) {
    std::vector<EtCellLabel> labels;
    for (const auto& lab : et_cell_labels(n))
      if (lab.shape.type() == alpha) labels.push_back(lab);
    std::vector<SetPartition> orbits;
    for (const SetPartition& A : all_setpartitions(n))
      if (A.type() == alpha) orbits.push_back(A);
    auto orbit_index = [&](const SetPartition& A) {
      for (size_t i = 0; i < orbits.size(); i++)
        if (orbits[i] == A) return (int)i;
      return -1;
    };
    using Image = std::map<std::pair<int, int>, EtElement>;
    auto image_of = [&](const EtCellLabel& lab) {
      Image m;
      m.emplace(std::make_pair(orbit_index(orbit_label(lab.shape, lab.s)),
                               orbit_index(orbit_label(lab.shape, lab.t))),
                et_m_cell(lab.shape, initial_part(lab.s), initial_part(lab.t)));
      return m;
    };
    std::vector<Image> images;
    for (const auto& lab : labels) images.push_back(image_of(lab));
    RowReducer rr;
    for (const auto& img : images) {
      SVec flat;
      for (const auto& [pos, x] : img) {
        int block = pos.first * (int)orbits.size() + pos.second;
        for (const auto& [col, f] : coords.vec(x)) flat.emplace(block * coords.dim() + col, f);
      }
      rr.add_row(flat);
    }
    check(rep, "bijective on basis", rr.rank() == (int)labels.size(),
          partition_str(alpha) + " rank " + std::to_string(rr.rank()));

    std::vector<SVec> vecs;
    for (const auto& lab : labels) vecs.push_back(coords.vec(et_m_cell(lab.shape, lab.s, lab.t)));
    BasisSolver solver(vecs);
    auto psi = [&](const EtElement& x) {
      Image out;
      auto coeffs = solver.solve(coords.vec(x));
      if (!coeffs) return out;
      for (const auto& [j, c] : *coeffs)
        for (const auto& [pos, y] : images[j]) {
          EtElement add = y.scaled(c.as_scalar());
          auto it = out.find(pos);
          if (it == out.end()) {
            out.emplace(pos, add);
          } else {
            it->second += add;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      return out;
    };
    auto matmul = [&](const Image& x, const Image& y) {
      Image out;
      for (const auto& [px, a] : x)
        for (const auto& [py, b] : y) {
          if (px.second != py.first) continue;
          auto pos = std::make_pair(px.first, py.second);
          EtElement prod = a * b;
          auto it = out.find(pos);
          if (it == out.end()) {
            out.emplace(pos, prod);
          } else {
            it->second += prod;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      return out;
    };
    std::mt19937 rng(opt.seed);
    for (int trial = 0; trial < 100; trial++) {
      const auto& la = labels[rng() % labels.size()];
      const auto& lb = labels[rng() % labels.size()];
      EtElement a = et_m_cell(la.shape, la.s, la.t);
      EtElement b = et_m_cell(lb.shape, lb.s, lb.t);
      check(rep, "multiplicative", psi(a * b) == matmul(image_of(la), image_of(lb)),
            partition_str(alpha) + " trial " + std::to_string(trial));
    }
  }
}

inline void suite_phi_embed(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  std::mt19937 rng(opt.seed);
  for (int k = 0; k < 10; k++) {
    EtElement a = random_et_basis(n, rng), b = random_et_basis(n, rng);
    check(rep, "homomorphism", phi(r, a * b) == phi(r, a) * phi(r, b), at(r, n));
  }
  check(rep, "unit", phi(r, EtElement::one(n)) == YElement::one(r, n), at(r, n));
  YCoords coords(r, n);
  RowReducer rr;
  for (const SetPartition& A : all_setpartitions(n))
    for (const Perm& w : all_perms(n))
      rr.add_row(coords.vec(phi(r, EtElement::E_of(A) * EtElement::g_of(n, w))));
  if (r >= n)
    check(rep, "image has full rank", (long long)rr.rank() == et_dim(n),
          "rank " + std::to_string(rr.rank()) + at(r, n));
  else
    check(rep, "image rank collapses", (long long)rr.rank() < et_dim(n),
          "rank " + std::to_string(rr.rank()) + at(r, n));
}

inline void suite_wreath(Report& rep, const VerifyOptions& opt) {
  int n = opt.n;
  require_budget(et_dim(n), opt);
  long long total = 0;
  for (const Partition& alpha : all_partitions(n)) {
    long long labels = 0;
    for (const auto& lab : et_cell_labels(n))
      if (lab.shape.type() == alpha) labels++;
    check(rep, "component basis count", labels == faa_di_bruno(alpha) * factorial(n),
          partition_str(alpha) + ": " + std::to_string(labels));
    total += labels;
  }
  check(rep, "dimension bookkeeping", total == et_dim(n),
        std::to_string(total) + " vs " + std::to_string(et_dim(n)));
  // block transposition subgroups: B is a homomorphism on the groups that
  // permute equal-size blocks
  for (const auto& L : enumerate_lambda_shapes(n)) {
    auto sk = group_Sk(L);
    if (sk.size() <= 1) continue;
    std::map<Perm, EtElement> bb;
    for (const Perm& y : sk) bb.emplace(y, bbb_of(L, y));
    for (const Perm& y : sk) {
      check(rep, "block transposition star", bb.at(y).star() == bb.at(y.inverse()), L.str());
      for (const Perm& z : sk)
        check(rep, "block transposition homomorphism", bb.at(y) * bb.at(z) == bb.at(y * z),
              L.str());
    }
  }
}

inline void suite_structure(Report& rep, const VerifyOptions& opt) {
  int r = opt.r, n = opt.n;
  require_budget(y_dim(r, n), opt);
  check(rep, "dimension identity", structure_dimension_identity(r, n), at(r, n));
}

}  // namespace detail

inline std::vector<std::string> verify_suites() {
  return {"relations-y", "relations-et", "tensor-rep", "faithful", "shoji", "mak",
          "lusztig",     "cellular-y",   "cellular-et", "jm",       "mobius", "decompose",
          "wreath",      "psi",          "phi-embed",   "counting"};
}

inline Report run_suite(const std::string& suite, const VerifyOptions& opt) {
  Report rep;
  rep.suite = suite;
  rep.seed = opt.seed;
  using detail::check;
  if (suite == "relations-y") {
    detail::suite_relations_y(rep, opt);
  } else if (suite == "relations-et") {
    detail::suite_relations_et(rep, opt);
  } else if (suite == "tensor-rep") {
    detail::suite_tensor_rep(rep, opt);
  } else if (suite == "faithful") {
    detail::suite_faithful(rep, opt);
  } else if (suite == "shoji") {
    detail::suite_shoji(rep, opt);
  } else if (suite == "mak") {
    detail::suite_mak(rep, opt);
  } else if (suite == "lusztig") {
    detail::suite_lusztig(rep, opt);
  } else if (suite == "cellular-y") {
    detail::suite_cellular_y(rep, opt);
  } else if (suite == "cellular-et") {
    detail::suite_cellular_et(rep, opt);
  } else if (suite == "jm") {
    detail::suite_jm(rep, opt);
  } else if (suite == "mobius") {
    detail::suite_mobius(rep, opt);
  } else if (suite == "decompose") {
    detail::suite_decompose(rep, opt);
  } else if (suite == "wreath") {
    detail::suite_wreath(rep, opt);
  } else if (suite == "psi") {
    detail::suite_psi(rep, opt);
  } else if (suite == "phi-embed") {
    detail::suite_phi_embed(rep, opt);
  } else if (suite == "counting") {
    detail::suite_counting(rep, opt);
  } else {
    throw UsageError("unknown suite: " + suite);
  }
  rep.sort();
  return rep;
}

inline std::string report_text(const Report& rep) {
  std::ostringstream out;
  out << "suite " << rep.suite << " seed " << rep.seed << "\n";
  for (const auto& c : rep.checks) {
    out << (c.pass ? "PASS" : "FAIL") << " " << c.name;
    if (!c.pass) out << " [" << c.witness << "]";
    out << "\n";
  }
  out << (rep.ok() ? "OK" : "FAILED") << " (" << rep.checks.size() << " checks)\n";
  return out.str();
}

}  // namespace yhe
