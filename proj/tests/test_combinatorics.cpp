#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <yhe/lambda.hpp>

using namespace yhe;

TEST_CASE("multipartition enumeration counts") {
  CHECK(enumerate_multipartitions(1, 2).size() == 2);
  CHECK(enumerate_multipartitions(2, 1).size() == 2);
  CHECK(enumerate_multipartitions(2, 2).size() == 5);
}

TEST_CASE("standard multitableau counts") {
  CHECK(enumerate_std(MultiPartition{{{1, 1}}}).size() == 1);
  CHECK(enumerate_std(MultiPartition{{{2, 1}}}).size() == 2);
  CHECK(enumerate_std(MultiPartition{{{1}, {1}}}).size() == 2);
}

TEST_CASE("hook length counts agree with enumeration") {
  for (int n = 1; n <= 6; n++) {
    long long sq = 0;
    for (const auto& p : all_partitions(n)) {
      long long d = std_count(p);
      if (n <= 5) CHECK(d == (long long)enumerate_std(p).size());
      sq += d * d;
    }
    CHECK(sq == factorial(n));
  }
}

TEST_CASE("square sum over multipartitions equals r^n n!") {
  long long sq = 0;
  for (const auto& mp : enumerate_multipartitions(2, 2)) {
    long long d = (long long)enumerate_std(mp).size();
    CHECK(d == std_count(mp));
    sq += d * d;
  }
  CHECK(sq == 8);
}

static Tableau T(std::vector<std::vector<int>> rows) { return rows; }

TEST_CASE("tableau dominance examples") {
  Tableau a = T({{1, 3}, {2, 5}, {4}});
  Tableau b = T({{2, 4}, {3, 5}, {1}});
  Tableau c = T({{4, 5}, {1, 3}, {2}});
  CHECK(tableau_dominance(a, b) == Cmp::greater);
  CHECK(tableau_dominance(a, c) == Cmp::greater);
  CHECK(tableau_dominance(b, c) == Cmp::incomparable);
  CHECK(tableau_dominance(b, a) == Cmp::less);
  CHECK(tableau_dominance(a, a) == Cmp::equal);
}

TEST_CASE("multitableau incomparability example") {
  MultiTableau s{{T({{1, 2}, {3, 4}}), T({{5}})}};
  MultiTableau t{{T({{1, 3}, {2}}), T({{4, 5}})}};
  CHECK(dominance(s, t) == Cmp::incomparable);
}

TEST_CASE("canonical tableau dominates all row standard ones") {
  // single component: global maximality
  MultiPartition shape1{{{2, 2}}};
  MultiTableau tc1 = t_canonical(shape1);
  for (const auto& t : enumerate_row_standard(shape1)) {
    Cmp c = dominance(tc1, t);
    CHECK((c == Cmp::greater || c == Cmp::equal));
  }
  // several components: maximality among tableaux with the same positions
  MultiPartition shape{{{2, 1}, {2}}};
  MultiTableau tc = t_canonical(shape);
  for (const auto& t : enumerate_row_standard(shape)) {
    bool same_positions = true;
    for (int j = 1; j <= 5; j++)
      if (t.p(j) != tc.p(j)) same_positions = false;
    if (!same_positions) continue;
    Cmp c = dominance(tc, t);
    CHECK((c == Cmp::greater || c == Cmp::equal));
  }
}

TEST_CASE("dominance is a strict partial order") {
  auto tabs = enumerate_std(MultiPartition{{{2, 1}, {1}}});
  for (const auto& a : tabs) CHECK(dominance(a, a) == Cmp::equal);
  for (const auto& a : tabs)
    for (const auto& b : tabs)
      for (const auto& c : tabs)
        if (dominance(a, b) == Cmp::greater && dominance(b, c) == Cmp::greater)
          CHECK(dominance(a, c) == Cmp::greater);
}

TEST_CASE("moebius examples") {
  SetPartition sing(3);
  SetPartition top(3, {{1, 2, 3}});
  SetPartition ab(3, {{1, 2}, {3}});
  CHECK(mobius(sing, sing) == 1);
  CHECK(mobius(sing, top) == 2);
  CHECK(mobius(sing, ab) == -1);
  CHECK(mobius(ab, sing) == 0);
}

TEST_CASE("moebius inversion on intervals") {
  for (int n = 2; n <= 4; n++) {
    auto sps = all_setpartitions(n);
    for (const auto& A : sps) {
      for (const auto& C : sps) {
        if (!A.refines(C)) continue;
        long long total = 0;
        for (const auto& B : sps)
          if (A.refines(B) && B.refines(C)) total += mobius(A, B);
        CHECK(total == (A == C ? 1 : 0));
      }
    }
  }
}

TEST_CASE("faa di bruno coefficients") {
  CHECK(faa_di_bruno({2, 1}) == 3);
  CHECK(faa_di_bruno({1, 1, 1, 1}) == 1);
  CHECK(faa_di_bruno({2, 2}) == 3);
  // against enumeration
  for (int n = 1; n <= 5; n++) {
    std::map<Partition, long long> counts;
    for (const auto& A : all_setpartitions(n)) counts[A.type()]++;
    for (const auto& alpha : all_partitions(n)) CHECK(counts[alpha] == faa_di_bruno(alpha));
  }
}

TEST_CASE("bell numbers") {
  std::vector<long long> bell = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; n++) {
    long long total = 0;
    for (const auto& alpha : all_partitions(n)) total += faa_di_bruno(alpha);
    CHECK(total == bell[n]);
    CHECK((long long)all_setpartitions(n).size() == bell[n]);
  }
}

TEST_CASE("set partition basics") {
  SetPartition A(4, {{1, 3}, {2, 4}});
  CHECK(A.str() == "{1,3|2,4}");
  CHECK(A.type() == Partition{2, 2});
  Perm w({2, 1, 3, 4});
  CHECK(A.act(w) == SetPartition(4, {{2, 3}, {1, 4}}));
  CHECK(join(A, SetPartition(4, {{1, 2}, {3}, {4}})) == SetPartition(4, {{1, 2, 3, 4}}));
}

TEST_CASE("lambda shape counting identities") {
  std::vector<long long> expected = {0, 1, 4, 30, 360, 6240};
  for (int n = 1; n <= 5; n++) {
    long long sq_formula = 0;
    std::map<Partition, long long> per_type;
    for (const auto& L : enumerate_lambda_shapes(n)) {
      long long c = count_std_shape(L);
      sq_formula += c * c;
      if (n <= 4) {
        long long e = (long long)enumerate_std_lambda(L).size();
        CHECK(e == c);
      }
      per_type[L.type()] += c * c;
    }
    INFO("n=", n);
    CHECK(sq_formula == expected[n]);
    long long bn = 0;
    for (const auto& alpha : all_partitions(n)) bn += faa_di_bruno(alpha);
    CHECK(sq_formula == bn * factorial(n));
    for (const auto& [alpha, s] : per_type) CHECK(s == faa_di_bruno(alpha) * factorial(n));
  }
}

TEST_CASE("specific lambda shape count") {
  // ((1),(1) || (1,1)): two equal singleton components, mu = (1,1)
  LambdaShape L;
  L.lambda.comp = {{1}, {1}};
  L.mu = {{1, 1}};
  CHECK(L.valid());
  CHECK(count_std_shape(L) == 1);
}

TEST_CASE("lambda shape order examples") {
  LambdaShape a, b;
  a.lambda.comp = {{1}, {1}};
  a.mu = {{2}};
  b.lambda.comp = {{1}, {1}};
  b.mu = {{1, 1}};
  CHECK(dominance(a, b) == Cmp::greater);
  LambdaShape c;
  c.lambda.comp = {{2}};
  c.mu = {{1}};
  CHECK(dominance(a, c) == Cmp::incomparable);  // different size compositions
}

TEST_CASE("circle action worked example") {
  MultiTableau s{{T({{1, 2}}), T({{3}, {4}}), T({{5}, {6}}), T({{7, 9}, {8}}),
                  T({{10, 11, 12}}), T({{13}, {14}, {15}})}};
  Composition sizes = s.shape().norm();
  Perm y = Perm::s(6, 1) * Perm::s(6, 2) * Perm::s(6, 1) * Perm::s(6, 4) * Perm::s(6, 5);
  MultiTableau s1 = s.act(block_perm(sizes, y).inverse());
  MultiTableau s1_expected{{T({{5, 6}}), T({{3}, {4}}), T({{1}, {2}}),
                            T({{10, 12}, {11}}), T({{13, 14, 15}}), T({{7}, {8}, {9}})}};
  CHECK(s1 == s1_expected);
  MultiTableau result = circle_action(sizes, y, s);
  MultiTableau expected{{T({{1}, {2}}), T({{3}, {4}}), T({{5, 6}}), T({{7}, {8}, {9}}),
                         T({{10, 12}, {11}}), T({{13, 14, 15}})}};
  CHECK(result == expected);
}

TEST_CASE("circle action is a left action fixing S^m on initial kind") {
  LambdaShape L;
  L.lambda.comp = {{1}, {1}, {2}};
  L.mu = {{1, 1}, {1}};
  Composition sizes = L.norm();
  auto Sk = group_Sk(L);
  CHECK(Sk.size() == 2);
  MultiTableau t0 = t_canonical(L.lambda);
  for (const auto& y1 : Sk)
    for (const auto& y2 : Sk)
      CHECK(circle_action(sizes, y1 * y2, t0) ==
            circle_action(sizes, y1, circle_action(sizes, y2, t0)));
  for (const auto& y : group_Sm(L)) CHECK(circle_action(sizes, y, t0) == t0);
}

TEST_CASE("initial decomposition") {
  MultiPartition shape{{{1}, {2}}};
  for (const auto& s : enumerate_std(shape)) {
    auto dec = initial_decompose(s);
    CHECK(dec.s0.act(dec.w) == s);
    CHECK(tableau_d(s) == dec.y * dec.w);
    CHECK(dec.y.length() + dec.w.length() == tableau_d(s).length());
    // s0 is of the initial kind: component contents match the canonical blocks
    MultiTableau tc = t_canonical(shape);
    for (int j = 1; j <= 3; j++) CHECK(dec.s0.p(j) == tc.p(j));
  }
}

TEST_CASE("standard lambda tableau example from the big shape") {
  LambdaShape L;
  L.lambda.comp = {{1, 1}, {2}, {2}, {2, 1}};
  L.mu = {{1}, {1, 1}, {1}};
  CHECK(L.valid());
  LambdaTableau good{
      MultiTableau{{T({{1}, {9}}), T({{3, 5}}), T({{6, 8}}), T({{2, 4}, {7}})}},
      {T({{1}}), T({{1}, {2}}), T({{1}})}};
  LambdaTableau bad{
      MultiTableau{{T({{1}, {9}}), T({{5, 6}}), T({{3, 8}}), T({{2, 4}, {7}})}},
      {T({{1}}), T({{1}, {2}}), T({{1}})}};
  CHECK(good.standard(L));
  CHECK(!bad.standard(L));
}
