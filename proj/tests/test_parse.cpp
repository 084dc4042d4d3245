#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <yhe/json_io.hpp>

#include <random>

using namespace yhe;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

Scalar random_scalar(int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 3), num(-5, 5), den(1, 4);
  Scalar s = Scalar::zero(r);
  int terms = 1 + coin(rng) % 3;
  for (int i = 0; i < terms; i++) {
    Scalar m = Scalar::from_rat(r, Rat(num(rng), den(rng)));
    m *= Scalar::q_pow(r, num(rng));
    if (r > 1 && coin(rng) == 0) m *= Scalar::zeta_pow(r, den(rng));
    s += m;
  }
  return s;
}

YElement random_y(int r, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> tp(0, r - 1), cnt(1, 3);
  YElement a = YElement::zero(r, n);
  int terms = cnt(rng);
  for (int i = 0; i < terms; i++) {
    YElement b = YElement::g_of(r, n, random_perm(n, rng));
    for (int j = n; j >= 1; j--) b = YElement::t_pow(r, n, j, tp(rng)) * b;
    a += b.scaled(random_scalar(r, rng));
  }
  return a;
}

EtElement random_et(int n, std::mt19937& rng) {
  auto parts = all_setpartitions(n);
  std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
  std::uniform_int_distribution<int> cnt(1, 3);
  EtElement a = EtElement::zero(n);
  int terms = cnt(rng);
  for (int i = 0; i < terms; i++)
    a += (EtElement::E_of(parts[pick(rng)]) * EtElement::g_of(n, random_perm(n, rng)))
             .scaled(random_scalar(1, rng));
  return a;
}

}  // namespace

TEST_CASE("scalar strings round-trip through the grammar") {
  for (int r : {1, 2, 3, 5}) {
    CAPTURE(r);
    CHECK(parse_scalar("0", r) == Scalar::zero(r));
    CHECK(parse_scalar("1", r) == Scalar::one(r));
    CHECK(parse_scalar("-3/2*q^-4", r) ==
          Scalar::from_rat(r, Rat(-3, 2)) * Scalar::q_pow(r, -4));
    CHECK(parse_scalar("q - q^-1", r) == Scalar::q_minus_qinv(r));
    CHECK(parse_scalar("(q + 1)*(q - 1)", r) ==
          Scalar::q_pow(r, 2) - Scalar::one(r));
    std::mt19937 rng(7 * r);
    for (int i = 0; i < 50; i++) {
      Scalar s = random_scalar(r, rng);
      CHECK(parse_scalar(s.str(), r) == s);
    }
  }
}

TEST_CASE("combinatorial objects round-trip") {
  CHECK(parse_perm("[3,1,2]") == Perm({3, 1, 2}));
  CHECK(parse_perm("[1]") == Perm::identity(1));
  CHECK(parse_partition("3,2,1") == Partition({3, 2, 1}));
  CHECK(parse_multipartition("(3,1|2|)").comp ==
        std::vector<Partition>({{3, 1}, {2}, {}}));
  CHECK(parse_setpartition("{1,3|2,4}", 4) == SetPartition(4, {{1, 3}, {2, 4}}));
  std::mt19937 rng(11);
  for (int n = 1; n <= 5; n++) {
    for (int i = 0; i < 20; i++) {
      Perm w = random_perm(n, rng);
      CHECK(parse_perm(w.str()) == w);
    }
    for (const SetPartition& A : all_setpartitions(n))
      CHECK(parse_setpartition(A.str(), n) == A);
  }
}

TEST_CASE("algebra elements round-trip through print and parse") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {2, 3}}) {
    CAPTURE(r);
    CAPTURE(n);
    CHECK(parse_y_element("0", r, n) == YElement::zero(r, n));
    CHECK(YElement::zero(r, n).str() == "0");
    CHECK(parse_y_element("g1*g1", r, n) ==
          YElement::g_gen(r, n, 1) * YElement::g_gen(r, n, 1));
    CHECK(parse_y_element("e1", r, n) == YElement::e_gen(r, n, 1));
    std::mt19937 rng(100 * r + n);
    for (int i = 0; i < 40; i++) {
      YElement a = random_y(r, n, rng);
      CHECK(parse_y_element(a.str(), r, n) == a);
    }
  }
  for (int n = 2; n <= 4; n++) {
    CAPTURE(n);
    CHECK(parse_et_element("e1*e1", n) ==
          EtElement::E_of(SetPartition(n, {{1, 2}})));
    std::string swap12 = "g[2,1";
    for (int j = 3; j <= n; j++) swap12 += "," + std::to_string(j);
    CHECK(parse_et_element("E{1,2}*" + swap12 + "]", n) ==
          EtElement::E_of(SetPartition(n, {{1, 2}})) * EtElement::g_gen(n, 1));
    std::mt19937 rng(n);
    for (int i = 0; i < 40; i++) {
      EtElement a = random_et(n, rng);
      CHECK(parse_et_element(a.str(), n) == a);
    }
  }
}

TEST_CASE("documented sample expressions parse") {
  YElement a = parse_y_element("t1^2*g[2,1,3] + (q - q^-1)*g1*g2", 3, 3);
  CHECK(a == YElement::t_pow(3, 3, 1, 2) * YElement::g_gen(3, 3, 1) +
                 (YElement::g_gen(3, 3, 1) * YElement::g_gen(3, 3, 2))
                     .scaled(Scalar::q_minus_qinv(3)));
  EtElement b = parse_et_element("E{1,3|2}*g[2,1,3] + q^2*e1", 3);
  CHECK(b == EtElement::E_of(SetPartition(3, {{1, 3}, {2}})) *
                     EtElement::g_of(3, Perm({2, 1, 3})) +
                 EtElement::e_gen(3, 1).scaled(Scalar::q_pow(1, 2)));
  // multiplying g1 by itself lands in expanded normal form
  CHECK(parse_y_element("g1", 2, 2) * parse_y_element("g1", 2, 2) ==
        parse_y_element("1 + (q - q^-1)*e1*g1", 2, 2));
}

TEST_CASE("parse errors carry the offending position") {
  auto pos_of = [](auto&& f) -> long {
    try {
      f();
    } catch (const ParseError& e) {
      return (long)e.pos;
    }
    return -1;
  };
  CHECK(pos_of([] { parse_y_element("g1 + ", 2, 2); }) == 5);
  CHECK(pos_of([] { parse_y_element("t1^", 2, 2); }) == 3);
  CHECK(pos_of([] { parse_y_element("g9", 2, 2); }) >= 0);
  CHECK(pos_of([] { parse_et_element("E{1,2", 2); }) == 5);
  CHECK(pos_of([] { parse_et_element("g1 g2", 3); }) == 3);
  CHECK(pos_of([] { parse_perm("[1,2"); }) == 4);
  CHECK(pos_of([] { parse_scalar("q^", 2); }) == 2);
  CHECK(pos_of([] { parse_scalar("*q", 2); }) == 0);
}

TEST_CASE("JSON export round-trips elements and matrices") {
  std::mt19937 rng(42);
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (int i = 0; i < 10; i++) {
      YElement a = random_y(r, n, rng);
      CHECK(y_from_json(to_json(a)) == a);
    }
  }
  for (int n = 2; n <= 4; n++)
    for (int i = 0; i < 10; i++) {
      EtElement a = random_et(n, rng);
      CHECK(et_from_json(to_json(a)) == a);
    }
  TensorSpace ts(2, 2);
  OpMatrix G = op_G(ts, 1);
  json j = to_json(ts, G);
  CHECK(j["dim"] == 16);
  CHECK(matrix_from_json(j) == G);
  // identical exports are byte-identical
  CHECK(j.dump() == to_json(ts, G).dump());
  std::string csv = to_csv(G);
  CHECK(csv.substr(0, 14) == "row,col,value\n");
  CHECK(csv == to_csv(G));
}
