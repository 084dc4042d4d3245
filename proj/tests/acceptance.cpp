// End-to-end acceptance gate.  Each numbered criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failing criteria.

#include <yhe/verify.hpp>

#include <chrono>
#include <iostream>

using namespace yhe;

namespace {

int failures = 0;

void criterion(int num, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what << "\n";
  if (!ok) failures++;
}

bool suite_ok(const std::string& suite, int r, int n) {
  VerifyOptions opt;
  opt.r = r;
  opt.n = n;
  Report rep = run_suite(suite, opt);
  if (!rep.ok()) {
    for (const auto& c : rep.checks)
      if (!c.pass)
        std::cerr << "  " << suite << ": " << c.name << " [" << c.witness << "]\n";
  }
  return rep.ok();
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto since = [&](clock::time_point from) {
    return std::chrono::duration<double>(clock::now() - from).count();
  };

  {
    auto t = clock::now();
    bool ok = true;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}})
      ok = suite_ok("relations-y", r, n) && ok;
    for (int n = 2; n <= 5; n++) ok = suite_ok("relations-et", 1, n) && ok;
    ok = ok && since(t) < 30;
    criterion(1, "defining relations of both algebras in normal form", ok);
  }
  {
    auto t = clock::now();
    bool ok = true;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {2, 3}})
      ok = suite_ok("faithful", r, n) && ok;
    ok = ok && since(t) < 120;
    criterion(2, "tensor representation has image rank r^n n!", ok);
  }
  {
    auto t = clock::now();
    bool ok = true;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
      ok = suite_ok("shoji", r, n) && ok;
      ok = suite_ok("mak", r, n) && ok;
    }
    ok = ok && since(t) < 60;
    criterion(3, "interpolation identity and cyclotomic operator relations", ok);
  }
  {
    auto t = clock::now();
    bool ok = true;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
      ok = suite_ok("cellular-y", r, n) && ok;
    ok = ok && since(t) < 120;
    criterion(4, "cellular basis count, invertibility and spectral identities", ok);
  }
  {
    bool ok = true;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}})
      ok = suite_ok("lusztig", r, n) && ok;
    criterion(5, "idempotent presentation relations", ok);
  }
  {
    auto t = clock::now();
    bool ok = true;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}})
      ok = suite_ok("jm", r, n) && ok;
    ok = ok && since(t) < 180;
    criterion(6, "Jucys-Murphy triangularity with prescribed contents", ok);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 4; n++) {
      ok = suite_ok("mobius", 1, n) && ok;
      ok = suite_ok("decompose", 1, n) && ok;
    }
    criterion(7, "inclusion-exclusion idempotents and type decomposition", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 5; n++) ok = suite_ok("counting", 1, n) && ok;
    criterion(8, "counting identities by two independent paths", ok);
  }
  {
    auto t = clock::now();
    bool ok = true;
    for (int n = 2; n <= 4; n++) ok = suite_ok("cellular-et", 1, n) && ok;
    ok = ok && since(t) < 300;
    criterion(9, "ties algebra cellular basis and multiplicative law", ok);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 3; n++) ok = suite_ok("psi", 1, n) && ok;
    criterion(10, "matrix algebra isomorphism per type", ok);
  }
  {
    bool ok = true;
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}})
      ok = suite_ok("phi-embed", r, n) && ok;
    criterion(11, "embedding into the framed algebra is injective", ok);
  }
  {
    auto t = clock::now();
    bool ok = true;
    VerifyOptions opt;
    for (int r = 1; r <= 3; r++)
      for (int n = 1; n <= 4; n++) ok = structure_dimension_identity(r, n) && ok;
    ok = ok && since(t) < 1;
    criterion(12, "matrix decomposition dimension identity", ok);
  }

  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures))
            << " (" << since(t0) << "s total)\n";
  return failures;
}
