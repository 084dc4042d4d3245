// Command line front end: multiply elements, list bases, report dimensions,
// export representation matrices and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 budget exceeded.

#include <yhe/json_io.hpp>
#include <yhe/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace yhe;

namespace {

long long default_budget() {
  if (const char* env = std::getenv("YHE_BUDGET")) return std::atoll(env);
  return 10000;
}

struct Args {
  std::string alg = "y";
  int r = 2;
  int n = 2;
  std::string alpha;
  long long budget = default_budget();
  unsigned long seed = 0;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Args& a) {
  cmd->add_option("--alg", a.alg, "algebra: y or et")->check(CLI::IsMember({"y", "et"}));
  cmd->add_option("-r", a.r, "framing order (y algebra only)");
  cmd->add_option("-n", a.n, "number of strands")->required();
  cmd->add_option("--alpha", a.alpha, "partition restricting to one type, e.g. 2,1");
  cmd->add_option("--budget", a.budget, "maximum basis size");
  cmd->add_option("--seed", a.seed, "seed for randomized checks");
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

void require_budget(long long size, long long budget) {
  if (size > budget)
    throw BudgetError("basis size " + std::to_string(size) + " exceeds budget " +
                      std::to_string(budget));
}

long long y_dim(int r, int n) { return detail::y_dim(r, n); }
long long et_dim(int n) { return detail::et_dim(n); }

int cmd_mul(const Args& a, const std::vector<std::string>& exprs) {
  if (a.alg == "y") {
    require_budget(y_dim(a.r, a.n), a.budget);
    YElement prod = YElement::one(a.r, a.n);
    for (const auto& e : exprs) prod *= parse_y_element(e, a.r, a.n);
    if (a.format == "json")
      std::cout << to_json(prod).dump() << "\n";
    else
      std::cout << prod.str() << "\n";
  } else {
    require_budget(et_dim(a.n), a.budget);
    EtElement prod = EtElement::one(a.n);
    for (const auto& e : exprs) prod *= parse_et_element(e, a.n);
    if (a.format == "json")
      std::cout << to_json(prod).dump() << "\n";
    else
      std::cout << prod.str() << "\n";
  }
  return 0;
}

int cmd_basis(const Args& a) {
  std::vector<std::string> lines;
  if (a.alg == "y") {
    require_budget(y_dim(a.r, a.n), a.budget);
    std::vector<int> tv(a.n, 0);
    while (true) {
      for (const Perm& w : all_perms(a.n)) {
        YElement b = YElement::g_of(a.r, a.n, w);
        for (int j = a.n; j >= 1; j--)
          if (tv[j - 1]) b = YElement::t_pow(a.r, a.n, j, tv[j - 1]) * b;
        lines.push_back(b.str());
      }
      int k = 0;
      while (k < a.n && ++tv[k] == a.r) tv[k++] = 0;
      if (k == a.n) break;
    }
  } else {
    require_budget(et_dim(a.n), a.budget);
    for (const SetPartition& A : all_setpartitions(a.n))
      for (const Perm& w : all_perms(a.n))
        lines.push_back((EtElement::E_of(A) * EtElement::g_of(a.n, w)).str());
  }
  if (a.format == "json") {
    std::cout << json(lines).dump() << "\n";
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
  }
  return 0;
}

int cmd_dim(const Args& a) {
  long long d;
  if (a.alg == "y") {
    d = y_dim(a.r, a.n);
  } else if (!a.alpha.empty()) {
    Partition alpha = parse_partition(a.alpha);
    if (comp_sum(alpha) != a.n) throw UsageError("alpha must be a partition of n");
    d = faa_di_bruno(alpha) * factorial(a.n);
  } else {
    d = et_dim(a.n);
  }
  if (a.format == "json")
    std::cout << json{{"dim", d}}.dump() << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_rep(const Args& a, const std::string& elem) {
  require_budget(y_dim(a.r, a.n), a.budget);
  TensorSpace ts(a.r, a.n);
  OpMatrix m = rho(ts, parse_y_element(elem, a.r, a.n));
  if (a.format == "json") {
    std::cout << to_json(ts, m).dump() << "\n";
  } else if (a.format == "csv") {
    std::cout << to_csv(m);
  } else {
    std::cout << "dim " << m.dim() << "\n";
    for (long x = 0; x < m.dim(); x++)
      for (const auto& [y, c] : m.row(x))
        std::cout << x << " " << y << " " << c.str() << "\n";
  }
  return 0;
}

int cmd_verify(const Args& a, const std::string& suite) {
  VerifyOptions opt;
  opt.r = a.r;
  opt.n = a.n;
  if (!a.alpha.empty()) opt.alpha = parse_partition(a.alpha);
  opt.budget = a.budget;
  opt.seed = a.seed;
  Report rep = run_suite(suite, opt);
  if (a.format == "json") {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    std::cout << json{{"suite", rep.suite}, {"seed", rep.seed}, {"ok", rep.ok()},
                      {"checks", checks}}
                     .dump()
              << "\n";
  } else if (a.format == "csv") {
    std::cout << "check,result,witness\n";
    for (const auto& c : rep.checks)
      std::cout << c.name << "," << (c.pass ? "PASS" : "FAIL") << "," << c.witness << "\n";
  } else {
    std::cout << report_text(rep);
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the Yokonuma-Hecke and braids-and-ties algebras"};
  app.require_subcommand(1);

  Args a;
  std::vector<std::string> exprs;
  std::string suite, elem;

  CLI::App* mul = app.add_subcommand("mul", "multiply elements and print the normal form");
  add_common(mul, a);
  mul->add_option("exprs", exprs, "element expressions")->required()->expected(-1);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, a);
  verify->add_option("suite", suite, "suite name")->required();

  CLI::App* basis = app.add_subcommand("basis", "list the normal form basis");
  add_common(basis, a);

  CLI::App* dim = app.add_subcommand("dim", "print the dimension");
  add_common(dim, a);

  CLI::App* rep = app.add_subcommand("rep", "export the tensor representation matrix");
  add_common(rep, a);
  rep->add_option("--elem", elem, "element expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mul->parsed()) return cmd_mul(a, exprs);
    if (verify->parsed()) return cmd_verify(a, suite);
    if (basis->parsed()) return cmd_basis(a);
    if (dim->parsed()) return cmd_dim(a);
    if (rep->parsed()) return cmd_rep(a, elem);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
