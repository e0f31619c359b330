// parkstat: exact and simulated statistics of coin-flip parking protocols.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "parkstat/errors.hpp"
#include "parkstat/exactprob.hpp"
#include "parkstat/formulas.hpp"
#include "parkstat/lucky.hpp"
#include "parkstat/montecarlo.hpp"
#include "parkstat/poly.hpp"
#include "parkstat/protocol.hpp"
#include "parkstat/serialize.hpp"

namespace {

using namespace parkstat;
using serialize::json;

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;

struct CommonOpts {
  std::string format = "csv";
  std::string out;
  int threads = 0;
  long long max_enum = 0;  // 0: keep env/default budgets
};

void add_common(CLI::App* sub, CommonOpts& opts, const char* default_format) {
  opts.format = default_format;
  sub->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  sub->add_option("--out", opts.out, "write output to a file instead of stdout");
  sub->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
  sub->add_option("--max-enum", opts.max_enum,
                  "override the enumeration budget (vectors)");
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + opts.out);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

void emit_json(const CommonOpts& opts, const json& j) { emit(opts, j.dump(2)); }

exactprob::EnumLimits limits_for(const CommonOpts& opts) {
  exactprob::EnumLimits limits;
  if (const char* env = std::getenv("PARKSTAT_MAX_ENUM")) {
    const long long v = std::stoll(env);
    if (v > 0) {
      limits.vector_budget = v;
      limits.vacancy_budget = v;
    }
  }
  if (opts.max_enum > 0) {
    limits.vector_budget = opts.max_enum;
    limits.vacancy_budget = opts.max_enum;
  }
  return limits;
}

// Exact-path probability parameter: "a/b" or a bare integer; decimals are
// rejected so no precision is lost silently.
BigRat parse_exact_p(const std::string& text) {
  if (text.find('.') != std::string::npos)
    throw std::invalid_argument(
        "this subcommand computes exactly; pass --p as a rational like 1/2, "
        "not a decimal");
  const BigRat p = parse_rat(text);
  if (p < 0 || p > 1) throw std::invalid_argument("--p must lie in [0, 1]");
  return p;
}

// Float-path parameter: accepts rationals and decimals.
double parse_float_p(const std::string& text) {
  double v = 0.0;
  if (text.find('/') != std::string::npos || text.find('.') == std::string::npos)
    v = rat_double(parse_rat(text));
  else
    v = std::stod(text);
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("--p must lie in [0, 1]");
  return v;
}

std::vector<int> parse_pref_list(const std::string& text) {
  std::vector<int> prefs;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) throw std::invalid_argument("empty entry in --prefs");
      prefs.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (prefs.empty()) throw std::invalid_argument("--prefs must be non-empty");
  return prefs;
}

int run_prob(const CommonOpts& opts, const std::string& prefs_str,
             const std::string& street_kind, int spots,
             const std::optional<std::string>& p_str) {
  protocol::PreferenceVector alpha;
  alpha.prefs = parse_pref_list(prefs_str);
  const int m = static_cast<int>(alpha.prefs.size());
  if (street_kind == "linear")
    alpha.street = protocol::linear_street(spots > 0 ? spots : m);
  else
    alpha.street = protocol::circular_street(spots > 0 ? spots : m + 1);
  const PolyP poly = exactprob::park_probability(alpha, limits_for(opts));

  std::optional<BigRat> value;
  if (p_str) value = poly.eval(parse_exact_p(*p_str));

  if (opts.format == "csv") {
    emit(opts, serialize::poly_csv(poly));
  } else if (opts.format == "json") {
    json j = serialize::poly_json(poly);
    j["pretty"] = poly.str();
    if (value) j["value"] = rat_string(*value);
    emit_json(opts, j);
  } else {
    std::string text = poly.str();
    if (value) text += "\nvalue at p = " + *p_str + ": " + rat_string(*value);
    emit(opts, text);
  }
  return kExitOk;
}

std::string row_string(const std::vector<BigInt>& row) {
  std::string s = "(";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ", ";
    s += row[i].get_str();
  }
  return s + ")";
}

// ---- verify handlers: each prints a report and returns an exit code. ----

int verify_theorem_1(const CommonOpts& opts, int n) {
  const PolyP mass = exactprob::total_pf_mass(n, n, limits_for(opts), opts.threads);
  const BigInt expected = int_pow(BigInt(n + 1), static_cast<unsigned long>(n - 1));
  const PolyP target{BigRat(expected)};
  const BigInt vectors = int_pow(BigInt(n), static_cast<unsigned long>(n));
  if (mass == target) {
    std::cout << "theorem 1: n=" << n << ": total parking mass over " << vectors
              << " preference vectors is the constant " << expected
              << " = (n+1)^(n-1), independent of p. PASS\n";
    return kExitOk;
  }
  std::cout << "theorem 1: n=" << n << ": FAIL\n  computed: " << mass.str()
            << "\n  expected: " << target.str() << "\n";
  return kExitIdentity;
}

int verify_theorem_2(const CommonOpts& opts, int n, int m) {
  const PolyP mass = exactprob::total_pf_mass(n, m, limits_for(opts), opts.threads);
  const BigInt expected =
      BigInt(n + 1 - m) * int_pow(BigInt(n + 1), static_cast<unsigned long>(m - 1));
  const PolyP target{BigRat(expected)};
  const BigInt vectors = int_pow(BigInt(n), static_cast<unsigned long>(m));
  if (mass == target) {
    std::cout << "theorem 2: n=" << n << " m=" << m << ": total mass over "
              << vectors << " vectors is the constant " << expected
              << " = (n+1-m)(n+1)^(m-1). PASS\n";
    return kExitOk;
  }
  std::cout << "theorem 2: n=" << n << " m=" << m << ": FAIL\n  computed: "
            << mass.str() << "\n  expected: " << target.str() << "\n";
  return kExitIdentity;
}

int verify_theorem_3(const CommonOpts& opts, int n, const BigRat& p) {
  const formulas::RationalDist closed = formulas::last_pref_distribution(n, p);
  const exactprob::ConditionalLaw law =
      exactprob::last_pref_distribution_bruteforce(n, limits_for(opts), opts.threads);
  for (int j = 1; j <= n; ++j) {
    const BigRat num = law.numerator.at(j).eval(p);
    const BigRat den = law.denominator.eval(p);
    const BigRat brute = num / den;
    if (brute != closed.mass(j)) {
      std::cout << "theorem 3: n=" << n << " p=" << rat_string(p) << " j=" << j
                << ": FAIL\n  closed form: " << rat_string(closed.mass(j))
                << "\n  enumeration: " << rat_string(brute) << "\n";
      return kExitIdentity;
    }
  }
  std::cout << "theorem 3: n=" << n << " p=" << rat_string(p)
            << ": closed-form conditional law matches exhaustive enumeration "
               "at every j. PASS\n";
  return kExitOk;
}

int verify_theorem_5(int n) {
  const formulas::RationalDist q = formulas::last_pref_distribution_half(n);
  const formulas::RationalDist u = formulas::uniform_dist(n);
  const BigRat tv = formulas::tv_distance(q, u);
  const BigRat upper = make_rat(1, n + 1);
  const BigRat lower =
      make_rat(int_pow(BigInt(n), static_cast<unsigned long>(n - 2)),
               4 * int_pow(BigInt(n + 1), static_cast<unsigned long>(n - 1))) -
      make_rat(1, BigInt(n) * (n + 1));
  if (tv <= upper && tv >= lower) {
    std::cout << "theorem 5: n=" << n << ": tv(Q_{n,1/2}, uniform) = "
              << rat_string(tv) << " lies in [" << rat_string(lower) << ", "
              << rat_string(upper) << "]. PASS\n";
    return kExitOk;
  }
  std::cout << "theorem 5: n=" << n << ": FAIL\n  tv: " << rat_string(tv)
            << "\n  bounds: [" << rat_string(lower) << ", " << rat_string(upper)
            << "]\n";
  return kExitIdentity;
}

int verify_theorem_6(int n, const BigRat& p) {
  const formulas::TvBounds b = formulas::tv_bounds_check(n, p);
  if (b.sandwich_ok && b.mirror_ok) {
    std::cout << "theorem 6: n=" << n << " p=" << rat_string(p)
              << ": |2p-1| tv(Q_1) <= tv(Q_p) <= tv(Q_1) and tv(Q_1) = tv(Q_0); "
              << "tv(Q_p) = " << rat_string(b.tv) << ". PASS\n";
    return kExitOk;
  }
  std::cout << "theorem 6: n=" << n << " p=" << rat_string(p)
            << ": FAIL\n  tv(Q_p): " << rat_string(b.tv) << "\n  bounds: ["
            << rat_string(b.lower) << ", " << rat_string(b.upper) << "]\n";
  return kExitIdentity;
}

int verify_theorem_7(int n) {
  const std::vector<BigInt> row = lucky::unlucky_row_circular(n);
  // Row sums count all pinned-first vectors: (n+1)^(n-1).
  BigInt sum = 0;
  for (const BigInt& v : row) sum += v;
  const BigInt expected = int_pow(BigInt(n + 1), static_cast<unsigned long>(n - 1));
  if (sum != expected) {
    std::cout << "theorem 7: n=" << n << ": FAIL\n  row sum: " << sum
              << "\n  expected: " << expected << "\n";
    return kExitIdentity;
  }
  if (n <= 5) {
    const auto oracle = lucky::unlucky_distribution_bruteforce(n, n, true);
    for (int k = 0; k < n; ++k) {
      const PolyP& poly = oracle.at(k);
      if (!poly.is_constant() || poly.constant_value() != BigRat(row[static_cast<std::size_t>(k)])) {
        std::cout << "theorem 7: n=" << n << " k=" << k
                  << ": FAIL\n  formula: " << row[static_cast<std::size_t>(k)].get_str()
                  << "\n  oracle:  " << poly.str() << "\n";
        return kExitIdentity;
      }
    }
    std::cout << "theorem 7: n=" << n << ": row " << row_string(row)
              << " matches the all-branch oracle and sums to " << expected
              << ". PASS\n";
  } else {
    std::cout << "theorem 7: n=" << n << ": row " << row_string(row)
              << " sums to " << expected << " = (n+1)^(n-1). PASS\n";
  }
  return kExitOk;
}

int verify_theorem_8(int n) {
  const PolyQ qpoly = lucky::q_generating_polynomial(n);
  const std::vector<BigInt> row = lucky::unlucky_row_circular(n);
  if (qpoly.coeffs() == row) {
    std::cout << "theorem 8: n=" << n << ": prod_{k=2..n} [(n+1-k)q + k] has "
              << "coefficient row " << row_string(row) << ". PASS\n";
    return kExitOk;
  }
  std::cout << "theorem 8: n=" << n << ": FAIL\n  product coefficients: "
            << row_string(qpoly.coeffs()) << "\n  expected row: "
            << row_string(row) << "\n";
  return kExitIdentity;
}

int verify_abel(int n) {
  using formulas::AbelParams;
  using formulas::abel_sum;
  const BigRat one(1);
  const auto choose = [n](int s) {
    return BigRat(
        binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(s)));
  };
  // The four special instances of the generalized binomial sum at x = y = 1.
  BigRat rhs3(0), rhs4(0);
  for (int s = 0; s <= n; ++s) {
    const BigRat common = choose(s) *
                          int_pow(static_cast<unsigned long>(n + 2),
                                  static_cast<unsigned long>(s)) *
                          factorial(static_cast<unsigned long>(n - s));
    rhs3 += common * BigRat(n - s + 1);
    rhs4 += common;
  }
  struct Eq {
    const char* name;
    BigRat lhs;
    BigRat rhs;
  };
  const Eq eqs[] = {
      {"(1) A_n(1,1;-1,-1) = 2(n+2)^(n-1)",
       abel_sum(n, AbelParams{one, one, -1, -1}),
       BigRat(2 * int_pow(BigInt(n + 2), static_cast<unsigned long>(n - 1)))},
      {"(2) A_n(1,1;-1,0) = (n+2)^n", abel_sum(n, AbelParams{one, one, -1, 0}),
       BigRat(int_pow(BigInt(n + 2), static_cast<unsigned long>(n)))},
      {"(3) A_n(1,1;-1,1) = sum C(n,s)(n+2)^s (n-s+1)(n-s)!",
       abel_sum(n, AbelParams{one, one, -1, 1}), rhs3},
      {"(4) A_n(1,1;0,0) = sum C(n,s)(n+2)^s (n-s)!",
       abel_sum(n, AbelParams{one, one, 0, 0}), rhs4},
  };
  bool ok = true;
  for (const Eq& eq : eqs) {
    if (eq.lhs != eq.rhs) {
      std::cout << "abel " << eq.name << ": FAIL\n  lhs: " << rat_string(eq.lhs)
                << "\n  rhs: " << rat_string(eq.rhs) << "\n";
      ok = false;
    }
  }
  if (!ok) return kExitIdentity;
  std::cout << "abel: n=" << n
            << ": special instances (1)-(4) at x=y=1 hold exactly. PASS\n";
  return kExitOk;
}

int verify_pascal(int n) {
  const lucky::TriangleTable t = lucky::weighted_pascal(n);
  // Row i sums to (n+1)^(i-1) for i >= 1; row n equals the circular row.
  for (int i = 1; i <= n; ++i) {
    BigInt sum = 0;
    for (const BigInt& v : t.rows[static_cast<std::size_t>(i)]) sum += v;
    const BigInt expected =
        int_pow(BigInt(n + 1), static_cast<unsigned long>(i - 1));
    if (sum != expected) {
      std::cout << "pascal: n=" << n << " row " << i << ": FAIL\n  row sum: "
                << sum << "\n  expected: " << expected << "\n";
      return kExitIdentity;
    }
  }
  std::vector<BigInt> last = t.rows[static_cast<std::size_t>(n)];
  while (!last.empty() && last.back() == 0) last.pop_back();
  std::vector<BigInt> row = lucky::unlucky_row_circular(n);
  while (!row.empty() && row.back() == 0) row.pop_back();
  if (last != row) {
    std::cout << "pascal: n=" << n << ": FAIL\n  triangle row n: "
              << row_string(last) << "\n  circular row:  " << row_string(row)
              << "\n";
    return kExitIdentity;
  }
  std::cout << "pascal: n=" << n << ": rows sum to (n+1)^(i-1) and row n "
            << row_string(row) << " matches the circular counts. PASS\n";
  return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& theorem, int n, int m,
               const std::string& p_str) {
  const BigRat p = parse_exact_p(p_str);
  if (theorem == "1") return verify_theorem_1(opts, n);
  if (theorem == "2") {
    if (m <= 0) throw std::invalid_argument("--theorem 2 needs --m");
    return verify_theorem_2(opts, n, m);
  }
  if (theorem == "3") return verify_theorem_3(opts, n, p);
  if (theorem == "5") return verify_theorem_5(n);
  if (theorem == "6") return verify_theorem_6(n, p);
  if (theorem == "7") return verify_theorem_7(n);
  if (theorem == "8") return verify_theorem_8(n);
  if (theorem == "abel") return verify_abel(n);
  if (theorem == "pascal") return verify_pascal(n);
  throw std::invalid_argument("unknown --theorem: " + theorem);
}

int run_dist(const CommonOpts& opts, int n, const std::string& p_str) {
  const formulas::RationalDist dist =
      formulas::last_pref_distribution(n, parse_exact_p(p_str));
  if (opts.format == "csv") {
    emit(opts, serialize::dist_csv(dist));
  } else if (opts.format == "json") {
    emit_json(opts, serialize::dist_json(dist));
  } else {
    std::string text;
    for (int j = 1; j <= n; ++j)
      text += "P(last pref = " + std::to_string(j) +
              " | all park) = " + rat_string(dist.mass(j)) + " = " +
              serialize::double_repr(rat_double(dist.mass(j))) + "\n";
    emit(opts, text);
  }
  return kExitOk;
}

int run_mean(const CommonOpts& opts, int n, const std::string& p_str,
             bool exact, bool asymptotic) {
  if (exact && asymptotic)
    throw std::invalid_argument("choose one of --exact / --asymptotic");
  if (asymptotic) {
    const double mean = formulas::last_pref_mean_asymptotic(n, parse_float_p(p_str));
    if (opts.format == "json")
      emit_json(opts, json{{"n", n}, {"p", p_str}, {"mean_asymptotic", mean}});
    else
      emit(opts, serialize::double_repr(mean));
    return kExitOk;
  }
  const BigRat mean = formulas::last_pref_mean_exact(n, parse_exact_p(p_str));
  if (opts.format == "json")
    emit_json(opts, json{{"n", n},
                         {"p", rat_string(parse_exact_p(p_str))},
                         {"mean", rat_string(mean)},
                         {"mean_float", rat_double(mean)}});
  else
    emit(opts, rat_string(mean));
  return kExitOk;
}

int run_tv(const CommonOpts& opts, int n, const std::string& p_str) {
  const formulas::TvBounds b = formulas::tv_bounds_check(n, parse_exact_p(p_str));
  if (opts.format == "json") {
    emit_json(opts, serialize::tv_json(b));
  } else if (opts.format == "csv") {
    emit(opts, serialize::tv_csv(b));
  } else {
    std::string text = "tv(Q_p, uniform) = " + rat_string(b.tv) + " = " +
                       serialize::double_repr(rat_double(b.tv)) + "\n";
    text += "bounds: [" + rat_string(b.lower) + ", " + rat_string(b.upper) + "]\n";
    text += std::string("sandwich: ") + (b.sandwich_ok ? "holds" : "VIOLATED") +
            ", mirror tv(Q_1)=tv(Q_0): " + (b.mirror_ok ? "holds" : "VIOLATED");
    emit(opts, text);
  }
  return (b.sandwich_ok && b.mirror_ok) ? kExitOk : kExitIdentity;
}

int run_lucky(const CommonOpts& opts, const std::string& kind, int n) {
  if (kind == "qpoly" || kind == "classical") {
    const PolyQ poly = kind == "qpoly" ? lucky::q_generating_polynomial(n)
                                       : lucky::classical_lucky_generating(n);
    if (opts.format == "csv")
      emit(opts, serialize::polyq_csv(poly));
    else if (opts.format == "json")
      emit_json(opts, serialize::polyq_json(poly));
    else
      emit(opts, poly.str("q"));
    return kExitOk;
  }
  const std::vector<BigInt> row = kind == "circular"
                                      ? lucky::unlucky_row_circular(n)
                                      : lucky::unlucky_row_linear(n);
  if (opts.format == "json") {
    json values = json::array();
    for (const BigInt& v : row) values.push_back(v.get_str());
    emit_json(opts, json{{"n", n}, {"kind", kind}, {"row", values}});
  } else if (opts.format == "csv") {
    std::string text = "k,value\n";
    for (std::size_t k = 0; k < row.size(); ++k)
      text += std::to_string(k) + "," + row[k].get_str() + "\n";
    emit(opts, text);
  } else {
    emit(opts, row_string(row));
  }
  return kExitOk;
}

int run_triangle(const CommonOpts& opts, const std::string& kind, int rows,
                 int n) {
  lucky::TriangleTable t;
  if (kind == "a220884") {
    t = lucky::a220884_rows(rows);
  } else {
    if (n <= 0) throw std::invalid_argument("--kind pascal needs --n");
    t = lucky::weighted_pascal(n);
  }
  if (opts.format == "json") {
    emit_json(opts, serialize::triangle_json(t));
  } else if (opts.format == "csv") {
    emit(opts, serialize::triangle_csv(t));
  } else {
    std::string text;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      text += std::to_string(i) + ":";
      for (const BigInt& v : t.rows[i]) text += " " + v.get_str();
      text += "\n";
    }
    emit(opts, text);
  }
  return kExitOk;
}

montecarlo::SimConfig sim_config(int n, int m, const std::string& p_str,
                                 std::uint64_t samples, std::uint64_t seed,
                                 int threads) {
  montecarlo::SimConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.p = parse_float_p(p_str);
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

int run_simulate(const CommonOpts& opts, const montecarlo::SimConfig& cfg,
                 bool hist) {
  const montecarlo::SimReport report = montecarlo::run_simulation(cfg);
  if (opts.format == "json") {
    json j = serialize::report_json(report);
    j["n"] = cfg.n;
    j["m"] = cfg.m == 0 ? cfg.n : cfg.m;
    j["p"] = cfg.p;
    j["seed"] = cfg.seed;
    emit_json(opts, j);
  } else if (opts.format == "csv") {
    emit(opts, hist ? serialize::histogram_csv(report)
                    : serialize::report_csv(report));
  } else {
    std::string text = "trials: " + std::to_string(report.trials) + "\n";
    text += "successes: " + std::to_string(report.successes) + "\n";
    text += "success rate: " + serialize::double_repr(report.success_rate) +
            " (stderr " + serialize::double_repr(report.success_rate_stderr) +
            ")\n";
    text += "conditional mean of last preference: " +
            serialize::double_repr(report.conditional_mean) + " (stderr " +
            serialize::double_repr(report.conditional_mean_stderr) + ")";
    emit(opts, text);
  }
  return kExitOk;
}

int run_sweep(const CommonOpts& opts, const montecarlo::SimConfig& cfg,
              const std::string& grid_str) {
  std::vector<double> grid;
  std::string cur;
  for (char c : grid_str + ",") {
    if (c == ',') {
      if (!cur.empty()) grid.push_back(parse_float_p(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (grid.empty()) throw std::invalid_argument("--p-grid must be non-empty");
  const auto rows = montecarlo::sweep_p(cfg, grid);
  if (opts.format == "json") {
    json points = json::array();
    for (const auto& [p, report] : rows) {
      json j = serialize::report_json(report);
      j["p"] = p;
      points.push_back(std::move(j));
    }
    emit_json(opts, json{{"n", cfg.n}, {"points", points}});
  } else {
    emit(opts, serialize::sweep_csv(rows));
  }
  return kExitOk;
}

int run_vacancy(const CommonOpts& opts, int n) {
  const exactprob::VacancyTable table =
      exactprob::vacancy_table(n, limits_for(opts), opts.threads);
  if (opts.format == "json") {
    emit_json(opts, serialize::vacancy_json(table));
  } else if (opts.format == "csv") {
    emit(opts, serialize::vacancy_csv(table));
  } else {
    std::string text;
    for (int a = 1; a <= n + 1; ++a) {
      text += "a=" + std::to_string(a) + ":";
      for (int i = 1; i <= n + 1; ++i)
        text += "  [" +
                table.entries[static_cast<std::size_t>(a)]
                             [static_cast<std::size_t>(i)]
                                 .str() +
                "]";
      text += "\n";
    }
    emit(opts, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact and simulated statistics of the coin-flip parking protocol"};
  app.require_subcommand(1);

  // prob
  auto* prob = app.add_subcommand(
      "prob", "exact parking probability of one preference vector");
  CommonOpts prob_opts;
  std::string prob_prefs, prob_street = "linear";
  int prob_spots = 0;
  std::string prob_p;
  prob->add_option("--prefs", prob_prefs, "comma-separated preferences")
      ->required();
  prob->add_option("--street", prob_street, "street kind")
      ->check(CLI::IsMember({"linear", "circular"}));
  prob->add_option("--spots", prob_spots, "spot count (default: car count)");
  prob->add_option("--p", prob_p, "evaluate at this exact rational");
  add_common(prob, prob_opts, "pretty");

  // verify
  auto* verify = app.add_subcommand("verify", "check a named exact identity");
  CommonOpts verify_opts;
  std::string verify_theorem, verify_p = "1/2";
  int verify_n = 0, verify_m = 0;
  verify->add_option("--theorem", verify_theorem, "1|2|3|5|6|7|8|abel|pascal")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "5", "6", "7", "8", "abel", "pascal"}));
  verify->add_option("--n", verify_n, "street size")->required();
  verify->add_option("--m", verify_m, "car count (theorem 2)");
  verify->add_option("--p", verify_p, "heads probability, exact rational");
  add_common(verify, verify_opts, "pretty");

  // dist
  auto* dist = app.add_subcommand(
      "dist", "exact conditional law of the last car's preference");
  CommonOpts dist_opts;
  int dist_n = 0;
  std::string dist_p = "1/2";
  dist->add_option("--n", dist_n, "cars = spots")->required();
  dist->add_option("--p", dist_p, "heads probability, exact rational");
  add_common(dist, dist_opts, "csv");

  // mean
  auto* mean = app.add_subcommand(
      "mean", "mean of the conditional last-preference law");
  CommonOpts mean_opts;
  int mean_n = 0;
  std::string mean_p = "1/2";
  bool mean_exact = false, mean_asym = false;
  mean->add_option("--n", mean_n, "cars = spots")->required();
  mean->add_option("--p", mean_p, "heads probability");
  mean->add_flag("--exact", mean_exact, "exact rational mean (default)");
  mean->add_flag("--asymptotic", mean_asym,
                 "(n+1)/2 - (2p-1)(sqrt(2 pi)/4 sqrt(n) - 7/6)");
  add_common(mean, mean_opts, "pretty");

  // tv
  auto* tv = app.add_subcommand(
      "tv", "total variation distance to uniform, with exact bounds");
  CommonOpts tv_opts;
  int tv_n = 0;
  std::string tv_p = "1/2";
  tv->add_option("--n", tv_n, "cars = spots")->required();
  tv->add_option("--p", tv_p, "heads probability, exact rational");
  add_common(tv, tv_opts, "csv");

  // lucky
  auto* lucky_cmd = app.add_subcommand(
      "lucky", "expected unlucky-car counts and generating polynomials");
  CommonOpts lucky_opts;
  std::string lucky_kind = "circular";
  int lucky_n = 0;
  lucky_cmd->add_option("--kind", lucky_kind, "circular|linear|qpoly|classical")
      ->check(CLI::IsMember({"circular", "linear", "qpoly", "classical"}));
  lucky_cmd->add_option("--n", lucky_n, "cars")->required();
  add_common(lucky_cmd, lucky_opts, "csv");

  // triangle
  auto* triangle = app.add_subcommand(
      "triangle", "unlucky-count triangles (coefficient rows)");
  CommonOpts triangle_opts;
  std::string triangle_kind = "a220884";
  int triangle_rows = 5, triangle_n = 0;
  triangle->add_option("--kind", triangle_kind, "a220884|pascal")
      ->check(CLI::IsMember({"a220884", "pascal"}));
  triangle->add_option("--rows", triangle_rows, "row count for a220884");
  triangle->add_option("--n", triangle_n, "triangle size for pascal");
  add_common(triangle, triangle_opts, "csv");

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo runs of the protocol on a linear street");
  CommonOpts sim_opts;
  int sim_n = 0, sim_m = 0;
  std::string sim_p = "0.5";
  std::uint64_t sim_samples = 100000, sim_seed = 0;
  bool sim_hist = false;
  simulate->add_option("--n", sim_n, "spots")->required();
  simulate->add_option("--m", sim_m, "cars (default n)");
  simulate->add_option("--p", sim_p, "heads probability (decimal or rational)");
  simulate->add_option("--samples", sim_samples, "trial count");
  simulate->add_option("--seed", sim_seed, "stream seed");
  simulate->add_flag("--hist", sim_hist,
                     "emit the conditional histogram CSV instead of the report");
  add_common(simulate, sim_opts, "csv");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "one simulation per p over a grid");
  CommonOpts sweep_opts;
  int sweep_n = 0, sweep_m = 0;
  std::uint64_t sweep_samples = 100000, sweep_seed = 0;
  std::string sweep_grid = "0,0.25,0.5,0.75,1";
  sweep->add_option("--n", sweep_n, "spots")->required();
  sweep->add_option("--m", sweep_m, "cars (default n)");
  sweep->add_option("--samples", sweep_samples, "trials per grid point");
  sweep->add_option("--seed", sweep_seed, "base seed");
  sweep->add_option("--p-grid", sweep_grid, "comma-separated p values");
  add_common(sweep, sweep_opts, "csv");

  // vacancy
  auto* vacancy = app.add_subcommand(
      "vacancy", "exact vacancy-position weights on the circle");
  CommonOpts vacancy_opts;
  int vacancy_n = 0;
  vacancy->add_option("--n", vacancy_n, "cars (circle has n+1 spots)")
      ->required();
  add_common(vacancy, vacancy_opts, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (prob->parsed())
      return run_prob(prob_opts, prob_prefs, prob_street, prob_spots,
                      prob->count("--p") ? std::optional<std::string>(prob_p)
                                         : std::nullopt);
    if (verify->parsed())
      return run_verify(verify_opts, verify_theorem, verify_n, verify_m,
                        verify_p);
    if (dist->parsed()) return run_dist(dist_opts, dist_n, dist_p);
    if (mean->parsed())
      return run_mean(mean_opts, mean_n, mean_p, mean_exact, mean_asym);
    if (tv->parsed()) return run_tv(tv_opts, tv_n, tv_p);
    if (lucky_cmd->parsed()) return run_lucky(lucky_opts, lucky_kind, lucky_n);
    if (triangle->parsed())
      return run_triangle(triangle_opts, triangle_kind, triangle_rows,
                          triangle_n);
    if (simulate->parsed())
      return run_simulate(
          sim_opts,
          sim_config(sim_n, sim_m, sim_p, sim_samples, sim_seed,
                     sim_opts.threads),
          sim_hist);
    if (sweep->parsed())
      return run_sweep(sweep_opts,
                       sim_config(sweep_n, sweep_m, "0.5", sweep_samples,
                                  sweep_seed, sweep_opts.threads),
                       sweep_grid);
    if (vacancy->parsed()) return run_vacancy(vacancy_opts, vacancy_n);
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIdentity;
  }
  return kExitUsage;
}
