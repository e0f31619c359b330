#include "parkstat/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace parkstat::serialize {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Non-empty data lines after the header row.
std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  std::vector<std::string> out;
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (!lines[i].empty()) out.push_back(lines[i]);
  return out;
}

long long to_ll(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer field: " + s);
  return v;
}

double to_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    if (s == "nan" || s == "-nan")
      return std::numeric_limits<double>::quiet_NaN();
    throw std::invalid_argument("bad float field: " + s);
  }
  return v;
}

template <typename Coeff>
std::string poly_csv_impl(const Polynomial<Coeff>& poly) {
  std::string out = "degree,numerator,denominator\n";
  const auto& coeffs = poly.coeffs();
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const BigRat c(coeffs[d]);
    out += std::to_string(d) + "," + c.get_num().get_str() + "," +
           c.get_den().get_str() + "\n";
  }
  return out;
}

std::vector<BigRat> poly_rows_from_csv(const std::string& text) {
  std::vector<BigRat> coeffs;
  for (const std::string& line : data_lines(text)) {
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 3) throw std::invalid_argument("bad poly row: " + line);
    const std::size_t d = static_cast<std::size_t>(to_ll(f[0]));
    if (coeffs.size() <= d) coeffs.resize(d + 1, BigRat(0));
    coeffs[d] = make_rat(BigInt(f[1]), BigInt(f[2]));
  }
  return coeffs;
}

}  // namespace

std::string double_repr(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string poly_csv(const PolyP& poly) { return poly_csv_impl(poly); }

PolyP poly_from_csv(const std::string& text) {
  return PolyP(poly_rows_from_csv(text));
}

json poly_json(const PolyP& poly) {
  json coeffs = json::array();
  for (const BigRat& c : poly.coeffs()) coeffs.push_back(rat_string(c));
  return json{{"coeffs", coeffs}};
}

PolyP poly_from_json(const json& j) {
  std::vector<BigRat> coeffs;
  for (const auto& c : j.at("coeffs"))
    coeffs.push_back(parse_rat(c.get<std::string>()));
  return PolyP(std::move(coeffs));
}

std::string polyq_csv(const PolyQ& poly) { return poly_csv_impl(poly); }

PolyQ polyq_from_csv(const std::string& text) {
  std::vector<BigInt> coeffs;
  for (const BigRat& c : poly_rows_from_csv(text)) {
    if (c.get_den() != 1)
      throw std::invalid_argument("fractional coefficient in integer poly");
    coeffs.push_back(c.get_num());
  }
  return PolyQ(std::move(coeffs));
}

json polyq_json(const PolyQ& poly) {
  json coeffs = json::array();
  for (const BigInt& c : poly.coeffs())
    coeffs.push_back(c.get_str() + "/1");
  return json{{"coeffs", coeffs}};
}

PolyQ polyq_from_json(const json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) {
    const BigRat r = parse_rat(c.get<std::string>());
    if (r.get_den() != 1)
      throw std::invalid_argument("fractional coefficient in integer poly");
    coeffs.push_back(r.get_num());
  }
  return PolyQ(std::move(coeffs));
}

std::string dist_csv(const formulas::RationalDist& dist) {
  std::string out = "j,numerator,denominator,float\n";
  for (int j = 1; j <= dist.support(); ++j) {
    const BigRat& m = dist.mass(j);
    out += std::to_string(j) + "," + m.get_num().get_str() + "," +
           m.get_den().get_str() + "," + double_repr(rat_double(m)) + "\n";
  }
  return out;
}

formulas::RationalDist dist_from_csv(const std::string& text) {
  const std::vector<std::string> lines = data_lines(text);
  std::vector<BigRat> masses(lines.size());
  for (const std::string& line : lines) {
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 4) throw std::invalid_argument("bad dist row: " + line);
    const std::size_t j = static_cast<std::size_t>(to_ll(f[0]));
    if (j < 1 || j > masses.size())
      throw std::invalid_argument("dist row out of order: " + line);
    masses[j - 1] = make_rat(BigInt(f[1]), BigInt(f[2]));
  }
  return formulas::make_dist(std::move(masses));
}

json dist_json(const formulas::RationalDist& dist) {
  json masses = json::array();
  for (const BigRat& m : dist.masses) masses.push_back(rat_string(m));
  return json{{"masses", masses}};
}

formulas::RationalDist dist_from_json(const json& j) {
  std::vector<BigRat> masses;
  for (const auto& m : j.at("masses"))
    masses.push_back(parse_rat(m.get<std::string>()));
  return formulas::make_dist(std::move(masses));
}

std::string triangle_csv(const lucky::TriangleTable& t) {
  std::string out = "i,values\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += std::to_string(i);
    for (const BigInt& v : t.rows[i]) out += "," + v.get_str();
    out += "\n";
  }
  return out;
}

lucky::TriangleTable triangle_from_csv(const std::string& text) {
  lucky::TriangleTable t;
  for (const std::string& line : data_lines(text)) {
    const std::vector<std::string> f = split(line, ',');
    if (f.size() < 2) throw std::invalid_argument("bad triangle row: " + line);
    if (to_ll(f[0]) != static_cast<long long>(t.rows.size()))
      throw std::invalid_argument("triangle rows out of order: " + line);
    std::vector<BigInt> row;
    for (std::size_t i = 1; i < f.size(); ++i) row.emplace_back(f[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

json triangle_json(const lucky::TriangleTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const BigInt& v : row) r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  return json{{"rows", rows}};
}

lucky::TriangleTable triangle_from_json(const json& j) {
  lucky::TriangleTable t;
  for (const auto& row : j.at("rows")) {
    std::vector<BigInt> r;
    for (const auto& v : row) r.emplace_back(v.get<std::string>());
    t.rows.push_back(std::move(r));
  }
  return t;
}

json tv_json(const formulas::TvBounds& b) {
  return json{{"n", b.n},
              {"p", rat_string(b.p)},
              {"tv", rat_string(b.tv)},
              {"tv_float", rat_double(b.tv)},
              {"lower", rat_string(b.lower)},
              {"upper", rat_string(b.upper)}};
}

std::string tv_csv(const formulas::TvBounds& b) {
  return "n,p,tv,tv_float,lower,upper\n" + std::to_string(b.n) + "," +
         rat_string(b.p) + "," + rat_string(b.tv) + "," +
         double_repr(rat_double(b.tv)) + "," + rat_string(b.lower) + "," +
         rat_string(b.upper) + "\n";
}

std::string report_csv(const montecarlo::SimReport& r) {
  return "trials,successes,success_rate,success_rate_stderr,conditional_mean,"
         "conditional_mean_stderr\n" +
         std::to_string(r.trials) + "," + std::to_string(r.successes) + "," +
         double_repr(r.success_rate) + "," +
         double_repr(r.success_rate_stderr) + "," +
         double_repr(r.conditional_mean) + "," +
         double_repr(r.conditional_mean_stderr) + "\n";
}

json report_json(const montecarlo::SimReport& r) {
  return json{{"trials", r.trials},
              {"successes", r.successes},
              {"success_rate", r.success_rate},
              {"success_rate_stderr", r.success_rate_stderr},
              {"conditional_mean", r.conditional_mean},
              {"conditional_mean_stderr", r.conditional_mean_stderr},
              {"histogram", r.histogram}};
}

std::string histogram_csv(const montecarlo::SimReport& r) {
  std::string out = "j,count,frequency\n";
  const double k = static_cast<double>(r.successes);
  for (std::size_t i = 0; i < r.histogram.size(); ++i) {
    const double freq =
        r.successes == 0 ? std::numeric_limits<double>::quiet_NaN()
                         : static_cast<double>(r.histogram[i]) / k;
    out += std::to_string(i + 1) + "," + std::to_string(r.histogram[i]) + "," +
           double_repr(freq) + "\n";
  }
  return out;
}

std::string sweep_csv(
    const std::vector<std::pair<double, montecarlo::SimReport>>& rows) {
  std::string out = "p,success_rate,cond_mean,std_err\n";
  for (const auto& [p, report] : rows) {
    out += double_repr(p) + "," + double_repr(report.success_rate) + "," +
           double_repr(report.conditional_mean) + "," +
           double_repr(report.conditional_mean_stderr) + "\n";
  }
  return out;
}

std::string vacancy_csv(const exactprob::VacancyTable& table) {
  std::string out = "a,i,degree,numerator,denominator\n";
  const int spots = table.n + 1;
  for (int a = 1; a <= spots; ++a) {
    for (int i = 1; i <= spots; ++i) {
      const PolyP& poly = table.entries[static_cast<std::size_t>(a)]
                                       [static_cast<std::size_t>(i)];
      const auto& coeffs = poly.coeffs();
      for (std::size_t d = 0; d < coeffs.size(); ++d) {
        out += std::to_string(a) + "," + std::to_string(i) + "," +
               std::to_string(d) + "," + coeffs[d].get_num().get_str() + "," +
               coeffs[d].get_den().get_str() + "\n";
      }
    }
  }
  return out;
}

exactprob::VacancyTable vacancy_from_csv(const std::string& text) {
  exactprob::VacancyTable table;
  std::vector<std::vector<std::vector<BigRat>>> grid;
  int spots = 0;
  for (const std::string& line : data_lines(text)) {
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 5) throw std::invalid_argument("bad vacancy row: " + line);
    const int a = static_cast<int>(to_ll(f[0]));
    const int i = static_cast<int>(to_ll(f[1]));
    const std::size_t d = static_cast<std::size_t>(to_ll(f[2]));
    spots = std::max({spots, a, i});
    if (static_cast<int>(grid.size()) < spots)
      grid.resize(static_cast<std::size_t>(spots));
    for (auto& row : grid)
      if (static_cast<int>(row.size()) < spots)
        row.resize(static_cast<std::size_t>(spots));
    auto& cell = grid[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(i) - 1];
    if (cell.size() <= d) cell.resize(d + 1, BigRat(0));
    cell[d] = make_rat(BigInt(f[3]), BigInt(f[4]));
  }
  table.n = spots - 1;
  table.entries.assign(static_cast<std::size_t>(spots) + 1, {});
  for (int a = 1; a <= spots; ++a) {
    auto& row = table.entries[static_cast<std::size_t>(a)];
    row.resize(static_cast<std::size_t>(spots) + 1);
    for (int i = 1; i <= spots; ++i)
      row[static_cast<std::size_t>(i)] = PolyP(
          grid[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(i) - 1]);
  }
  return table;
}

json vacancy_json(const exactprob::VacancyTable& table) {
  json rows = json::array();
  const int spots = table.n + 1;
  for (int a = 1; a <= spots; ++a) {
    json row = json::array();
    for (int i = 1; i <= spots; ++i)
      row.push_back(poly_json(table.entries[static_cast<std::size_t>(a)]
                                           [static_cast<std::size_t>(i)]));
    rows.push_back(std::move(row));
  }
  return json{{"n", table.n}, {"entries", rows}};
}

}  // namespace parkstat::serialize
