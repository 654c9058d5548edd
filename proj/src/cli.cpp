#include "antitrid/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "antitrid/builders.hpp"
#include "antitrid/errors.hpp"
#include "antitrid/numbers.hpp"
#include "antitrid/oracle.hpp"
#include "antitrid/spectral.hpp"
#include "antitrid/verify.hpp"

namespace antitrid::cli {
namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double_sig(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
  return buf;
}

double parse_double_strict(const std::string& text) {
  std::size_t begin = 0;
  if (!text.empty() && text.front() == '+') begin = 1;
  double value = 0.0;
  const char* first = text.data() + begin;
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || begin == text.size() ||
      !std::isfinite(value))
    throw DomainError("bad numeric literal: '" + text + "'");
  return value;
}

Family parse_family(const std::string& text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  throw DomainError("family must be A or B, got '" + text + "'");
}

long long parse_int_strict(const std::string& text) {
  long long value = 0;
  const auto res =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw DomainError("bad integer literal: '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "plain") return Format::Plain;
  throw DomainError("format must be json, csv or plain, got '" + text + "'");
}

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw DomainError("empty complex literal");
  if (text.back() != 'i') return {parse_double_strict(text), 0.0};

  const std::string body = text.substr(0, text.size() - 1);
  // rightmost sign that is not leading and not an exponent sign splits the
  // real part from the imaginary part
  std::size_t splitpos = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' &&
        body[p - 1] != 'E') {
      splitpos = p;
      break;
    }
  }
  const std::string re_text =
      splitpos == std::string::npos ? "" : body.substr(0, splitpos);
  const std::string im_text =
      splitpos == std::string::npos ? body : body.substr(splitpos);

  const double re = re_text.empty() ? 0.0 : parse_double_strict(re_text);
  double im = 0.0;
  if (im_text.empty() || im_text == "+")
    im = 1.0;
  else if (im_text == "-")
    im = -1.0;
  else
    im = parse_double_strict(im_text);
  return {re, im};
}

std::string format_complex(const Complex& v) {
  std::string out = format_double(v.real());
  const std::string im = format_double(v.imag());
  if (im.empty() || im.front() != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

std::string format_complex_human(const Complex& v) {
  if (v.imag() == 0.0) return format_double_sig(v.real(), 6);
  std::string out = format_double_sig(v.real(), 6);
  const std::string im = format_double_sig(v.imag(), 6);
  if (im.empty() || im.front() != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

IntRange parse_range(const std::string& text) {
  const std::size_t pos = text.find("..");
  IntRange range;
  if (pos == std::string::npos) {
    range.lo = range.hi = static_cast<int>(parse_int_strict(text));
  } else {
    range.lo = static_cast<int>(parse_int_strict(text.substr(0, pos)));
    range.hi = static_cast<int>(parse_int_strict(text.substr(pos + 2)));
  }
  if (range.lo > range.hi)
    throw DomainError("empty range '" + text + "'");
  return range;
}

std::string matrix_to_json(const DenseMatrix& m) {
  json doc;
  doc["n"] = m.size();
  json entries = json::array();
  for (const Complex& v : m.entries())
    entries.push_back(json::array({v.real(), v.imag()}));
  doc["entries"] = std::move(entries);
  return doc.dump();
}

DenseMatrix matrix_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad matrix json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw DomainError("matrix json needs fields 'n' and 'entries'");
  const int n = doc["n"].get<int>();
  const json& entries = doc["entries"];
  if (n < 1 || !entries.is_array() ||
      entries.size() != static_cast<std::size_t>(n) * n)
    throw DomainError("matrix json entry count does not match n*n");
  DenseMatrix m(n);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const json& cell = entries[k];
    if (!cell.is_array() || cell.size() != 2)
      throw DomainError("matrix json entries must be [re, im] pairs");
    m.entries()[k] = Complex{cell[0].get<double>(), cell[1].get<double>()};
  }
  return m;
}

namespace {

// ---------------------------------------------------------------- rendering

std::string render_matrix(const DenseMatrix& m, Format format) {
  const int n = m.size();
  if (format == Format::Json) return matrix_to_json(m) + "\n";
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "i,j,value\n";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out << i + 1 << ',' << j + 1 << ',' << format_complex(m(i, j))
            << '\n';
    return out.str();
  }
  std::vector<std::string> cells(static_cast<std::size_t>(n) * n);
  std::size_t width = 0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    cells[k] = format_complex_human(m.entries()[k]);
    width = std::max(width, cells[k].size());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string& cell = cells[static_cast<std::size_t>(i) * n + j];
      if (j > 0) out << "  ";
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_eigenvalues(const std::vector<Complex>& values,
                               const std::vector<double>* residuals,
                               Format format) {
  if (format == Format::Json) {
    json doc;
    doc["n"] = values.size();
    json arr = json::array();
    for (const Complex& v : values)
      arr.push_back(json::array({v.real(), v.imag()}));
    doc["eigenvalues"] = std::move(arr);
    if (residuals) doc["residuals"] = *residuals;
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << (residuals ? "k,eigenvalue,residual\n" : "k,eigenvalue\n");
    for (std::size_t k = 0; k < values.size(); ++k) {
      out << k + 1 << ',' << format_complex(values[k]);
      if (residuals) out << ',' << format_double((*residuals)[k]);
      out << '\n';
    }
    return out.str();
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << format_complex_human(values[k]);
    if (residuals) out << "  residual=" << format_double_sig((*residuals)[k], 3);
    out << '\n';
  }
  return out.str();
}

std::string render_scalar(const Complex& value, Format format) {
  if (format == Format::Json) {
    json doc;
    doc["value"] = json::array({value.real(), value.imag()});
    return doc.dump() + "\n";
  }
  if (format == Format::Csv) return "value\n" + format_complex(value) + "\n";
  return format_complex_human(value) + "\n";
}

std::string render_reports(const std::vector<FactorizationReport>& reports,
                           Format format) {
  auto exact_cell = [](const FactorizationReport& rep) {
    return rep.exact_text.empty() ? format_complex(rep.exact_value)
                                  : rep.exact_text;
  };
  if (format == Format::Json) {
    json rows = json::array();
    for (const auto& rep : reports) {
      json row;
      row["identity"] = identity_name(rep.identity);
      row["n"] = rep.n;
      if (rep.x) row["x"] = json::array({rep.x->real(), rep.x->imag()});
      row["exact"] = json::array(
          {rep.exact_value.real(), rep.exact_value.imag()});
      if (!rep.exact_text.empty()) row["exact_text"] = rep.exact_text;
      row["product"] = json::array(
          {rep.product_value.real(), rep.product_value.imag()});
      row["abs_residual"] = rep.abs_residual;
      row["rel_residual"] = rep.rel_residual;
      row["passed"] = rep.passed;
      rows.push_back(std::move(row));
    }
    json doc;
    doc["reports"] = std::move(rows);
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "identity,n,x,exact,product,abs_residual,rel_residual,passed\n";
    for (const auto& rep : reports) {
      out << identity_name(rep.identity) << ',' << rep.n << ','
          << (rep.x ? format_complex(*rep.x) : std::string()) << ','
          << exact_cell(rep) << ',' << format_complex(rep.product_value)
          << ',' << format_double(rep.abs_residual) << ','
          << format_double(rep.rel_residual) << ','
          << (rep.passed ? "true" : "false") << '\n';
    }
    return out.str();
  }
  for (const auto& rep : reports) {
    out << identity_name(rep.identity) << "  n=" << rep.n;
    if (rep.x) out << "  x=" << format_complex_human(*rep.x);
    out << "  exact=" << exact_cell(rep)
        << "  product=" << format_complex_human(rep.product_value)
        << "  rel_residual=" << format_double_sig(rep.rel_residual, 3)
        << (rep.passed ? "  PASS" : "  FAIL") << '\n';
  }
  return out.str();
}

const char* family_name(Family family) {
  return family == Family::A ? "A" : "B";
}

std::string render_sweep(const SweepResult& result, std::uint64_t seed,
                         double tol, double negative_tol, Format format) {
  if (format == Format::Json) {
    json records = json::array();
    for (const auto& rec : result.records) {
      json row;
      row["family"] = family_name(rec.family);
      row["n"] = rec.n;
      row["a"] = format_complex(rec.a);
      row["b"] = format_complex(rec.b);
      row["r"] = rec.r;
      row["deviation"] = rec.deviation;
      row["ok"] = rec.ok;
      records.push_back(std::move(row));
    }
    json doc;
    doc["seed"] = seed;
    doc["tolerance"] = tol;
    doc["negative_tolerance"] = negative_tol;
    doc["max_deviation"] = result.max_deviation;
    doc["all_ok"] = result.all_ok;
    doc["records"] = std::move(records);
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "trial,family,n,a,b,r,deviation,ok\n";
    for (std::size_t t = 0; t < result.records.size(); ++t) {
      const auto& rec = result.records[t];
      out << t + 1 << ',' << family_name(rec.family) << ',' << rec.n << ','
          << format_complex(rec.a) << ',' << format_complex(rec.b) << ','
          << rec.r << ',' << format_double(rec.deviation) << ','
          << (rec.ok ? "true" : "false") << '\n';
    }
    return out.str();
  }
  out << "trials=" << result.records.size()
      << "  max_deviation=" << format_double(result.max_deviation);
  if (result.worst_index >= 0) {
    const auto& worst = result.records[static_cast<std::size_t>(
        result.worst_index)];
    out << "  worst: family=" << family_name(worst.family)
        << " n=" << worst.n << " a=" << format_complex(worst.a)
        << " b=" << format_complex(worst.b) << " r=" << worst.r;
  }
  out << '\n'
      << (result.all_ok ? "all trials within tolerance"
                        : "TOLERANCE EXCEEDED")
      << '\n';
  return out.str();
}

struct BenchRow {
  int n = 0;
  long long r = 0;
  const char* method = "";
  double millis = 0.0;
};

std::string render_bench(const std::vector<BenchRow>& rows, Format format) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& row : rows) {
      json item;
      item["n"] = row.n;
      item["r"] = row.r;
      item["method"] = row.method;
      item["millis"] = row.millis;
      arr.push_back(std::move(item));
    }
    json doc;
    doc["rows"] = std::move(arr);
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "n,r,method,millis\n";
    for (const auto& row : rows)
      out << row.n << ',' << row.r << ',' << row.method << ','
          << format_double(row.millis) << '\n';
    return out.str();
  }
  for (const auto& row : rows)
    out << "n=" << row.n << "  r=" << row.r << "  method=" << row.method
        << "  millis=" << format_double_sig(row.millis, 6) << '\n';
  return out.str();
}

// ----------------------------------------------------------------- commands

struct MatrixArgs {
  std::string family = "A";
  int n = 0;
  std::string a = "1";
  std::string b = "1";
  std::string format = "plain";
};

AntiTridiagSpec spec_from_args(const MatrixArgs& args) {
  return make_spec(parse_family(args.family), args.n, parse_complex(args.a),
                   parse_complex(args.b));
}

int cmd_power(const MatrixArgs& args, long long r, bool verify, double tol) {
  const AntiTridiagSpec spec = spec_from_args(args);
  const Format format = parse_format(args.format);
  const DenseMatrix result = closed_power(spec, r);
  std::cout << render_matrix(result, format);
  if (!verify) return 0;
  const double deviation = power_deviation(spec, r);
  const double limit = tol > 0.0 ? tol : (r < 0 ? 1e-7 : 1e-8);
  std::cerr << "max relative deviation vs oracle = "
            << format_double(deviation) << " (tolerance " << format_double(limit)
            << ")\n";
  return deviation <= limit ? 0 : 1;
}

int cmd_eigs(const MatrixArgs& args, bool residuals) {
  const AntiTridiagSpec spec = spec_from_args(args);
  const Format format = parse_format(args.format);
  const std::vector<Complex> values = eigenvalues_anti(spec);
  std::vector<double> res;
  if (residuals) {
    const DenseMatrix anti = build_anti(spec);
    res.reserve(values.size());
    for (const Complex& mu : values) {
      DenseMatrix shifted = anti;
      for (int i = 0; i < shifted.size(); ++i) shifted(i, i) -= mu;
      res.push_back(std::abs(lu_det(shifted)));
    }
  }
  std::cout << render_eigenvalues(values, residuals ? &res : nullptr, format);
  return 0;
}

int cmd_det(const MatrixArgs& args, bool tilde) {
  const AntiTridiagSpec spec = spec_from_args(args);
  const Format format = parse_format(args.format);
  const DenseMatrix m = tilde ? build_tilde(spec) : build_anti(spec);
  std::cout << render_scalar(lu_det(m), format);
  return 0;
}

struct FactorArgs {
  std::string identity;
  std::string range;
  std::string xs;
  std::string a = "1";
  std::string b = "i";
  std::string format = "plain";
  double tol = -1.0;
};

int cmd_factor(const FactorArgs& args) {
  const Format format = parse_format(args.format);
  const IntRange range = parse_range(args.range);
  const Complex imag_unit{0.0, 1.0};

  std::vector<Complex> xs;
  const bool needs_x = args.identity == "fibpoly" || args.identity == "detA";
  if (needs_x) {
    if (args.xs.empty())
      throw DomainError("identity '" + args.identity + "' needs -x");
    for (const std::string& part : split(args.xs, ','))
      xs.push_back(parse_complex(part));
  } else if (!args.xs.empty()) {
    throw DomainError("identity '" + args.identity + "' does not take -x");
  }

  auto tol_for = [&](IdentityKind kind) {
    return args.tol > 0.0 ? args.tol : default_rel_tol(kind);
  };

  std::vector<FactorizationReport> reports;
  for (int n = range.lo; n <= range.hi; ++n) {
    if (args.identity == "fib") {
      reports.push_back(fib_product(n, tol_for(IdentityKind::FibProduct)));
    } else if (args.identity == "pell") {
      reports.push_back(pell_product(n, tol_for(IdentityKind::PellProduct)));
    } else if (args.identity == "fibpoly") {
      for (const Complex& x : xs)
        reports.push_back(make_report(
            IdentityKind::FibPolyProduct, n, x, fib_poly(n - 1, x), "",
            fib_poly_product(n, x), tol_for(IdentityKind::FibPolyProduct)));
    } else if (args.identity == "detA") {
      for (const Complex& x : xs) {
        const Complex oracle =
            lu_det(build_anti(make_spec(Family::A, n, x, imag_unit)));
        reports.push_back(make_report(IdentityKind::DetA_FibPoly, n, x,
                                      det_identity_A(n, x), "", oracle,
                                      tol_for(IdentityKind::DetA_FibPoly)));
      }
    } else if (args.identity == "detB-fib") {
      const Complex oracle =
          lu_det(build_anti(make_spec(Family::B, n, 1.0, imag_unit)));
      reports.push_back(make_report(IdentityKind::DetB_Fib, n, std::nullopt,
                                    det_identity_B(n, BVariant::Fib), "",
                                    oracle, tol_for(IdentityKind::DetB_Fib)));
    } else if (args.identity == "detB-pell") {
      const Complex oracle =
          lu_det(build_anti(make_spec(Family::B, n, 2.0, imag_unit)));
      reports.push_back(make_report(IdentityKind::DetB_Pell, n, std::nullopt,
                                    det_identity_B(n, BVariant::Pell), "",
                                    oracle, tol_for(IdentityKind::DetB_Pell)));
    } else if (args.identity == "laplaceB") {
      const Complex a = parse_complex(args.a);
      const Complex b = parse_complex(args.b);
      const Complex oracle = lu_det(build_tilde(make_spec(Family::B, n, a, b)));
      reports.push_back(make_report(IdentityKind::LaplaceB, n, std::nullopt,
                                    laplace_expansion_B(n, a, b), "", oracle,
                                    tol_for(IdentityKind::LaplaceB)));
    } else {
      throw DomainError("unknown identity '" + args.identity +
                        "' (expected fib, pell, fibpoly, detA, detB-fib, "
                        "detB-pell or laplaceB)");
    }
  }
  std::cout << render_reports(reports, format);
  for (const auto& rep : reports)
    if (!rep.passed) return 1;
  return 0;
}

int cmd_verify(std::uint64_t seed, int trials, int negative_trials,
               double tol, double negative_tol, const std::string& format_text) {
  const Format format = parse_format(format_text);
  if (trials < 1) throw DomainError("verify: --trials must be >= 1");
  if (negative_trials < 0)
    throw DomainError("verify: --negative-trials must be >= 0");
  const SweepResult result =
      oracle_sweep(seed, trials, negative_trials, tol, negative_tol);
  std::cout << render_sweep(result, seed, tol, negative_tol, format);
  return result.all_ok ? 0 : 1;
}

int cmd_bench(const std::string& n_list, const std::string& r_list,
              const std::string& family_text, const std::string& a_text,
              const std::string& b_text, const std::string& format_text) {
  const Format format = parse_format(format_text);
  const Family family = parse_family(family_text);
  const Complex a = parse_complex(a_text);
  const Complex b = parse_complex(b_text);

  std::vector<int> dims;
  for (const std::string& part : split(n_list, ','))
    dims.push_back(static_cast<int>(parse_int_strict(part)));
  std::vector<long long> powers;
  for (const std::string& part : split(r_list, ','))
    powers.push_back(parse_int_strict(part));

  constexpr long long kOracleCap = 1000000;
  for (int n : dims)
    if (n < min_dimension(family) || n > 1000)
      throw DomainError("bench: n must be within [" +
                        std::to_string(min_dimension(family)) + ", 1000]");
  for (long long r : powers)
    if (r < 0 || r > 1000000000LL)
      throw DomainError("bench: r must be within [0, 1e9]");

  using clock = std::chrono::steady_clock;
  double sink = 0.0;
  std::vector<BenchRow> rows;
  for (int n : dims) {
    const AntiTridiagSpec spec = make_spec(family, n, a, b);
    const DenseMatrix anti = build_anti(spec);
    for (long long r : powers) {
      {
        const auto start = clock::now();
        const DenseMatrix m = closed_power(spec, r);
        const auto stop = clock::now();
        sink += max_abs(m);
        rows.push_back(
            {n, r, "closed",
             std::chrono::duration<double, std::milli>(stop - start).count()});
      }
      if (r <= kOracleCap) {
        const auto start = clock::now();
        const DenseMatrix m = mat_power(anti, r);
        const auto stop = clock::now();
        sink += max_abs(m);
        rows.push_back(
            {n, r, "oracle",
             std::chrono::duration<double, std::milli>(stop - start).count()});
      } else {
        std::cerr << "bench: oracle leg skipped for r=" << r << " (cap "
                  << kOracleCap << ")\n";
      }
    }
  }
  if (!std::isfinite(sink))
    std::cerr << "bench: results overflowed double range\n";
  std::cout << render_bench(rows, format);
  return 0;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const SingularSpectrum& e) {
    std::cerr << "error: SingularSpectrum: " << e.what() << '\n';
    return 1;
  } catch (const SingularMatrix& e) {
    std::cerr << "error: SingularMatrix: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "antitrid: closed-form integer powers of two families of complex\n"
      "anti-tridiagonal matrices, eigenvalues, determinant identities and\n"
      "Fibonacci/Pell complex-product factorizations, all cross-checkable\n"
      "against a brute-force linear-algebra oracle."};
  app.require_subcommand(1);

  MatrixArgs power_args;
  long long power_r = 1;
  bool power_verify = false;
  double power_tol = -1.0;
  auto* power = app.add_subcommand(
      "power", "r-th power of A_n or B_n via the spectral closed form");
  power->add_option("--family", power_args.family, "family A or B");
  power->add_option("-n", power_args.n, "matrix dimension")->required();
  power->add_option("-a", power_args.a, "diagonal parameter, e.g. 1+2i");
  power->add_option("-b", power_args.b, "off-diagonal parameter, nonzero");
  power->add_option("-r", power_r, "integer exponent (negative allowed)")
      ->required();
  power->add_option("--format", power_args.format, "json, csv or plain");
  power->add_flag("--verify", power_verify,
                  "cross-check against the brute-force oracle");
  power->add_option("--tol", power_tol, "override the --verify tolerance");

  MatrixArgs eigs_args;
  bool eigs_residuals = false;
  auto* eigs = app.add_subcommand(
      "eigs", "eigenvalues of the anti-tridiagonal matrix");
  eigs->add_option("--family", eigs_args.family, "family A or B");
  eigs->add_option("-n", eigs_args.n, "matrix dimension")->required();
  eigs->add_option("-a", eigs_args.a, "diagonal parameter");
  eigs->add_option("-b", eigs_args.b, "off-diagonal parameter, nonzero");
  eigs->add_option("--format", eigs_args.format, "json, csv or plain");
  eigs->add_flag("--residuals", eigs_residuals,
                 "also print |det(A - mu*I)| per eigenvalue");

  MatrixArgs det_args;
  bool det_tilde = false;
  auto* det = app.add_subcommand(
      "det", "LU determinant of the built matrix");
  det->add_option("--family", det_args.family, "family A or B");
  det->add_option("-n", det_args.n, "matrix dimension")->required();
  det->add_option("-a", det_args.a, "diagonal parameter");
  det->add_option("-b", det_args.b, "off-diagonal parameter, nonzero");
  det->add_option("--format", det_args.format, "json, csv or plain");
  det->add_flag("--tilde", det_tilde,
                "use the tridiagonal companion instead of the "
                "anti-tridiagonal matrix");

  FactorArgs factor_args;
  auto* factor = app.add_subcommand(
      "factor",
      "evaluate a determinant/product identity over a range of n");
  factor
      ->add_option("identity", factor_args.identity,
                   "fib, pell, fibpoly, detA, detB-fib, detB-pell, laplaceB")
      ->required();
  factor->add_option("-n", factor_args.range, "n or lo..hi (inclusive)")
      ->required();
  factor->add_option("-x", factor_args.xs,
                     "comma-separated x values (fibpoly, detA)");
  factor->add_option("-a", factor_args.a, "laplaceB diagonal parameter");
  factor->add_option("-b", factor_args.b, "laplaceB off-diagonal parameter");
  factor->add_option("--format", factor_args.format, "json, csv or plain");
  factor->add_option("--tol", factor_args.tol,
                     "override the identity's relative tolerance");

  std::uint64_t verify_seed = 0;
  int verify_trials = 0;
  int verify_negative = 0;
  double verify_tol = 1e-8;
  double verify_negative_tol = 1e-7;
  std::string verify_format = "plain";
  auto* verify = app.add_subcommand(
      "verify", "seeded random sweep of closed_power against the oracle");
  verify->add_option("--seed", verify_seed, "RNG seed (default 0)");
  verify->add_option("--trials", verify_trials, "number of trials, >= 1")
      ->required();
  verify->add_option("--negative-trials", verify_negative,
                     "extra trials with r in {-1, -2}");
  verify->add_option("--tol", verify_tol, "relative tolerance, default 1e-8");
  verify->add_option("--negative-tol", verify_negative_tol,
                     "tolerance for negative powers, default 1e-7");
  verify->add_option("--format", verify_format, "json, csv or plain");

  std::string bench_n = "100";
  std::string bench_r = "1024";
  std::string bench_family = "A";
  std::string bench_a = "0";
  std::string bench_b = "0.5";
  std::string bench_format = "plain";
  auto* bench = app.add_subcommand(
      "bench",
      "time the closed form against oracle binary exponentiation; the "
      "default spec has unit spectral radius so huge powers stay finite");
  bench->add_option("-n", bench_n, "comma-separated dimensions, max 1000");
  bench->add_option("-r", bench_r,
                    "comma-separated exponents, max 1e9 (oracle leg caps "
                    "at 1e6)");
  bench->add_option("--family", bench_family, "family A or B");
  bench->add_option("-a", bench_a, "diagonal parameter");
  bench->add_option("-b", bench_b, "off-diagonal parameter, nonzero");
  bench->add_option("--format", bench_format, "json, csv or plain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (power->parsed())
    return guarded(
        [&] { return cmd_power(power_args, power_r, power_verify, power_tol); });
  if (eigs->parsed())
    return guarded([&] { return cmd_eigs(eigs_args, eigs_residuals); });
  if (det->parsed())
    return guarded([&] { return cmd_det(det_args, det_tilde); });
  if (factor->parsed())
    return guarded([&] { return cmd_factor(factor_args); });
  if (verify->parsed())
    return guarded([&] {
      return cmd_verify(verify_seed, verify_trials, verify_negative,
                        verify_tol, verify_negative_tol, verify_format);
    });
  if (bench->parsed())
    return guarded([&] {
      return cmd_bench(bench_n, bench_r, bench_family, bench_a, bench_b,
                       bench_format);
    });
  return 2;
}

}  // namespace antitrid::cli
