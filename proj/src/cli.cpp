#include "sqfree/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sqfree/bench.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/io.hpp"
#include "sqfree/multiplicity.hpp"
#include "sqfree/squarefree.hpp"

namespace sqfree::cli {
namespace {

using nlohmann::json;

enum class Format { text, json };

struct Config {
  std::string command;
  std::string input;
  std::string method = "companion";
  Format format = Format::text;
  bool show_matrix = false;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::size_t min_degree = 1;
  std::size_t max_degree = 10;
  std::size_t max_mult = 3;
  std::string output;
  bool no_timing = false;
};

std::vector<Method> selected_methods(const std::string& name) {
  if (name == "all") return {Method::companion, Method::tobey, Method::yun};
  return {*parse_method(name)};
}

// Parses the positional argument (or stdin for "-") and normalizes it to a
// monic polynomial of degree >= 1.
QPolynomial read_input(const Config& config, std::istream& in,
                       std::ostream& err) {
  std::string text = config.input;
  if (text == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  QPolynomial f = parse_polynomial(text);
  if (f.is_constant()) {
    throw InvalidInputError("polynomial must have degree >= 1");
  }
  if (!f.is_monic()) {
    err << "note: input scaled by 1/(" << f.leading() << ") to make it monic\n";
    f = make_monic(f);
  }
  return f;
}

json factorization_json(const std::string& input, const QFactorization& sf,
                        Method method) {
  json components = json::array();
  for (const auto& c : sf.components) {
    components.push_back({{"k", c.k},
                          {"poly", to_string(c.poly)},
                          {"degree", c.poly.degree().value()}});
  }
  return {{"input", input},
          {"m", sf.m},
          {"components", components},
          {"method", to_string(method)}};
}

json matrix_json(const QMatrix& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

int run_factor(const Config& config, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const QPolynomial f = read_input(config, in, err);
  const auto methods = selected_methods(config.method);
  std::vector<QFactorization> results;
  for (Method m : methods) results.push_back(factor(f, m));

  if (config.format == Format::json) {
    json doc;
    if (methods.size() == 1) {
      doc = factorization_json(to_string(f), results[0], methods[0]);
    } else {
      doc = json::array();
      for (std::size_t i = 0; i < methods.size(); ++i) {
        doc.push_back(factorization_json(to_string(f), results[i], methods[i]));
      }
    }
    out << doc.dump(2) << '\n';
  } else if (methods.size() == 1) {
    out << "f = " << to_string(results[0]) << '\n';
  } else {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      out << to_string(methods[i]) << ": f = " << to_string(results[i]) << '\n';
    }
  }
  for (const auto& r : results) {
    if (!(r == results.front())) {
      err << "error: methods disagree\n";
      return kInternal;
    }
  }
  return kOk;
}

int run_mf(const Config& config, std::istream& in, std::ostream& out,
           std::ostream& err) {
  const QPolynomial f = read_input(config, in, err);
  const auto report = compute_mf(f, Route::both);
  QMatrix c, mf_at_c;
  if (config.show_matrix) {
    c = companion(report.f0);
    mf_at_c = eval_at_companion(report.mf, report.f0);
  }
  if (config.format == Format::json) {
    json doc = {{"mf", to_string(report.mf)}, {"f0", to_string(report.f0)},
                {"P", to_string(report.P)},   {"g", to_string(report.g)},
                {"h", to_string(report.h)}};
    if (config.show_matrix) {
      doc["companion"] = matrix_json(c);
      doc["mf_at_companion"] = matrix_json(mf_at_c);
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "M_f = " << to_string(report.mf) << '\n';
  if (config.show_matrix) {
    out << "f0 = " << to_string(report.f0) << '\n'
        << "C_f0 =\n" << to_string(c)
        << "M_f(C_f0) =\n" << to_string(mf_at_c);
  }
  return kOk;
}

int run_forecast(const Config& config, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  const QPolynomial f = read_input(config, in, err);
  const DegreeForecast forecast = degree_forecast(f);
  if (config.format == Format::json) {
    json degrees = json::object();
    for (const auto& [k, d] : forecast.degrees) degrees[std::to_string(k)] = d;
    out << json{{"input", to_string(f)}, {"m", forecast.m}, {"degrees", degrees}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "m = " << forecast.m << '\n';
  for (const auto& [k, d] : forecast.degrees) {
    out << "deg P_" << k << " = " << d << '\n';
  }
  return kOk;
}

int run_verify(const Config& config, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const QPolynomial f = read_input(config, in, err);
  const std::array<Method, 3> methods{Method::companion, Method::tobey, Method::yun};
  std::array<std::future<QFactorization>, 3> pending;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    pending[i] = std::async(std::launch::async, [&f, m = methods[i]] {
      return factor(f, m);
    });
  }
  std::vector<QFactorization> results;
  for (auto& p : pending) results.push_back(p.get());

  json checks = json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool passed) {
    ok = ok && passed;
    checks.push_back({{"check", name}, {"passed", passed}});
    if (config.format == Format::text) {
      out << (passed ? "PASS " : "FAIL ") << name << '\n';
    }
  };

  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (const auto& c : verify_factorization(f, results[i]).checks) {
      record(std::string(to_string(methods[i])) + "/" + c.name, c.passed);
    }
  }
  record("agreement/companion=tobey", results[0] == results[1]);
  record("agreement/companion=yun", results[0] == results[2]);

  bool routes_agree = true;
  try {
    compute_mf(f, Route::both);
  } catch (const InternalInconsistencyError&) {
    routes_agree = false;
  }
  record("routes/companion=modular", routes_agree);
  record("forecast/matches-degrees",
         degree_forecast(f).degrees == results[0].degree_profile());

  if (config.format == Format::json) {
    out << json{{"input", to_string(f)},
                {"factorization", to_string(results[0])},
                {"checks", checks},
                {"ok", ok}}
               .dump(2)
        << '\n';
  } else {
    out << (ok ? "OK" : "FAILED") << ": f = " << to_string(results[0]) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int run_bench_command(const Config& config, std::ostream& out) {
  BenchConfig bench;
  bench.seed = config.seed;
  bench.trials = config.trials;
  bench.bounds.min_degree = config.min_degree;
  bench.bounds.max_degree = config.max_degree;
  bench.bounds.max_multiplicity = config.max_mult;
  bench.methods = selected_methods(config.method);
  bench.timing = !config.no_timing;
  const auto rows = run_bench(bench);

  if (config.output.empty()) {
    write_csv(out, rows);
  } else {
    std::ofstream file(config.output);
    if (!file) throw InvalidInputError("cannot open " + config.output);
    write_csv(file, rows);
  }
  const bool all_agree = std::all_of(rows.begin(), rows.end(),
                                     [](const BenchRow& r) { return r.agrees; });
  return all_agree ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Square-free factorization of rational polynomials"};
  app.require_subcommand(1);
  Config config;

  const std::map<std::string, Format> formats{{"text", Format::text},
                                              {"json", Format::json}};
  const std::vector<std::string> method_names{"companion", "tobey", "yun", "all"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--method", config.method, "companion|tobey|yun|all")
        ->check(CLI::IsMember(method_names));
    sub->add_option("--format", config.format, "text|json")
        ->transform(CLI::CheckedTransformer(formats));
  };
  auto add_poly_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("polynomial", config.input, "polynomial in x, or - for stdin")
        ->required();
    add_common(sub);
    return sub;
  };

  add_poly_command("factor", "square-free factorization");
  add_poly_command("mf", "multiplicity polynomial M_f")
      ->add_flag("--show-matrix", config.show_matrix,
                 "print C_f0 and M_f(C_f0)");
  add_poly_command("forecast", "degrees of the square-free components");
  add_poly_command("verify", "run all methods and check every invariant");

  CLI::App* bench = app.add_subcommand("bench", "time methods on random instances");
  bench->add_option("--method", config.method, "companion|tobey|yun|all")
      ->check(CLI::IsMember(method_names));
  bench->add_option("--seed", config.seed, "random seed")->required();
  bench->add_option("--trials", config.trials, "number of instances");
  bench->add_option("--min-degree", config.min_degree);
  bench->add_option("--max-degree", config.max_degree);
  bench->add_option("--max-mult", config.max_mult);
  bench->add_option("--output", config.output, "CSV path (default stdout)");
  bench->add_flag("--no-timing", config.no_timing, "write micros as 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();

  try {
    if (command == "factor") return run_factor(config, in, out, err);
    if (command == "mf") return run_mf(config, in, out, err);
    if (command == "forecast") return run_forecast(config, in, out, err);
    if (command == "verify") return run_verify(config, in, out, err);
    return run_bench_command(config, out);
  } catch (const InternalInconsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace sqfree::cli
