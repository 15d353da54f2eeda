#include "sqfree/bench.hpp"

#include <chrono>

#include "sqfree/instrumentation.hpp"
#include "sqfree/squarefree.hpp"

namespace sqfree {

const char* to_string(Method method) {
  switch (method) {
    case Method::companion: return "companion";
    case Method::tobey: return "tobey";
    case Method::yun: return "yun";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "companion") return Method::companion;
  if (name == "tobey") return Method::tobey;
  if (name == "yun") return Method::yun;
  return std::nullopt;
}

QFactorization factor(const QPolynomial& f, Method method) {
  switch (method) {
    case Method::companion: return factor_companion(f);
    case Method::tobey: return factor_tobey_horowitz(f);
    case Method::yun: return factor_yun(f);
  }
  throw InvalidInputError("unknown method");
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  config.bounds.validate();
  if (config.trials < 1) throw InvalidInputError("trials must be >= 1");

  InstanceGenerator generator(config.seed);
  std::vector<BenchRow> rows;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const Instance instance = generator.next(config.bounds);
    for (Method method : config.methods) {
      BenchRow row;
      row.trial = trial;
      row.degree = instance.f.degree().value();
      row.method = method;

      instrumentation::BitSizeProbe probe;
      const auto start = std::chrono::steady_clock::now();
      const QFactorization result = factor(instance.f, method);
      const auto stop = std::chrono::steady_clock::now();

      row.max_bits = probe.max_bits();
      if (config.timing) {
        row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                         stop - start)
                         .count();
      }
      row.agrees = result == instance.expected;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "trial,degree,method,micros,max_bits,agrees\n";
  for (const auto& r : rows) {
    os << r.trial << ',' << r.degree << ',' << to_string(r.method) << ','
       << r.micros << ',' << r.max_bits << ',' << (r.agrees ? "true" : "false")
       << '\n';
  }
}

}  // namespace sqfree
