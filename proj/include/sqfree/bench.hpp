#ifndef SQFREE_BENCH_HPP
#define SQFREE_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/instances.hpp"
#include "sqfree/io.hpp"

namespace sqfree {

enum class Method { companion, tobey, yun };

const char* to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

/// Dispatches to factor_companion, factor_tobey_horowitz or factor_yun.
QFactorization factor(const QPolynomial& f, Method method);

struct BenchConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  InstanceBounds bounds;
  std::vector<Method> methods{Method::companion, Method::tobey, Method::yun};
  bool timing = true;  // false writes micros = 0 for reproducible output
};

struct BenchRow {
  std::size_t trial = 0;
  std::size_t degree = 0;
  Method method = Method::companion;
  long long micros = 0;
  std::size_t max_bits = 0;
  bool agrees = false;
};

/// Generates `trials` instances from the seed and factors each with every
/// method, checking the result against the known answer.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Header: trial,degree,method,micros,max_bits,agrees
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace sqfree

#endif  // SQFREE_BENCH_HPP
