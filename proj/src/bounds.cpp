#include "qramsey/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qramsey/errors.hpp"

namespace qramsey::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double binomial2(std::size_t k) {
  return 0.5 * static_cast<double>(k) * static_cast<double>(k - 1);
}

// Exact binomial coefficient; throws DomainError on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw DomainError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

double log_lower_bound(std::size_t k, double eps, double half_span) {
  if (k < 2) throw DomainError("k must be at least 2");
  if (!(eps >= 0.0)) throw DomainError("eps must be nonnegative");
  const double rate = lambda_star(0.5 - eps);
  if (std::isinf(rate)) return kInf;
  return std::log(static_cast<double>(k)) - 1.0 + half_span * rate;
}

}  // namespace

double lambda_star(double x) noexcept {
  if (std::isnan(x)) return x;
  if (x < 0.0 || x > 1.0) return kInf;
  if (x == 0.0 || x == 1.0) return std::numbers::ln2;
  // log1p keeps full relative accuracy near the minimum at 1/2.
  return x * std::log1p(2.0 * x - 1.0) + (1.0 - x) * std::log1p(1.0 - 2.0 * x);
}

double dependent_set_tail(std::size_t t_bar, std::size_t k) {
  if (k < 2) throw DomainError("dependent_set_tail requires k >= 2");
  if (2 * t_bar > k - 1) throw DomainError("dependent_set_tail requires t_bar <= (k-1)/2");
  const double rate = lambda_star(static_cast<double>(t_bar) / static_cast<double>(k - 1));
  // Base-2 exponent: exact powers of two at the endpoints where rate = ln 2.
  return std::exp2(-binomial2(k) * (rate / std::numbers::ln2));
}

double log_variable_lower_bound(std::size_t k, double eps) {
  return log_lower_bound(k, eps, 0.5 * static_cast<double>(k - 1));
}

double log_fixed_lower_bound_lll(std::size_t k, double eps) {
  return log_lower_bound(k, eps, 0.5 * static_cast<double>(k + 1));
}

double variable_lower_bound(std::size_t k, double eps) {
  return std::exp(log_variable_lower_bound(k, eps));
}

double fixed_lower_bound_lll(std::size_t k, double eps) {
  return std::exp(log_fixed_lower_bound_lll(k, eps));
}

double taylor_floor(double eps) {
  if (!(eps >= 0.0)) throw DomainError("eps must be nonnegative");
  return 2.0 * eps * eps;
}

double erdos_spencer_bound(std::size_t n, std::size_t t) {
  if (t < 1 || t > n) throw DomainError("erdos_spencer_bound requires 1 <= t <= n");
  const double td = static_cast<double>(t);
  return td * std::sqrt(td) / 1000.0 * std::sqrt(std::log(5.0 * static_cast<double>(n) / td));
}

bool thinning_condition(std::size_t k, double eps) {
  if (k < 1) throw DomainError("thinning_condition requires k >= 1");
  if (!(eps >= 0.0)) throw DomainError("eps must be nonnegative");
  return 0.5 * eps * eps * static_cast<double>(k - 1) > std::log(static_cast<double>(k));
}

double hypergeometric_tail(std::uint64_t population, std::uint64_t draws, std::uint64_t successes, double d) {
  if (draws < 1 || successes < 1 || draws > population || successes > population) {
    throw DomainError("hypergeometric_tail requires 1 <= a, b <= N");
  }
  if (!(d >= 0.0)) throw DomainError("hypergeometric_tail requires d >= 0");
  const double n = static_cast<double>(population);
  const double ab = static_cast<double>(draws) * static_cast<double>(successes);
  return std::exp(-d * d * n / (2.0 * ab));
}

std::uint64_t chappell_gimbel_upper(std::size_t k, std::size_t t) {
  if (t < 1 || k <= t) throw DomainError("chappell_gimbel_upper requires t >= 1 and k > t");
  const unsigned __int128 total =
      static_cast<unsigned __int128>(k - t - 1) * binomial(2 * (t - 1), t - 1) + binomial(2 * t, t);
  if (total > std::numeric_limits<std::uint64_t>::max()) throw DomainError("bound overflows 64 bits");
  return static_cast<std::uint64_t>(total);
}

std::optional<std::size_t> chappell_gimbel_exact(std::size_t k, std::size_t t) {
  if (t < 1 || k <= t) throw DomainError("chappell_gimbel_exact requires t >= 1 and k > t");
  if (4 * t > k + 2) return std::nullopt;
  return k + 2 * t - 2;
}

std::size_t chappell_gimbel_lower(std::size_t k, std::size_t t) {
  if (t < 1 || 2 * t > k + 1) throw DomainError("the construction needs 1 <= t <= (k+1)/2");
  return k + 2 * t - 2;
}

Bracket conclusion_brackets(double alpha) {
  if (alpha > 0.5 && alpha <= 1.0) {
    return {Regime::exponential, 0.5 * lambda_star(1.0 - alpha), 2.0 * alpha * std::numbers::ln2};
  }
  if (alpha >= 0.25 && alpha < 0.5) {
    return {Regime::linear, 2.0 * alpha + 1.0, std::sqrt(1.0 / (0.5 - alpha) + 1.0)};
  }
  throw DomainError("alpha must lie in [1/4, 1/2) or (1/2, 1]");
}

}  // namespace qramsey::bounds
