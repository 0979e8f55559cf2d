#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Closed-form quantities around quasi-Ramsey numbers. Results labelled
// "asymptotic main term" drop an unspecified (1 + o(1)) factor: they
// describe growth and are not valid finite-k bounds.
namespace qramsey::bounds {

// Rate function of a fair coin:
//   x ln(2x) + (1-x) ln(2(1-x))  on (0,1),
//   ln 2 at x = 0 and x = 1 (by continuity), +infinity outside [0,1].
double lambda_star(double x) noexcept;

// Upper bound on Pr(Delta(G(k,1/2)) <= t_bar):
//   exp(-C(k,2) * lambda_star(t_bar / (k-1))).
// Requires k >= 2 and 0 <= t_bar <= (k-1)/2.
double dependent_set_tail(std::size_t t_bar, std::size_t k);

// Asymptotic main terms of the random-graph lower bounds:
//   variable: (k/e) exp((k-1)/2 * lambda_star(1/2 - eps))
//   fixed:    (k/e) exp((k+1)/2 * lambda_star(1/2 - eps))  (local-lemma version)
// For eps > 1/2 the rate is infinite and so is the returned value.
double variable_lower_bound(std::size_t k, double eps);
double fixed_lower_bound_lll(std::size_t k, double eps);
double log_variable_lower_bound(std::size_t k, double eps);
double log_fixed_lower_bound_lll(std::size_t k, double eps);

// 2 eps^2, a lower bound for lambda_star(1/2 - eps) whenever eps >= 0.
double taylor_floor(double eps);

// (t^{3/2} / 1000) sqrt(ln(5n/t)) for 1 <= t <= n.
double erdos_spencer_bound(std::size_t n, std::size_t t);

// exp(eps^2 (k-1) / 2) > k, evaluated in log space.
bool thinning_condition(std::size_t k, double eps);

// Chernoff bound for a hypergeometric X with population N, draws b and
// a successes: Pr(X <= ab/N - d) <= exp(-d^2 N / (2ab)).
double hypergeometric_tail(std::uint64_t population, std::uint64_t draws, std::uint64_t successes, double d);

// (k-t-1) C(2(t-1), t-1) + C(2t, t) for t >= 1, k > t.
std::uint64_t chappell_gimbel_upper(std::size_t k, std::size_t t);
// k + 2t - 2 when 1 <= t <= (k+2)/4, otherwise no closed form.
std::optional<std::size_t> chappell_gimbel_exact(std::size_t k, std::size_t t);
// k + 2t - 2, the order certified by the block construction for t <= (k+1)/2.
std::size_t chappell_gimbel_lower(std::size_t k, std::size_t t);

enum class Regime { exponential, linear };

struct Bracket {
  Regime regime;
  double lower;
  double upper;
};

// Main terms of the brackets for t ~ alpha (k-1):
//   exponential (alpha in (1/2, 1]):  lambda_star(1-alpha)/2 <= ln(R)/k <= 2 alpha ln 2
//   linear (alpha in [1/4, 1/2)):     2 alpha + 1 <= R/k <= sqrt(1/(1/2 - alpha) + 1)
Bracket conclusion_brackets(double alpha);

// Named bound value with its parameters, as emitted in CSV tables.
struct BoundValue {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  double value;
};

}  // namespace qramsey::bounds
