#include "qramsey/measures.hpp"

#include <cmath>

#include "qramsey/errors.hpp"

namespace qramsey {

double discrepancy_from_counts(std::size_t edges, std::size_t order) noexcept {
  if (order <= 1) return 0.0;
  const double pairs = 0.5 * static_cast<double>(order) * static_cast<double>(order - 1);
  return static_cast<double>(edges) - 0.5 * pairs;
}

double skew_penalty(std::size_t order, double nu) noexcept {
  if (order <= 1 || nu == 0.0) return 0.0;
  const double m = static_cast<double>(order);
  return nu * std::sqrt(m * m * m * std::log(m));
}

double skew_from_counts(std::size_t edges, std::size_t order, double nu) noexcept {
  return std::fabs(discrepancy_from_counts(edges, order)) - skew_penalty(order, nu);
}

double removal_stable_degree_bound(std::size_t order, double nu) noexcept {
  const double m = static_cast<double>(order);
  const double slack = order <= 1 ? 0.0 : nu * std::sqrt(m * std::log(m));
  return 0.5 * (m - 1.0) + slack;
}

double discrepancy(const Graph& g, const VertexSet& x) {
  return discrepancy_from_counts(edge_count(g, x), x.size());
}

double skew_discrepancy(const Graph& g, const VertexSet& x, double nu) {
  if (!(nu >= 0.0)) throw DomainError("skew weight nu must be nonnegative");
  return skew_from_counts(edge_count(g, x), x.size(), nu);
}

}  // namespace qramsey
