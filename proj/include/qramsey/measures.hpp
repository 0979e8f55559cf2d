#pragma once

#include <cstddef>

#include "qramsey/graph.hpp"

namespace qramsey {

// D(X) = e(X) - C(|X|,2)/2. Zero for |X| <= 1.
double discrepancy(const Graph& g, const VertexSet& x);

// D_nu(X) = |D(X)| - nu * sqrt(|X|^3 ln|X|). The empty set and singletons
// score 0. Throws DomainError for nu < 0.
double skew_discrepancy(const Graph& g, const VertexSet& x, double nu);

// Same functionals from precomputed counts (edges inside a set of `order`
// vertices); the local search evaluates moves with these.
double discrepancy_from_counts(std::size_t edges, std::size_t order) noexcept;
double skew_penalty(std::size_t order, double nu) noexcept;
double skew_from_counts(std::size_t edges, std::size_t order, double nu) noexcept;

// The degree every vertex of a removal-stable set keeps on the winning side:
// (|X|-1)/2 + nu * sqrt(|X| ln|X|).
double removal_stable_degree_bound(std::size_t order, double nu) noexcept;

}  // namespace qramsey
