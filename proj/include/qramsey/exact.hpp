#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qramsey/canonical.hpp"
#include "qramsey/graph.hpp"

namespace qramsey::exact {

// Graph side on which s induces minimum degree >= t; the graph side wins
// ties. nullopt when neither side qualifies.
std::optional<Side> is_homogeneous(const Graph& g, const VertexSet& s, double t);

// Degree threshold t(l) for the variable problem, with a stable identifier
// for certificates. Named forms accepted by parse_threshold:
//   const:T          t(l) = T
//   ratio:A          t(l) = A l
//   half-plus-nu:NU  t(l) = (l-1)/2 + NU sqrt((l-1) ln l)
//   weighted:NU      t(l) = (1/2 - l^{-NU}) (l-1)
struct ThresholdFunction {
  std::string id;
  std::function<double(std::size_t)> value;
};

ThresholdFunction parse_threshold(const std::string& spec);
ThresholdFunction constant_threshold(double t);

enum class ClaimType { fixed, variable };

const char* to_string(ClaimType claim) noexcept;

// Negative certificate: no subset of the required order(s) is homogeneous.
// A refuted claim carries the first homogeneous set found.
struct LowerBoundCertificate {
  std::string graph6;
  std::size_t order = 0;
  ClaimType claim = ClaimType::fixed;
  std::size_t k = 0;
  double t = 0.0;                // fixed claims
  std::string threshold_id;      // variable claims
  std::uint64_t subsets_checked = 0;
  double elapsed_seconds = 0.0;
  bool verified = false;
  bool asymptotic = false;       // whether an asymptotic guarantee applies to this instance
  std::optional<VertexSet> violating_set;
  std::optional<Side> violating_side;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000'000ULL;
// Exhaustive verifiers pack subsets into one machine word.
inline constexpr std::size_t kMaxVerifyOrder = 64;

// Checks all C(n,k) subsets (descending vertex extremeness |2 deg - (n-1)|
// first). Throws BudgetExceeded once more than `budget` subsets would be
// examined.
LowerBoundCertificate verify_no_homogeneous_fixed(const Graph& g, std::size_t k, double t,
                                                  std::uint64_t budget = kDefaultBudget);

// Checks every subset of order l >= k against threshold(l).
LowerBoundCertificate verify_no_homogeneous_variable(const Graph& g, std::size_t k, const ThresholdFunction& threshold,
                                                     std::uint64_t budget = kDefaultBudget);

// sum_{l >= k} C(n, l) for the variable claim, C(n, k) for the fixed one.
std::uint64_t subsets_required(std::size_t n, std::size_t k, ClaimType claim);

struct ExactOptions {
  std::uint64_t budget = kDefaultBudget;  // subsets examined over the whole run
  unsigned threads = 1;
  std::size_t ceiling = 10;               // largest order enumerated
};

struct OrderStats {
  std::size_t order = 0;
  std::size_t graphs = 0;      // isomorphism classes enumerated
  std::size_t checked = 0;     // classes verified (complement pairs checked once)
  std::uint64_t subsets = 0;
  bool all_contain = false;
};

struct ExactResult {
  ClaimType claim = ClaimType::fixed;
  std::size_t k = 0;
  std::size_t t = 0;           // fixed problem
  std::string threshold_id;    // variable problem
  std::size_t value = 0;
  Graph witness_graph;         // order value-1, no qualifying set
  std::vector<OrderStats> orders;
  std::uint64_t subsets_examined = 0;
};

// R*_t(k): least n such that every graph on n vertices has a t-homogeneous
// set of order exactly k. Scans n = k, k+1, ... over isomorph-free
// enumerations. On budget or ceiling exhaustion throws BudgetExceeded /
// CeilingExceeded with lower() = the best proven lower bound.
ExactResult exact_fixed(std::size_t t, std::size_t k, const ExactOptions& options = {});

// R_f(k) for the given threshold function f.
ExactResult exact_variable(const ThresholdFunction& threshold, std::size_t k, const ExactOptions& options = {});

}  // namespace qramsey::exact
