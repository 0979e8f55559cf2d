#include "qramsey/exact.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "qramsey/errors.hpp"
#include "qramsey/graph6.hpp"

namespace qramsey::exact {

namespace {

// Graph packed into one word per row, with vertices listed in scan order.
struct WordGraph {
  std::size_t n = 0;
  std::array<std::uint64_t, kMaxVerifyOrder> rows{};
  std::array<Vertex, kMaxVerifyOrder> order{};
};

WordGraph pack(const Graph& g) {
  if (g.order() > kMaxVerifyOrder) {
    throw DomainError("exhaustive verification supports at most " + std::to_string(kMaxVerifyOrder) + " vertices");
  }
  WordGraph w;
  w.n = g.order();
  for (Vertex v = 0; v < w.n; ++v) {
    w.rows[v] = w.n == 0 ? 0 : g.row(v)[0];
    w.order[v] = v;
  }
  // Extreme degrees first: they are the likeliest members of a homogeneous set.
  auto extremeness = [&](Vertex v) {
    const long twice = 2 * static_cast<long>(g.degree(v)) - static_cast<long>(w.n) + 1;
    return twice < 0 ? -twice : twice;
  };
  std::stable_sort(w.order.begin(), w.order.begin() + static_cast<long>(w.n),
                   [&](Vertex a, Vertex b) { return extremeness(a) > extremeness(b); });
  return w;
}

std::optional<Side> homogeneous_side(const WordGraph& w, std::uint64_t mask, std::size_t size, double t) {
  bool graph_ok = true;
  bool complement_ok = true;
  for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
    const auto v = static_cast<std::size_t>(__builtin_ctzll(bits));
    const auto d = static_cast<std::size_t>(__builtin_popcountll(w.rows[v] & mask));
    if (static_cast<double>(d) < t) graph_ok = false;
    if (static_cast<double>(size - 1 - d) < t) complement_ok = false;
    if (!graph_ok && !complement_ok) return std::nullopt;
  }
  if (graph_ok) return Side::graph;
  return Side::complement;
}

// Scans all subsets of `size` vertices; stops at the first homogeneous one.
bool scan_size(const WordGraph& w, std::size_t size, double t, std::uint64_t budget, LowerBoundCertificate& cert) {
  const std::size_t n = w.n;
  if (size > n || size == 0) return false;
  std::array<std::size_t, kMaxVerifyOrder> idx{};
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    if (cert.subsets_checked >= budget) {
      throw BudgetExceeded("verification budget of " + std::to_string(budget) + " subsets exhausted", 0);
    }
    ++cert.subsets_checked;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < size; ++i) mask |= std::uint64_t{1} << w.order[idx[i]];
    if (auto side = homogeneous_side(w, mask, size, t)) {
      std::vector<Vertex> members;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        members.push_back(static_cast<Vertex>(__builtin_ctzll(bits)));
      }
      cert.violating_set = VertexSet(std::move(members));
      cert.violating_side = side;
      return true;
    }
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

double parse_number(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(value)) {
    throw DomainError("bad numeric parameter in threshold '" + spec + "'");
  }
  return value;
}

using Verifier = std::function<LowerBoundCertificate(const Graph&, std::uint64_t)>;

ExactResult run_exact(ExactResult result, const Verifier& verify, const ExactOptions& options) {
  const std::size_t k = result.k;
  const std::size_t ceiling = std::min(options.ceiling, kMaxCanonicalOrder);
  const unsigned threads = std::max(1U, options.threads);
  // No graph on k-1 vertices has a k-set at all.
  result.witness_graph = Graph(k - 1);
  if (k > ceiling) throw CeilingExceeded("k exceeds the enumeration ceiling", k);

  std::vector<SmallGraph> level = enumerate_small(k, ceiling, threads);
  for (std::size_t n = k;; ++n) {
    if (n > ceiling) {
      throw CeilingExceeded("enumeration ceiling of " + std::to_string(ceiling) + " vertices reached; value >= " +
                                std::to_string(n),
                            n);
    }
    if (n > k) level = augment(level, threads);

    OrderStats stats;
    stats.order = n;
    stats.graphs = level.size();
    // A graph and its complement share their homogeneity status: check the
    // class with the smaller canonical code only.
    Labeling identity{};
    for (std::size_t i = 0; i < kMaxSmallOrder; ++i) identity[i] = static_cast<std::uint8_t>(i);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (labeling_code(level[i], identity) <= canonical_code(level[i].complement())) candidates.push_back(i);
    }
    stats.checked = candidates.size();

    const std::uint64_t remaining = options.budget - result.subsets_examined;
    std::vector<LowerBoundCertificate> certs(candidates.size());
    std::vector<char> over_budget(candidates.size(), 0);
    std::atomic<std::size_t> first_hit{candidates.size()};
    auto work = [&](std::size_t i) {
      if (i > first_hit.load()) return;
      try {
        certs[i] = verify(level[candidates[i]].to_graph(), remaining);
      } catch (const BudgetExceeded&) {
        over_budget[i] = 1;
        return;
      }
      if (certs[i].verified) {
        std::size_t seen = first_hit.load();
        while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
        }
      }
    };
    if (threads == 1) {
      for (std::size_t i = 0; i < candidates.size() && i <= first_hit.load(); ++i) {
        work(i);
        if (over_budget[i]) break;
      }
    } else {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t i = w; i < candidates.size(); i += threads) work(i);
        });
      }
    }

    // Sequential accounting keeps counts independent of the thread count.
    std::optional<std::size_t> counterexample;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (over_budget[i] || result.subsets_examined + certs[i].subsets_checked > options.budget) {
        throw BudgetExceeded("budget of " + std::to_string(options.budget) + " subsets exhausted at order " +
                                 std::to_string(n) + "; value >= " + std::to_string(n),
                             n);
      }
      result.subsets_examined += certs[i].subsets_checked;
      stats.subsets += certs[i].subsets_checked;
      if (certs[i].verified) {
        counterexample = candidates[i];
        break;
      }
    }
    if (!counterexample) {
      stats.all_contain = true;
      result.orders.push_back(stats);
      result.value = n;
      return result;
    }
    result.orders.push_back(stats);
    result.witness_graph = level[*counterexample].to_graph();
  }
}

}  // namespace

const char* to_string(ClaimType claim) noexcept {
  return claim == ClaimType::fixed ? "fixed" : "variable";
}

std::optional<Side> is_homogeneous(const Graph& g, const VertexSet& s, double t) {
  ensure_valid(g, s);
  if (static_cast<double>(min_degree(g, s, Side::graph)) >= t) return Side::graph;
  if (static_cast<double>(min_degree(g, s, Side::complement)) >= t) return Side::complement;
  return std::nullopt;
}

ThresholdFunction constant_threshold(double t) {
  return {"const:" + std::to_string(t), [t](std::size_t) { return t; }};
}

ThresholdFunction parse_threshold(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("threshold must look like name:value, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const double x = parse_number(spec.substr(colon + 1), spec);
  if (name == "const") return {spec, [x](std::size_t) { return x; }};
  if (name == "ratio") return {spec, [x](std::size_t l) { return x * static_cast<double>(l); }};
  if (name == "half-plus-nu") {
    return {spec, [x](std::size_t l) {
              const double ld = static_cast<double>(l);
              return 0.5 * (ld - 1.0) + (l < 2 ? 0.0 : x * std::sqrt((ld - 1.0) * std::log(ld)));
            }};
  }
  if (name == "weighted") {
    return {spec, [x](std::size_t l) {
              const double ld = static_cast<double>(l);
              return (0.5 - std::pow(ld, -x)) * (ld - 1.0);
            }};
  }
  throw DomainError("unknown threshold function '" + name + "'");
}

std::uint64_t subsets_required(std::size_t n, std::size_t k, ClaimType claim) {
  if (claim == ClaimType::fixed) return binomial_saturating(n, k);
  std::uint64_t total = 0;
  for (std::size_t l = k; l <= n; ++l) {
    const std::uint64_t c = binomial_saturating(n, l);
    total = c > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max()
                                                                   : total + c;
  }
  return total;
}

LowerBoundCertificate verify_no_homogeneous_fixed(const Graph& g, std::size_t k, double t, std::uint64_t budget) {
  if (k < 1) throw DomainError("k must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  LowerBoundCertificate cert;
  cert.graph6 = encode_graph6(g);
  cert.order = g.order();
  cert.claim = ClaimType::fixed;
  cert.k = k;
  cert.t = t;
  if (k <= g.order()) {
    const WordGraph w = pack(g);
    cert.verified = !scan_size(w, k, t, budget, cert);
  } else {
    cert.verified = true;
  }
  cert.elapsed_seconds = seconds_since(start);
  return cert;
}

LowerBoundCertificate verify_no_homogeneous_variable(const Graph& g, std::size_t k, const ThresholdFunction& threshold,
                                                     std::uint64_t budget) {
  if (k < 1) throw DomainError("k must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  LowerBoundCertificate cert;
  cert.graph6 = encode_graph6(g);
  cert.order = g.order();
  cert.claim = ClaimType::variable;
  cert.k = k;
  cert.threshold_id = threshold.id;
  cert.verified = true;
  if (k <= g.order()) {
    const WordGraph w = pack(g);
    for (std::size_t l = k; l <= g.order(); ++l) {
      if (scan_size(w, l, threshold.value(l), budget, cert)) {
        cert.verified = false;
        break;
      }
    }
  }
  cert.elapsed_seconds = seconds_since(start);
  return cert;
}

ExactResult exact_fixed(std::size_t t, std::size_t k, const ExactOptions& options) {
  if (k < 2) throw DomainError("exact_fixed requires k >= 2");
  if (t >= k) throw DomainError("exact_fixed requires t < k");
  ExactResult seed;
  seed.claim = ClaimType::fixed;
  seed.k = k;
  seed.t = t;
  const double td = static_cast<double>(t);
  return run_exact(
      seed, [k, td](const Graph& g, std::uint64_t budget) { return verify_no_homogeneous_fixed(g, k, td, budget); },
      options);
}

ExactResult exact_variable(const ThresholdFunction& threshold, std::size_t k, const ExactOptions& options) {
  if (k < 2) throw DomainError("exact_variable requires k >= 2");
  ExactResult seed;
  seed.claim = ClaimType::variable;
  seed.k = k;
  seed.threshold_id = threshold.id;
  return run_exact(
      seed,
      [k, &threshold](const Graph& g, std::uint64_t budget) {
        return verify_no_homogeneous_variable(g, k, threshold, budget);
      },
      options);
}

}  // namespace qramsey::exact
