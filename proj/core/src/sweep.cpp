#include "molecule/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "molecule/counting.hpp"
#include "molecule/errors.hpp"

namespace molecule {

void sort_centers(std::vector<Center>& centers) {
  std::sort(centers.begin(), centers.end(), [](const Center& a, const Center& b) {
    if (a.c.real() != b.c.real()) return a.c.real() < b.c.real();
    return a.c.imag() < b.c.imag();
  });
}

namespace {

// One Jacobi sweep of Aberth corrections for roots [begin, end).
void aberth_corrections(unsigned n, const std::vector<ComplexParam>& roots, const std::vector<char>& frozen,
                        std::vector<ComplexParam>& corrections, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (frozen[i]) {
      corrections[i] = 0.0;
      continue;
    }
    const ComplexParam ratio = critical_newton_ratio(n, roots[i]);
    ComplexParam repulsion = 0.0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i) repulsion += 1.0 / (roots[i] - roots[j]);
    }
    corrections[i] = ratio / (1.0 - ratio * repulsion);
  }
}

}  // namespace

SweepResult all_centers_sweep(unsigned n, const SweepConfig& cfg) {
  if (n == 0) throw DomainError("all_centers_sweep: n must be positive");
  if (n > cfg.sweep_limit) {
    throw DomainError("period " + std::to_string(n) + " above the sweep limit " + std::to_string(cfg.sweep_limit));
  }
  SweepResult result;
  result.n = n;
  result.expected = total_component_count(n);

  if (n == 1) {
    result.centers.push_back(Center{0.0, 1, std::nullopt, 0.0});
    result.roots_found = 1;
    result.min_separation = std::numeric_limits<double>::infinity();
    return result;
  }

  const std::size_t degree = std::size_t{1} << (n - 1);
  std::vector<ComplexParam> roots(degree);
  // Equal spacing on |c| = 2 rotated by an irrational fraction of the spacing.
  const double spacing = 2.0 * std::numbers::pi / static_cast<double>(degree);
  const double offset = spacing * (std::numbers::sqrt2 - 1.0);
  for (std::size_t k = 0; k < degree; ++k) roots[k] = std::polar(2.0, offset + spacing * static_cast<double>(k));

  std::vector<char> frozen(degree, 0);
  std::vector<ComplexParam> corrections(degree);
  std::vector<double> last_size(degree, std::numeric_limits<double>::infinity());
  const unsigned workers = std::max(1U, cfg.workers);
  unsigned iteration = 0;
  for (; iteration < cfg.max_iterations; ++iteration) {
    if (workers == 1) {
      aberth_corrections(n, roots, frozen, corrections, 0, degree);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (degree + workers - 1) / workers;
      for (std::size_t begin = 0; begin < degree; begin += chunk) {
        pool.emplace_back([&, begin] {
          aberth_corrections(n, roots, frozen, corrections, begin, std::min(degree, begin + chunk));
        });
      }
    }
    bool all_frozen = true;
    for (std::size_t i = 0; i < degree; ++i) {
      if (frozen[i]) continue;
      roots[i] -= corrections[i];
      if (!std::isfinite(std::abs(roots[i]))) {
        throw ConvergenceError("Aberth iteration produced a non-finite root", 0, iteration);
      }
      const double size = std::abs(corrections[i]);
      const double scale = std::max(1.0, std::abs(roots[i]));
      // Converged, or stuck at the rounding floor after getting close.
      const bool stalled = size < 1e-10 * scale && size > 0.5 * last_size[i];
      last_size[i] = size;
      if (size <= cfg.root_tol * scale || stalled) {
        frozen[i] = 1;
      } else {
        all_frozen = false;
      }
    }
    if (all_frozen) break;
  }
  if (iteration == cfg.max_iterations) {
    throw ConvergenceError("Aberth iteration did not converge for period " + std::to_string(n), 0, iteration);
  }
  result.iterations = iteration + 1;
  result.roots_found = degree;

  // Separation over every root of Q_n: tiny gaps mean two approximations merged.
  std::vector<ComplexParam> sorted = roots;
  std::sort(sorted.begin(), sorted.end(),
            [](ComplexParam a, ComplexParam b) { return a.real() < b.real(); });
  double min_sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < degree; ++i) {
    for (std::size_t j = i + 1; j < degree && sorted[j].real() - sorted[i].real() < min_sep; ++j) {
      min_sep = std::min(min_sep, std::abs(sorted[j] - sorted[i]));
    }
  }
  result.min_separation = min_sep;
  if (!(min_sep > cfg.distinct_tol)) {
    result.failures.push_back("two roots of Q_" + std::to_string(n) + " closer than distinct_tol (" +
                              std::to_string(min_sep) + ")");
  }

  for (const ComplexParam& c : roots) {
    if (primitive_period(c, n, cfg.classify_tol) != n) continue;
    const double residual = std::abs(critical_poly(n, c).value);
    if (!(residual <= cfg.residual_tol)) {
      result.failures.push_back("root " + std::to_string(c.real()) + "+" + std::to_string(c.imag()) +
                                "i has residual " + std::to_string(residual));
    }
    result.centers.push_back(Center{c, n, std::nullopt, residual});
  }
  sort_centers(result.centers);
  if (BigCount(result.centers.size()) != result.expected) {
    result.failures.push_back("found " + std::to_string(result.centers.size()) + " exact-period centers, expected " +
                              result.expected.to_string());
  }
  return result;
}

}  // namespace molecule
