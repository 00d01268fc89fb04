#include <cmath>
#include <limits>
#include <vector>

#include "numsg/parallel.hpp"
#include "numsg/relations.hpp"
#include "numsg/simd.hpp"

namespace numsg {

namespace {

std::vector<double> log_axis(double lo, double hi, std::size_t points) {
  std::vector<double> axis(points);
  const double a = std::log(lo), step = (std::log(hi) - a) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) axis[i] = std::exp(a + step * static_cast<double>(i));
  axis.front() = lo;
  axis.back() = hi;
  return axis;
}

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  std::array<double, 3> at{};
};

// Strict improvement only: among equal values the first one seen wins, and
// every caller visits points in lexicographic index order.
void consider(Candidate& best, double value, double a, double b, double c) {
  if (value < best.value) best = {value, {a, b, c}};
}

// Minimum over the points (xs[i], ys[i], zs[i]).
Candidate batch_min(const std::vector<double>& xs, const std::vector<double>& ys,
                    const std::vector<double>& zs) {
  std::vector<double> out(xs.size());
  simd::l_function_batch(xs, ys, zs, out);
  Candidate best;
  for (std::size_t i = 0; i < out.size(); ++i) consider(best, out[i], xs[i], ys[i], zs[i]);
  return best;
}

Candidate cube_min(const std::array<std::vector<double>, 3>& axes, unsigned threads) {
  const auto& x = axes[0];
  const auto& y = axes[1];
  const auto& z = axes[2];
  auto slabs = run_blocks<Candidate>(x.size(), threads, [&](std::size_t i) {
    std::vector<double> xs(y.size() * z.size(), x[i]), ys, zs;
    ys.reserve(xs.size());
    zs.reserve(xs.size());
    for (double b : y) {
      for (double c : z) {
        ys.push_back(b);
        zs.push_back(c);
      }
    }
    return batch_min(xs, ys, zs);
  });
  Candidate best;
  for (const Candidate& c : slabs) consider(best, c.value, c.at[0], c.at[1], c.at[2]);
  return best;
}

// plane 0: (s, s, t); plane 1: (t, s, s); plane 2: (s, t, s).
Candidate plane_min(const std::vector<double>& axis, int plane) {
  std::vector<double> xs, ys, zs;
  for (double s : axis) {
    for (double t : axis) {
      switch (plane) {
        case 0: xs.push_back(s), ys.push_back(s), zs.push_back(t); break;
        case 1: xs.push_back(t), ys.push_back(s), zs.push_back(s); break;
        default: xs.push_back(s), ys.push_back(t), zs.push_back(s); break;
      }
    }
  }
  return batch_min(xs, ys, zs);
}

std::size_t index_of(const std::vector<double>& axis, double v) {
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (axis[i] == v) return i;
  }
  return 0;
}

}  // namespace

double l_function(const RhoVector& rho) {
  for (double r : rho.rho) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw Error(ErrorKind::DomainError, "L(rho) needs finite rho_i > 0");
    }
  }
  double out = 0.0;
  simd::scalar::l_function_batch({&rho.rho[0], 1}, {&rho.rho[1], 1}, {&rho.rho[2], 1}, {&out, 1});
  return out;
}

LMinimum minimize_l(const LGridSpec& spec) {
  if (!(spec.lo > 0.0) || !std::isfinite(spec.hi)) {
    throw Error(ErrorKind::DomainError, "search box must lie in (0, inf)");
  }
  if (!(spec.hi > spec.lo) || spec.points < 2 || spec.refine_points < 2) {
    throw Error(ErrorKind::EmptyGrid, "need lo < hi and at least 2 points per axis");
  }
  const std::vector<double> axis = log_axis(spec.lo, spec.hi, spec.points);
  const Candidate grid = cube_min({axis, axis, axis}, spec.threads);

  std::array<std::vector<double>, 3> local;
  for (std::size_t c = 0; c < 3; ++c) {
    const std::size_t i = index_of(axis, grid.at[c]);
    const double lo = axis[i == 0 ? 0 : i - 1];
    const double hi = axis[std::min(i + 1, axis.size() - 1)];
    local[c] = log_axis(lo, hi, spec.refine_points);
  }
  Candidate refined = cube_min(local, spec.threads);
  if (!(refined.value < grid.value)) refined = grid;

  LMinimum out;
  out.grid = {grid.value, grid.at};
  out.refined = {refined.value, refined.at};
  for (int p = 0; p < 3; ++p) {
    const Candidate c = plane_min(axis, p);
    out.planes[p] = {c.value, c.at};
  }
  return out;
}

}  // namespace numsg
