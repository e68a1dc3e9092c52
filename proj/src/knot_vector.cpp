#include "dualspline/knot_vector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dualspline/errors.hpp"

namespace dualspline {

namespace {

// Degree-0 splines are piecewise constants; a simple knot there is the only
// way to have interior knots at all.
int max_multiplicity(int degree) { return std::max(degree, 1); }

}  // namespace

KnotVector::KnotVector(int degree, std::vector<Knot> interior)
    : degree_(degree), interior_(std::move(interior)) {
  if (degree_ < 0) {
    throw ValidationError("degree must be non-negative, got " + std::to_string(degree_));
  }
  double previous = 0.0;
  for (const Knot& k : interior_) {
    if (!(k.position > 0.0 && k.position < 1.0)) {
      throw ValidationError("interior knot " + std::to_string(k.position) +
                            " outside the open interval (0,1)");
    }
    if (k.position <= previous) {
      throw ValidationError("interior knot positions must be strictly increasing");
    }
    if (k.multiplicity < 1) {
      throw ValidationError("knot multiplicity must be at least 1");
    }
    if (k.multiplicity > max_multiplicity(degree_)) {
      throw ValidationError("multiplicity " + std::to_string(k.multiplicity) + " of knot " +
                            std::to_string(k.position) + " exceeds degree " +
                            std::to_string(degree_));
    }
    previous = k.position;
    flat_interior_.insert(flat_interior_.end(), k.multiplicity, k.position);
  }
  full_.reserve(2 * degree_ + flat_interior_.size() + 2);
  full_.insert(full_.end(), degree_ + 1, 0.0);
  full_.insert(full_.end(), flat_interior_.begin(), flat_interior_.end());
  full_.insert(full_.end(), degree_ + 1, 1.0);
}

double KnotVector::knot(int i) const {
  if (i <= 0) return 0.0;
  if (i > interior_count()) return 1.0;
  return flat_interior_[i - 1];
}

std::vector<double> KnotVector::breakpoints() const {
  std::vector<double> out;
  out.reserve(interior_.size() + 2);
  out.push_back(0.0);
  for (const Knot& k : interior_) out.push_back(k.position);
  out.push_back(1.0);
  return out;
}

KnotVector KnotVector::prefix(int k) const {
  if (k < 0 || k > interior_count()) {
    throw ValidationError("prefix length " + std::to_string(k) + " out of range");
  }
  return knot_vector_from_flat(degree_, std::span(flat_interior_).first(k));
}

KnotVector KnotVector::with_degree(int degree) const { return KnotVector(degree, interior_); }

bool KnotVector::contains(const KnotVector& coarse) const {
  auto it = interior_.begin();
  for (const Knot& c : coarse.interior_) {
    it = std::find_if(it, interior_.end(), [&](const Knot& f) { return f.position >= c.position; });
    if (it == interior_.end() || it->position != c.position || it->multiplicity < c.multiplicity) {
      return false;
    }
  }
  return true;
}

bool KnotVector::has_multiple_interior_knots() const {
  return std::any_of(interior_.begin(), interior_.end(),
                     [](const Knot& k) { return k.multiplicity > 1; });
}

KnotVector make_knot_vector(int degree, std::vector<Knot> interior) {
  return KnotVector(degree, std::move(interior));
}

KnotVector knot_vector_from_flat(int degree, std::span<const double> interior) {
  std::vector<Knot> knots;
  for (double t : interior) {
    if (!knots.empty() && knots.back().position == t) {
      ++knots.back().multiplicity;
    } else {
      knots.push_back({t, 1});
    }
  }
  return KnotVector(degree, std::move(knots));
}

KnotVector drop_knots(const KnotVector& kv, std::span<const double> positions, double tolerance) {
  std::vector<Knot> knots(kv.interior().begin(), kv.interior().end());
  for (double p : positions) {
    auto it = std::find_if(knots.begin(), knots.end(), [&](const Knot& k) {
      return k.multiplicity > 0 && std::abs(k.position - p) <= tolerance;
    });
    if (it == knots.end()) {
      throw ValidationError("knot " + std::to_string(p) + " is not an interior knot");
    }
    --it->multiplicity;
  }
  std::erase_if(knots, [](const Knot& k) { return k.multiplicity == 0; });
  return KnotVector(kv.degree(), std::move(knots));
}

KnotVector random_knot_vector(int degree, int interior_count, std::uint64_t seed) {
  if (degree < 0 || interior_count < 0) {
    throw ValidationError("random_knot_vector: degree and knot count must be non-negative");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> mults;
  for (int remaining = interior_count; remaining > 0;) {
    const int cap = std::min(max_multiplicity(degree), remaining);
    int mult = 1;
    if (cap > 1 && unit(rng) < 0.25) {
      mult = std::uniform_int_distribution<int>(1, cap)(rng);
    }
    mults.push_back(mult);
    remaining -= mult;
  }
  const std::size_t count = mults.size();
  const double min_gap = 0.1 / static_cast<double>(count + 1);
  std::vector<double> pos(count);
  for (;;) {
    for (double& p : pos) p = unit(rng);
    std::sort(pos.begin(), pos.end());
    bool ok = true;
    double prev = 0.0;
    for (double p : pos) {
      ok = ok && p - prev >= min_gap;
      prev = p;
    }
    if (ok && 1.0 - prev >= min_gap) break;
  }
  std::vector<Knot> knots(count);
  for (std::size_t k = 0; k < count; ++k) knots[k] = {pos[k], mults[k]};
  return KnotVector(degree, std::move(knots));
}

}  // namespace dualspline
