#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dualspline {

/// Interior knot with its multiplicity.
struct Knot {
  double position = 0.0;
  int multiplicity = 1;

  friend bool operator==(const Knot&, const Knot&) = default;
};

/**
 * Clamped knot vector on [0,1].
 *
 * Holds the degree n and the interior knots t_1 <= ... <= t_m (stored as
 * distinct positions with multiplicities). The flat sequence
 * t_{-n}, ..., t_{n+m+1} has n+1 zeros, the interior knots repeated by
 * multiplicity and n+1 ones, i.e. 2n+m+2 entries.
 *
 * Knots are addressed in two ways:
 *  - full()[k] is the flat sequence starting at t_{-n};
 *  - knot(i) is t_i in the signed numbering, clamped to 0 for i <= 0 and
 *    to 1 for i > m. The clamping makes the same object usable as the
 *    knot vector of any higher degree over the same interior knots.
 *
 * Immutable after construction.
 */
class KnotVector {
 public:
  /// Validates and builds; throws ValidationError on bad input.
  KnotVector(int degree, std::vector<Knot> interior);

  int degree() const { return degree_; }
  /// m, the number of interior knots counted with multiplicity.
  int interior_count() const { return static_cast<int>(flat_interior_.size()); }
  /// n+m+1, the dimension of the spline space.
  int dimension() const { return degree_ + interior_count() + 1; }

  std::span<const Knot> interior() const { return interior_; }
  std::span<const double> interior_flat() const { return flat_interior_; }
  std::span<const double> full() const { return full_; }

  /// t_i in the signed numbering (see class comment).
  double knot(int i) const;

  /// 0, the distinct interior positions, 1.
  std::vector<double> breakpoints() const;

  /// Knot vector of the same degree keeping the first k interior knots
  /// (counted with multiplicity).
  KnotVector prefix(int k) const;

  /// Same interior knots, different degree. Multiplicities must stay
  /// admissible for the new degree.
  KnotVector with_degree(int degree) const;

  /// True when every interior knot of `coarse` occurs here with at least
  /// the same multiplicity.
  bool contains(const KnotVector& coarse) const;

  bool has_multiple_interior_knots() const;

  friend bool operator==(const KnotVector& a, const KnotVector& b) {
    return a.degree_ == b.degree_ && a.interior_ == b.interior_;
  }

 private:
  int degree_;
  std::vector<Knot> interior_;
  std::vector<double> flat_interior_;
  std::vector<double> full_;
};

KnotVector make_knot_vector(int degree, std::vector<Knot> interior);

/// Builds a knot vector from a flat, non-decreasing list of interior knots
/// (repeated entries become multiplicities).
KnotVector knot_vector_from_flat(int degree, std::span<const double> interior);

/// Removes one occurrence of each listed position from the interior knots.
/// Positions are matched within `tolerance`; a position that is not
/// present (or already used up) is a ValidationError.
KnotVector drop_knots(const KnotVector& kv, std::span<const double> positions,
                      double tolerance = 1e-12);

/// Reproducible random knot vector with `interior_count` interior knots
/// (counted with multiplicity). Roughly a quarter of the distinct knots get
/// a random multiplicity up to the degree. Adjacent breakpoints are kept at
/// least 0.1/(distinct+1) apart so the space stays well conditioned.
KnotVector random_knot_vector(int degree, int interior_count, std::uint64_t seed);

}  // namespace dualspline
