#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewforms/exterior.hpp"
#include "skewforms/scalars.hpp"

namespace skewforms {

class DependentGenerators : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Span of linearly independent alternating forms, with X_k the coordinate
/// dual to the k-th generator.
class LinearSystem {
 public:
  /// Throws DependentGenerators when the forms are linearly dependent or
  /// the list is empty or longer than 15.
  explicit LinearSystem(std::vector<AlternatingForm> generators);

  std::size_t size() const { return gens_.size(); }
  const std::vector<AlternatingForm>& generators() const { return gens_; }
  const AlternatingForm& operator[](std::size_t k) const { return gens_[k]; }

  AlternatingForm combination(const QVec& coeffs) const;
  /// Coordinates of w in the generator basis, if w lies in the span.
  std::optional<QVec> coordinates(const AlternatingForm& w) const;
  bool contains(const AlternatingForm& w) const { return coordinates(w).has_value(); }
  bool contains(const LinearSystem& other) const;
  bool same_span(const LinearSystem& other) const;
  LinearSystem transformed(const GroupElement& g) const;
  /// Generators as the rows of a size() x 15 matrix.
  QMatrix generator_matrix() const;

 private:
  std::vector<AlternatingForm> gens_;
};

/// Pf(M_A) as a cubic in X_0..X_n (possibly zero).
MultiPoly<Rational> pfaffian_cubic(const LinearSystem& a);

struct GenericRankReport {
  int rank = 0;
  bool pfaffian_vanishes = false;  ///< certified: rank <= 4 everywhere iff true
  int samples = 0;
};
/// Maximum rank over `samples` random integer combinations, with the
/// 6-versus-at-most-4 split certified by the Pfaffian cubic.
GenericRankReport generic_rank(const LinearSystem& a, std::uint64_t seed = 0, int samples = 50);

/// Basis of the annihilator of A inside the bivectors.
std::vector<BiVector> orthogonal(const LinearSystem& a);

struct GrIntersectionReport {
  std::map<std::uint32_t, std::uint64_t> counts;
  std::string type;
  std::vector<AlternatingForm> samples;
};

/// Number of points of P(A)(F_p) of rank at most 2.
std::uint64_t count_rank2_points(const LinearSystem& a, std::uint32_t p, unsigned jobs = 1);
/// Matches per-prime counts against the known signatures (empty, 2-points,
/// conic, 2-lines, 2-planes); "other" if none fits every prime.
std::string classify_count_signature(const std::map<std::uint32_t, std::uint64_t>& counts);
GrIntersectionReport gr_intersection(const LinearSystem& a, const std::vector<std::uint32_t>& primes,
                                     unsigned jobs = 1);

/// True iff Pf(s w + t w') vanishes identically in (s, t).
bool line_in_pfaffian(const AlternatingForm& w, const AlternatingForm& w2);

/// The 6x6 matrix of linear forms M_A.
std::array<std::array<MultiPoly<Rational>, kDim>, kDim> matrix_of_linear_forms(const LinearSystem& a);

}  // namespace skewforms
