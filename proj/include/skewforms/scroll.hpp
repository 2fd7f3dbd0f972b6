#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "skewforms/exterior.hpp"
#include "skewforms/finite_field.hpp"
#include "skewforms/linsys.hpp"
#include "skewforms/planes.hpp"

namespace skewforms {

class NotInPlane : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The scroll attached to a general-type plane B: its (C, D, f) datum, the
/// span of the Gauss images of B and Lambda, the forms annihilating that span.
struct ScrollDatum {
  LinearSystem base;
  CDFDatum cdf;
  std::vector<BiVector> gauss_span;
  std::vector<AlternatingForm> lambda;  ///< basis, 9 forms
};

/// Throws NotGeneralType when B is not a general-type plane.
ScrollDatum make_scroll(const LinearSystem& b);

/// x^y in the square of C with w = x^f(y) - y^f(x). Throws NotInPlane.
AlternatingForm rho(const ScrollDatum& z, const AlternatingForm& w);

/// t0^2 rho(w) + t0 t1 w + t1^2 f(x)^f(y), which equals
/// (t0 x + t1 f(x)) ^ (t0 y + t1 f(y)). Throws NotInPlane.
AlternatingForm psi(const ScrollDatum& z, const AlternatingForm& w, const Rational& t0, const Rational& t1);

/// The p + 1 fiber points over w in P^1(F_p) order, each normalized
/// projectively. Throws NotInPlane, or BadPrime when p divides a
/// denominator.
std::vector<FpForm> conic_fiber(const ScrollDatum& z, const AlternatingForm& w, std::uint32_t p);

/// theta lies in Lambda and has rank 2.
bool z_membership(const ScrollDatum& z, const AlternatingForm& theta);

/// Dimension of the span of the Pluecker quadrics restricted to the span of
/// the given forms, minus one.
int restricted_quadric_system_dim(const std::vector<AlternatingForm>& basis);
int restricted_quadric_system_dim(const ScrollDatum& z);

/// Points of the scroll over F_p, counted as distinct images of psi over
/// P(B)(F_p) x P^1(F_p).
std::uint64_t scroll_image_count(const ScrollDatum& z, std::uint32_t p, unsigned jobs = 1);
/// Points of P(Lambda)(F_p) of rank at most 2.
std::uint64_t lambda_grassmannian_count(const ScrollDatum& z, std::uint32_t p, unsigned jobs = 1);

}  // namespace skewforms
