#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "homjet/error.hpp"

namespace homjet {

using Rational = mpq_class;

std::string rational_to_string(const Rational& r);

/// Strict parser for the grammar `int [ "/" posint ]`; no whitespace, no exponents.
Rational parse_rational(const std::string& text);

bool is_squarefree(unsigned long d);

/// A field discriminant is valid when it is squarefree and >= 1 (1 means plain Q).
void require_valid_discriminant(unsigned long d);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d = 1 denotes plain Q and forces b = 0; every operation normalizes a
/// vanishing irrational part back to d = 1, so values from Q embed into any
/// extension. Combining two values with distinct d > 1 throws: a computation
/// lives in a single quadratic extension.
class Scalar {
public:
  Scalar() : m_a(0), m_b(0), m_d(1) {}
  Scalar(int v) : m_a(v), m_b(0), m_d(1) {}
  Scalar(long v) : m_a(v), m_b(0), m_d(1) {}
  Scalar(const Rational& a) : m_a(a), m_b(0), m_d(1) { mpq_canonicalize(m_a.get_mpq_t()); }
  Scalar(Rational a, Rational b, unsigned long d);

  static Scalar sqrt_of(unsigned long d) { return Scalar(Rational(0), Rational(1), d); }

  const Rational& rat_part() const { return m_a; }
  const Rational& irr_part() const { return m_b; }
  unsigned long d() const { return m_d; }

  bool is_zero() const { return sgn(m_a) == 0 && sgn(m_b) == 0; }
  bool is_rational() const { return m_d == 1; }

  /// Exact sign in the real embedding with sqrt(d) > 0.
  int sign() const;

  Scalar conjugate() const { return Scalar(m_a, -m_b, m_d); }
  /// Field norm a^2 - d b^2; zero only for the zero element.
  Rational field_norm() const;

  Scalar operator-() const { return Scalar(-m_a, -m_b, m_d); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  Scalar inverse() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.m_d == y.m_d && x.m_a == y.m_a && x.m_b == y.m_b;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Renders per the scalar grammar, e.g. "-1/2+3/4*sqrt(2)".
  std::string str() const;

private:
  Rational m_a, m_b;
  unsigned long m_d;

  static unsigned long join(unsigned long d1, unsigned long d2);
};

int compare(const Scalar& x, const Scalar& y);
inline bool operator<(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }
inline bool operator>(const Scalar& x, const Scalar& y) { return compare(x, y) > 0; }
inline bool operator<=(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0; }
inline bool operator>=(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0; }

/// Parses `rational | rational ("+"|"-") rational "*sqrt(" posint ")"`.
/// The sqrt argument must equal ambient_d (and ambient_d must not be 1).
Scalar parse_scalar(const std::string& text, unsigned long ambient_d);

std::optional<Rational> rational_sqrt(const Rational& r);

/// Nonnegative square root inside Q(sqrt(ambient_d)), when one exists there.
std::optional<Scalar> sqrt_in_field(const Scalar& s, unsigned long ambient_d);

} // namespace homjet
