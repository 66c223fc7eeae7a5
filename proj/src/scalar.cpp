#include "homjet/scalar.hpp"

#include <cctype>

namespace homjet {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

bool is_squarefree(unsigned long d) {
  if (d == 0) return false;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

void require_valid_discriminant(unsigned long d) {
  if (d < 1 || !is_squarefree(d))
    throw ValidationError("field discriminant must be a squarefree integer >= 1, got " +
                          std::to_string(d));
}

Scalar::Scalar(Rational a, Rational b, unsigned long d) : m_a(std::move(a)), m_b(std::move(b)), m_d(d) {
  mpq_canonicalize(m_a.get_mpq_t());
  mpq_canonicalize(m_b.get_mpq_t());
  if (sgn(m_b) == 0) {
    m_d = 1;
  } else {
    require_valid_discriminant(d);
    if (d == 1) {  // fold b*sqrt(1) into the rational part
      m_a += m_b;
      m_b = 0;
    }
  }
}

unsigned long Scalar::join(unsigned long d1, unsigned long d2) {
  if (d1 == d2) return d1;
  if (d1 == 1) return d2;
  if (d2 == 1) return d1;
  throw InternalError("mixed quadratic extensions sqrt(" + std::to_string(d1) + ") and sqrt(" +
                      std::to_string(d2) + ")");
}

int Scalar::sign() const {
  int sa = sgn(m_a), sb = sgn(m_b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) compete: compare a^2 against d b^2.
  Rational diff = m_a * m_a - Rational((long)m_d) * m_b * m_b;
  int s = sgn(diff);
  return s == 0 ? 0 : s * sa;  // |a| wins iff a^2 > d b^2; s==0 impossible for squarefree d>1
}

Rational Scalar::field_norm() const { return m_a * m_a - Rational((long)m_d) * m_b * m_b; }

Scalar& Scalar::operator+=(const Scalar& o) {
  m_d = join(m_d, o.m_d);
  m_a += o.m_a;
  m_b += o.m_b;
  if (sgn(m_b) == 0) m_d = 1;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  m_d = join(m_d, o.m_d);
  m_a -= o.m_a;
  m_b -= o.m_b;
  if (sgn(m_b) == 0) m_d = 1;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  unsigned long d = join(m_d, o.m_d);
  Rational a = m_a * o.m_a + Rational((long)d) * m_b * o.m_b;
  Rational b = m_a * o.m_b + m_b * o.m_a;
  m_a = a;
  m_b = b;
  m_d = sgn(m_b) == 0 ? 1 : d;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InternalError("division by zero scalar");
  Rational n = field_norm();
  return Scalar(m_a / n, -m_b / n, m_d);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }

std::string Scalar::str() const {
  std::string out = rational_to_string(m_a);
  if (sgn(m_b) != 0) {
    Rational babs = abs(m_b);
    out += (sgn(m_b) > 0 ? "+" : "-");
    out += rational_to_string(babs);
    out += "*sqrt(" + std::to_string(m_d) + ")";
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad scalar '" + text + "' at offset " + std::to_string(pos) + ": " + what);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  void expect_str(const std::string& s) {
    for (char c : s) expect(c);
  }

  mpz_class digits() {
    if (!std::isdigit((unsigned char)peek())) fail("expected digits");
    size_t start = pos;
    while (std::isdigit((unsigned char)peek())) ++pos;
    return mpz_class(text.substr(start, pos - start));
  }

  mpz_class integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    mpz_class v = digits();
    return neg ? mpz_class(-v) : v;
  }

  Rational rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos;
      den = digits();
      if (sgn(den) <= 0) fail("denominator must be a positive integer");
    }
    Rational r(num, den);
    mpq_canonicalize(r.get_mpq_t());
    return r;
  }

  unsigned long posint() {
    mpz_class v = digits();
    if (sgn(v) <= 0 || !v.fits_ulong_p()) fail("expected a positive machine integer");
    return v.get_ui();
  }
};

} // namespace

Rational parse_rational(const std::string& text) {
  Cursor c{text};
  Rational r = c.rational();
  if (!c.done()) c.fail("trailing characters");
  return r;
}

Scalar parse_scalar(const std::string& text, unsigned long ambient_d) {
  Cursor c{text};
  Rational a = c.rational();
  if (c.done()) return Scalar(a);
  int sign;
  if (c.peek() == '+')
    sign = 1;
  else if (c.peek() == '-')
    sign = -1;
  else
    c.fail("expected '+', '-' or end of scalar");
  ++c.pos;
  Rational b = c.rational();
  c.expect_str("*sqrt(");
  unsigned long d = c.posint();
  c.expect(')');
  if (!c.done()) c.fail("trailing characters");
  if (d == 1 || !is_squarefree(d)) c.fail("sqrt argument must be squarefree and > 1");
  if (d != ambient_d)
    c.fail("sqrt(" + std::to_string(d) + ") does not match the declared field sqrt(" +
           std::to_string(ambient_d) + ")");
  if (sign < 0) b = -b;
  return Scalar(a, b, d);
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  int s = sgn(r);
  if (s < 0) return std::nullopt;
  if (s == 0) return Rational(0);
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<Scalar> sqrt_in_field(const Scalar& s, unsigned long ambient_d) {
  require_valid_discriminant(ambient_d);
  int sg = s.sign();
  if (sg < 0) return std::nullopt;
  if (sg == 0) return Scalar(0);
  if (s.is_rational()) {
    const Rational& a = s.rat_part();
    if (auto r = rational_sqrt(a)) return Scalar(*r);
    if (ambient_d > 1) {
      if (auto r = rational_sqrt(a / Rational((long)ambient_d)))
        return Scalar(Rational(0), *r, ambient_d);
    }
    return std::nullopt;
  }
  if (s.d() != ambient_d) throw InternalError("sqrt_in_field: scalar outside the ambient field");
  // Seek (p + q sqrt(d))^2 = a + b sqrt(d): p^2 + d q^2 = a, 2 p q = b.
  // Then p^2 solves t^2 - a t + d b^2 / 4 = 0.
  Rational a = s.rat_part(), b = s.irr_part(), d((long)s.d());
  auto disc = rational_sqrt(a * a - d * b * b);
  if (!disc) return std::nullopt;
  for (int branch : {1, -1}) {
    Rational p2 = (a + Rational(branch) * *disc) / 2;
    if (sgn(p2) <= 0) continue;
    auto p = rational_sqrt(p2);
    if (!p) continue;
    Rational q = b / (Rational(2) * *p);
    Scalar root(*p, q, s.d());
    if (root.sign() < 0) root = -root;
    if (root * root == s) return root;
  }
  return std::nullopt;
}

} // namespace homjet
