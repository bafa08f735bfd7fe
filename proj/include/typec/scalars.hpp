#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

namespace typec {

  using Rational = mpq_class;

  // A Laurent polynomial in the loop parameter δ with rational
  // coefficients. Zero coefficients are never stored, so two values are equal
  // exactly when their term maps are equal.
  class LaurentScalar {
   public:
    using Terms = std::map<int, Rational>;

    LaurentScalar() = default;
    explicit LaurentScalar(Rational const& constant);
    explicit LaurentScalar(long constant) : LaurentScalar(Rational(constant)) {}

    static LaurentScalar monomial(Rational const& coeff, int exp);
    // δ^exp
    static LaurentScalar delta(int exp = 1) {
      return monomial(Rational(1), exp);
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }
    bool is_monomial() const noexcept {
      return _terms.size() == 1;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    // Only meaningful for nonzero values.
    int min_exponent() const;
    int max_exponent() const;
    Rational coefficient(int exp) const;

    LaurentScalar operator-() const;
    LaurentScalar& operator+=(LaurentScalar const& other);
    LaurentScalar& operator-=(LaurentScalar const& other);
    LaurentScalar& operator*=(LaurentScalar const& other);

    friend LaurentScalar operator+(LaurentScalar a, LaurentScalar const& b) {
      return a += b;
    }
    friend LaurentScalar operator-(LaurentScalar a, LaurentScalar const& b) {
      return a -= b;
    }
    friend LaurentScalar operator*(LaurentScalar const& a,
                                   LaurentScalar const& b);
    friend bool operator==(LaurentScalar const& a, LaurentScalar const& b) {
      return a._terms == b._terms;
    }

    // Multiplies by δ^shift.
    LaurentScalar shifted(int shift) const;

    // Human readable, e.g. "2d^2 - d^-1 + 1/3".
    std::string to_string() const;

   private:
    void add_term(int exp, Rational const& coeff);

    Terms _terms;
  };

  // Element of the fraction field Q(δ). Stored as num/den with gcd(num, den)
  // = 1 and the lowest term of den equal to 1·δ^0, which makes the
  // representation unique.
  class RationalFunction {
   public:
    RationalFunction() : _den(1L) {}
    explicit RationalFunction(LaurentScalar const& num)
        : _num(num), _den(1L) {}
    RationalFunction(LaurentScalar const& num, LaurentScalar const& den);

    LaurentScalar const& numerator() const noexcept {
      return _num;
    }
    LaurentScalar const& denominator() const noexcept {
      return _den;
    }
    bool is_zero() const noexcept {
      return _num.is_zero();
    }

    RationalFunction operator-() const;
    friend RationalFunction operator+(RationalFunction const& a,
                                      RationalFunction const& b);
    friend RationalFunction operator-(RationalFunction const& a,
                                      RationalFunction const& b);
    friend RationalFunction operator*(RationalFunction const& a,
                                      RationalFunction const& b);
    friend RationalFunction operator/(RationalFunction const& a,
                                      RationalFunction const& b);
    friend bool operator==(RationalFunction const& a,
                           RationalFunction const& b) {
      return a._num == b._num && a._den == b._den;
    }

    std::string to_string() const;

   private:
    void normalize();

    LaurentScalar _num;
    LaurentScalar _den;
  };

  // Target field for specialization: characteristic p (0 or prime) and a
  // value for δ, or generic δ (fraction field Q(δ), characteristic 0 only).
  class FieldSpec {
   public:
    FieldSpec() = default;

    static FieldSpec generic() {
      return FieldSpec();
    }
    static FieldSpec rational(Rational const& delta) {
      return FieldSpec(0, delta);
    }
    static FieldSpec modular(unsigned p, Rational const& delta) {
      return FieldSpec(p, delta);
    }
    // Throws invalid_argument for a non-prime characteristic, bad_denominator
    // if delta's denominator vanishes mod p.
    FieldSpec(unsigned characteristic, std::optional<Rational> delta);

    unsigned characteristic() const noexcept {
      return _char;
    }
    bool is_generic() const noexcept {
      return !_delta.has_value();
    }
    std::optional<Rational> const& delta_value() const noexcept {
      return _delta;
    }
    // True when δ specializes to zero in the field.
    bool delta_is_zero() const;
    // "generic" or the rational written as "p/q" / "q".
    std::string delta_string() const;

    friend bool operator==(FieldSpec const&, FieldSpec const&) = default;

   private:
    unsigned                _char = 0;
    std::optional<Rational> _delta;
  };

  bool is_prime(std::uint64_t p);

  struct ModP {
    std::uint64_t value;
    std::uint64_t p;
    friend bool operator==(ModP const&, ModP const&) = default;
  };

  // A value in one of the three supported coefficient fields. Binary
  // operations require both operands to come from the same field.
  class FieldElement {
   public:
    using Value = std::variant<Rational, ModP, RationalFunction>;

    FieldElement() : _value(Rational(0)) {}
    explicit FieldElement(Value v) : _value(std::move(v)) {}

    static FieldElement zero(FieldSpec const& spec);
    static FieldElement one(FieldSpec const& spec);
    static FieldElement from_integer(FieldSpec const& spec, long value);
    static FieldElement from_rational(FieldSpec const& spec, Rational const& q);

    bool is_zero() const;
    bool is_one() const;
    Value const& value() const noexcept {
      return _value;
    }

    FieldElement operator-() const;
    FieldElement inverse() const;
    friend FieldElement operator+(FieldElement const& a, FieldElement const& b);
    friend FieldElement operator-(FieldElement const& a, FieldElement const& b);
    friend FieldElement operator*(FieldElement const& a, FieldElement const& b);
    friend FieldElement operator/(FieldElement const& a, FieldElement const& b);
    FieldElement& operator+=(FieldElement const& b) {
      return *this = *this + b;
    }
    FieldElement& operator-=(FieldElement const& b) {
      return *this = *this - b;
    }
    FieldElement& operator*=(FieldElement const& b) {
      return *this = *this * b;
    }
    friend bool operator==(FieldElement const& a, FieldElement const& b) {
      return a._value == b._value;
    }

    std::string to_string() const;

   private:
    Value _value;
  };

  // Evaluates a at δ = spec.delta_value (or embeds it in Q(δ) when generic).
  // Throws division_by_zero when a has a negative exponent and δ = 0, and
  // bad_denominator when a coefficient's denominator vanishes mod p.
  FieldElement specialize(LaurentScalar const& a, FieldSpec const& spec);

  Rational parse_rational(std::string const& text);

}  // namespace typec
