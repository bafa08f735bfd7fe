#include "typec/scalars.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

#include "typec/error.hpp"

namespace typec {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::rank_mismatch: return "rank-mismatch";
      case ErrorKind::index_out_of_range: return "index-out-of-range";
      case ErrorKind::resource_limit: return "resource-limit";
      case ErrorKind::division_by_zero: return "division-by-zero";
      case ErrorKind::bad_denominator: return "bad-denominator";
      case ErrorKind::asymmetric_input: return "asymmetric-input";
      case ErrorKind::shape_mismatch: return "shape-mismatch";
      case ErrorKind::malformed_triple: return "malformed-triple";
      case ErrorKind::label_mismatch: return "label-mismatch";
      case ErrorKind::degenerate: return "degenerate";
      case ErrorKind::invalid_argument: return "invalid-argument";
    }
    return "unknown";
  }

  namespace {
    unsigned env_bound(char const* name, unsigned fallback) {
      char const* value = std::getenv(name);
      if (value == nullptr || *value == '\0') {
        return fallback;
      }
      return static_cast<unsigned>(std::strtoul(value, nullptr, 10));
    }
  }  // namespace

  unsigned max_enumeration_rank() {
    static unsigned const bound = env_bound("TYPEC_MAX_RANK", 5);
    return bound;
  }

  unsigned max_group_rank() {
    static unsigned const bound = env_bound("TYPEC_MAX_GROUP_RANK", 6);
    return bound;
  }

  ////////////////////////////////////////////////////////////////////////
  // LaurentScalar
  ////////////////////////////////////////////////////////////////////////

  LaurentScalar::LaurentScalar(Rational const& constant) {
    add_term(0, constant);
  }

  LaurentScalar LaurentScalar::monomial(Rational const& coeff, int exp) {
    LaurentScalar result;
    result.add_term(exp, coeff);
    return result;
  }

  void LaurentScalar::add_term(int exp, Rational const& coeff) {
    if (coeff == 0) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(exp, coeff);
    if (inserted) {
      it->second.canonicalize();
    } else {
      it->second += coeff;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  int LaurentScalar::min_exponent() const {
    return _terms.empty() ? 0 : _terms.begin()->first;
  }

  int LaurentScalar::max_exponent() const {
    return _terms.empty() ? 0 : _terms.rbegin()->first;
  }

  Rational LaurentScalar::coefficient(int exp) const {
    auto it = _terms.find(exp);
    return it == _terms.end() ? Rational(0) : it->second;
  }

  LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar result(*this);
    for (auto& [exp, coeff] : result._terms) {
      coeff = -coeff;
    }
    return result;
  }

  LaurentScalar& LaurentScalar::operator+=(LaurentScalar const& other) {
    for (auto const& [exp, coeff] : other._terms) {
      add_term(exp, coeff);
    }
    return *this;
  }

  LaurentScalar& LaurentScalar::operator-=(LaurentScalar const& other) {
    for (auto const& [exp, coeff] : other._terms) {
      add_term(exp, -coeff);
    }
    return *this;
  }

  LaurentScalar operator*(LaurentScalar const& a, LaurentScalar const& b) {
    LaurentScalar result;
    for (auto const& [ea, ca] : a._terms) {
      for (auto const& [eb, cb] : b._terms) {
        result.add_term(ea + eb, ca * cb);
      }
    }
    return result;
  }

  LaurentScalar& LaurentScalar::operator*=(LaurentScalar const& other) {
    return *this = *this * other;
  }

  LaurentScalar LaurentScalar::shifted(int shift) const {
    LaurentScalar result;
    for (auto const& [exp, coeff] : _terms) {
      result._terms.emplace(exp + shift, coeff);
    }
    return result;
  }

  std::string LaurentScalar::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::ostringstream out;
    bool               first = true;
    for (auto it = _terms.rbegin(); it != _terms.rend(); ++it) {
      auto const& [exp, coeff] = *it;
      Rational    magnitude    = abs(coeff);
      if (first) {
        if (coeff < 0) {
          out << "-";
        }
      } else {
        out << (coeff < 0 ? " - " : " + ");
      }
      first = false;
      if (exp == 0) {
        out << magnitude.get_str();
        continue;
      }
      if (magnitude != 1) {
        out << magnitude.get_str();
      }
      out << "d";
      if (exp != 1) {
        out << "^" << exp;
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Dense polynomials over Q, used to normalize rational functions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Poly = std::vector<Rational>;

    void trim(Poly& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    // Writes a nonzero Laurent polynomial as δ^shift · P(δ) with P(0) ≠ 0.
    Poly to_poly(LaurentScalar const& a, int& shift) {
      shift = a.min_exponent();
      Poly p(a.max_exponent() - shift + 1, Rational(0));
      for (auto const& [exp, coeff] : a.terms()) {
        p[exp - shift] = coeff;
      }
      return p;
    }

    LaurentScalar from_poly(Poly const& p, int shift) {
      LaurentScalar result;
      for (std::size_t i = 0; i < p.size(); ++i) {
        result += LaurentScalar::monomial(p[i], static_cast<int>(i) + shift);
      }
      return result;
    }

    // Quotient and remainder; divisor must be nonzero.
    void divmod(Poly const& num, Poly const& div, Poly& quot, Poly& rem) {
      rem = num;
      trim(rem);
      quot.assign(rem.size() >= div.size() ? rem.size() - div.size() + 1 : 0,
                  Rational(0));
      while (!rem.empty() && rem.size() >= div.size()) {
        std::size_t shift = rem.size() - div.size();
        Rational    c     = rem.back() / div.back();
        quot[shift]       = c;
        for (std::size_t i = 0; i < div.size(); ++i) {
          rem[i + shift] -= c * div[i];
        }
        trim(rem);
      }
    }

    Poly gcd(Poly a, Poly b) {
      trim(a);
      trim(b);
      while (!b.empty()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
      }
      if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) {
          c /= lead;
        }
      }
      return a;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // RationalFunction
  ////////////////////////////////////////////////////////////////////////

  RationalFunction::RationalFunction(LaurentScalar const& num,
                                     LaurentScalar const& den)
      : _num(num), _den(den) {
    if (_den.is_zero()) {
      throw Error(ErrorKind::division_by_zero, "zero denominator in Q(d)");
    }
    normalize();
  }

  void RationalFunction::normalize() {
    if (_num.is_zero()) {
      _den = LaurentScalar(1L);
      return;
    }
    int  num_shift, den_shift;
    Poly num = to_poly(_num, num_shift);
    Poly den = to_poly(_den, den_shift);
    Poly g   = gcd(num, den);
    if (g.size() > 1) {
      Poly q, r;
      divmod(num, g, q, r);
      num = std::move(q);
      divmod(den, g, q, r);
      den = std::move(q);
    }
    Rational constant = den.front();
    for (auto& c : num) {
      c /= constant;
    }
    for (auto& c : den) {
      c /= constant;
    }
    _num = from_poly(num, num_shift - den_shift);
    _den = from_poly(den, 0);
  }

  RationalFunction RationalFunction::operator-() const {
    RationalFunction result(*this);
    result._num = -result._num;
    return result;
  }

  RationalFunction operator+(RationalFunction const& a,
                             RationalFunction const& b) {
    if (a._den == b._den) {
      return RationalFunction(a._num + b._num, a._den);
    }
    return RationalFunction(a._num * b._den + b._num * a._den,
                            a._den * b._den);
  }

  RationalFunction operator-(RationalFunction const& a,
                             RationalFunction const& b) {
    return a + (-b);
  }

  RationalFunction operator*(RationalFunction const& a,
                             RationalFunction const& b) {
    if (a.is_zero() || b.is_zero()) {
      return RationalFunction();
    }
    return RationalFunction(a._num * b._num, a._den * b._den);
  }

  RationalFunction operator/(RationalFunction const& a,
                             RationalFunction const& b) {
    if (b.is_zero()) {
      throw Error(ErrorKind::division_by_zero, "division by zero in Q(d)");
    }
    return RationalFunction(a._num * b._den, a._den * b._num);
  }

  std::string RationalFunction::to_string() const {
    if (_den == LaurentScalar(1L)) {
      return _num.to_string();
    }
    return "(" + _num.to_string() + ")/(" + _den.to_string() + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // FieldSpec
  ////////////////////////////////////////////////////////////////////////

  bool is_prime(std::uint64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  namespace {
    constexpr std::uint64_t max_modulus = std::uint64_t(1) << 31;

    std::uint64_t reduce(mpz_class const& z, std::uint64_t p) {
      mpz_class r = z % static_cast<unsigned long>(p);
      if (r < 0) {
        r += static_cast<unsigned long>(p);
      }
      return r.get_ui();
    }

    std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t p) {
      std::uint64_t result = 1 % p;
      base %= p;
      while (exp > 0) {
        if (exp & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
      }
      return result;
    }

    std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
      if (a % p == 0) {
        throw Error(ErrorKind::division_by_zero, "inverse of 0 mod p");
      }
      return pow_mod(a, p - 2, p);
    }

    ModP to_mod(Rational const& q, std::uint64_t p) {
      std::uint64_t den = reduce(q.get_den(), p);
      if (den == 0) {
        throw Error(ErrorKind::bad_denominator,
                    "denominator of " + q.get_str() + " vanishes mod "
                        + std::to_string(p));
      }
      return ModP{reduce(q.get_num(), p) * inv_mod(den, p) % p, p};
    }
  }  // namespace

  FieldSpec::FieldSpec(unsigned characteristic, std::optional<Rational> delta)
      : _char(characteristic), _delta(std::move(delta)) {
    if (_char != 0 && (!is_prime(_char) || _char >= max_modulus)) {
      throw Error(ErrorKind::invalid_argument,
                  "characteristic must be 0 or a prime below 2^31");
    }
    if (!_delta.has_value() && _char != 0) {
      throw Error(ErrorKind::invalid_argument,
                  "generic delta requires characteristic 0");
    }
    if (_delta.has_value()) {
      _delta->canonicalize();
      if (_char != 0) {
        to_mod(*_delta, _char);
      }
    }
  }

  bool FieldSpec::delta_is_zero() const {
    if (!_delta.has_value()) {
      return false;
    }
    if (_char == 0) {
      return *_delta == 0;
    }
    return to_mod(*_delta, _char).value == 0;
  }

  std::string FieldSpec::delta_string() const {
    return _delta.has_value() ? _delta->get_str() : "generic";
  }

  ////////////////////////////////////////////////////////////////////////
  // FieldElement
  ////////////////////////////////////////////////////////////////////////

  FieldElement FieldElement::zero(FieldSpec const& spec) {
    return from_integer(spec, 0);
  }

  FieldElement FieldElement::one(FieldSpec const& spec) {
    return from_integer(spec, 1);
  }

  FieldElement FieldElement::from_integer(FieldSpec const& spec, long value) {
    return from_rational(spec, Rational(value));
  }

  FieldElement FieldElement::from_rational(FieldSpec const& spec,
                                           Rational const& q) {
    if (spec.is_generic()) {
      return FieldElement(RationalFunction(LaurentScalar(q)));
    }
    if (spec.characteristic() == 0) {
      Rational canonical = q;
      canonical.canonicalize();
      return FieldElement(canonical);
    }
    return FieldElement(to_mod(q, spec.characteristic()));
  }

  bool FieldElement::is_zero() const {
    return std::visit(
        [](auto const& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Rational>) {
            return v == 0;
          } else if constexpr (std::is_same_v<T, ModP>) {
            return v.value == 0;
          } else {
            return v.is_zero();
          }
        },
        _value);
  }

  bool FieldElement::is_one() const {
    return std::visit(
        [](auto const& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Rational>) {
            return v == 1;
          } else if constexpr (std::is_same_v<T, ModP>) {
            return v.value == 1;
          } else {
            return v == RationalFunction(LaurentScalar(1L));
          }
        },
        _value);
  }

  namespace {
    [[noreturn]] void field_mismatch() {
      throw Error(ErrorKind::invalid_argument,
                  "operands belong to different fields");
    }

    template <typename Op>
    FieldElement binary(FieldElement const& a, FieldElement const& b, Op op) {
      return std::visit(
          [&](auto const& x, auto const& y) -> FieldElement {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (!std::is_same_v<X, Y>) {
              field_mismatch();
            } else {
              return FieldElement(op(x, y));
            }
          },
          a.value(),
          b.value());
    }

    ModP check_same(ModP const& x, ModP const& y) {
      if (x.p != y.p) {
        field_mismatch();
      }
      return x;
    }
  }  // namespace

  FieldElement FieldElement::operator-() const {
    return std::visit(
        [](auto const& v) -> FieldElement {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, ModP>) {
            return FieldElement(ModP{(v.p - v.value) % v.p, v.p});
          } else if constexpr (std::is_same_v<T, Rational>) {
            return FieldElement(Rational(-v));
          } else {
            return FieldElement(-v);
          }
        },
        _value);
  }

  FieldElement FieldElement::inverse() const {
    return std::visit(
        [](auto const& v) -> FieldElement {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, ModP>) {
            return FieldElement(ModP{inv_mod(v.value, v.p), v.p});
          } else if constexpr (std::is_same_v<T, Rational>) {
            if (v == 0) {
              throw Error(ErrorKind::division_by_zero, "inverse of 0");
            }
            return FieldElement(Rational(1 / v));
          } else {
            return FieldElement(RationalFunction(LaurentScalar(1L)) / v);
          }
        },
        _value);
  }

  FieldElement operator+(FieldElement const& a, FieldElement const& b) {
    return binary(a, b, [](auto const& x, auto const& y) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, ModP>) {
        check_same(x, y);
        return ModP{(x.value + y.value) % x.p, x.p};
      } else if constexpr (std::is_same_v<T, Rational>) {
        return Rational(x + y);
      } else {
        return x + y;
      }
    });
  }

  FieldElement operator-(FieldElement const& a, FieldElement const& b) {
    return a + (-b);
  }

  FieldElement operator*(FieldElement const& a, FieldElement const& b) {
    return binary(a, b, [](auto const& x, auto const& y) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, ModP>) {
        check_same(x, y);
        return ModP{x.value * y.value % x.p, x.p};
      } else if constexpr (std::is_same_v<T, Rational>) {
        return Rational(x * y);
      } else {
        return x * y;
      }
    });
  }

  FieldElement operator/(FieldElement const& a, FieldElement const& b) {
    return a * b.inverse();
  }

  std::string FieldElement::to_string() const {
    return std::visit(
        [](auto const& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, ModP>) {
            return std::to_string(v.value);
          } else if constexpr (std::is_same_v<T, Rational>) {
            return v.get_str();
          } else {
            return v.to_string();
          }
        },
        _value);
  }

  FieldElement specialize(LaurentScalar const& a, FieldSpec const& spec) {
    if (spec.is_generic()) {
      return FieldElement(RationalFunction(a));
    }
    if (!a.is_zero() && a.min_exponent() < 0 && spec.delta_is_zero()) {
      throw Error(ErrorKind::division_by_zero,
                  "negative power of delta at delta = 0");
    }
    Rational const& delta = *spec.delta_value();
    if (spec.characteristic() == 0) {
      Rational result(0);
      for (auto const& [exp, coeff] : a.terms()) {
        Rational power(1);
        Rational base = exp < 0 ? Rational(1 / delta) : delta;
        for (int i = 0; i < std::abs(exp); ++i) {
          power *= base;
        }
        result += coeff * power;
      }
      return FieldElement(result);
    }
    std::uint64_t const p = spec.characteristic();
    std::uint64_t       d = to_mod(delta, p).value;
    std::uint64_t       result = 0;
    for (auto const& [exp, coeff] : a.terms()) {
      std::uint64_t c = to_mod(coeff, p).value;
      std::uint64_t base = exp < 0 ? inv_mod(d, p) : d;
      result = (result + c * pow_mod(base, std::abs(exp), p)) % p;
    }
    return FieldElement(ModP{result, p});
  }

  Rational parse_rational(std::string const& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
      throw Error(ErrorKind::invalid_argument,
                  "not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) {
      throw Error(ErrorKind::division_by_zero, "zero denominator in " + text);
    }
    q.canonicalize();
    return q;
  }

}  // namespace typec
