#include "gfpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "gfpoly/error.hpp"

namespace gfpoly {

Poly::Poly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Poly::Poly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::x() { return Poly{0, 1}; }

Poly Poly::monomial(const Integer& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& Poly::leading() const {
  if (coeffs_.empty()) throw Error(Errc::OutOfRange, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Integer& k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= k;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly sub(const Poly& a, const Poly& b) { return a - b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly pow(const Poly& a, unsigned exponent) {
  Poly result = 1;
  Poly base = a;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "divisor is the zero polynomial");
  if (a.is_zero()) return {};
  const std::size_t db = *b.degree();
  if (*a.degree() < db) throw Error(Errc::NotDivisible, to_string(a) + " by " + to_string(b));

  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Integer> quot(rem.size() - db);
  const Integer& lb = b.leading();
  auto bc = b.coeffs();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw Error(Errc::NotDivisible, to_string(a) + " by " + to_string(b));
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    }
    quot[k] = std::move(q);
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) throw Error(Errc::NotDivisible, to_string(a) + " by " + to_string(b));
  }
  return Poly(std::move(quot));
}

Poly exact_div(const Poly& a, const Integer& k) {
  if (k == 0) throw Error(Errc::DivisionByZero, "integer divisor is zero");
  std::vector<Integer> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) {
      throw Error(Errc::NotDivisible, to_string(a) + " by " + k.get_str());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    out.push_back(std::move(q));
  }
  return Poly(std::move(out));
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  try {
    (void)exact_div(a, b);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::NotDivisible) return false;
    throw;
  }
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "pseudo-remainder by zero");
  if (a.is_zero() || *a.degree() < *b.degree()) return a;
  const std::size_t db = *b.degree();
  const std::size_t delta = *a.degree() - db;
  const Integer& lb = b.leading();

  Poly r = a;
  std::size_t steps = 0;
  while (!r.is_zero() && *r.degree() >= db) {
    const std::size_t shift = *r.degree() - db;
    Poly t = Poly::monomial(r.leading(), shift) * b;
    r *= lb;
    r -= t;
    ++steps;
  }
  // Pad so the multiplier is exactly lc(b)^(delta+1) regardless of early exits.
  for (std::size_t i = steps; i < delta + 1; ++i) r *= lb;
  return r;
}

Integer content(const Poly& a) {
  Integer g = 0;
  for (const auto& c : a.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly canonical(const Poly& a) {
  if (!a.is_zero() && a.leading() < 0) return -a;
  return a;
}

Poly primitive_part(const Poly& a) {
  if (a.is_zero()) return a;
  Integer c = content(a);
  if (a.leading() < 0) c = -c;
  return exact_div(a, c);
}

namespace {

// Subresultant PRS on primitive inputs with deg a >= deg b > minus infinity.
// Returns the primitive gcd with positive leading coefficient.
Poly primitive_gcd(Poly a, Poly b) {
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const std::size_t delta = *a.degree() - *b.degree();
    Poly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (*r.degree() == 0) return Poly(1);
    a = std::move(b);
    Integer h_pow;
    mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), delta);
    b = exact_div(r, g * h_pow);
    g = a.leading();
    if (delta > 0) {
      Integer g_pow;
      Integer h_den;
      mpz_pow_ui(g_pow.get_mpz_t(), g.get_mpz_t(), delta);
      mpz_pow_ui(h_den.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), g_pow.get_mpz_t(), h_den.get_mpz_t());
    }
  }
  return primitive_part(b);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return canonical(b);
  if (b.is_zero()) return canonical(a);
  Integer c;
  const Integer ca = content(a);
  const Integer cb = content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly pa = primitive_part(a);
  Poly pb = primitive_part(b);
  if (*pa.degree() < *pb.degree()) std::swap(pa, pb);
  if (*pb.degree() == 0) return Poly(c);
  return primitive_gcd(std::move(pa), std::move(pb)) * c;
}

Poly gcd_many(std::span<const Poly> polys) {
  if (polys.empty()) throw Error(Errc::EmptyInput, "gcd of an empty list");
  Poly acc = canonical(polys.front());
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (acc.is_constant() && acc.coeff(0) == 1) break;
    acc = gcd(acc, polys[i]);
  }
  return acc;
}

Poly gcd_many(std::initializer_list<Poly> polys) {
  return gcd_many(std::span<const Poly>(polys.begin(), polys.size()));
}

Integer eval_at(const Poly& a, const Integer& x0) {
  Integer acc = 0;
  auto c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x0;
    acc += c[i];
  }
  return acc;
}

Poly derivative(const Poly& a) {
  auto c = a.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Integer> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Poly(std::move(out));
}

Poly integrate(const Poly& a, const Integer& c) {
  auto in = a.coeffs();
  std::vector<Integer> out(in.size() + 1);
  out[0] = c;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!mpz_divisible_ui_p(in[i].get_mpz_t(), i + 1)) {
      throw Error(Errc::NonIntegerIntegral,
                  "coefficient " + in[i].get_str() + " of x^" + std::to_string(i) + " not divisible by " +
                      std::to_string(i + 1));
    }
    mpz_divexact_ui(out[i + 1].get_mpz_t(), in[i].get_mpz_t(), i + 1);
  }
  return Poly(std::move(out));
}

std::string to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  auto c = a.coeffs();
  for (std::size_t e = c.size(); e-- > 0;) {
    const Integer& k = c[e];
    if (k == 0) continue;
    const bool negative = k < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    Integer mag = abs(k);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += 'x';
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  Poly parse() {
    if (src_.empty()) fail("empty input");
    std::vector<Integer> acc;
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exponent] = term();
      if (acc.size() <= exponent) acc.resize(exponent + 1);
      acc[exponent] += sign * coef;
    }
    return Poly(std::move(acc));
  }

 private:
  std::pair<Integer, std::size_t> term() {
    Integer coef = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_number = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_number) fail("expected a coefficient or 'x'");
      return {coef, 0};
    }
    ++pos_;
    std::size_t exponent = 1;
    if (peek() == '^') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exponent = number().get_ui();
    }
    return {coef, exponent};
  }

  Integer number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(src_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << to_string(a); }

}  // namespace gfpoly
