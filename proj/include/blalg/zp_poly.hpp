#ifndef BLALG_ZP_POLY_HPP
#define BLALG_ZP_POLY_HPP

// Dense univariate polynomials over the prime field Z_p.
//
// Coefficients are stored in ascending order (index i holds the coefficient
// of x^i) and the representation is always normalized: every coefficient is
// reduced into [0, p) and the leading coefficient is nonzero.  The zero
// polynomial has an empty coefficient vector and degree kZeroDegree.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "blalg/errors.hpp"

namespace blalg {

using residue = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline residue mod_reduce(std::int64_t v, residue p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<residue>(r);
}

// Inverse of a nonzero residue mod a prime, by extended Euclid on integers.
inline residue residue_inverse(residue a, residue p) {
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  if (r1 == 0) throw DivisionByZeroPoly("zero has no inverse mod " + std::to_string(p));
  while (r1 != 0) {
    auto q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return mod_reduce(s0, p);
}

class Poly {
 public:
  /// Marker degree of the zero polynomial (stands in for minus infinity).
  static constexpr int kZeroDegree = -1;

  explicit Poly(residue p) : p_(p) { check_modulus(); }

  Poly(residue p, const std::vector<std::int64_t>& coeffs) : p_(p) {
    check_modulus();
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(mod_reduce(c, p_));
    trim();
  }

  Poly(residue p, std::initializer_list<std::int64_t> coeffs)
      : Poly(p, std::vector<std::int64_t>(coeffs)) {}

  static Poly from_residues(residue p, std::vector<residue> coeffs) {
    Poly out(p);
    for (auto& c : coeffs) c %= p;
    out.coeffs_ = std::move(coeffs);
    out.trim();
    return out;
  }

  static Poly constant(residue p, std::int64_t c) { return Poly(p, {c}); }
  static Poly one(residue p) { return constant(p, 1); }
  static Poly x(residue p) { return Poly(p, {0, 1}); }

  static Poly monomial(residue p, std::int64_t c, std::size_t degree) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(p, v);
  }

  residue modulus() const noexcept { return p_; }
  const std::vector<residue>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  residue coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  // Canonical order: by degree, then lexicographically on the ascending
  // coefficient vector.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs_ < b.coeffs_;
  }

 private:
  void check_modulus() const {
    if (p_ < 2) throw NotPrime("polynomial modulus must be at least 2");
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  residue p_;
  std::vector<residue> coeffs_;
};

namespace detail {
inline void same_field(const Poly& a, const Poly& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatch("polynomials over Z_" + std::to_string(a.modulus()) +
                          " and Z_" + std::to_string(b.modulus()));
  }
}
}  // namespace detail

inline Poly add(const Poly& a, const Poly& b) {
  detail::same_field(a, b);
  const residue p = a.modulus();
  std::vector<residue> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a.coeff(i) + b.coeff(i)) % p;
  return Poly::from_residues(p, std::move(out));
}

inline Poly neg(const Poly& a) {
  const residue p = a.modulus();
  std::vector<residue> out(a.coeffs());
  for (auto& c : out) c = (p - c) % p;
  return Poly::from_residues(p, std::move(out));
}

inline Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

inline Poly scale(const Poly& a, residue c) {
  const residue p = a.modulus();
  std::vector<residue> out(a.coeffs());
  for (auto& v : out) v = static_cast<residue>((std::uint64_t{v} * c) % p);
  return Poly::from_residues(p, std::move(out));
}

inline Poly mul(const Poly& a, const Poly& b) {
  detail::same_field(a, b);
  const residue p = a.modulus();
  if (a.is_zero() || b.is_zero()) return Poly(p);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<std::uint64_t> acc(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{ac[i]} * bc[j]) % p;
    }
  }
  return Poly::from_residues(p, std::vector<residue>(acc.begin(), acc.end()));
}

struct DivMod {
  Poly quotient;
  Poly remainder;
};

inline DivMod divmod(const Poly& a, const Poly& b) {
  detail::same_field(a, b);
  if (b.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
  const residue p = a.modulus();
  if (a.degree() < b.degree()) return {Poly(p), a};

  std::vector<residue> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const residue lead_inv = residue_inverse(b.leading(), p);
  std::vector<residue> quo(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const residue c = static_cast<residue>((std::uint64_t{rem[k]} * lead_inv) % p);
    quo[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      const auto sub = (std::uint64_t{c} * bc[j]) % p;
      rem[k - db + j] = static_cast<residue>((rem[k - db + j] + p - sub) % p);
    }
  }
  return {Poly::from_residues(p, std::move(quo)), Poly::from_residues(p, std::move(rem))};
}

inline Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

inline Poly monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, residue_inverse(a.leading(), a.modulus()));
}

struct Xgcd {
  Poly g;  ///< monic gcd (zero only when both inputs are zero)
  Poly u;
  Poly v;  ///< g = u*a + v*b
};

inline Xgcd xgcd(const Poly& a, const Poly& b) {
  detail::same_field(a, b);
  const residue p = a.modulus();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(p), s1 = Poly(p);
  Poly t0 = Poly(p), t1 = Poly::one(p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1)));
    t0 = std::exchange(t1, sub(t0, mul(q, t1)));
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const residue inv = residue_inverse(r0.leading(), p);
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

inline Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

inline Poly derivative(const Poly& a) {
  const residue p = a.modulus();
  if (a.degree() < 1) return Poly(p);
  std::vector<residue> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    out[i - 1] = static_cast<residue>((std::uint64_t{a.coeffs()[i]} * (i % p)) % p);
  }
  return Poly::from_residues(p, std::move(out));
}

/// Horner evaluation at a residue.
inline residue eval(const Poly& f, residue a) {
  const residue p = f.modulus();
  std::uint64_t acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = (acc * (a % p) + *it) % p;
  }
  return static_cast<residue>(acc);
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return rem(mul(a, b), m); }

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& m) {
  Poly result = rem(Poly::one(base.modulus()), m);
  base = rem(base, m);
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator-(const Poly& a) { return neg(a); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

inline bool divides(const Poly& d, const Poly& a) { return rem(a, d).is_zero(); }

// ---------------------------------------------------------------------------
// Factorization

struct Factorization {
  residue p = 2;
  residue unit = 1;  ///< leading coefficient stripped before factoring
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly expand() const {
    Poly out = Poly::constant(p, unit);
    for (const auto& [f, e] : factors) {
      for (unsigned i = 0; i < e; ++i) out = mul(out, f);
    }
    return out;
  }

  bool squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& fe) { return fe.second == 1; });
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

// x^(p^d) mod g
inline Poly frobenius_power(const Poly& g, unsigned d) {
  Poly h = rem(Poly::x(g.modulus()), g);
  for (unsigned i = 0; i < d; ++i) h = pow_mod(h, g.modulus(), g);
  return h;
}

// Monic polynomials of exact degree d, enumerated in canonical order.
template <typename Visit>
bool for_each_monic(residue p, unsigned d, Visit&& visit) {
  std::vector<residue> c(d + 1, 0);
  c[d] = 1;
  while (true) {
    if (visit(Poly::from_residues(p, c))) return true;
    std::size_t i = 0;
    while (i < d && ++c[i] == p) c[i++] = 0;
    if (i == d) return false;
  }
}

inline unsigned strip_factor(Poly& g, const Poly& f) {
  unsigned e = 0;
  while (true) {
    auto [q, r] = divmod(g, f);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++e;
  }
  return e;
}

}  // namespace detail

inline constexpr int kDefaultFactorDegreeCap = 64;

/// Complete factorization into monic irreducibles.  Linear factors come from
/// a root search; higher-degree factors from trial division by monic
/// polynomials of increasing degree.  Before enumerating degree d the product
/// of all remaining degree-d factors, gcd(g, x^(p^d) - x), is computed so
/// trial division only runs when such a factor exists.
inline Factorization factor(const Poly& f, int degree_cap = kDefaultFactorDegreeCap) {
  if (f.is_zero()) throw ZeroElement("cannot factor the zero polynomial");
  if (f.degree() > degree_cap) {
    throw DegreeTooLarge("degree " + std::to_string(f.degree()) + " exceeds cap " +
                         std::to_string(degree_cap));
  }
  const residue p = f.modulus();
  Factorization out;
  out.p = p;
  out.unit = f.leading();
  Poly g = monic(f);

  for (residue a = 0; a < p && g.degree() > 0; ++a) {
    if (eval(g, a) != 0) continue;
    Poly lin = Poly::from_residues(p, {(p - a) % p, 1});
    out.factors.emplace_back(lin, detail::strip_factor(g, lin));
  }

  for (unsigned d = 2; 2 * static_cast<int>(d) <= g.degree(); ++d) {
    Poly block = gcd(g, sub(detail::frobenius_power(g, d), Poly::x(p)));
    if (block.degree() <= 0) continue;
    if (block.degree() == static_cast<int>(d)) {
      out.factors.emplace_back(block, detail::strip_factor(g, block));
      continue;
    }
    detail::for_each_monic(p, d, [&](const Poly& cand) {
      if (!divides(cand, block)) return false;
      block = block / cand;
      out.factors.emplace_back(cand, detail::strip_factor(g, cand));
      return block.degree() <= 0;
    });
  }
  if (g.degree() > 0) out.factors.emplace_back(g, 1);

  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  Poly g = monic(f);
  for (unsigned d = 1; 2 * static_cast<int>(d) <= g.degree(); ++d) {
    if (gcd(g, sub(detail::frobenius_power(g, d), Poly::x(g.modulus()))).degree() > 0) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text forms

inline std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const residue c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || k == 0) out += std::to_string(c);
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

/// Most-significant-first digits; the zero polynomial yields {0}.
inline std::vector<residue> to_digits(const Poly& f) {
  if (f.is_zero()) return {0};
  return {f.coeffs().rbegin(), f.coeffs().rend()};
}

inline Poly from_digits(residue p, const std::vector<residue>& msb_first) {
  for (auto d : msb_first) {
    if (d >= p) throw ParseError("digit " + std::to_string(d) + " out of range for base " + std::to_string(p));
  }
  return Poly::from_residues(p, {msb_first.rbegin(), msb_first.rend()});
}

/// Digit-string form, e.g. "201" for 2x^2+1 at p=3.  Digits >= 10 are
/// separated by ':' so the form stays unambiguous for p > 10.
inline std::string to_digit_string(const Poly& f) {
  std::string out;
  for (auto d : to_digits(f)) {
    if (f.modulus() > 10 && !out.empty()) out += ':';
    out += std::to_string(d);
  }
  return out;
}

/// Parses either an expression ("2x^2+1", "x^3 - x", "3*x+4") or a digit
/// string ("201", or "12:0:5" for p > 10).  Strings made only of digits (and
/// ':' separators) are always read as digit strings.
inline Poly parse_poly(residue p, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");

  const bool digit_form = std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == ':';
  });
  if (digit_form) {
    std::vector<residue> digits;
    if (s.find(':') != std::string::npos) {
      std::size_t start = 0;
      while (start <= s.size()) {
        auto end = s.find(':', start);
        if (end == std::string::npos) end = s.size();
        if (end == start) throw ParseError("empty digit in '" + s + "'");
        digits.push_back(static_cast<residue>(std::stoul(s.substr(start, end - start))));
        start = end + 1;
      }
    } else if (p > 10) {
      // without separators a number is a single base-p digit
      if (s.size() > 9) throw ParseError("digit too large in '" + s + "'");
      digits.push_back(static_cast<residue>(std::stoul(s)));
    } else {
      for (char ch : s) digits.push_back(static_cast<residue>(ch - '0'));
    }
    return from_digits(p, digits);
  }

  std::vector<std::int64_t> coeffs;
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& v) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    v = std::stoll(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
    }
    std::int64_t c = 1;
    const bool has_coeff = read_int(c);
    if (has_coeff && i < s.size() && s[i] == '*') ++i;
    std::int64_t power = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_int(power)) throw ParseError("missing exponent in '" + s + "'");
      }
    } else if (!has_coeff) {
      throw ParseError("malformed term in '" + s + "'");
    }
    if (static_cast<std::size_t>(power) >= coeffs.size()) coeffs.resize(power + 1, 0);
    coeffs[power] += sign * mod_reduce(c, p);
  }
  return Poly(p, coeffs);
}

}  // namespace blalg

#endif  // BLALG_ZP_POLY_HPP
