#ifndef BLALG_MV_CRYPT_HPP
#define BLALG_MV_CRYPT_HPP

// Text cipher over R_{p,1,beta} = Z_p[x]/(x^(beta+1) - x).
//
// text -> labels -> base-p digits -> f_c.  A unit f_c is sent as its
// inverse; a zero divisor f_c = g_t h is sent as g_r h with (g_r) = Ann((g_t)).
// Numbers are kept as digit vectors so message length is not bounded by any
// machine integer.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blalg/errors.hpp"
#include "blalg/quotient_ring.hpp"
#include "blalg/zp_poly.hpp"

namespace blalg {

/// Most-significant-first digits.
using Digits = std::vector<std::uint32_t>;

// ---------------------------------------------------------------------------
// Base conversion

inline Digits strip_leading_zeros(Digits d) {
  auto it = std::find_if(d.begin(), d.end(), [](std::uint32_t x) { return x != 0; });
  d.erase(d.begin(), it);
  if (d.empty()) d.push_back(0);
  return d;
}

/// Re-expresses a base-`from` digit string in base `to`; leading zeros are dropped.
inline Digits base_convert(const Digits& digits, std::uint32_t from, std::uint32_t to) {
  if (from < 2 || to < 2) throw SizeOutOfRange("bases must be at least 2");
  for (auto d : digits) {
    if (d >= from) throw ParseError("digit " + std::to_string(d) + " out of range for base " + std::to_string(from));
  }
  Digits num = strip_leading_zeros(digits);
  Digits out;
  while (!(num.size() == 1 && num[0] == 0)) {
    // num /= to, remainder appended
    Digits q;
    std::uint64_t r = 0;
    for (auto d : num) {
      r = r * from + d;
      q.push_back(static_cast<std::uint32_t>(r / to));
      r %= to;
    }
    out.push_back(static_cast<std::uint32_t>(r));
    num = strip_leading_zeros(std::move(q));
  }
  if (out.empty()) out.push_back(0);
  std::reverse(out.begin(), out.end());
  return out;
}

inline Digits to_base(std::uint64_t m, std::uint32_t base) {
  if (base < 2) throw SizeOutOfRange("bases must be at least 2");
  Digits out;
  do {
    out.push_back(static_cast<std::uint32_t>(m % base));
    m /= base;
  } while (m);
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::uint64_t from_base(const Digits& digits, std::uint32_t base) {
  std::uint64_t m = 0;
  for (auto d : digits) {
    if (d >= base) throw ParseError("digit out of range for base " + std::to_string(base));
    if (m > (UINT64_MAX - d) / base) throw LengthOverflow("value does not fit in 64 bits");
    m = m * base + d;
  }
  return m;
}

/// "201", or "12:0:5" when the base exceeds 10.
inline std::string digits_to_string(const Digits& d, std::uint32_t base) {
  std::string out;
  for (auto x : d) {
    if (base > 10 && !out.empty()) out += ':';
    out += std::to_string(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alphabet

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2) throw SizeOutOfRange("an alphabet needs at least 2 symbols");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i].empty()) throw ParseError("empty alphabet symbol");
      for (std::size_t j = 0; j < i; ++j) {
        if (symbols_[i] == symbols_[j]) throw ParseError("duplicate alphabet symbol '" + symbols_[i] + "'");
      }
    }
  }

  /// A..J labeled 0..9.
  static Alphabet standard() {
    std::vector<std::string> s;
    for (char c = 'A'; c <= 'J'; ++c) s.emplace_back(1, c);
    return Alphabet(std::move(s));
  }

  /// One symbol per line; blank lines are skipped.
  static Alphabet from_lines(std::string_view text) {
    std::vector<std::string> s;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) s.push_back(std::move(line));
      start = end + 1;
    }
    return Alphabet(std::move(s));
  }

  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  /// Decimal labels for up to 10 symbols, base-size labels beyond.
  std::uint32_t radix() const noexcept { return symbols_.size() <= 10 ? 10 : static_cast<std::uint32_t>(symbols_.size()); }
  const std::string& symbol(std::uint32_t label) const {
    if (label >= symbols_.size()) throw UnknownSymbol("label " + std::to_string(label) + " has no symbol");
    return symbols_[label];
  }

  /// Splits text into labels, longest symbol first.
  Digits labels(std::string_view text) const {
    Digits out;
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t best = symbols_.size(), best_len = 0;
      for (std::size_t k = 0; k < symbols_.size(); ++k) {
        const auto& s = symbols_[k];
        if (s.size() > best_len && text.substr(i, s.size()) == s) {
          best = k;
          best_len = s.size();
        }
      }
      if (best == symbols_.size()) {
        throw UnknownSymbol("no symbol matches at position " + std::to_string(i) + " of '" + std::string(text) + "'");
      }
      out.push_back(static_cast<std::uint32_t>(best));
      i += best_len;
    }
    return out;
  }

 private:
  std::vector<std::string> symbols_;
};

/// Concatenated labels read as one number in the alphabet's radix
/// (decimal for alphabets of at most ten symbols).  "ABBA" -> 110.
inline Digits encode_text(std::string_view text, const Alphabet& alphabet) {
  if (text.empty()) throw ParseError("empty text");
  return strip_leading_zeros(alphabet.labels(text));
}

/// Inverse of encode_text, left-padding with label 0 up to length l.
inline std::string decode_text(const Digits& m, std::size_t l, const Alphabet& alphabet) {
  Digits d = strip_leading_zeros(m);
  if (d.size() > l) {
    throw LengthOverflow(digits_to_string(d, alphabet.radix()) + " has more than " + std::to_string(l) + " digits");
  }
  std::string out;
  for (std::size_t i = d.size(); i < l; ++i) out += alphabet.symbol(0);
  for (auto x : d) out += alphabet.symbol(x);
  return out;
}

// ---------------------------------------------------------------------------
// Encryption

struct SecretKey {
  residue p = 0;
  unsigned beta = 0;  ///< after any doubling
  std::size_t l = 0;

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

enum class CipherPath { UnitInverse, UnitInverseDoubled, Annihilator };

inline const char* to_string(CipherPath p) {
  switch (p) {
    case CipherPath::UnitInverse: return "UnitInverse";
    case CipherPath::UnitInverseDoubled: return "UnitInverseDoubled";
    case CipherPath::Annihilator: return "Annihilator";
  }
  return "?";
}

struct CipherTrace {
  Digits m;                  ///< label number, alphabet radix
  std::uint32_t radix = 10;
  Digits digits_p;           ///< m in base p
  Poly f_c = Poly(2);
  CipherPath path = CipherPath::UnitInverse;
  std::optional<Poly> g_t, g_r, h;  ///< annihilator path only
  Poly f_e = Poly(2);
  Digits c;                  ///< f_e's label number, alphabet radix
  std::string ciphertext;
};

struct Encryption {
  std::string ciphertext;
  SecretKey key;
  CipherTrace trace;
};

namespace detail {
inline QuotientRing cipher_ring(residue p, unsigned beta) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (beta < 1) throw SizeOutOfRange("beta must be at least 1");
  if (beta % p == 0) {
    throw SquarefreeViolation("R_{" + std::to_string(p) + ",1," + std::to_string(beta) + "} is not squarefree (p divides beta)");
  }
  return make_ring(p, beta);
}
}  // namespace detail

/// (Ann(I_t) generator * cofactor(f_c, I_t)) reduced mod the ring modulus.
inline Poly encrypt_with_ideal(const RingElement& f_c, const IdealHandle& I_t) {
  const Poly h = cofactor(f_c, I_t);
  return rem(mul(annihilator(I_t).generator(), h), f_c.ring.modulus());
}

namespace detail {

inline void annihilator_path(CipherTrace& t, const RingElement& e, const IdealHandle& I_t) {
  t.path = CipherPath::Annihilator;
  t.g_t = I_t.generator();
  t.h = cofactor(e, I_t);
  t.g_r = annihilator(I_t).generator();
  t.f_e = encrypt_with_ideal(e, I_t);
}

inline void finish(Encryption& out, const Alphabet& alphabet) {
  auto& t = out.trace;
  t.c = base_convert(to_digits(t.f_e), out.key.p, alphabet.radix());
  t.ciphertext = decode_text(t.c, t.c.size(), alphabet);
  out.ciphertext = t.ciphertext;
}

}  // namespace detail

/// Encrypts `text` in R_{p,1,beta}.  With `ideal` the annihilator path is
/// forced through the ideal generated by that divisor of x^(beta+1) - x;
/// otherwise the ideal is the smallest one containing f_c.
///
/// A self-inverse unit is re-encrypted once in R_{p,1,2 beta} and the key
/// carries 2 beta.  If it is still self-inverse there (only +-1), f_c is sent
/// as is; decryption is unaffected.
inline Encryption encrypt(std::string_view text, const Alphabet& alphabet, residue p, unsigned beta,
                          const std::optional<Poly>& ideal = std::nullopt) {
  QuotientRing R = detail::cipher_ring(p, beta);
  Encryption out;
  auto& t = out.trace;
  t.radix = alphabet.radix();
  t.m = encode_text(text, alphabet);
  t.digits_p = base_convert(t.m, t.radix, p);
  if (t.digits_p.size() > beta + 1) {
    throw MessageTooLong("m has " + std::to_string(t.digits_p.size()) + " base-" + std::to_string(p) +
                         " digits but R_{p,1," + std::to_string(beta) + "} holds at most " + std::to_string(beta + 1));
  }
  t.f_c = from_digits(p, t.digits_p);
  out.key = {p, beta, alphabet.labels(text).size()};

  RingElement e = element(R, t.f_c);
  if (ideal) {
    detail::annihilator_path(t, e, ideal_from_generator(R, *ideal));
    detail::finish(out, alphabet);
    return out;
  }

  switch (classify_element(e)) {
    case ElementKind::Zero:
      detail::annihilator_path(t, e, zero_ideal(R));
      break;
    case ElementKind::ZeroDivisor:
      detail::annihilator_path(t, e, minimal_containing_ideal(e));
      break;
    case ElementKind::Unit: {
      const RingElement inv = inverse(e);
      if (!(inv.rep == t.f_c)) {
        t.path = CipherPath::UnitInverse;
        t.f_e = inv.rep;
        break;
      }
      out.key.beta = 2 * beta;
      const QuotientRing R2 = detail::cipher_ring(p, out.key.beta);
      const RingElement e2 = element(R2, t.f_c);
      if (classify_element(e2) == ElementKind::Unit) {
        t.path = CipherPath::UnitInverseDoubled;
        t.f_e = inverse(e2).rep;
      } else {
        detail::annihilator_path(t, e2, minimal_containing_ideal(e2));
      }
      break;
    }
  }
  detail::finish(out, alphabet);
  return out;
}

// ---------------------------------------------------------------------------
// Decryption

struct DecryptOptions {
  /// Largest number of kernel combinations enumerated for one ideal; 0 means p^6.
  std::uint64_t enumeration_cap = 0;
};

namespace detail {

/// Solves A h = b over Z_p.  Returns a particular solution and a kernel
/// basis, or nullopt when the system is inconsistent.
struct LinearSolution {
  std::vector<residue> particular;
  std::vector<std::vector<residue>> kernel;
};

inline std::optional<LinearSolution> solve_mod_p(std::vector<std::vector<residue>> A, std::vector<residue> b,
                                                 residue p) {
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    const residue inv = residue_inverse(A[r][c], p);
    for (auto& v : A[r]) v = static_cast<residue>(std::uint64_t(v) * inv % p);
    b[r] = static_cast<residue>(std::uint64_t(b[r]) * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const std::uint64_t f = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = static_cast<residue>((A[i][j] + (p - f) * A[r][j]) % p);
      b[i] = static_cast<residue>((b[i] + (p - f) * b[r]) % p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  LinearSolution s;
  s.particular.assign(cols, 0);
  for (std::size_t i = 0; i < r; ++i) s.particular[pivot_col[i]] = b[i];
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<residue> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = static_cast<residue>((p - A[i][f]) % p);
    s.kernel.push_back(std::move(v));
  }
  return s;
}

}  // namespace detail

/// Candidate plaintexts for `ciphertext` under `key`, sorted and distinct.
///
/// A unit f_e has exactly one preimage.  Otherwise every ideal I_r containing
/// f_e is tried: all h with g_r h = f_e (mod chi) and deg(g_t h) small enough
/// to come from an l-symbol plaintext give the candidate g_t h.
inline std::vector<std::string> decrypt(std::string_view ciphertext, const Alphabet& alphabet, const SecretKey& key,
                                        const DecryptOptions& opts = {}) {
  const QuotientRing R = detail::cipher_ring(key.p, key.beta);
  const residue p = key.p;
  const std::uint32_t radix = alphabet.radix();
  if (key.l == 0) throw NoCandidates("key length must be positive");

  const Digits c_p = base_convert(encode_text(ciphertext, alphabet), radix, p);
  if (c_p.size() > key.beta + 1) throw NoCandidates("ciphertext does not fit the ring of the key");
  const RingElement f_e = element(R, from_digits(p, c_p));

  std::set<std::string> found;
  auto accept = [&](const Poly& d) {
    const Digits m = base_convert(to_digits(d), p, radix);
    if (strip_leading_zeros(m).size() <= key.l) found.insert(decode_text(m, key.l, alphabet));
  };

  if (classify_element(f_e) == ElementKind::Unit) {
    accept(inverse(f_e).rep);
  } else {
    // Largest plaintext label has K base-p digits, so deg f_c <= K - 1.
    Digits max_label(key.l, radix - 1);
    const int K = static_cast<int>(base_convert(max_label, radix, p).size());
    const int max_deg = std::min<int>(static_cast<int>(key.beta), K - 1);
    const std::uint64_t cap = opts.enumeration_cap ? opts.enumeration_cap
                                                   : static_cast<std::uint64_t>(p) * p * p * p * p * p;
    const int n = R.degree();

    for (const auto& I_r : ideals(R)) {
      if (I_r.is_zero_ideal() || !I_r.contains(f_e)) continue;
      const IdealHandle I_t = annihilator(I_r);
      const Poly& g_r = I_r.generator();
      const Poly& g_t = I_t.generator();
      const int D = max_deg - g_t.degree();
      if (D < 0) {
        if (f_e.rep.is_zero()) accept(Poly(p));
        continue;
      }
      // columns: g_r x^i mod chi for i = 0..D
      std::vector<std::vector<residue>> A(n, std::vector<residue>(D + 1, 0));
      for (int i = 0; i <= D; ++i) {
        const Poly col = rem(mul(g_r, Poly::monomial(p, 1, i)), R.modulus());
        for (int j = 0; j < n; ++j) A[j][i] = col.coeff(j);
      }
      std::vector<residue> b(n);
      for (int j = 0; j < n; ++j) b[j] = f_e.rep.coeff(j);
      const auto sol = detail::solve_mod_p(std::move(A), std::move(b), p);
      if (!sol) continue;

      std::uint64_t combos = 1;
      for (std::size_t k = 0; k < sol->kernel.size(); ++k) {
        combos *= p;
        if (combos > cap) {
          throw CandidateExplosion("ideal " + I_r.label() + " leaves " + std::to_string(sol->kernel.size()) +
                                   " free coefficients over Z_" + std::to_string(p));
        }
      }
      std::vector<residue> coef(sol->kernel.size(), 0);
      for (std::uint64_t it = 0; it < combos; ++it) {
        std::vector<std::int64_t> h(sol->particular.begin(), sol->particular.end());
        for (std::size_t k = 0; k < coef.size(); ++k) {
          for (int i = 0; i <= D; ++i) h[i] += std::int64_t(coef[k]) * sol->kernel[k][i];
        }
        accept(mul(g_t, Poly(p, h)));
        for (std::size_t k = 0; k < coef.size() && ++coef[k] == p; ++k) coef[k] = 0;
      }
    }
  }
  if (found.empty()) throw NoCandidates("no plaintext of length " + std::to_string(key.l) + " maps to this ciphertext");
  return {found.begin(), found.end()};
}

}  // namespace blalg

#endif  // BLALG_MV_CRYPT_HPP
