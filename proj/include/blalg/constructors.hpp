#ifndef BLALG_CONSTRUCTORS_HPP
#define BLALG_CONSTRUCTORS_HPP

// MV-chains, ordinal sums, direct products and ideal lattices of the ring
// catalog Zn(m) | Quot(p, f) | Prod(d1, ..., dk).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blalg/algebra.hpp"
#include "blalg/errors.hpp"
#include "blalg/quotient_ring.hpp"
#include "blalg/zp_poly.hpp"

namespace blalg {

/// The m-element MV-chain 0 < a1 < ... < a_{m-2} < 1 (Lukasiewicz tables).
inline FiniteAlgebra mv_chain(std::size_t m) {
  if (m < 2) throw SizeOutOfRange("an MV-chain needs at least 2 elements");
  const std::size_t k = m - 1;
  std::vector<std::string> names;
  FiniteAlgebra::Relation leq(m, std::vector<bool>(m));
  FiniteAlgebra::Matrix odot(m, std::vector<elem>(m)), imp(m, std::vector<elem>(m));
  for (elem i = 0; i < m; ++i) {
    names.push_back(i == 0 ? "0" : i == k ? "1" : "a" + std::to_string(i));
    for (elem j = 0; j < m; ++j) {
      leq[i][j] = i <= j;
      imp[i][j] = i <= j ? k : k - i + j;
      odot[i][j] = i + j <= k ? 0 : i + j - k;
    }
  }
  return FiniteAlgebra::from_tables(std::move(names), leq, odot, imp);
}

/// L1 (+) L2 with the top of L1 glued to the bottom of L2.  Elements of L1
/// keep their indices; element j > 0 of L2 becomes n1 - 1 + j.
inline FiniteAlgebra ordinal_sum(const FiniteAlgebra& L1, const FiniteAlgebra& L2) {
  const std::size_t n1 = L1.size(), n2 = L2.size(), n = n1 + n2 - 1;
  const elem seam = n1 - 1;
  auto in_lower = [&](elem x) { return x <= seam; };
  auto up = [&](elem x) { return x - seam; };  // index in L2, for x >= seam
  auto down = [&](elem y) { return y + seam; };

  std::vector<std::string> names = L1.names();
  for (elem j = 1; j < n2; ++j) {
    std::string nm = L2.name(j);
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "'";
    names.push_back(std::move(nm));
  }

  FiniteAlgebra::Relation leq(n, std::vector<bool>(n));
  FiniteAlgebra::Matrix odot(n, std::vector<elem>(n)), imp(n, std::vector<elem>(n));
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      const bool both_lower = in_lower(x) && in_lower(y);
      const bool both_upper = x >= seam && y >= seam;
      if (both_lower) {
        leq[x][y] = L1.leq(x, y);
      } else if (both_upper) {
        leq[x][y] = L2.leq(up(x), up(y));
      } else {
        leq[x][y] = x < y;
      }

      if (leq[x][y]) {
        imp[x][y] = n - 1;
      } else if (both_upper) {
        imp[x][y] = down(L2.imp(up(x), up(y)));
      } else if (both_lower) {
        imp[x][y] = L1.imp(x, y);
      } else {
        imp[x][y] = y;
      }

      if (both_upper) {
        odot[x][y] = down(L2.odot(up(x), up(y)));
      } else if (both_lower) {
        odot[x][y] = L1.odot(x, y);
      } else {
        odot[x][y] = std::min(x, y);
      }
    }
  }
  return FiniteAlgebra::from_tables(std::move(names), leq, odot, imp);
}

/// Componentwise product; (i, j) has index i * n2 + j.
inline FiniteAlgebra direct_product(const FiniteAlgebra& L1, const FiniteAlgebra& L2) {
  const std::size_t n1 = L1.size(), n2 = L2.size(), n = n1 * n2;
  std::vector<std::string> names;
  FiniteAlgebra::Relation leq(n, std::vector<bool>(n));
  FiniteAlgebra::Matrix odot(n, std::vector<elem>(n)), imp(n, std::vector<elem>(n));
  for (elem x = 0; x < n; ++x) {
    const elem x1 = x / n2, x2 = x % n2;
    names.push_back("(" + L1.name(x1) + "," + L2.name(x2) + ")");
    for (elem y = 0; y < n; ++y) {
      const elem y1 = y / n2, y2 = y % n2;
      leq[x][y] = L1.leq(x1, y1) && L2.leq(x2, y2);
      odot[x][y] = L1.odot(x1, y1) * n2 + L2.odot(x2, y2);
      imp[x][y] = L1.imp(x1, y1) * n2 + L2.imp(x2, y2);
    }
  }
  return FiniteAlgebra::from_tables(std::move(names), leq, odot, imp);
}

/// The Boolean algebra 2^k; element names are bit strings, most significant
/// coordinate first.
inline FiniteAlgebra boolean_algebra(std::size_t k) {
  if (k < 1) throw SizeOutOfRange("a Boolean algebra needs at least one atom");
  FiniteAlgebra B = mv_chain(2);
  for (std::size_t i = 1; i < k; ++i) B = direct_product(B, mv_chain(2));
  std::vector<std::string> names;
  for (elem x = 0; x < B.size(); ++x) {
    std::string s;
    for (std::size_t b = k; b-- > 0;) s += ((x >> b) & 1) ? '1' : '0';
    names.push_back(s);
  }
  return B.with_names(std::move(names));
}

// ---------------------------------------------------------------------------
// Ring catalog

struct RingDescriptor {
  enum class Kind { Zn, Quot, Prod };
  Kind kind = Kind::Zn;
  std::uint64_t m = 0;                 ///< Zn
  residue p = 0;                       ///< Quot
  Poly f = Poly(2);                    ///< Quot
  std::vector<RingDescriptor> parts;   ///< Prod

  static RingDescriptor zn(std::uint64_t m) {
    if (m < 2) throw SizeOutOfRange("Zn needs m >= 2");
    RingDescriptor d;
    d.m = m;
    return d;
  }
  static RingDescriptor quot(residue p, Poly f) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (f.degree() < 1 || !f.is_monic()) throw NotMonic(to_string(f) + " must be monic of degree >= 1");
    RingDescriptor d;
    d.kind = Kind::Quot;
    d.p = p;
    d.f = std::move(f);
    return d;
  }
  static RingDescriptor prod(std::vector<RingDescriptor> parts) {
    if (parts.size() < 2) throw SizeOutOfRange("a product needs at least 2 components");
    RingDescriptor d;
    d.kind = Kind::Prod;
    d.parts = std::move(parts);
    return d;
  }
};

/// Grammar form, e.g. "Prod(Zn(2),Quot(3,x^3+2x))".
inline std::string to_string(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::Zn: return "Zn(" + std::to_string(d.m) + ")";
    case RingDescriptor::Kind::Quot: return "Quot(" + std::to_string(d.p) + "," + to_string(d.f) + ")";
    case RingDescriptor::Kind::Prod: {
      std::string s = "Prod(";
      for (std::size_t i = 0; i < d.parts.size(); ++i) s += (i ? "," : "") + to_string(d.parts[i]);
      return s + ")";
    }
  }
  return {};
}

/// Mathematical name of the ring, e.g. "Z_2×Z_4".
inline std::string ring_name(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::Zn: return "Z_" + std::to_string(d.m);
    case RingDescriptor::Kind::Quot: return "Z_" + std::to_string(d.p) + "[x]/(" + to_string(d.f) + ")";
    case RingDescriptor::Kind::Prod: {
      std::string s;
      for (std::size_t i = 0; i < d.parts.size(); ++i) s += (i ? "×" : "") + ring_name(d.parts[i]);
      return s;
    }
  }
  return {};
}

namespace detail {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view s) : s_(s) {}

  RingDescriptor parse() {
    auto d = descriptor();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ring descriptor: " + what + " at offset " + std::to_string(i_) + " in '" +
                     std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string word() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(b, i_ - b));
  }
  std::uint64_t number() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_ || i_ - b > 18) fail("expected a number");
    return std::stoull(std::string(s_.substr(b, i_ - b)));
  }

  RingDescriptor descriptor() {
    const std::string head = word();
    expect('(');
    RingDescriptor d;
    if (head == "Zn") {
      d = RingDescriptor::zn(number());
    } else if (head == "Quot") {
      const auto p = number();
      if (p > 0xFFFFFFFFull) fail("prime too large");
      expect(',');
      std::size_t b = i_, depth = 0;
      while (i_ < s_.size() && !(depth == 0 && s_[i_] == ')')) {
        if (s_[i_] == '(') ++depth;
        if (s_[i_] == ')') --depth;
        ++i_;
      }
      if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
      d = RingDescriptor::quot(static_cast<residue>(p),
                               parse_poly(static_cast<residue>(p), s_.substr(b, i_ - b)));
    } else if (head == "Prod") {
      std::vector<RingDescriptor> parts{descriptor()};
      skip();
      while (i_ < s_.size() && s_[i_] == ',') {
        ++i_;
        parts.push_back(descriptor());
        skip();
      }
      d = RingDescriptor::prod(std::move(parts));
    } else {
      fail("unknown ring constructor '" + head + "'");
    }
    expect(')');
    return d;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

/// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    unsigned e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e) out.emplace_back(q, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

}  // namespace detail

inline RingDescriptor parse_descriptor(std::string_view text) {
  return detail::DescriptorParser(text).parse();
}

/// Number of ideals, computed without building any lattice.
inline std::uint64_t ideal_count(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::Zn: {
      std::uint64_t c = 1;
      for (auto [q, e] : detail::factor_integer(d.m)) c *= e + 1;
      return c;
    }
    case RingDescriptor::Kind::Quot: {
      std::uint64_t c = 1;
      for (const auto& fe : factor(d.f).factors) c *= fe.second + 1;
      return c;
    }
    case RingDescriptor::Kind::Prod: {
      std::uint64_t c = 1;
      for (const auto& part : d.parts) {
        c *= ideal_count(part);
        if (c > (1ull << 40)) return c;
      }
      return c;
    }
  }
  return 0;
}

inline constexpr std::uint64_t kDefaultIdealCap = 4096;

/// Id(Z_m): product of chains of sizes a_j + 1 over m = prod p_j^a_j, with
/// each element named by the generator of its ideal ("(0)" for the zero ideal).
inline FiniteAlgebra zn_ideal_lattice(std::uint64_t m) {
  const auto primes = detail::factor_integer(m);
  FiniteAlgebra L = mv_chain(primes.front().second + 1);
  for (std::size_t j = 1; j < primes.size(); ++j) L = direct_product(L, mv_chain(primes[j].second + 1));
  std::vector<std::string> names;
  for (elem x = 0; x < L.size(); ++x) {
    // Decode mixed-radix chain positions, last prime fastest.
    std::uint64_t g = 1;
    elem rest = x;
    for (std::size_t j = primes.size(); j-- > 0;) {
      const unsigned a = primes[j].second;
      const unsigned b = static_cast<unsigned>(rest % (a + 1));
      rest /= a + 1;
      for (unsigned t = b; t < a; ++t) g *= primes[j].first;
    }
    names.push_back(g == m ? "(0)" : "(" + std::to_string(g) + ")");
  }
  return L.with_names(std::move(names));
}

inline FiniteAlgebra ring_ideal_lattice(const RingDescriptor& d, std::uint64_t cap = kDefaultIdealCap) {
  const auto count = ideal_count(d);
  if (count > cap) {
    throw CapExceeded(ring_name(d) + " has " + std::to_string(count) + " ideals, above the cap of " +
                      std::to_string(cap));
  }
  switch (d.kind) {
    case RingDescriptor::Kind::Zn: return zn_ideal_lattice(d.m);
    case RingDescriptor::Kind::Quot: return to_algebra(make_general(d.p, d.f));
    case RingDescriptor::Kind::Prod: {
      FiniteAlgebra L = ring_ideal_lattice(d.parts[0], cap);
      for (std::size_t i = 1; i < d.parts.size(); ++i) L = direct_product(L, ring_ideal_lattice(d.parts[i], cap));
      return L;
    }
  }
  throw ParseError("unknown ring descriptor");
}

}  // namespace blalg

#endif  // BLALG_CONSTRUCTORS_HPP
