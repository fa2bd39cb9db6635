#ifndef BLALG_QUOTIENT_RING_HPP
#define BLALG_QUOTIENT_RING_HPP

// R = Z_p[x]/(f) and its lattice of ideals.
//
// Every ideal of R is principal and generated by a monic divisor of f, so an
// ideal is stored intensionally as one exponent per irreducible factor of f:
// the ideal with exponents (a_1..a_r) is generated by prod f_i^a_i.  Larger
// exponents mean smaller ideals; (0) has the exponents of f itself.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "blalg/algebra.hpp"
#include "blalg/errors.hpp"
#include "blalg/zp_poly.hpp"

namespace blalg {

class QuotientRing {
 public:
  residue p() const noexcept { return data_->p; }
  const Poly& modulus() const noexcept { return data_->modulus; }
  const Factorization& factorization() const noexcept { return data_->factorization; }
  bool squarefree() const noexcept { return data_->squarefree; }
  int degree() const noexcept { return data_->modulus.degree(); }
  /// Number of irreducible factors of the modulus (the number of local components).
  std::size_t components() const noexcept { return data_->factorization.factors.size(); }

  friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
    return a.data_ == b.data_ || (a.p() == b.p() && a.modulus() == b.modulus());
  }

  friend QuotientRing make_general(residue p, const Poly& f);

 private:
  struct Data {
    residue p;
    Poly modulus;
    Factorization factorization;
    bool squarefree;
  };
  explicit QuotientRing(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

inline QuotientRing make_general(residue p, const Poly& f) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (f.modulus() != p) throw ModulusMismatch("modulus polynomial is not over Z_" + std::to_string(p));
  if (f.degree() < 1) throw NotMonic("modulus must have degree at least 1");
  if (!f.is_monic()) throw NotMonic(to_string(f) + " is not monic");

  auto fac = factor(f);
  const bool by_exponents = fac.squarefree();
  const bool by_derivative = gcd(f, derivative(f)).is_one();
  if (by_exponents != by_derivative) {
    throw ConsistencyViolation("squarefree tests disagree for " + to_string(f));
  }
  return QuotientRing(std::make_shared<const QuotientRing::Data>(
      QuotientRing::Data{p, f, std::move(fac), by_exponents}));
}

/// chi_beta(x) = x^(beta+1) - x
inline Poly chi(residue p, unsigned beta) {
  return sub(Poly::monomial(p, 1, beta + 1), Poly::x(p));
}

/// R_{p,1,beta} = Z_p[x]/(x^(beta+1) - x).  Squarefreeness is recorded on
/// the ring; it fails exactly when p divides beta.
inline QuotientRing make_ring(residue p, unsigned beta) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (beta < 1) throw SizeOutOfRange("beta must be at least 1");
  return make_general(p, chi(p, beta));
}

// ---------------------------------------------------------------------------
// Elements

struct RingElement {
  QuotientRing ring;
  Poly rep;  ///< reduced: deg rep < deg modulus

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring == b.ring && a.rep == b.rep;
  }
};

inline RingElement element(const QuotientRing& R, const Poly& f) {
  if (f.modulus() != R.p()) throw ModulusMismatch("element is not over Z_" + std::to_string(R.p()));
  return {R, rem(f, R.modulus())};
}

namespace detail {
inline void same_ring(const QuotientRing& a, const QuotientRing& b) {
  if (!(a == b)) throw RingMismatch("operands live in different rings");
}
}  // namespace detail

inline RingElement element_add(const RingElement& a, const RingElement& b) {
  detail::same_ring(a.ring, b.ring);
  return element(a.ring, add(a.rep, b.rep));
}

inline RingElement element_mul(const RingElement& a, const RingElement& b) {
  detail::same_ring(a.ring, b.ring);
  return element(a.ring, mul(a.rep, b.rep));
}

/// Inverse by extended Euclid against the modulus; NotAUnit for zero divisors.
inline RingElement inverse(const RingElement& a) {
  auto [g, u, v] = xgcd(a.rep, a.ring.modulus());
  if (!g.is_one()) throw NotAUnit(to_string(a.rep) + " is not a unit mod " + to_string(a.ring.modulus()));
  return element(a.ring, u);
}

enum class ElementKind { Zero, Unit, ZeroDivisor };

inline const char* to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Zero: return "Zero";
    case ElementKind::Unit: return "Unit";
    case ElementKind::ZeroDivisor: return "ZeroDivisor";
  }
  return "?";
}

inline ElementKind classify_element(const RingElement& a) {
  if (a.rep.is_zero()) return ElementKind::Zero;
  return gcd(a.rep, a.ring.modulus()).is_one() ? ElementKind::Unit : ElementKind::ZeroDivisor;
}

// ---------------------------------------------------------------------------
// Ideals

class IdealHandle {
 public:
  IdealHandle(QuotientRing ring, std::vector<unsigned> exps) : ring_(std::move(ring)), exps_(std::move(exps)) {
    const auto& fs = ring_.factorization().factors;
    if (exps_.size() != fs.size()) throw DimensionMismatch("one exponent per irreducible factor is required");
    generator_ = Poly::one(ring_.p());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (exps_[i] > fs[i].second) {
        throw SizeOutOfRange("exponent " + std::to_string(exps_[i]) + " exceeds factor multiplicity");
      }
      for (unsigned k = 0; k < exps_[i]; ++k) generator_ = mul(generator_, fs[i].first);
    }
  }

  const QuotientRing& ring() const noexcept { return ring_; }
  const std::vector<unsigned>& exps() const noexcept { return exps_; }
  const Poly& generator() const noexcept { return generator_; }

  bool is_whole_ring() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned a) { return a == 0; });
  }
  bool is_zero_ideal() const {
    const auto& fs = ring_.factorization().factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (exps_[i] != fs[i].second) return false;
    }
    return true;
  }

  /// J is a subset of this ideal.
  bool contains(const IdealHandle& J) const {
    detail::same_ring(ring_, J.ring_);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > J.exps_[i]) return false;
    }
    return true;
  }
  bool contains(const RingElement& a) const {
    detail::same_ring(ring_, a.ring);
    return divides(generator_, a.rep);
  }

  /// "(x^2+2x)", with "(0)" for the zero ideal.
  std::string label() const {
    return is_zero_ideal() ? "(0)" : "(" + to_string(generator_) + ")";
  }

  friend bool operator==(const IdealHandle& a, const IdealHandle& b) {
    return a.ring_ == b.ring_ && a.exps_ == b.exps_;
  }

 private:
  QuotientRing ring_;
  std::vector<unsigned> exps_;
  Poly generator_ = Poly(2);
};

inline IdealHandle whole_ring(const QuotientRing& R) {
  return IdealHandle(R, std::vector<unsigned>(R.components(), 0));
}

inline IdealHandle zero_ideal(const QuotientRing& R) {
  std::vector<unsigned> e;
  for (const auto& f : R.factorization().factors) e.push_back(f.second);
  return IdealHandle(R, e);
}

/// The ideal generated by a divisor g of the modulus (g need not be monic).
inline IdealHandle ideal_from_generator(const QuotientRing& R, const Poly& g) {
  if (g.modulus() != R.p()) throw ModulusMismatch("generator is not over Z_" + std::to_string(R.p()));
  if (g.is_zero()) return zero_ideal(R);
  if (!divides(g, R.modulus())) {
    throw NotInIdeal(to_string(g) + " does not divide the modulus " + to_string(R.modulus()));
  }
  Poly rest = monic(g);
  std::vector<unsigned> e;
  for (const auto& [f, mult] : R.factorization().factors) {
    e.push_back(detail::strip_factor(rest, f));
  }
  return IdealHandle(R, e);
}

/// All prod(e_i + 1) ideals, sorted by generator.
inline std::vector<IdealHandle> ideals(const QuotientRing& R) {
  const auto& fs = R.factorization().factors;
  std::vector<IdealHandle> out;
  std::vector<unsigned> e(fs.size(), 0);
  while (true) {
    out.emplace_back(R, e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > fs[i].second) e[i++] = 0;
    if (i == e.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const IdealHandle& a, const IdealHandle& b) { return a.generator() < b.generator(); });
  return out;
}

enum class IdealOp { Sum, Product, Intersect, Quotient };

/// Exponentwise ideal arithmetic.  For Quotient the result is the colon
/// ideal (I : J) = {r : rJ in I}, so annihilator(J) = ideal_op((0), J, Quotient).
inline IdealHandle ideal_op(const IdealHandle& I, const IdealHandle& J, IdealOp kind) {
  detail::same_ring(I.ring(), J.ring());
  const auto& fs = I.ring().factorization().factors;
  std::vector<unsigned> e(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const unsigned a = I.exps()[i], b = J.exps()[i], cap = fs[i].second;
    switch (kind) {
      case IdealOp::Sum: e[i] = std::min(a, b); break;
      case IdealOp::Intersect: e[i] = std::max(a, b); break;
      case IdealOp::Product: e[i] = std::min(a + b, cap); break;
      case IdealOp::Quotient: e[i] = a > b ? a - b : 0; break;
    }
  }
  return IdealHandle(I.ring(), e);
}

inline IdealHandle annihilator(const IdealHandle& I) {
  const auto& fs = I.ring().factorization().factors;
  std::vector<unsigned> e(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) e[i] = fs[i].second - I.exps()[i];
  return IdealHandle(I.ring(), e);
}

/// The principal ideal (a) = (gcd(a, f)), the smallest ideal containing a.
inline IdealHandle minimal_containing_ideal(const RingElement& a) {
  if (a.rep.is_zero()) throw ZeroElement("the zero element lies in every ideal");
  return ideal_from_generator(a.ring, gcd(a.rep, a.ring.modulus()));
}

/// h with a.rep = generator(I) * h exactly, as polynomials.
inline Poly cofactor(const RingElement& a, const IdealHandle& I) {
  detail::same_ring(a.ring, I.ring());
  auto [q, r] = divmod(a.rep, I.generator());
  if (!r.is_zero()) {
    throw NotInIdeal(to_string(a.rep) + " is not a multiple of " + to_string(I.generator()));
  }
  return q;
}

// ---------------------------------------------------------------------------
// Export as a residuated lattice

struct IdealLattice {
  FiniteAlgebra algebra;
  std::vector<IdealHandle> ideals;  ///< ideals[i] is element i of the algebra
};

/// Id(R) ordered by inclusion with (.) = product and x -> y = (y : x).
/// Element 0 is (0) and the last element is R.
inline IdealLattice ideal_lattice(const QuotientRing& R) {
  auto ids = ideals(R);
  std::stable_sort(ids.begin(), ids.end(), [](const IdealHandle& a, const IdealHandle& b) {
    return a.generator().degree() > b.generator().degree();
  });
  const std::size_t n = ids.size();
  auto index_of = [&](const IdealHandle& I) {
    return static_cast<elem>(std::find(ids.begin(), ids.end(), I) - ids.begin());
  };
  std::vector<std::string> names;
  FiniteAlgebra::Relation leq(n, std::vector<bool>(n));
  FiniteAlgebra::Matrix odot(n, std::vector<elem>(n)), imp(n, std::vector<elem>(n));
  for (elem i = 0; i < n; ++i) {
    names.push_back(ids[i].label());
    for (elem j = 0; j < n; ++j) {
      leq[i][j] = ids[j].contains(ids[i]);
      odot[i][j] = index_of(ideal_op(ids[i], ids[j], IdealOp::Product));
      imp[i][j] = index_of(ideal_op(ids[j], ids[i], IdealOp::Quotient));
    }
  }
  return {FiniteAlgebra::from_tables(std::move(names), leq, odot, imp), std::move(ids)};
}

inline FiniteAlgebra to_algebra(const QuotientRing& R) { return ideal_lattice(R).algebra; }

}  // namespace blalg

#endif  // BLALG_QUOTIENT_RING_HPP
