#ifndef BLALG_ALGEBRA_HPP
#define BLALG_ALGEBRA_HPP

// Finite residuated lattices given by explicit tables.
//
// Element 0 is always the bottom and element n-1 the top.  The order is
// stored as a truth table; meet and join are derived from it when the value
// is built and cached.  Every FiniteAlgebra that exists has passed the
// lattice, monoid and residuation checks of from_tables().

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blalg/errors.hpp"

namespace blalg {

using elem = std::size_t;

class FiniteAlgebra {
 public:
  using Matrix = std::vector<std::vector<elem>>;
  using Relation = std::vector<std::vector<bool>>;

  static FiniteAlgebra from_tables(std::vector<std::string> names, const Relation& leq,
                                   const Matrix& odot, const Matrix& imp);

  std::size_t size() const noexcept { return n_; }
  elem bottom() const noexcept { return 0; }
  elem top() const noexcept { return n_ - 1; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(elem x) const { return names_.at(x); }

  bool leq(elem x, elem y) const { return leq_[x * n_ + y] != 0; }
  bool lt(elem x, elem y) const { return x != y && leq(x, y); }
  bool comparable(elem x, elem y) const { return leq(x, y) || leq(y, x); }
  elem odot(elem x, elem y) const { return odot_[x * n_ + y]; }
  elem imp(elem x, elem y) const { return imp_[x * n_ + y]; }
  elem meet(elem x, elem y) const { return meet_[x * n_ + y]; }
  elem join(elem x, elem y) const { return join_[x * n_ + y]; }

  Relation leq_relation() const;
  Matrix odot_table() const { return unflatten(odot_); }
  Matrix imp_table() const { return unflatten(imp_); }

  /// Same tables (names are not compared).
  bool same_tables(const FiniteAlgebra& other) const {
    return n_ == other.n_ && leq_ == other.leq_ && odot_ == other.odot_ && imp_ == other.imp_;
  }

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.same_tables(b) && a.names_ == b.names_;
  }

  FiniteAlgebra with_names(std::vector<std::string> names) const {
    if (names.size() != n_) throw DimensionMismatch("name count does not match algebra size");
    FiniteAlgebra out = *this;
    out.names_ = std::move(names);
    return out;
  }

 private:
  FiniteAlgebra() = default;
  Matrix unflatten(const std::vector<elem>& flat) const {
    Matrix out(n_, std::vector<elem>(n_));
    for (elem x = 0; x < n_; ++x) {
      for (elem y = 0; y < n_; ++y) out[x][y] = flat[x * n_ + y];
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<elem> odot_;
  std::vector<elem> imp_;
  std::vector<elem> meet_;
  std::vector<elem> join_;
};

inline FiniteAlgebra::Relation FiniteAlgebra::leq_relation() const {
  Relation out(n_, std::vector<bool>(n_));
  for (elem x = 0; x < n_; ++x) {
    for (elem y = 0; y < n_; ++y) out[x][y] = leq(x, y);
  }
  return out;
}

namespace detail {

inline std::string tuple_text(std::initializer_list<elem> xs) {
  std::string out = "(";
  for (auto x : xs) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + ")";
}

// Greatest element of `cands` under leq, if any.
template <typename Leq>
std::optional<elem> greatest(const std::vector<elem>& cands, Leq&& leq) {
  for (elem c : cands) {
    if (std::all_of(cands.begin(), cands.end(), [&](elem d) { return leq(d, c); })) return c;
  }
  return std::nullopt;
}

}  // namespace detail

inline FiniteAlgebra FiniteAlgebra::from_tables(std::vector<std::string> names,
                                                const Relation& leq, const Matrix& odot,
                                                const Matrix& imp) {
  const std::size_t n = names.size();
  if (n == 0) throw DimensionMismatch("an algebra needs at least one element");
  auto square = [n](const auto& m) {
    return m.size() == n &&
           std::all_of(m.begin(), m.end(), [n](const auto& row) { return row.size() == n; });
  };
  if (!square(leq) || !square(odot) || !square(imp)) {
    throw DimensionMismatch("tables must all be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      if (odot[x][y] >= n || imp[x][y] >= n) {
        throw DimensionMismatch("table entry out of range at " + detail::tuple_text({x, y}), {x, y});
      }
    }
  }

  FiniteAlgebra a;
  a.n_ = n;
  a.names_ = std::move(names);
  a.leq_.assign(n * n, 0);
  a.odot_.resize(n * n);
  a.imp_.resize(n * n);
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      a.leq_[x * n + y] = leq[x][y] ? 1 : 0;
      a.odot_[x * n + y] = odot[x][y];
      a.imp_[x * n + y] = imp[x][y];
    }
  }

  // Partial order with 0 bottom and n-1 top.
  for (elem x = 0; x < n; ++x) {
    if (!a.leq(x, x)) throw NotALattice("order is not reflexive at " + detail::tuple_text({x}), {x});
    if (!a.leq(0, x)) throw NotALattice("element 0 is not below " + detail::tuple_text({x}), {x});
    if (!a.leq(x, n - 1)) throw NotALattice("element n-1 is not above " + detail::tuple_text({x}), {x});
    for (elem y = 0; y < n; ++y) {
      if (x != y && a.leq(x, y) && a.leq(y, x)) {
        throw NotALattice("order is not antisymmetric at " + detail::tuple_text({x, y}), {x, y});
      }
      for (elem z = 0; z < n; ++z) {
        if (a.leq(x, y) && a.leq(y, z) && !a.leq(x, z)) {
          throw NotALattice("order is not transitive at " + detail::tuple_text({x, y, z}), {x, y, z});
        }
      }
    }
  }

  // Meets and joins.
  a.meet_.resize(n * n);
  a.join_.resize(n * n);
  std::vector<elem> bounds;
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      bounds.clear();
      for (elem z = 0; z < n; ++z) {
        if (a.leq(z, x) && a.leq(z, y)) bounds.push_back(z);
      }
      auto m = detail::greatest(bounds, [&](elem u, elem v) { return a.leq(u, v); });
      if (!m) throw NotALattice("no meet for " + detail::tuple_text({x, y}), {x, y});
      a.meet_[x * n + y] = *m;

      bounds.clear();
      for (elem z = 0; z < n; ++z) {
        if (a.leq(x, z) && a.leq(y, z)) bounds.push_back(z);
      }
      auto j = detail::greatest(bounds, [&](elem u, elem v) { return a.leq(v, u); });
      if (!j) throw NotALattice("no join for " + detail::tuple_text({x, y}), {x, y});
      a.join_[x * n + y] = *j;
    }
  }

  // Commutative ordered monoid with unit top.
  const elem one = n - 1;
  for (elem x = 0; x < n; ++x) {
    if (a.odot(x, one) != x) throw NotAMonoid("top is not a unit at " + detail::tuple_text({x}), {x});
    for (elem y = 0; y < n; ++y) {
      if (a.odot(x, y) != a.odot(y, x)) {
        throw NotAMonoid("product is not commutative at " + detail::tuple_text({x, y}), {x, y});
      }
      for (elem z = 0; z < n; ++z) {
        if (a.odot(a.odot(x, y), z) != a.odot(x, a.odot(y, z))) {
          throw NotAMonoid("product is not associative at " + detail::tuple_text({x, y, z}), {x, y, z});
        }
        if (a.leq(x, y) && !a.leq(a.odot(x, z), a.odot(y, z))) {
          throw NotAMonoid("product is not monotone at " + detail::tuple_text({x, y, z}), {x, y, z});
        }
      }
    }
  }

  // z <= x -> y  iff  x (.) z <= y
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      for (elem z = 0; z < n; ++z) {
        if (a.leq(z, a.imp(x, y)) != a.leq(a.odot(x, z), y)) {
          throw ResiduationFails("residuation fails at (x,y,z)=" + detail::tuple_text({x, y, z}),
                                 {x, y, z});
        }
      }
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Derived operations

inline elem star(const FiniteAlgebra& L, elem x) { return L.imp(x, L.bottom()); }

/// x (+) y = (x* (.) y*)*.  Meaningful as MV addition only on MV-algebras.
inline elem oplus(const FiniteAlgebra& L, elem x, elem y) {
  return star(L, L.odot(star(L, x), star(L, y)));
}

inline bool is_chain(const FiniteAlgebra& L) {
  for (elem x = 0; x < L.size(); ++x) {
    for (elem y = x + 1; y < L.size(); ++y) {
      if (!L.comparable(x, y)) return false;
    }
  }
  return true;
}

/// Coatoms: m < 1 with nothing strictly between m and 1.
inline std::vector<elem> maximal_elements(const FiniteAlgebra& L) {
  std::vector<elem> out;
  for (elem m = 0; m < L.size(); ++m) {
    if (m == L.top()) continue;
    bool cover = true;
    for (elem y = 0; y < L.size() && cover; ++y) {
      if (L.lt(m, y) && L.lt(y, L.top())) cover = false;
    }
    if (cover) out.push_back(m);
  }
  return out;
}

/// Atoms: 0 < m with nothing strictly between 0 and m.
inline std::vector<elem> minimal_elements(const FiniteAlgebra& L) {
  std::vector<elem> out;
  for (elem m = 0; m < L.size(); ++m) {
    if (m == L.bottom()) continue;
    bool cover = true;
    for (elem y = 0; y < L.size() && cover; ++y) {
      if (L.lt(L.bottom(), y) && L.lt(y, m)) cover = false;
    }
    if (cover) out.push_back(m);
  }
  return out;
}

/// Hasse diagram edges (x, y) with x covered by y.
inline std::vector<std::pair<elem, elem>> covers(const FiniteAlgebra& L) {
  std::vector<std::pair<elem, elem>> out;
  for (elem x = 0; x < L.size(); ++x) {
    for (elem y = 0; y < L.size(); ++y) {
      if (!L.lt(x, y)) continue;
      bool direct = true;
      for (elem z = 0; z < L.size() && direct; ++z) {
        if (L.lt(x, z) && L.lt(z, y)) direct = false;
      }
      if (direct) out.emplace_back(x, y);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom report

struct AxiomReport {
  bool residuated = true;
  bool prelinear = false;
  bool divisible = false;
  bool bl = false;
  bool mv = false;  ///< bl and x** = x for all x
  bool boolean = false;
  bool chain = false;
  /// One violating tuple per failed flag.
  std::map<std::string, std::vector<elem>> witnesses;
};

inline AxiomReport check_axioms(const FiniteAlgebra& L) {
  AxiomReport r;
  const std::size_t n = L.size();

  r.prelinear = true;
  r.divisible = true;
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      if (r.prelinear && L.join(L.imp(x, y), L.imp(y, x)) != L.top()) {
        r.prelinear = false;
        r.witnesses["prelinear"] = {x, y};
      }
      if (r.divisible && L.odot(x, L.imp(x, y)) != L.meet(x, y)) {
        r.divisible = false;
        r.witnesses["divisible"] = {x, y};
      }
    }
  }
  r.bl = r.residuated && r.prelinear && r.divisible;
  if (!r.bl) r.witnesses["bl"] = {};

  bool involutive = true;
  for (elem x = 0; x < n && involutive; ++x) {
    if (star(L, star(L, x)) != x) {
      involutive = false;
      r.witnesses["mv"] = {x};
    }
  }
  r.mv = r.bl && involutive;
  if (!r.bl && involutive) r.witnesses["mv"] = {};

  bool idempotent = true;
  for (elem x = 0; x < n && idempotent; ++x) {
    if (L.odot(x, x) != x) {
      idempotent = false;
      r.witnesses["boolean"] = {x};
    }
  }
  r.boolean = r.bl && idempotent && r.mv;
  if (!r.boolean && !r.witnesses.count("boolean")) r.witnesses["boolean"] = {};

  r.chain = true;
  for (elem x = 0; x < n && r.chain; ++x) {
    for (elem y = x + 1; y < n && r.chain; ++y) {
      if (!L.comparable(x, y)) {
        r.chain = false;
        r.witnesses["chain"] = {x, y};
      }
    }
  }
  return r;
}

/// Checks the MV axioms on (L, (+), *, 0) built by the BL->MV translation and
/// that the translation back reproduces (.), -> and the join.  Returns a
/// description of the first failure, or nullopt.
inline std::optional<std::string> mv_translation_violation(const FiniteAlgebra& L) {
  const std::size_t n = L.size();
  const elem zero = L.bottom();
  const elem one = star(L, zero);
  auto fail = [](const std::string& what, std::initializer_list<elem> t) {
    return std::optional<std::string>(what + " at " + detail::tuple_text(t));
  };
  for (elem x = 0; x < n; ++x) {
    if (star(L, star(L, x)) != x) return fail("x** != x", {x});
    if (oplus(L, x, zero) != x) return fail("0 is not neutral for (+)", {x});
    if (oplus(L, x, one) != one) return fail("x (+) 0* != 0*", {x});
    for (elem y = 0; y < n; ++y) {
      if (oplus(L, x, y) != oplus(L, y, x)) return fail("(+) not commutative", {x, y});
      if (oplus(L, star(L, oplus(L, star(L, x), y)), y) !=
          oplus(L, star(L, oplus(L, star(L, y), x)), x)) {
        return fail("(x* (+) y)* (+) y != (y* (+) x)* (+) x", {x, y});
      }
      if (L.odot(x, y) != star(L, oplus(L, star(L, x), star(L, y)))) {
        return fail("x (.) y != (x* (+) y*)*", {x, y});
      }
      if (L.imp(x, y) != oplus(L, star(L, x), y)) return fail("x -> y != x* (+) y", {x, y});
      if (L.join(x, y) != L.imp(L.imp(x, y), y)) return fail("x v y != (x -> y) -> y", {x, y});
      for (elem z = 0; z < n; ++z) {
        if (oplus(L, oplus(L, x, y), z) != oplus(L, x, oplus(L, y, z))) {
          return fail("(+) not associative", {x, y, z});
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism

inline constexpr std::size_t kDefaultIsomorphismCap = 64;

namespace detail {

struct ElementSignature {
  std::size_t below = 0, above = 0, zero_products = 0, fixed_products = 0;
  bool idempotent = false, involutive = false;
  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
};

inline std::vector<ElementSignature> signatures(const FiniteAlgebra& L) {
  std::vector<ElementSignature> out(L.size());
  for (elem x = 0; x < L.size(); ++x) {
    auto& s = out[x];
    s.idempotent = L.odot(x, x) == x;
    s.involutive = star(L, star(L, x)) == x;
    for (elem y = 0; y < L.size(); ++y) {
      s.below += L.leq(y, x);
      s.above += L.leq(x, y);
      s.zero_products += L.odot(x, y) == L.bottom();
      s.fixed_products += L.odot(x, y) == x;
    }
  }
  return out;
}

}  // namespace detail

/// First (lexicographic) bijection A -> B preserving order, (.) and ->, or
/// nullopt if the algebras are not isomorphic.
inline std::optional<std::vector<elem>> isomorphism(const FiniteAlgebra& A, const FiniteAlgebra& B,
                                                    std::size_t cap = kDefaultIsomorphismCap) {
  if (A.size() > cap || B.size() > cap) {
    throw SizeTooLarge("isomorphism search is capped at " + std::to_string(cap) + " elements");
  }
  if (A.size() != B.size()) return std::nullopt;
  const std::size_t n = A.size();
  const auto sa = detail::signatures(A);
  const auto sb = detail::signatures(B);

  constexpr elem kUnset = static_cast<elem>(-1);
  std::vector<elem> phi(n, kUnset);
  std::vector<bool> used(n, false);

  auto consistent = [&](elem i) {
    for (elem k = 0; k <= i; ++k) {
      const elem u = phi[i], v = phi[k];
      if (A.leq(i, k) != B.leq(u, v) || A.leq(k, i) != B.leq(v, u)) return false;
      for (auto [r, s] : {std::pair{A.odot(i, k), B.odot(u, v)}, std::pair{A.imp(i, k), B.imp(u, v)},
                          std::pair{A.imp(k, i), B.imp(v, u)}}) {
        if (r <= i && phi[r] != s) return false;
      }
    }
    return true;
  };

  // Pairs whose result had no image yet when they were checked.
  auto complete = [&] {
    for (elem x = 0; x < n; ++x) {
      for (elem y = 0; y < n; ++y) {
        if (phi[A.odot(x, y)] != B.odot(phi[x], phi[y])) return false;
        if (phi[A.imp(x, y)] != B.imp(phi[x], phi[y])) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, elem i) -> bool {
    if (i == n) return complete();
    for (elem j = 0; j < n; ++j) {
      if (used[j] || !(sa[i] == sb[j])) continue;
      phi[i] = j;
      used[j] = true;
      if (consistent(i) && self(self, i + 1)) return true;
      used[j] = false;
      phi[i] = kUnset;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return phi;
}

inline bool isomorphic(const FiniteAlgebra& A, const FiniteAlgebra& B,
                       std::size_t cap = kDefaultIsomorphismCap) {
  return isomorphism(A, B, cap).has_value();
}

}  // namespace blalg

#endif  // BLALG_ALGEBRA_HPP
