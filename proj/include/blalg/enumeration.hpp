#ifndef BLALG_ENUMERATION_HPP
#define BLALG_ENUMERATION_HPP

// Finite BL-algebras up to isomorphism: constructive generation for n <= 6,
// an exhaustive search for small n, the census tally, and the ring scan.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blalg/algebra.hpp"
#include "blalg/comet.hpp"
#include "blalg/constructors.hpp"
#include "blalg/errors.hpp"
#include "blalg/quotient_ring.hpp"

namespace blalg {

struct EnumeratedAlgebra {
  FiniteAlgebra algebra;
  std::string provenance;  ///< e.g. "Id(Z_2) ⊞ Id(Z_2×Z_2)"
};

inline constexpr std::size_t kMaxEnumerationSize = 6;

namespace detail {

/// Factorizations n = s1 * s2 * ... with 2 <= s1 <= s2 <= ...
inline void multiplicative_partitions(std::size_t n, std::size_t min_factor, std::vector<std::size_t>& cur,
                                      std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (std::size_t s = min_factor; s <= n; ++s) {
    if (n % s) continue;
    cur.push_back(s);
    multiplicative_partitions(n / s, s, cur, out);
    cur.pop_back();
  }
}

/// Id(Z_{2^(s-1)}) is the s-element MV-chain.
inline std::string chain_ring(std::size_t s) { return "Z_" + std::to_string(1ull << (s - 1)); }

/// MV-algebras of size n: products of MV-chains over the multiplicative
/// partitions of n.
inline std::vector<EnumeratedAlgebra> mv_base(std::size_t n) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> cur;
  multiplicative_partitions(n, 2, cur, parts);
  std::vector<EnumeratedAlgebra> out;
  for (const auto& ps : parts) {
    FiniteAlgebra L = mv_chain(ps[0]);
    std::string ring = chain_ring(ps[0]);
    for (std::size_t i = 1; i < ps.size(); ++i) {
      L = direct_product(L, mv_chain(ps[i]));
      ring += "×" + chain_ring(ps[i]);
    }
    out.push_back({std::move(L), "Id(" + ring + ")"});
  }
  return out;
}

inline std::string operand(const std::string& prov) {
  return prov.find("⊞") == std::string::npos ? prov : "(" + prov + ")";
}

inline std::string factor_operand(const std::string& prov) {
  return prov.find(' ') == std::string::npos ? prov : "(" + prov + ")";
}

inline bool contains_isomorphic(const std::vector<EnumeratedAlgebra>& xs, const FiniteAlgebra& L) {
  for (const auto& e : xs) {
    if (e.algebra.size() == L.size() && isomorphic(e.algebra, L)) return true;
  }
  return false;
}

}  // namespace detail

/// All BL-algebras of size 2..nmax, one representative per isomorphism
/// class.  Index k of the result holds size k (entries 0 and 1 empty).
///
/// Candidates are the MV base, C (+) B for a BL-chain C, and (unless
/// `with_products` is false) direct products A x B of smaller BL-algebras.
/// Without products the 6-element algebra 2 x (2 (+) 2) is not reached.
inline std::vector<std::vector<EnumeratedAlgebra>> enumerate_bl_upto(std::size_t nmax, bool with_products = true) {
  if (nmax < 2 || nmax > kMaxEnumerationSize) {
    throw SizeOutOfRange("enumeration supports 2 <= n <= " + std::to_string(kMaxEnumerationSize));
  }
  std::vector<std::vector<EnumeratedAlgebra>> by_size(nmax + 1);
  for (std::size_t n = 2; n <= nmax; ++n) {
    auto& out = by_size[n];
    for (auto& e : detail::mv_base(n)) {
      if (!detail::contains_isomorphic(out, e.algebra)) out.push_back(std::move(e));
    }
    for (std::size_t k = 2; k < n; ++k) {
      for (const auto& C : by_size[k]) {
        if (!is_chain(C.algebra)) continue;
        for (const auto& B : by_size[n - k + 1]) {
          FiniteAlgebra L = ordinal_sum(C.algebra, B.algebra);
          if (detail::contains_isomorphic(out, L)) continue;
          out.push_back({std::move(L), detail::operand(C.provenance) + " ⊞ " + detail::operand(B.provenance)});
        }
      }
    }
    if (!with_products) continue;
    for (std::size_t a = 2; a * a <= n; ++a) {
      if (n % a) continue;
      for (const auto& A : by_size[a]) {
        for (const auto& B : by_size[n / a]) {
          FiniteAlgebra L = direct_product(A.algebra, B.algebra);
          if (detail::contains_isomorphic(out, L)) continue;
          out.push_back({std::move(L), detail::factor_operand(A.provenance) + " × " + detail::factor_operand(B.provenance)});
        }
      }
    }
  }
  return by_size;
}

inline std::vector<EnumeratedAlgebra> enumerate_bl(std::size_t n, bool with_products = true) {
  if (n < 2 || n > kMaxEnumerationSize) {
    throw SizeOutOfRange("enumeration supports 2 <= n <= " + std::to_string(kMaxEnumerationSize));
  }
  return std::move(enumerate_bl_upto(n, with_products)[n]);
}

// ---------------------------------------------------------------------------
// Census

struct CensusRow {
  std::size_t n = 0;
  std::size_t mv = 0, mv_chains = 0, bl = 0, bl_chains = 0, bl_comets = 0;
};

struct CensusEntry {
  std::size_t n = 0;
  EnumeratedAlgebra item;
  CometProfile profile;
};

struct CensusReport {
  std::vector<CensusRow> rows;  ///< n = 2..nmax
  std::vector<CensusEntry> representatives;
};

inline CensusReport census(std::size_t nmax, bool with_products = true) {
  const auto by_size = enumerate_bl_upto(nmax, with_products);
  CensusReport rep;
  for (std::size_t n = 2; n <= nmax; ++n) {
    CensusRow row;
    row.n = n;
    for (const auto& e : by_size[n]) {
      auto pr = classify(e.algebra);
      ++row.bl;
      row.mv += pr.is_mv;
      row.mv_chains += pr.is_mv && pr.is_chain;
      row.bl_chains += pr.is_chain;
      row.bl_comets += pr.is_comet;
      rep.representatives.push_back({n, e, std::move(pr)});
    }
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive search

inline constexpr std::size_t kDefaultBruteForceCap = 4;

/// Every BL-algebra on n elements found by listing bounded lattices, then
/// commutative monotone products below the meet, then deriving -> as the
/// residuum.  Deduplicated by isomorphism.
inline std::vector<FiniteAlgebra> brute_force_enumerate(std::size_t n, std::size_t cap = kDefaultBruteForceCap) {
  if (n < 2 || n > cap) {
    throw SizeOutOfRange("brute-force enumeration supports 2 <= n <= " + std::to_string(cap));
  }
  const elem top = n - 1;

  // Orders with x < y only when index x < index y; every finite poset has
  // such a labeling, and isomorphic duplicates are removed at the end.
  std::vector<std::pair<elem, elem>> pairs;
  for (elem x = 1; x < top; ++x) {
    for (elem y = x + 1; y < top; ++y) pairs.emplace_back(x, y);
  }
  std::vector<FiniteAlgebra::Relation> orders;
  for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
    FiniteAlgebra::Relation leq(n, std::vector<bool>(n));
    for (elem x = 0; x < n; ++x) {
      leq[x][x] = leq[0][x] = leq[x][top] = true;
    }
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1) leq[pairs[b].first][pairs[b].second] = true;
    }
    bool transitive = true;
    for (elem x = 0; x < n && transitive; ++x) {
      for (elem y = 0; y < n && transitive; ++y) {
        for (elem z = 0; z < n && transitive; ++z) {
          if (leq[x][y] && leq[y][z] && !leq[x][z]) transitive = false;
        }
      }
    }
    if (transitive) orders.push_back(std::move(leq));
  }

  std::vector<FiniteAlgebra> found;
  for (const auto& leq : orders) {
    // meet by brute force; skip non-lattices
    FiniteAlgebra::Matrix meet(n, std::vector<elem>(n));
    bool lattice = true;
    for (elem x = 0; x < n && lattice; ++x) {
      for (elem y = 0; y < n && lattice; ++y) {
        std::vector<elem> lower;
        for (elem z = 0; z < n; ++z) {
          if (leq[z][x] && leq[z][y]) lower.push_back(z);
        }
        auto g = detail::greatest(lower, [&](elem u, elem v) { return leq[u][v]; });
        if (!g) lattice = false;
        else meet[x][y] = *g;
      }
    }
    if (!lattice) continue;

    // Free cells: unordered pairs of interior elements.
    std::vector<std::pair<elem, elem>> cells;
    std::vector<std::vector<elem>> choices;
    for (elem x = 1; x < top; ++x) {
      for (elem y = x; y < top; ++y) {
        cells.emplace_back(x, y);
        std::vector<elem> c;
        for (elem z = 0; z < n; ++z) {
          if (leq[z][meet[x][y]]) c.push_back(z);
        }
        choices.push_back(std::move(c));
      }
    }

    FiniteAlgebra::Matrix odot(n, std::vector<elem>(n, 0));
    for (elem x = 0; x < n; ++x) odot[x][top] = odot[top][x] = x;
    std::vector<std::size_t> pick(cells.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [x, y] = cells[i];
        odot[x][y] = odot[y][x] = choices[i][pick[i]];
      }

      // x -> y = greatest z with x (.) z <= y
      FiniteAlgebra::Matrix imp(n, std::vector<elem>(n));
      bool ok = true;
      for (elem x = 0; x < n && ok; ++x) {
        for (elem y = 0; y < n && ok; ++y) {
          std::vector<elem> zs;
          for (elem z = 0; z < n; ++z) {
            if (leq[odot[x][z]][y]) zs.push_back(z);
          }
          auto g = detail::greatest(zs, [&](elem u, elem v) { return leq[u][v]; });
          if (!g) ok = false;
          else imp[x][y] = *g;
        }
      }
      if (ok) {
        try {
          auto L = FiniteAlgebra::from_tables(std::vector<std::string>(n), leq, odot, imp);
          if (check_axioms(L).bl) {
            bool dup = false;
            for (const auto& F : found) {
              if (isomorphic(F, L)) {
                dup = true;
                break;
              }
            }
            if (!dup) found.push_back(std::move(L));
          }
        } catch (const Error&) {
          // not associative, not monotone or not residuated
        }
      }

      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }

  for (auto& L : found) {
    std::vector<std::string> names;
    for (elem x = 0; x < n; ++x) names.push_back(x == 0 ? "0" : x == top ? "1" : "e" + std::to_string(x));
    L = L.with_names(std::move(names));
  }
  return found;
}

// ---------------------------------------------------------------------------
// Ring scan

/// Number of local components: distinct primes of m, irreducible factors of f.
inline std::size_t local_components(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::Zn: return detail::factor_integer(d.m).size();
    case RingDescriptor::Kind::Quot: return factor(d.f).factors.size();
    case RingDescriptor::Kind::Prod: {
      std::size_t a = 0;
      for (const auto& part : d.parts) a += local_components(part);
      return a;
    }
  }
  return 0;
}

struct RingScanEntry {
  std::string descriptor;
  std::string ring;
  std::size_t ideals = 0;
  bool bl = false, mv = false, comet = false;
  std::vector<std::string> violations;
};

struct RingScanReport {
  std::vector<RingScanEntry> entries;
  std::size_t violation_count() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.violations.size();
    return c;
  }
};

inline RingScanEntry scan_ring(const RingDescriptor& d, std::uint64_t cap = kDefaultIdealCap) {
  RingScanEntry e;
  e.descriptor = to_string(d);
  e.ring = ring_name(d);
  const FiniteAlgebra L = ring_ideal_lattice(d, cap);
  const std::size_t n = L.size();
  e.ideals = n;

  const auto rep = check_axioms(L);
  e.bl = rep.bl;
  e.mv = rep.mv && !mv_translation_violation(L);
  if (!e.bl) e.violations.push_back("Id(R) is not BL");
  if (!e.mv) e.violations.push_back("Id(R) is not MV");
  if (e.bl) e.comet = classify(L).is_comet;

  for (elem x = 0; x < n; ++x) {
    if (star(L, star(L, x)) != x) {
      e.violations.push_back("Ann(Ann(I)) != I at " + L.name(x));
      break;
    }
  }
  if (d.kind == RingDescriptor::Kind::Quot) {
    // Same check on the exponent representation, independent of the tables.
    const auto R = make_general(d.p, d.f);
    for (const auto& I : ideals(R)) {
      if (!(annihilator(annihilator(I)) == I)) {
        e.violations.push_back("Ann(Ann(I)) != I for " + I.label());
        break;
      }
    }
  }

  const auto atoms = minimal_elements(L);
  const auto coatoms = maximal_elements(L);
  for (elem M : coatoms) {
    bool hit = std::any_of(atoms.begin(), atoms.end(), [&](elem J) { return star(L, J) == M; });
    if (!hit) e.violations.push_back("coatom " + L.name(M) + " is not the annihilator of an atom");
  }

  const std::size_t alpha = local_components(d);
  if (coatoms.size() != alpha) {
    e.violations.push_back("maximal ideals: " + std::to_string(coatoms.size()) + " != " + std::to_string(alpha));
  }
  if (atoms.size() != alpha) {
    e.violations.push_back("minimal ideals: " + std::to_string(atoms.size()) + " != " + std::to_string(alpha));
  }
  if (n != ideal_count(d)) e.violations.push_back("ideal count mismatch");
  return e;
}

/// Scans every descriptor; throws ScanViolation on the first failing ring
/// unless `throw_on_violation` is false.
inline RingScanReport ring_scan(const std::vector<RingDescriptor>& descriptors, bool throw_on_violation = true,
                                std::uint64_t cap = kDefaultIdealCap) {
  RingScanReport rep;
  for (const auto& d : descriptors) {
    auto e = scan_ring(d, cap);
    if (throw_on_violation && !e.violations.empty()) {
      throw ScanViolation(e.descriptor + ": " + e.violations.front());
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

/// Zn(m) for 2 <= m <= 64, Quot(p, x^(b+1) - x) for p in {2,3,5,7} and
/// b <= 6, and products of two and three small factors.
inline std::vector<RingDescriptor> default_scan_catalog() {
  std::vector<RingDescriptor> out;
  for (std::uint64_t m = 2; m <= 64; ++m) out.push_back(RingDescriptor::zn(m));
  for (residue p : {2u, 3u, 5u, 7u}) {
    for (unsigned b = 1; b <= 6; ++b) out.push_back(RingDescriptor::quot(p, chi(p, b)));
  }
  const std::vector<RingDescriptor> small = {
      RingDescriptor::zn(2), RingDescriptor::zn(3), RingDescriptor::zn(4), RingDescriptor::zn(8),
      RingDescriptor::zn(9), RingDescriptor::quot(2, parse_poly(2, "x^2+x+1")),
      RingDescriptor::quot(3, chi(3, 3))};
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      out.push_back(RingDescriptor::prod({small[i], small[j]}));
      for (std::size_t k = j; k < small.size(); ++k) {
        out.push_back(RingDescriptor::prod({small[i], small[j], small[k]}));
      }
    }
  }
  return out;
}

}  // namespace blalg

#endif  // BLALG_ENUMERATION_HPP
