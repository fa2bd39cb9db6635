#ifndef BLALG_COMET_HPP
#define BLALG_COMET_HPP

// Idempotents, D(L), pivot and comet classification of finite BL-algebras,
// plus ordinal-sum decomposition at a cut element.

#include <string>
#include <vector>

#include "blalg/algebra.hpp"
#include "blalg/constructors.hpp"
#include "blalg/errors.hpp"

namespace blalg {

enum class CometClass { MVChain, UnorderedMV, BLChain, CometNonChain, NonCometNonMV };

inline const char* to_string(CometClass c) {
  switch (c) {
    case CometClass::MVChain: return "MVChain";
    case CometClass::UnorderedMV: return "UnorderedMV";
    case CometClass::BLChain: return "BLChain";
    case CometClass::CometNonChain: return "CometNonChain";
    case CometClass::NonCometNonMV: return "NonCometNonMV";
  }
  return "?";
}

struct CometProfile {
  std::vector<elem> idempotents;
  std::vector<elem> d_set;
  elem pivot = 0;
  bool is_comet = false;
  bool is_chain = false;
  bool is_mv = false;
  CometClass classification = CometClass::NonCometNonMV;
};

namespace detail {
inline void require_bl(const FiniteAlgebra& L) {
  auto r = check_axioms(L);
  if (!r.bl) {
    const char* which = !r.prelinear ? "prelinear" : "divisible";
    throw NotBL(std::string("algebra is not BL: fails ") + which, r.witnesses[which]);
  }
}

inline std::vector<elem> idempotents_unchecked(const FiniteAlgebra& L) {
  std::vector<elem> out;
  for (elem x = 0; x < L.size(); ++x) {
    if (L.odot(x, x) == x) out.push_back(x);
  }
  return out;
}

inline std::vector<elem> d_set_unchecked(const FiniteAlgebra& L) {
  const auto I = idempotents_unchecked(L);
  std::vector<elem> out;
  for (elem x : I) {
    bool ok = std::all_of(I.begin(), I.end(), [&](elem y) { return L.comparable(x, y); });
    for (std::size_t i = 0; ok && i < I.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < I.size(); ++j) {
        if (L.leq(I[i], x) && L.leq(I[j], x) && !L.comparable(I[i], I[j])) ok = false;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

inline elem pivot_unchecked(const FiniteAlgebra& L) {
  const auto D = d_set_unchecked(L);
  auto g = greatest(D, [&](elem u, elem v) { return L.leq(u, v); });
  if (!g) throw NoGreatestElement("D(L) has no greatest element");
  return *g;
}
}  // namespace detail

inline std::vector<elem> idempotents(const FiniteAlgebra& L) {
  detail::require_bl(L);
  return detail::idempotents_unchecked(L);
}

inline std::vector<elem> d_set(const FiniteAlgebra& L) {
  detail::require_bl(L);
  return detail::d_set_unchecked(L);
}

inline elem pivot(const FiniteAlgebra& L) {
  detail::require_bl(L);
  return detail::pivot_unchecked(L);
}

inline CometProfile classify(const FiniteAlgebra& L) {
  const auto report = check_axioms(L);
  if (!report.bl) detail::require_bl(L);

  CometProfile pr;
  pr.idempotents = detail::idempotents_unchecked(L);
  pr.d_set = detail::d_set_unchecked(L);
  pr.pivot = detail::pivot_unchecked(L);
  pr.is_comet = pr.pivot != L.bottom();
  pr.is_chain = report.chain;
  pr.is_mv = report.mv;

  if (pr.is_chain && (!pr.is_comet || pr.pivot != L.top())) {
    throw ConsistencyViolation("a chain must be a comet with pivot 1");
  }
  if (pr.is_mv && pr.is_comet != pr.is_chain) {
    throw ConsistencyViolation("an MV-algebra is a comet exactly when it is a chain");
  }

  if (pr.is_mv) {
    pr.classification = pr.is_chain ? CometClass::MVChain : CometClass::UnorderedMV;
  } else if (pr.is_chain) {
    pr.classification = CometClass::BLChain;
  } else {
    pr.classification = pr.is_comet ? CometClass::CometNonChain : CometClass::NonCometNonMV;
  }
  return pr;
}

// ---------------------------------------------------------------------------
// Ordinal split

struct OrdinalSplit {
  elem cut;
  FiniteAlgebra lower;  ///< [0, cut]
  FiniteAlgebra upper;  ///< [cut, 1]
};

/// Every decomposition L = lower (+) upper at an interior idempotent cut that
/// is comparable to all elements.  Each candidate is confirmed by rebuilding
/// the ordinal sum and comparing against L under the natural relabeling.
inline std::vector<OrdinalSplit> ordinal_split(const FiniteAlgebra& L) {
  detail::require_bl(L);
  const std::size_t n = L.size();
  std::vector<OrdinalSplit> out;

  for (elem c = 1; c + 1 < n; ++c) {
    if (L.odot(c, c) != c) continue;
    bool total = true;
    for (elem x = 0; x < n && total; ++x) total = L.comparable(c, x);
    if (!total) continue;

    std::vector<elem> lo, hi;  // lo ends with c, hi starts with c
    for (elem x = 0; x < n; ++x) {
      if (L.leq(x, c) && x != c) lo.push_back(x);
    }
    lo.push_back(c);
    hi.push_back(c);
    for (elem x = 0; x < n; ++x) {
      if (L.lt(c, x)) hi.push_back(x);
    }
    if (hi.back() != L.top()) continue;  // top must stay last

    auto sub = [&](const std::vector<elem>& part, bool lower_part) -> std::optional<FiniteAlgebra> {
      const std::size_t m = part.size();
      std::vector<elem> pos(n, n);
      for (elem i = 0; i < m; ++i) pos[part[i]] = i;
      std::vector<std::string> names;
      FiniteAlgebra::Relation leq(m, std::vector<bool>(m));
      FiniteAlgebra::Matrix odot(m, std::vector<elem>(m)), imp(m, std::vector<elem>(m));
      for (elem i = 0; i < m; ++i) {
        names.push_back(L.name(part[i]));
        for (elem j = 0; j < m; ++j) {
          const elem x = part[i], y = part[j];
          leq[i][j] = L.leq(x, y);
          elem prod = L.odot(x, y);
          elem res = L.imp(x, y);
          if (lower_part && L.leq(x, y)) res = c;  // relative top
          if (pos[prod] == n || pos[res] == n) return std::nullopt;
          odot[i][j] = pos[prod];
          imp[i][j] = pos[res];
        }
      }
      try {
        return FiniteAlgebra::from_tables(std::move(names), leq, odot, imp);
      } catch (const Error&) {
        return std::nullopt;
      }
    };
    // The lower part must start at 0 and end at c in index order.
    if (lo.front() != L.bottom()) continue;
    auto lower = sub(lo, true);
    auto upper = sub(hi, false);
    if (!lower || !upper) continue;

    const auto rebuilt = ordinal_sum(*lower, *upper);
    std::vector<elem> relabel(n);  // rebuilt index -> L index
    for (elem i = 0; i < lo.size(); ++i) relabel[i] = lo[i];
    for (elem j = 1; j < hi.size(); ++j) relabel[lo.size() - 1 + j] = hi[j];
    bool same = true;
    for (elem x = 0; x < n && same; ++x) {
      for (elem y = 0; y < n && same; ++y) {
        same = rebuilt.leq(x, y) == L.leq(relabel[x], relabel[y]) &&
               relabel[rebuilt.odot(x, y)] == L.odot(relabel[x], relabel[y]) &&
               relabel[rebuilt.imp(x, y)] == L.imp(relabel[x], relabel[y]);
      }
    }
    if (same) out.push_back({c, std::move(*lower), std::move(*upper)});
  }
  return out;
}

}  // namespace blalg

#endif  // BLALG_COMET_HPP
