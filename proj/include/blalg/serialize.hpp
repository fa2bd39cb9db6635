#ifndef BLALG_SERIALIZE_HPP
#define BLALG_SERIALIZE_HPP

// JSON forms of algebras, reports, cipher traces and the census; DOT Hasse
// diagrams.
//
// Algebra schema: {"n", "names", "leq": [[i, j], ...] with i <= j,
// "odot": n x n, "imp": n x n, optional "provenance"}.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blalg/algebra.hpp"
#include "blalg/comet.hpp"
#include "blalg/enumeration.hpp"
#include "blalg/errors.hpp"
#include "blalg/mv_crypt.hpp"
#include "blalg/quotient_ring.hpp"

namespace blalg {

using json = nlohmann::ordered_json;

inline json to_json(const FiniteAlgebra& L, const std::optional<std::string>& provenance = std::nullopt) {
  const std::size_t n = L.size();
  json leq = json::array();
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      if (L.leq(x, y)) leq.push_back({x, y});
    }
  }
  json j;
  j["n"] = n;
  j["names"] = L.names();
  j["leq"] = std::move(leq);
  j["odot"] = L.odot_table();
  j["imp"] = L.imp_table();
  if (provenance) j["provenance"] = *provenance;
  return j;
}

/// Validates the schema and then every algebra axiom via from_tables.
inline FiniteAlgebra algebra_from_json(const json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n == 0 || n > 4096) throw ParseError("\"n\" out of range");
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = j.at("names").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    }
    if (names.size() != n) throw DimensionMismatch("\"names\" must have n entries");
    FiniteAlgebra::Relation leq(n, std::vector<bool>(n));
    for (const auto& pr : j.at("leq")) {
      const auto a = pr.at(0).get<std::size_t>(), b = pr.at(1).get<std::size_t>();
      if (pr.size() != 2 || a >= n || b >= n) throw DimensionMismatch("bad \"leq\" pair");
      leq[a][b] = true;
    }
    auto odot = j.at("odot").get<FiniteAlgebra::Matrix>();
    auto imp = j.at("imp").get<FiniteAlgebra::Matrix>();
    return FiniteAlgebra::from_tables(std::move(names), leq, odot, imp);
  } catch (const json::exception& e) {
    throw ParseError(std::string("algebra JSON: ") + e.what());
  }
}

inline FiniteAlgebra algebra_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

namespace detail {
inline json name_list(const FiniteAlgebra& L, const std::vector<elem>& xs) {
  json a = json::array();
  for (elem x : xs) a.push_back(L.name(x));
  return a;
}
}  // namespace detail

inline json to_json(const FiniteAlgebra& L, const AxiomReport& r) {
  json j;
  j["n"] = L.size();
  j["residuated"] = r.residuated;
  j["prelinear"] = r.prelinear;
  j["divisible"] = r.divisible;
  j["bl"] = r.bl;
  j["mv"] = r.mv;
  j["boolean"] = r.boolean;
  j["chain"] = r.chain;
  json w = json::object();
  for (const auto& [k, v] : r.witnesses) {
    if (!v.empty()) w[k] = v;
  }
  j["witnesses"] = std::move(w);
  return j;
}

inline json to_json(const FiniteAlgebra& L, const CometProfile& p) {
  json j;
  j["idempotents"] = detail::name_list(L, p.idempotents);
  j["d_set"] = detail::name_list(L, p.d_set);
  j["pivot"] = L.name(p.pivot);
  j["pivot_index"] = p.pivot;
  j["is_comet"] = p.is_comet;
  j["is_chain"] = p.is_chain;
  j["is_mv"] = p.is_mv;
  j["classification"] = to_string(p.classification);
  return j;
}

inline json to_json(const Encryption& e) {
  const auto& t = e.trace;
  json j;
  j["ciphertext"] = e.ciphertext;
  j["key"] = {{"p", e.key.p}, {"beta", e.key.beta}, {"l", e.key.l}};
  j["m"] = digits_to_string(t.m, t.radix);
  j["radix"] = t.radix;
  j["digits_p"] = digits_to_string(t.digits_p, e.key.p);
  j["f_c"] = to_string(t.f_c);
  j["path"] = to_string(t.path);
  if (t.g_t) j["I_t"] = to_string(*t.g_t);
  if (t.g_r) j["I_r"] = to_string(*t.g_r);
  if (t.h) j["h"] = to_string(*t.h);
  j["f_e"] = to_string(t.f_e);
  j["c_p"] = to_digit_string(t.f_e);
  j["c"] = digits_to_string(t.c, t.radix);
  return j;
}

inline json to_json(const CensusReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"n", r.n},
                    {"mv_algebras", r.mv},
                    {"mv_chains", r.mv_chains},
                    {"bl_algebras", r.bl},
                    {"bl_chains", r.bl_chains},
                    {"bl_comets", r.bl_comets}});
  }
  json reps = json::array();
  for (const auto& e : rep.representatives) {
    reps.push_back({{"n", e.n},
                    {"provenance", e.item.provenance},
                    {"classification", to_string(e.profile.classification)},
                    {"algebra", to_json(e.item.algebra)}});
  }
  return {{"rows", std::move(rows)}, {"representatives", std::move(reps)}};
}

inline json to_json(const RingScanReport& rep) {
  json a = json::array();
  for (const auto& e : rep.entries) {
    a.push_back({{"descriptor", e.descriptor},
                 {"ring", e.ring},
                 {"ideals", e.ideals},
                 {"bl", e.bl},
                 {"mv", e.mv},
                 {"comet", e.comet},
                 {"violations", e.violations}});
  }
  return {{"rings", rep.entries.size()}, {"violations", rep.violation_count()}, {"entries", std::move(a)}};
}

inline json to_json(const QuotientRing& R) {
  json fac = json::array();
  for (const auto& [f, e] : R.factorization().factors) fac.push_back({{"factor", to_string(f)}, {"exponent", e}});
  json ids = json::array();
  for (const auto& I : ideals(R)) {
    ids.push_back({{"generator", I.is_zero_ideal() ? std::string("0") : to_string(I.generator())},
                   {"label", I.label()},
                   {"exponents", I.exps()},
                   {"annihilator", annihilator(I).label()}});
  }
  return {{"p", R.p()},
          {"modulus", to_string(R.modulus())},
          {"factorization", std::move(fac)},
          {"squarefree", R.squarefree()},
          {"ideals", std::move(ids)}};
}

/// Hasse diagram, bottom at the bottom.
inline std::string to_dot(const FiniteAlgebra& L, const std::string& graph_name = "L") {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (elem x = 0; x < L.size(); ++x) {
    os << "  n" << x << " [label=" << json(L.name(x)).dump() << "];\n";
  }
  for (auto [a, b] : covers(L)) os << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

}  // namespace blalg

#endif  // BLALG_SERIALIZE_HPP
