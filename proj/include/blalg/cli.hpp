#ifndef BLALG_CLI_HPP
#define BLALG_CLI_HPP

// Command-line front end.  run() returns 0 on success, 1 on a domain error
// and 2 on a usage error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blalg/algebra.hpp"
#include "blalg/comet.hpp"
#include "blalg/constructors.hpp"
#include "blalg/enumeration.hpp"
#include "blalg/errors.hpp"
#include "blalg/mv_crypt.hpp"
#include "blalg/quotient_ring.hpp"
#include "blalg/serialize.hpp"

namespace blalg::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

inline FiniteAlgebra load_algebra(const std::string& path) {
  return algebra_from_json_text(read_file(path));
}

inline Alphabet load_alphabet(const std::string& path) {
  return path.empty() ? Alphabet::standard() : Alphabet::from_lines(read_file(path));
}

inline SecretKey parse_key(const std::string& text) {
  std::vector<std::uint64_t> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoull(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ParseError("key must be p,beta,l; got '" + text + "'");
    }
  }
  if (v.size() != 3 || v[0] > 0xFFFFFFFFull || v[1] > 0xFFFFFFull) {
    throw ParseError("key must be p,beta,l; got '" + text + "'");
  }
  return {static_cast<residue>(v[0]), static_cast<unsigned>(v[1]), static_cast<std::size_t>(v[2])};
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string names_of(const FiniteAlgebra& L, const std::vector<elem>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + L.name(xs[i]);
  return s + "}";
}

inline void print_table(std::ostream& out, const FiniteAlgebra& L) {
  const std::size_t n = L.size();
  std::size_t w = 2;
  for (const auto& nm : L.names()) w = std::max(w, nm.size() + 1);
  auto table = [&](const char* op, auto&& f) {
    out << std::setw(static_cast<int>(w)) << op << " |";
    for (elem y = 0; y < n; ++y) out << std::setw(static_cast<int>(w)) << L.name(y);
    out << "\n" << std::string(w + 2 + w * n, '-') << "\n";
    for (elem x = 0; x < n; ++x) {
      out << std::setw(static_cast<int>(w)) << L.name(x) << " |";
      for (elem y = 0; y < n; ++y) out << std::setw(static_cast<int>(w)) << L.name(f(x, y));
      out << "\n";
    }
  };
  table("->", [&](elem x, elem y) { return L.imp(x, y); });
  out << "\n";
  table("*", [&](elem x, elem y) { return L.odot(x, y); });
}

/// Writes an algebra in the requested format, to `path` when given.
inline void emit_algebra(std::ostream& out, const FiniteAlgebra& L, const std::string& format,
                         const std::string& path, const std::optional<std::string>& provenance = std::nullopt) {
  std::string text;
  if (format == "dot") {
    text = to_dot(L);
  } else if (format == "table") {
    std::ostringstream ss;
    print_table(ss, L);
    text = ss.str();
  } else {
    text = to_json(L, provenance).dump(2) + "\n";
  }
  if (path.empty()) out << text;
  else write_file(path, text);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residuated lattices, BL-algebras and ideal lattices of finite rings"};
  app.name("blalg");
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "table", "dot"};

  // encrypt
  auto* enc = app.add_subcommand("encrypt", "Encrypt a text in R_{p,1,beta}");
  unsigned e_p = 0, e_beta = 0;
  std::string e_text, e_ideal, e_alpha, e_format = "table";
  bool e_trace = false;
  enc->add_option("--p", e_p, "prime p")->required();
  enc->add_option("--beta", e_beta, "beta (ring is Z_p[x]/(x^(beta+1)-x))")->required();
  enc->add_option("--text", e_text, "plaintext")->required();
  enc->add_option("--ideal", e_ideal, "generator of the ideal I_t (forces the annihilator path)");
  enc->add_option("--alphabet", e_alpha, "alphabet file, one symbol per line (default A..J)");
  enc->add_flag("--trace", e_trace, "print the full trace as JSON");
  enc->add_option("--format", e_format, "table or json")->check(CLI::IsMember({"json", "table"}));

  // decrypt
  auto* dec = app.add_subcommand("decrypt", "List candidate plaintexts for a ciphertext");
  std::string d_key, d_text, d_alpha, d_format = "table";
  dec->add_option("--key", d_key, "secret key p,beta,l")->required();
  dec->add_option("--text", d_text, "ciphertext")->required();
  dec->add_option("--alphabet", d_alpha, "alphabet file, one symbol per line (default A..J)");
  dec->add_option("--format", d_format, "table or json")->check(CLI::IsMember({"json", "table"}));

  // ring-ideals
  auto* ri = app.add_subcommand("ring-ideals", "Ideals of Z_p[x]/(f)");
  unsigned r_p = 0, r_beta = 0;
  std::string r_mod, r_format = "table";
  ri->add_option("--p", r_p, "prime p")->required();
  auto* r_beta_opt = ri->add_option("--beta", r_beta, "use f = x^(beta+1) - x");
  auto* r_mod_opt = ri->add_option("--modulus", r_mod, "monic modulus polynomial f");
  r_beta_opt->excludes(r_mod_opt);
  ri->add_option("--format", r_format, "table, json or dot")->check(CLI::IsMember(formats));

  // algebra
  auto* alg = app.add_subcommand("algebra", "Inspect a finite algebra given as JSON");
  alg->require_subcommand(1);
  std::string a_in, a_in2, a_format = "json";
  auto* a_check = alg->add_subcommand("check", "Axiom report");
  auto* a_classify = alg->add_subcommand("classify", "Comet profile");
  auto* a_split = alg->add_subcommand("split", "Ordinal-sum decompositions");
  auto* a_iso = alg->add_subcommand("iso", "Isomorphism test");
  for (auto* s : {a_check, a_classify, a_split, a_iso}) {
    s->add_option("--in", a_in, "algebra JSON file")->required();
    s->add_option("--format", a_format, "json or table")->check(CLI::IsMember({"json", "table"}));
  }
  a_iso->add_option("--with", a_in2, "second algebra JSON file")->required();

  // build
  auto* bld = app.add_subcommand("build", "Construct an algebra");
  bld->require_subcommand(1);
  std::size_t b_m = 0;
  std::string b_a, b_b, b_desc, b_out, b_format = "json";
  std::uint64_t b_cap = kDefaultIdealCap;
  auto* b_mv = bld->add_subcommand("mvchain", "m-element MV-chain");
  b_mv->add_option("--m", b_m, "number of elements")->required();
  auto* b_ord = bld->add_subcommand("ordsum", "Ordinal sum A (+) B");
  auto* b_prod = bld->add_subcommand("product", "Direct product A x B");
  for (auto* s : {b_ord, b_prod}) {
    s->add_option("--a", b_a, "first algebra JSON file")->required();
    s->add_option("--b", b_b, "second algebra JSON file")->required();
  }
  auto* b_ring = bld->add_subcommand("ring", "Ideal lattice of a catalog ring");
  b_ring->add_option("--desc", b_desc, "descriptor, e.g. Zn(16), Prod(Zn(2),Zn(4)), Quot(3, x^3-x)")->required();
  b_ring->add_option("--cap", b_cap, "largest number of ideals allowed");
  for (auto* s : {b_mv, b_ord, b_prod, b_ring}) {
    s->add_option("--format", b_format, "json, table or dot")->check(CLI::IsMember(formats));
    s->add_option("--out", b_out, "output file (default stdout)");
  }

  // enumerate
  auto* en = app.add_subcommand("enumerate", "All BL-algebras of one size up to isomorphism");
  std::size_t en_n = 0;
  std::string en_out;
  bool en_no_products = false;
  en->add_option("--n", en_n, "size, 2..6")->required();
  en->add_option("--out", en_out, "directory for one JSON file per algebra");
  en->add_flag("--no-products", en_no_products, "generate only from the MV base and ordinal sums");

  // census
  auto* ce = app.add_subcommand("census", "Counts of MV/BL algebras, chains and comets per size");
  std::size_t ce_max = 6;
  std::string ce_format = "table";
  bool ce_no_products = false;
  ce->add_option("--max", ce_max, "largest size, 2..6");
  ce->add_option("--format", ce_format, "json or table")->check(CLI::IsMember({"json", "table"}));
  ce->add_flag("--no-products", ce_no_products, "generate only from the MV base and ordinal sums");

  // scan
  auto* sc = app.add_subcommand("scan", "Check Id(R) properties over catalog rings");
  std::vector<std::string> sc_desc;
  std::string sc_format = "table";
  sc->add_option("--desc", sc_desc, "descriptors (default: built-in catalog)");
  sc->add_option("--format", sc_format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    CLI::App* sub = &app;
    for (auto* s : app.get_subcommands()) sub = s;
    err << sub->help();
    return 2;
  }

  try {
    if (*enc) {
      const auto alphabet = detail::load_alphabet(e_alpha);
      std::optional<Poly> ideal;
      if (!e_ideal.empty()) ideal = parse_poly(e_p, e_ideal);
      if (!is_prime(e_p)) throw NotPrime(std::to_string(e_p) + " is not prime");
      const auto r = encrypt(e_text, alphabet, e_p, e_beta, ideal);
      if (e_trace || e_format == "json") {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << r.ciphertext << "\n"
            << "key " << r.key.p << "," << r.key.beta << "," << r.key.l << "\n";
      }
    } else if (*dec) {
      const auto alphabet = detail::load_alphabet(d_alpha);
      const auto key = detail::parse_key(d_key);
      const auto cands = decrypt(d_text, alphabet, key);
      if (d_format == "json") {
        out << json(cands).dump(2) << "\n";
      } else {
        for (const auto& c : cands) out << c << "\n";
      }
    } else if (*ri) {
      if (!is_prime(r_p)) throw NotPrime(std::to_string(r_p) + " is not prime");
      QuotientRing R = r_mod.empty() ? (r_beta ? make_ring(r_p, r_beta) : throw ParseError("give --beta or --modulus"))
                                     : make_general(r_p, parse_poly(r_p, r_mod));
      if (r_format == "json") {
        out << to_json(R).dump(2) << "\n";
      } else if (r_format == "dot") {
        out << to_dot(to_algebra(R), to_string(R.modulus()));
      } else {
        out << "Z_" << R.p() << "[x]/(" << to_string(R.modulus()) << ")\n";
        out << "factorization:";
        for (const auto& [f, e] : R.factorization().factors) {
          out << " (" << to_string(f) << ")";
          if (e > 1) out << "^" << e;
        }
        out << "\nsquarefree: " << detail::yes_no(R.squarefree()) << "\n";
        const auto ids = ideals(R);
        out << "ideals: " << ids.size() << "\n";
        for (const auto& I : ids) out << "  " << I.label() << "  Ann = " << annihilator(I).label() << "\n";
      }
    } else if (*alg) {
      const auto L = detail::load_algebra(a_in);
      if (*a_check) {
        const auto r = check_axioms(L);
        if (a_format == "json") {
          auto j = to_json(L, r);
          j["mv_translation"] = r.bl ? json(mv_translation_violation(L).value_or("ok")) : json(nullptr);
          out << j.dump(2) << "\n";
        } else {
          out << "residuated " << detail::yes_no(r.residuated) << "\nprelinear " << detail::yes_no(r.prelinear)
              << "\ndivisible " << detail::yes_no(r.divisible) << "\nbl " << detail::yes_no(r.bl) << "\nmv "
              << detail::yes_no(r.mv) << "\nboolean " << detail::yes_no(r.boolean) << "\nchain "
              << detail::yes_no(r.chain) << "\n";
        }
      } else if (*a_classify) {
        const auto pr = classify(L);
        if (a_format == "json") {
          out << to_json(L, pr).dump(2) << "\n";
        } else {
          out << "classification " << to_string(pr.classification) << "\nidempotents "
              << detail::names_of(L, pr.idempotents) << "\nD(L) " << detail::names_of(L, pr.d_set) << "\npivot "
              << L.name(pr.pivot) << "\ncomet " << detail::yes_no(pr.is_comet) << "\n";
        }
      } else if (*a_split) {
        const auto splits = ordinal_split(L);
        json a = json::array();
        for (const auto& s : splits) {
          a.push_back({{"cut", L.name(s.cut)},
                       {"cut_index", s.cut},
                       {"reconstructed", true},
                       {"lower", to_json(s.lower)},
                       {"upper", to_json(s.upper)}});
        }
        if (a_format == "json") {
          out << a.dump(2) << "\n";
        } else {
          out << splits.size() << " split(s)\n";
          for (const auto& s : splits) {
            out << "cut " << L.name(s.cut) << ": lower " << s.lower.size() << " elements, upper "
                << s.upper.size() << " elements, ordinal sum reproduces the input\n";
          }
        }
      } else if (*a_iso) {
        const auto M = detail::load_algebra(a_in2);
        const auto phi = isomorphism(L, M);
        if (a_format == "json") {
          json j;
          j["isomorphic"] = phi.has_value();
          if (phi) j["map"] = *phi;
          out << j.dump(2) << "\n";
        } else if (phi) {
          out << "isomorphic\n";
          for (elem x = 0; x < L.size(); ++x) out << "  " << L.name(x) << " -> " << M.name((*phi)[x]) << "\n";
        } else {
          out << "not isomorphic\n";
        }
      }
    } else if (*bld) {
      if (*b_mv) {
        detail::emit_algebra(out, mv_chain(b_m), b_format, b_out);
      } else if (*b_ord) {
        detail::emit_algebra(out, ordinal_sum(detail::load_algebra(b_a), detail::load_algebra(b_b)), b_format, b_out);
      } else if (*b_prod) {
        detail::emit_algebra(out, direct_product(detail::load_algebra(b_a), detail::load_algebra(b_b)), b_format,
                             b_out);
      } else if (*b_ring) {
        const auto d = parse_descriptor(b_desc);
        detail::emit_algebra(out, ring_ideal_lattice(d, b_cap), b_format, b_out, "Id(" + ring_name(d) + ")");
      }
    } else if (*en) {
      const auto list = enumerate_bl(en_n, !en_no_products);
      if (en_out.empty()) {
        json a = json::array();
        for (const auto& e : list) a.push_back(to_json(e.algebra, e.provenance));
        out << a.dump(2) << "\n";
      } else {
        std::filesystem::create_directories(en_out);
        for (std::size_t i = 0; i < list.size(); ++i) {
          std::ostringstream name;
          name << "bl" << en_n << "_" << std::setw(2) << std::setfill('0') << i + 1 << ".json";
          const auto path = std::filesystem::path(en_out) / name.str();
          detail::write_file(path.string(), to_json(list[i].algebra, list[i].provenance).dump(2) + "\n");
          out << path.string() << "  " << list[i].provenance << "\n";
        }
      }
    } else if (*ce) {
      const auto rep = census(ce_max, !ce_no_products);
      if (ce_format == "json") {
        out << to_json(rep).dump(2) << "\n";
      } else {
        out << std::left << std::setw(14) << "" << std::right;
        for (const auto& r : rep.rows) out << std::setw(6) << ("n=" + std::to_string(r.n));
        out << "\n";
        auto line = [&](const char* label, auto field) {
          out << std::left << std::setw(14) << label << std::right;
          for (const auto& r : rep.rows) out << std::setw(6) << r.*field;
          out << "\n";
        };
        line("MV-algebras", &CensusRow::mv);
        line("MV-chains", &CensusRow::mv_chains);
        line("BL-algebras", &CensusRow::bl);
        line("BL-chains", &CensusRow::bl_chains);
        line("BL-comets", &CensusRow::bl_comets);
      }
    } else if (*sc) {
      std::vector<RingDescriptor> ds;
      for (const auto& s : sc_desc) ds.push_back(parse_descriptor(s));
      if (ds.empty()) ds = default_scan_catalog();
      const auto rep = ring_scan(ds, false);
      if (sc_format == "json") {
        out << to_json(rep).dump(2) << "\n";
      } else {
        for (const auto& e : rep.entries) {
          out << e.descriptor << "  ideals=" << e.ideals << " bl=" << detail::yes_no(e.bl)
              << " mv=" << detail::yes_no(e.mv) << " comet=" << detail::yes_no(e.comet);
          for (const auto& v : e.violations) out << "  VIOLATION: " << v;
          out << "\n";
        }
        out << rep.entries.size() << " rings, " << rep.violation_count() << " violations\n";
      }
      if (rep.violation_count()) return 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what();
    if (!e.witness().empty()) {
      err << " [witness";
      for (auto w : e.witness()) err << " " << w;
      err << "]";
    }
    err << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace blalg::cli

#endif  // BLALG_CLI_HPP
