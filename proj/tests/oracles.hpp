#ifndef BLALG_TESTS_ORACLES_HPP
#define BLALG_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests.  Nothing here
// calls the library's algorithms beyond plain data access.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "blalg/algebra.hpp"
#include "blalg/zp_poly.hpp"

namespace oracle {

using blalg::elem;

/// A finite commutative ring by explicit tables.
struct FiniteRing {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> add, mul;
  std::size_t zero = 0, one = 1;
};

inline FiniteRing zn(std::size_t m) {
  FiniteRing R;
  R.size = m;
  R.add.assign(m, std::vector<std::size_t>(m));
  R.mul.assign(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      R.add[a][b] = (a + b) % m;
      R.mul[a][b] = (a * b) % m;
    }
  }
  R.one = 1 % m;
  return R;
}

/// Coefficient vectors, little-endian, reduced by schoolbook long division.
inline std::vector<std::int64_t> naive_polymod(std::vector<std::int64_t> a, const std::vector<std::int64_t>& f,
                                               std::int64_t p) {
  // f monic
  const std::size_t d = f.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    const std::int64_t c = ((a[i] % p) + p) % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * f[j];
  }
  a.resize(std::min(a.size(), d));
  a.resize(d, 0);
  for (auto& c : a) c = ((c % p) + p) % p;
  return a;
}

/// Z_p[x]/(f) with element index = sum c_i p^i.
inline FiniteRing zpx(std::int64_t p, const std::vector<std::int64_t>& f_ascending) {
  const std::size_t d = f_ascending.size() - 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n *= p;
  auto decode = [&](std::size_t x) {
    std::vector<std::int64_t> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = x % p;
      x /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::int64_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * p + c[i];
    return x;
  };
  FiniteRing R;
  R.size = n;
  R.add.assign(n, std::vector<std::size_t>(n));
  R.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = decode(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto cb = decode(b);
      std::vector<std::int64_t> s(d), prod(2 * d, 0);
      for (std::size_t i = 0; i < d; ++i) s[i] = (ca[i] + cb[i]) % p;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += ca[i] * cb[j];
      }
      R.add[a][b] = encode(s);
      R.mul[a][b] = encode(naive_polymod(prod, f_ascending, p));
    }
  }
  R.one = d > 0 ? 1 : 0;
  return R;
}

inline FiniteRing product(const FiniteRing& A, const FiniteRing& B) {
  FiniteRing R;
  R.size = A.size * B.size;
  R.add.assign(R.size, std::vector<std::size_t>(R.size));
  R.mul.assign(R.size, std::vector<std::size_t>(R.size));
  for (std::size_t x = 0; x < R.size; ++x) {
    for (std::size_t y = 0; y < R.size; ++y) {
      const auto x1 = x / B.size, x2 = x % B.size, y1 = y / B.size, y2 = y % B.size;
      R.add[x][y] = A.add[x1][y1] * B.size + B.add[x2][y2];
      R.mul[x][y] = A.mul[x1][y1] * B.size + B.mul[x2][y2];
    }
  }
  R.one = A.one * B.size + B.one;
  return R;
}

using Ideal = std::vector<bool>;  // membership by element index

/// Smallest ideal containing `gens`: close under + and multiplication by R.
inline Ideal closure(const FiniteRing& R, const std::vector<std::size_t>& gens) {
  Ideal in(R.size, false);
  std::vector<std::size_t> members;
  auto put = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  put(R.zero);
  for (auto g : gens) {
    for (std::size_t r = 0; r < R.size; ++r) put(R.mul[r][g]);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto s = R.add[members[i]][members[j]];
      if (!in[s]) {
        put(s);
        for (std::size_t r = 0; r < R.size; ++r) put(R.mul[r][s]);
      }
    }
  }
  return in;
}

inline std::vector<std::size_t> members(const Ideal& I) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < I.size(); ++x) {
    if (I[x]) out.push_back(x);
  }
  return out;
}

/// All ideals: principal ones, then sums until nothing new appears.
inline std::vector<Ideal> all_ideals(const FiniteRing& R) {
  std::set<Ideal> seen;
  for (std::size_t a = 0; a < R.size; ++a) seen.insert(closure(R, {a}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Ideal> cur(seen.begin(), seen.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        auto gens = members(cur[i]);
        auto more = members(cur[j]);
        gens.insert(gens.end(), more.begin(), more.end());
        if (seen.insert(closure(R, gens)).second) grew = true;
      }
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool subset(const Ideal& a, const Ideal& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

inline Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  auto g = members(I), h = members(J);
  g.insert(g.end(), h.begin(), h.end());
  return closure(R, g);
}

inline Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  std::vector<std::size_t> g;
  for (auto a : members(I)) {
    for (auto b : members(J)) g.push_back(R.mul[a][b]);
  }
  return closure(R, g);
}

inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  Ideal out(I.size());
  for (std::size_t i = 0; i < I.size(); ++i) out[i] = I[i] && J[i];
  return out;
}

/// (I : J) = {r : rJ in I}
inline Ideal ideal_quotient(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  Ideal out(R.size, false);
  const auto js = members(J);
  for (std::size_t r = 0; r < R.size; ++r) {
    out[r] = std::all_of(js.begin(), js.end(), [&](std::size_t j) { return I[R.mul[r][j]]; });
  }
  return out;
}

inline Ideal annihilator(const FiniteRing& R, const Ideal& I) {
  Ideal zero(R.size, false);
  zero[R.zero] = true;
  return ideal_quotient(R, zero, I);
}

/// Id(R) as tables: order by size, product, x -> y = (y : x).
inline blalg::FiniteAlgebra ideal_algebra(const FiniteRing& R) {
  auto ids = all_ideals(R);
  std::stable_sort(ids.begin(), ids.end(), [](const Ideal& a, const Ideal& b) {
    return std::count(a.begin(), a.end(), true) < std::count(b.begin(), b.end(), true);
  });
  const std::size_t n = ids.size();
  auto index = [&](const Ideal& I) { return static_cast<elem>(std::find(ids.begin(), ids.end(), I) - ids.begin()); };
  blalg::FiniteAlgebra::Relation leq(n, std::vector<bool>(n));
  blalg::FiniteAlgebra::Matrix odot(n, std::vector<elem>(n)), imp(n, std::vector<elem>(n));
  std::vector<std::string> names;
  for (elem i = 0; i < n; ++i) {
    names.push_back("I" + std::to_string(i));
    for (elem j = 0; j < n; ++j) {
      leq[i][j] = subset(ids[i], ids[j]);
      odot[i][j] = index(ideal_product(R, ids[i], ids[j]));
      imp[i][j] = index(ideal_quotient(R, ids[j], ids[i]));
    }
  }
  return blalg::FiniteAlgebra::from_tables(std::move(names), leq, odot, imp);
}

/// Schoolbook product of ascending coefficient lists mod p.
inline std::vector<std::int64_t> naive_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                           std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// Irreducibility by trying every monic polynomial of degree 1..deg/2.
inline bool brute_irreducible(const blalg::Poly& f) {
  const auto p = f.modulus();
  const int d = f.degree();
  if (d < 1) return false;
  for (int k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<blalg::residue> c(k + 1, 0);
      std::uint64_t t = idx;
      for (int i = 0; i < k; ++i) {
        c[i] = static_cast<blalg::residue>(t % p);
        t /= p;
      }
      c[k] = 1;
      if (blalg::rem(f, blalg::Poly::from_residues(p, c)).is_zero()) return false;
    }
  }
  return true;
}

/// Label-wise table lookup for golden tables given by element names.
struct NamedTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> cells;
};

inline std::size_t name_index(const std::vector<std::string>& names, const std::string& s) {
  return static_cast<std::size_t>(std::find(names.begin(), names.end(), s) - names.begin());
}

/// Golden tables written with element names; x <= y is read off x -> y = 1.
inline blalg::FiniteAlgebra from_named(const std::vector<std::string>& names,
                                       const std::vector<std::vector<std::string>>& imp_rows,
                                       const std::vector<std::vector<std::string>>& odot_rows) {
  const std::size_t n = names.size();
  const std::string& top = names.back();
  blalg::FiniteAlgebra::Relation leq(n, std::vector<bool>(n));
  blalg::FiniteAlgebra::Matrix odot(n, std::vector<elem>(n)), imp(n, std::vector<elem>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      leq[x][y] = imp_rows[x][y] == top;
      imp[x][y] = name_index(names, imp_rows[x][y]);
      odot[x][y] = name_index(names, odot_rows[x][y]);
    }
  }
  return blalg::FiniteAlgebra::from_tables(names, leq, odot, imp);
}

/// Example tables used across several suites.
inline blalg::FiniteAlgebra remark_chain3() {
  return from_named({"0", "a", "1"}, {{"1", "1", "1"}, {"0", "1", "1"}, {"0", "a", "1"}},
                    {{"0", "0", "0"}, {"0", "a", "a"}, {"0", "a", "1"}});
}

inline std::vector<std::vector<std::string>> l5_imp() {
  return {{"1", "1", "1", "1", "1"},
          {"0", "1", "1", "1", "1"},
          {"0", "c", "1", "c", "1"},
          {"0", "b", "b", "1", "1"},
          {"0", "a", "b", "c", "1"}};
}

inline std::vector<std::vector<std::string>> l5_odot() {
  return {{"0", "0", "0", "0", "0"},
          {"0", "a", "a", "a", "a"},
          {"0", "a", "b", "a", "b"},
          {"0", "a", "a", "c", "c"},
          {"0", "a", "b", "c", "1"}};
}

inline blalg::FiniteAlgebra l5() { return from_named({"0", "a", "b", "c", "1"}, l5_imp(), l5_odot()); }

inline blalg::FiniteAlgebra boolean_oabe() {
  return from_named({"O", "A", "B", "E"},
                    {{"E", "E", "E", "E"}, {"B", "E", "B", "E"}, {"A", "A", "E", "E"}, {"O", "A", "B", "E"}},
                    {{"O", "O", "O", "O"}, {"O", "A", "O", "A"}, {"O", "O", "B", "B"}, {"O", "A", "B", "E"}});
}

/// The k = 4 comet: 0, a1..a4, a, b, 1.
inline blalg::FiniteAlgebra comet8() {
  const std::vector<std::string> names{"0", "a1", "a2", "a3", "a4", "a", "b", "1"};
  return from_named(names,
                    {{"1", "1", "1", "1", "1", "1", "1", "1"},
                     {"a3", "1", "1", "1", "1", "1", "1", "1"},
                     {"a2", "a3", "1", "1", "1", "1", "1", "1"},
                     {"a1", "a2", "a3", "1", "1", "1", "1", "1"},
                     {"0", "a1", "a2", "a3", "1", "1", "1", "1"},
                     {"0", "a1", "a2", "a3", "b", "1", "b", "1"},
                     {"0", "a1", "a2", "a3", "a", "a", "1", "1"},
                     {"0", "a1", "a2", "a3", "a4", "a", "b", "1"}},
                    {{"0", "0", "0", "0", "0", "0", "0", "0"},
                     {"0", "0", "0", "0", "a1", "a1", "a1", "a1"},
                     {"0", "0", "0", "a1", "a2", "a2", "a2", "a2"},
                     {"0", "0", "a1", "a2", "a3", "a3", "a3", "a3"},
                     {"0", "a1", "a2", "a3", "a4", "a4", "a4", "a4"},
                     {"0", "a1", "a2", "a3", "a4", "a", "a4", "a"},
                     {"0", "a1", "a2", "a3", "a4", "a4", "b", "b"},
                     {"0", "a1", "a2", "a3", "a4", "a", "b", "1"}});
}

}  // namespace oracle

#endif  // BLALG_TESTS_ORACLES_HPP
