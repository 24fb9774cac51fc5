#include "cheb/chief.hpp"

#include <algorithm>
#include <random>

#include "cheb/error.hpp"

namespace cheb {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::uint64_t add_codes(std::uint64_t a, std::uint64_t b, gf::Elem p, std::size_t dim) {
  std::uint64_t out = 0, place = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

// Smallest submodule containing v has full dimension?
bool spans_module(const gf::Vec& v, const std::vector<gf::Matrix>& gens, gf::Elem p) {
  const std::size_t n = v.size();
  std::vector<gf::Vec> basis;
  auto reduce_add = [&](gf::Vec w) {
    // keep `basis` as rows with distinct leading positions
    for (const auto& b : basis) {
      std::size_t lead = 0;
      while (b[lead] == 0) ++lead;
      if (w[lead] != 0) {
        const gf::Elem f = w[lead];
        for (std::size_t j = 0; j < n; ++j) w[j] = (w[j] + (p - f) * b[j]) % p;
      }
    }
    std::size_t lead = 0;
    while (lead < n && w[lead] == 0) ++lead;
    if (lead == n) return false;
    const gf::Elem inv = gf::inv_mod(w[lead], p);
    for (auto& x : w) x = static_cast<gf::Elem>(std::uint64_t{x} * inv % p);
    for (auto& b : basis)
      if (b[lead] != 0) {
        const gf::Elem f = b[lead];
        for (std::size_t j = 0; j < n; ++j) b[j] = (b[j] + (p - f) * w[j]) % p;
      }
    basis.push_back(std::move(w));
    return true;
  };
  reduce_add(v);
  for (std::size_t i = 0; i < basis.size() && basis.size() < n; ++i)
    for (const auto& a : gens) {
      gf::Vec img = gf::apply(basis[i], a, p);
      reduce_add(std::move(img));
    }
  return basis.size() == n;
}

bool is_irreducible(gf::Elem p, std::size_t dim, const std::vector<gf::Matrix>& gens) {
  const std::uint64_t size = ipow(p, dim);
  for (std::uint64_t code = 1; code < size; ++code)
    if (!spans_module(gf::decode(code, dim, p), gens, p)) return false;
  return true;
}

// Solutions T of  T * A_i = B_i * T  for all i, as flattened n*n vectors.
std::vector<gf::Vec> intertwiners(gf::Elem p, std::size_t n, const std::vector<gf::Matrix>& a,
                                  const std::vector<gf::Matrix>& b) {
  const std::size_t unknowns = n * n;
  gf::Matrix system(std::max<std::size_t>(a.size(), 1) * n * n, unknowns);
  std::size_t row = 0;
  for (std::size_t g = 0; g < a.size(); ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t j = 0; j < n; ++j) {
          auto& c1 = system.at(row, i * n + j);
          c1 = (c1 + a[g].at(j, k)) % p;
          auto& c2 = system.at(row, j * n + k);
          c2 = (c2 + p - b[g].at(i, j)) % p;
        }
  return gf::nullspace(system, p);
}

gf::Matrix combine(const std::vector<gf::Vec>& basis, std::uint64_t coeff_code, gf::Elem p,
                   std::size_t n) {
  gf::Matrix t(n, n);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const std::uint64_t c = coeff_code % p;
    coeff_code /= p;
    if (c == 0) continue;
    for (std::size_t k = 0; k < n * n; ++k) t.data[k] = static_cast<gf::Elem>((t.data[k] + c * basis[b][k]) % p);
  }
  return t;
}

bool factor_is_abelian(const PermGroup& g, const Subgroup& x, const Subgroup& y) {
  for (ElemIndex a : x.generators)
    for (ElemIndex b : x.generators)
      if (!y.contains(g.commutator(a, b))) return false;
  return true;
}

std::string factor_label(const ChiefFactorModule& v) {
  std::string s = "V(" + std::to_string(v.p) + "^" + std::to_string(v.n_raw) + ")";
  return s;
}

}  // namespace

ChiefSeries chief_series(const SubgroupLattice& lattice, std::size_t variant) {
  const PermGroup& g = lattice.group();
  std::vector<Subgroup> chain{trivial_subgroup(g)};
  while (chain.back().order != g.order()) {
    auto options = minimal_normal_over(lattice, chain.back().members);
    if (options.empty()) throw std::logic_error("chief_series: no normal subgroup above current term");
    chain.push_back(options[variant % options.size()]);
  }
  std::reverse(chain.begin(), chain.end());
  ChiefSeries series;
  series.subgroups = std::move(chain);
  for (std::size_t i = 0; i + 1 < series.subgroups.size(); ++i) {
    const auto& x = series.subgroups[i];
    const auto& y = series.subgroups[i + 1];
    series.factors.push_back({x.order / y.order, factor_is_abelian(g, x, y)});
  }
  return series;
}

ChiefSeries chief_series(const PermGroup& g) { return chief_series(SubgroupLattice(g)); }

bool is_complemented(const SubgroupLattice& lattice, const Subgroup& x, const Subgroup& y) {
  const PermGroup& g = lattice.group();
  if (!y.members.is_subset_of(x.members) || y.order == x.order)
    throw Error(ErrorCode::BadSection, "Y must be a proper subgroup of X");
  const std::size_t target = g.order() / x.order * y.order;
  for (const auto& u : lattice.subgroups()) {
    if (u.order != target) continue;
    if (!y.members.is_subset_of(u.members)) continue;
    if ((u.members & x.members) == y.members) return true;
  }
  return false;
}

MatrixGroup matrix_group(gf::Elem p, std::size_t dim, const std::vector<gf::Matrix>& generators,
                         std::size_t cap) {
  MatrixGroup h;
  h.p = p;
  h.dim = dim;
  h.generators = generators;
  h.elements.push_back(gf::Matrix::identity(dim));
  h.index.emplace(h.elements.front(), 0);
  for (std::size_t i = 0; i < h.elements.size(); ++i)
    for (const auto& s : h.generators) {
      gf::Matrix next = gf::multiply(h.elements[i], s, p);
      if (h.index.count(next) != 0) continue;
      if (h.elements.size() >= cap)
        throw Error(ErrorCode::OrderCapExceeded, "matrix group exceeds cap " + std::to_string(cap));
      h.index.emplace(next, static_cast<std::uint32_t>(h.elements.size()));
      h.elements.push_back(std::move(next));
    }
  return h;
}

std::uint64_t ChiefFactorModule::module_order() const { return ipow(p, n_raw); }

gf::Matrix action_matrix(const PermGroup& g, const ChiefFactorModule& v, ElemIndex e) {
  gf::Matrix a(v.n_raw, v.n_raw);
  for (std::size_t i = 0; i < v.n_raw; ++i) {
    const gf::Vec row = gf::decode(v.coords.at(g.conj(v.basis[i], e)), v.n_raw, v.p);
    for (std::size_t j = 0; j < v.n_raw; ++j) a.at(i, j) = row[j];
  }
  return a;
}

MatrixGroup image_group(const ChiefFactorModule& v) {
  return matrix_group(v.p, v.n_raw, v.gen_matrices);
}

ChiefFactorModule factor_module(const PermGroup& g, const Subgroup& x, const Subgroup& y) {
  if (!y.members.is_subset_of(x.members) || y.order == x.order)
    throw Error(ErrorCode::BadSection, "Y must be a proper subgroup of X");
  if (!is_normal(g, x) || !is_normal(g, y))
    throw Error(ErrorCode::BadSection, "section terms must be normal in G");
  if (!factor_is_abelian(g, x, y)) throw Error(ErrorCode::NotAbelianFactor, "X/Y is not abelian");

  const std::size_t index = x.order / y.order;
  gf::Elem p = 2;
  while (index % p != 0) ++p;
  std::size_t n_raw = 0;
  for (std::size_t r = index; r > 1; r /= p) {
    if (r % p != 0) throw Error(ErrorCode::NotAbelianFactor, "|X/Y| is not a prime power");
    ++n_raw;
  }
  for (ElemIndex a : x.generators) {
    ElemIndex pw = PermGroup::identity();
    for (gf::Elem k = 0; k < p; ++k) pw = g.mul(pw, a);
    if (!y.contains(pw)) throw Error(ErrorCode::NotAbelianFactor, "X/Y is not elementary abelian");
  }

  ChiefFactorModule v;
  v.upper = x;
  v.lower = y;
  v.p = p;
  v.n_raw = n_raw;
  Subgroup span = y;
  x.members.for_each([&](std::size_t e) {
    if (!span.contains(static_cast<ElemIndex>(e))) {
      v.basis.push_back(static_cast<ElemIndex>(e));
      span = extend(g, span, static_cast<ElemIndex>(e));
    }
  });
  if (v.basis.size() != n_raw) throw std::logic_error("factor_module: basis size mismatch");

  const auto y_elems = y.members.to_indices();
  const std::uint64_t size = ipow(p, n_raw);
  for (std::uint64_t code = 0; code < size; ++code) {
    const gf::Vec a = gf::decode(code, n_raw, p);
    ElemIndex t = PermGroup::identity();
    for (std::size_t i = 0; i < n_raw; ++i)
      for (gf::Elem k = 0; k < a[i]; ++k) t = g.mul(t, v.basis[i]);
    for (std::size_t e : y_elems) v.coords.emplace(g.mul(static_cast<ElemIndex>(e), t), code);
  }
  if (v.coords.size() != x.order) throw std::logic_error("factor_module: coordinates do not cover X");

  for (ElemIndex s : g.generator_indices()) v.gen_matrices.push_back(action_matrix(g, v, s));
  if (!is_irreducible(p, n_raw, v.gen_matrices))
    throw Error(ErrorCode::NotChief, "X/Y has a proper nonzero G-submodule");

  const MatrixGroup h = image_group(v);
  v.h_order = h.order();
  const Subgroup centralizer = section_centralizer(g, x, y);
  if (g.order() / centralizer.order != v.h_order)
    throw std::logic_error("factor_module: |G/C_G(V)| disagrees with the matrix image");
  v.central = v.h_order == 1;
  std::size_t fixing = 0;
  for (const auto& a : h.elements)
    if (gf::fixed_space_dim(a, p) > 0) ++fixing;
  v.p_fix = Rational(fixing, v.h_order);
  v.label = factor_label(v);
  return v;
}

IsoVerdict g_isomorphic(const ChiefFactorModule& a, const ChiefFactorModule& b) {
  IsoVerdict verdict;
  if (a.p != b.p) {
    verdict.different_prime = true;
    return verdict;
  }
  if (a.n_raw != b.n_raw || a.gen_matrices.size() != b.gen_matrices.size()) return verdict;
  const std::size_t n = a.n_raw;
  const auto basis = intertwiners(a.p, n, a.gen_matrices, b.gen_matrices);
  if (basis.empty()) return verdict;
  // solution space has p^dim elements
  std::uint64_t space = 1;
  bool small = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    space *= a.p;
    if (space > kIntertwinerScanCap) {
      small = false;
      break;
    }
  }
  if (small) {
    for (std::uint64_t code = 1; code < space; ++code)
      if (gf::is_invertible(combine(basis, code, a.p, n), a.p)) {
        verdict.isomorphic = true;
        return verdict;
      }
    return verdict;
  }
  std::mt19937_64 rng(0x5eed1502ULL);
  for (int trial = 0; trial < 64; ++trial) {
    gf::Matrix t(n, n);
    for (const auto& bv : basis) {
      const auto c = static_cast<gf::Elem>(rng() % a.p);
      for (std::size_t k = 0; k < n * n; ++k) t.data[k] = static_cast<gf::Elem>((t.data[k] + std::uint64_t{c} * bv[k]) % a.p);
    }
    if (gf::is_invertible(t, a.p)) {
      verdict.isomorphic = true;
      return verdict;
    }
  }
  verdict.heuristic = true;
  return verdict;
}

EndoField endo_field(gf::Elem p, std::size_t dim, const std::vector<gf::Matrix>& generators) {
  const auto basis = intertwiners(p, dim, generators, generators);
  const std::size_t e = basis.size();
  if (e == 0 || dim % e != 0)
    throw Error(ErrorCode::NotIrreducible, "commutant dimension does not divide the module dimension");
  std::uint64_t q = ipow(p, e);
  if (q <= kIntertwinerScanCap) {
    for (std::uint64_t code = 1; code < q; ++code)
      if (!gf::is_invertible(combine(basis, code, p, dim), p))
        throw Error(ErrorCode::NotIrreducible, "commutant has a nonzero singular element");
  } else {
    for (const auto& bv : basis) {
      gf::Matrix t(dim, dim);
      t.data = bv;
      if (!gf::is_invertible(t, p))
        throw Error(ErrorCode::NotIrreducible, "commutant has a nonzero singular element");
    }
  }
  return {q, dim / e};
}

EndoField endo_field(const ChiefFactorModule& v) { return endo_field(v.p, v.n_raw, v.gen_matrices); }

DerivationCount derivations(const MatrixGroup& h, std::uint64_t cap) {
  const gf::Elem p = h.p;
  const std::size_t dim = h.dim;
  const std::uint64_t vsize = ipow(p, dim);

  // greedy generating set
  std::vector<gf::Matrix> gens;
  std::size_t generated = 1;
  for (const auto& s : h.generators) {
    std::vector<gf::Matrix> trial = gens;
    trial.push_back(s);
    const std::size_t order = matrix_group(p, dim, trial).order();
    if (order > generated) {
      gens = std::move(trial);
      generated = order;
    }
  }
  if (generated != h.order()) throw std::logic_error("derivations: generators do not span H");

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (candidates > cap / vsize) throw Error(ErrorCode::SearchCapExceeded, "|V|^d exceeds derivation search cap");
    candidates *= vsize;
  }

  const std::size_t order = h.order();
  const std::size_t k = gens.size();
  std::vector<std::uint32_t> right(order * k);
  for (std::size_t e = 0; e < order; ++e)
    for (std::size_t j = 0; j < k; ++j)
      right[e * k + j] = h.index.at(gf::multiply(h.elements[e], gens[j], p));
  // image tables: img[j][v] = v * gens[j]
  std::vector<std::vector<std::uint64_t>> img(k, std::vector<std::uint64_t>(vsize));
  for (std::size_t j = 0; j < k; ++j)
    for (std::uint64_t v = 0; v < vsize; ++v)
      img[j][v] = gf::encode(gf::apply(gf::decode(v, dim, p), gens[j], p), p);

  // breadth-first spanning tree of the Cayley graph
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> order_seen{0};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(order, {kUnset, kUnset});
  std::vector<bool> reached(order, false);
  reached[0] = true;
  for (std::size_t i = 0; i < order_seen.size(); ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      const std::uint32_t nx = right[order_seen[i] * k + j];
      if (reached[nx]) continue;
      reached[nx] = true;
      parent[nx] = {order_seen[i], j};
      order_seen.push_back(nx);
    }

  std::uint64_t der_count = 0;
  std::vector<std::uint64_t> zeta(order);
  std::vector<std::uint64_t> c(k);
  for (std::uint64_t cand = 0; cand < candidates; ++cand) {
    std::uint64_t rest = cand;
    for (std::size_t j = 0; j < k; ++j) {
      c[j] = rest % vsize;
      rest /= vsize;
    }
    zeta[0] = 0;
    for (std::size_t i = 1; i < order_seen.size(); ++i) {
      const auto [par, j] = parent[order_seen[i]];
      zeta[order_seen[i]] = add_codes(img[j][zeta[par]], c[j], p, dim);
    }
    bool ok = true;
    for (std::size_t e = 0; e < order && ok; ++e)
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = zeta[right[e * k + j]] == add_codes(img[j][zeta[e]], c[j], p, dim);
    if (ok) ++der_count;
  }

  std::uint64_t fixed = 0;
  for (std::uint64_t v = 0; v < vsize; ++v) {
    bool fixed_by_all = true;
    for (std::size_t j = 0; j < k && fixed_by_all; ++j) fixed_by_all = img[j][v] == v;
    if (fixed_by_all) ++fixed;
  }
  DerivationCount out;
  out.der_count = der_count;
  out.inner_count = vsize / fixed;
  out.q = endo_field(p, dim, h.generators).q;
  std::uint64_t ratio = der_count / out.inner_count;
  if (ratio * out.inner_count != der_count) throw std::logic_error("derivations: |Ider| does not divide |Der|");
  while (ratio > 1) {
    if (ratio % out.q != 0) throw std::logic_error("derivations: |H^1| is not a power of q");
    ratio /= out.q;
    ++out.m;
  }
  return out;
}

CrownData crown_data(const SubgroupLattice& lattice, std::size_t series_variant) {
  const PermGroup& g = lattice.group();
  CrownData crowns;
  crowns.series = chief_series(lattice, series_variant);
  const bool soluble = is_soluble(g);

  std::vector<ChiefFactorModule> classes;
  for (std::size_t i = 0; i < crowns.series.factors.size(); ++i) {
    const auto& x = crowns.series.subgroups[i];
    const auto& y = crowns.series.subgroups[i + 1];
    const bool complemented = is_complemented(lattice, x, y);
    if (!crowns.series.factors[i].abelian) {
      crowns.nonabelian_factors.push_back({crowns.series.factors[i].order, complemented, i});
      continue;
    }
    ChiefFactorModule v = factor_module(g, x, y);
    v.complemented = complemented;
    crowns.abelian_factors.push_back(v);
    if (!complemented) continue;
    auto match = std::find_if(classes.begin(), classes.end(), [&](const ChiefFactorModule& rep) {
      return g_isomorphic(rep, v).isomorphic;
    });
    if (match == classes.end()) {
      v.delta = 1;
      classes.push_back(std::move(v));
    } else {
      ++match->delta;
    }
  }

  // stable by (p, n_raw); insertion order is first occurrence
  std::stable_sort(classes.begin(), classes.end(), [](const auto& l, const auto& r) {
    return std::pair(l.p, l.n_raw) < std::pair(r.p, r.n_raw);
  });
  for (auto& v : classes) {
    const EndoField f = endo_field(v);
    v.q = f.q;
    v.n = f.n;
    v.theta = v.delta == 1 ? 0 : 1;
    if (soluble) {
      v.m = 0;
    } else {
      try {
        v.m = derivations(image_group(v)).m;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SearchCapExceeded) throw;
      }
    }
    (v.central ? crowns.b : crowns.a).push_back(v);
  }
  return crowns;
}

std::vector<bool> omega_membership(const SubgroupLattice& lattice,
                                   const std::vector<MaximalClassData>& maximals,
                                   const ChiefFactorModule& v) {
  const PermGroup& g = lattice.group();
  std::vector<bool> mask(maximals.size(), false);
  for (std::size_t i = 0; i < maximals.size(); ++i) {
    const auto socle_parts = minimal_normal_over(lattice, maximals[i].core_bits);
    if (socle_parts.empty() || socle_parts.size() > 2) continue;
    const Subgroup core = subgroup_from_bits(g, maximals[i].core_bits);
    bool all_match = true;
    for (const auto& n : socle_parts) {
      if (!factor_is_abelian(g, n, core)) {
        all_match = false;
        break;
      }
      const ChiefFactorModule w = factor_module(g, n, core);
      if (!g_isomorphic(w, v).isomorphic) {
        all_match = false;
        break;
      }
    }
    mask[i] = all_match;
  }
  return mask;
}

}  // namespace cheb
