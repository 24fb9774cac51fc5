#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cheb/gf.hpp"
#include "cheb/perm_group.hpp"
#include "cheb/rational.hpp"
#include "cheb/subgroups.hpp"

namespace cheb {

struct ChiefSeries {
  /// G = N_0 > N_1 > ... > N_r = 1, each normal in G.
  std::vector<Subgroup> subgroups;

  struct FactorMeta {
    std::size_t order = 0;
    bool abelian = false;
  };
  /// factors[i] describes N_i / N_{i+1}.
  std::vector<FactorMeta> factors;
};

/// `variant` selects which minimal normal subgroup is taken at each step
/// (index variant mod #choices); every variant yields a valid chief series.
ChiefSeries chief_series(const SubgroupLattice& lattice, std::size_t variant = 0);
ChiefSeries chief_series(const PermGroup& g);

/// True iff some U has UX = G and U ∩ X = Y. Throws BadSection.
bool is_complemented(const SubgroupLattice& lattice, const Subgroup& x, const Subgroup& y);

/// Finite group of invertible matrices over F_p, fully enumerated.
struct MatrixGroup {
  gf::Elem p = 2;
  std::size_t dim = 0;
  std::vector<gf::Matrix> generators;
  std::vector<gf::Matrix> elements;  // identity first
  std::unordered_map<gf::Matrix, std::uint32_t, gf::MatrixHash> index;

  std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t kMatrixGroupCap = 100000;

MatrixGroup matrix_group(gf::Elem p, std::size_t dim, const std::vector<gf::Matrix>& generators,
                         std::size_t cap = kMatrixGroupCap);

/// An abelian chief factor V = X/Y of G viewed as an F_p[G]-module.
///
/// Row-vector convention: generator s acts as v -> v * gen_matrices[s], and
/// the basis is the first elements of X (in element-table order) that are
/// independent modulo Y.
struct ChiefFactorModule {
  std::string label;
  Subgroup upper;  // X
  Subgroup lower;  // Y
  gf::Elem p = 2;
  std::size_t n_raw = 0;
  /// One matrix per entry of G.generator_indices().
  std::vector<gf::Matrix> gen_matrices;
  std::vector<ElemIndex> basis;
  /// Coordinates (gf::encode) of each element of X, indexed by element.
  std::unordered_map<ElemIndex, std::uint64_t> coords;

  bool complemented = false;
  bool central = false;
  std::uint64_t q = 0;    // |End_G(V)|
  std::size_t n = 0;      // dim over End_G(V)
  std::size_t delta = 0;  // complemented factors G-isomorphic to V
  int theta = 0;          // 0 iff delta == 1
  std::size_t h_order = 0;
  /// Probability that a uniform element of H_V = G/C_G(V) fixes a nonzero vector.
  Rational p_fix;
  std::optional<std::size_t> m;  // dim of H^1(H_V, V) over End_G(V)

  std::uint64_t module_order() const;  // |V| = p^n_raw
};

/// Builds the module for the abelian chief factor X/Y, including h_order,
/// central and p_fix. Throws BadSection, NotAbelianFactor or NotChief.
ChiefFactorModule factor_module(const PermGroup& g, const Subgroup& x, const Subgroup& y);

/// Matrix of an arbitrary element of G on the module.
gf::Matrix action_matrix(const PermGroup& g, const ChiefFactorModule& v, ElemIndex e);

/// H_V as a matrix group.
MatrixGroup image_group(const ChiefFactorModule& v);

struct IsoVerdict {
  bool isomorphic = false;
  bool different_prime = false;
  /// Set when the intertwiner space was too large to scan and random
  /// sampling declared the modules non-isomorphic.
  bool heuristic = false;
};

inline constexpr std::size_t kIntertwinerScanCap = 4096;

/// Looks for an invertible T with T A_g = B_g T for every generator.
IsoVerdict g_isomorphic(const ChiefFactorModule& a, const ChiefFactorModule& b);

struct EndoField {
  std::uint64_t q = 0;
  std::size_t n = 0;
};

/// |End_G(V)| and dim_{End_G(V)} V. Throws NotIrreducible.
EndoField endo_field(gf::Elem p, std::size_t dim, const std::vector<gf::Matrix>& generators);
EndoField endo_field(const ChiefFactorModule& v);

struct NonabelianFactor {
  std::size_t order = 0;
  bool complemented = false;
  std::size_t position = 0;  // index into ChiefSeries::factors
};

struct CrownData {
  ChiefSeries series;
  /// Every abelian factor of the series, in series order, with delta left 0.
  std::vector<ChiefFactorModule> abelian_factors;
  std::vector<NonabelianFactor> nonabelian_factors;
  /// Representatives of the non-central [A] and central [B] classes of
  /// complemented abelian factors, ordered by (p, n_raw, first occurrence).
  std::vector<ChiefFactorModule> a;
  std::vector<ChiefFactorModule> b;
};

inline constexpr std::uint64_t kDerivationSearchCap = std::uint64_t{1} << 24;

CrownData crown_data(const SubgroupLattice& lattice, std::size_t series_variant = 0);

struct DerivationCount {
  std::uint64_t der_count = 0;
  std::uint64_t inner_count = 0;
  std::size_t m = 0;
  std::uint64_t q = 0;
};

/// Enumerates Der(H, V) for a matrix group H acting on V = F_p^dim.
/// Throws SearchCapExceeded when |V|^(#generators) exceeds `cap`.
DerivationCount derivations(const MatrixGroup& h, std::uint64_t cap = kDerivationSearchCap);

/// Marks each maximal class M whose quotient G/core_G(M) has socle
/// G-isomorphic to V or to V x V.
std::vector<bool> omega_membership(const SubgroupLattice& lattice,
                                   const std::vector<MaximalClassData>& maximals,
                                   const ChiefFactorModule& v);

}  // namespace cheb
