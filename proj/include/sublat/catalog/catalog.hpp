#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sublat/exact/matrix.hpp"
#include "sublat/lattice/basis.hpp"
#include "sublat/suborth/sequence.hpp"

namespace sublat::catalog {

using exact::IntMatrix;
using exact::RatMatrix;

/// A named target lattice together with the dual generator that starts its
/// sequence. Integer entries take the exact path; Gram-defined entries (E6,
/// A_n) carry a floating Cholesky factor for the rounded path.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::size_t dim = 0;
  std::optional<IntMatrix> dual_base;
  std::optional<lattice::RealMatrix> dual_base_real;
  std::optional<IntMatrix> good_perturbation;
  /// Gram matrix of the target lattice when it is not dualadj(dual_base).
  std::optional<RatMatrix> target_gram;
  /// "file checksum" pairs for every data file read.
  std::vector<std::pair<std::string, std::string>> provenance;

  bool integral() const { return dual_base.has_value(); }
  /// Sequence with the requested perturbation; CatalogError if unavailable.
  suborth::SequenceSpec spec(const std::string& perturbation = "good") const;
};

/// Directory holding catalog/*.mat. Resolution order: set_data_dir, the
/// SUBLAT_DATA_DIR environment variable, then the build-time default.
std::filesystem::path data_dir();
void set_data_dir(const std::filesystem::path& dir);

/// Loads data_dir()/catalog/<stem>.mat, recording its checksum in provenance.
IntMatrix load_int(const std::string& stem, CatalogEntry* record = nullptr);
RatMatrix load_rat(const std::string& stem, CatalogEntry* record = nullptr);

/// Diagonal 2's with a final row of ones; det = 2^(n-1).
IntMatrix dn_dual(std::size_t n);
/// Row 0 = e_1 + e_(n-1), row i = -e_(i-1) + e_(i+1), row n-1 = -e_0 + e_(n-1) (0-based).
IntMatrix dn_good_perturbation(std::size_t n);
/// Ones on the superdiagonal.
IntMatrix cyclic_perturbation(std::size_t n);
/// Tridiagonal Cartan matrix of A_n (det n + 1).
IntMatrix an_gram(std::size_t n);

/// Lower-triangular L with L L^T = g (throws DegenerateBasisError if not positive definite).
lattice::RealMatrix cholesky(const RatMatrix& g);

CatalogEntry dn(std::size_t n);
/// e7, e8-1, e8-2 in that order.
std::vector<CatalogEntry> e_series();
CatalogEntry leech(int variant);
/// "e6" or "aN": dual basis = Cholesky factor of the inverse Gram.
CatalogEntry gram_dual_family(const std::string& name);

/// Resolves any catalog name (d3, d4, ..., e6, e7, e8-1, e8-2, leech-1, leech-2, a2, ...).
CatalogEntry lookup(const std::string& name);

struct NameInfo {
  std::string name;
  std::string description;
};
std::vector<NameInfo> list_names();

/// Exact squared center density of the entry's target lattice.
mpq_class target_density_squared(const CatalogEntry& e);

}  // namespace sublat::catalog
