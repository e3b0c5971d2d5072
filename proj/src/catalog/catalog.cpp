#include "sublat/catalog/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>

#include "sublat/catalog/matrix_file.hpp"
#include "sublat/exact/linalg.hpp"
#include "sublat/lattice/density.hpp"

#ifndef SUBLAT_DEFAULT_DATA_DIR
#define SUBLAT_DEFAULT_DATA_DIR "data"
#endif

namespace sublat::catalog {

namespace {

std::optional<std::filesystem::path>& override_dir() {
  static std::optional<std::filesystem::path> dir;
  return dir;
}

MatrixText read_stem(const std::string& stem, CatalogEntry* record) {
  const auto path = data_dir() / "catalog" / (stem + ".mat");
  MatrixText m = read_matrix_file(path);
  if (!m.checksum) throw CatalogError(path.string() + ": catalog files must carry a checksum");
  if (record) record->provenance.emplace_back(stem + ".mat", *m.checksum);
  return m;
}

IntMatrix block_diagonal(const IntMatrix& block, std::size_t copies) {
  const std::size_t b = block.rows();
  IntMatrix out(b * copies, b * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) out(c * b + i, c * b + j) = block(i, j);
  return out;
}

void require_dim(std::size_t n, std::size_t min, const char* what) {
  if (n < min) throw DimensionError(std::string(what) + " needs n >= " + std::to_string(min));
}

}  // namespace

suborth::SequenceSpec CatalogEntry::spec(const std::string& perturbation) const {
  if (!dual_base) throw CatalogError(name + " has no integer dual generator; use the rounded path");
  const std::string label = name + "/" + perturbation;
  if (perturbation == "zero") return suborth::SequenceSpec::unperturbed(*dual_base, label);
  if (perturbation == "cyclic") return {*dual_base, cyclic_perturbation(dim), label};
  if (perturbation == "good") {
    if (!good_perturbation) throw CatalogError(name + " has no good perturbation");
    return {*dual_base, *good_perturbation, label};
  }
  throw CatalogError("unknown perturbation '" + perturbation + "'");
}

std::filesystem::path data_dir() {
  if (override_dir()) return *override_dir();
  if (const char* env = std::getenv("SUBLAT_DATA_DIR"); env && *env) return env;
  return SUBLAT_DEFAULT_DATA_DIR;
}

void set_data_dir(const std::filesystem::path& dir) { override_dir() = dir; }

IntMatrix load_int(const std::string& stem, CatalogEntry* record) { return to_int_matrix(read_stem(stem, record)); }
RatMatrix load_rat(const std::string& stem, CatalogEntry* record) { return to_rat_matrix(read_stem(stem, record)); }

IntMatrix dn_dual(std::size_t n) {
  require_dim(n, 3, "D_n*");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i) = 2;
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 1;
  return m;
}

IntMatrix dn_good_perturbation(std::size_t n) {
  require_dim(n, 3, "P_n");
  IntMatrix p(n, n);
  p(0, 1) += 1;
  p(0, n - 1) += 1;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    p(i, i - 1) = -1;
    p(i, i + 1) = 1;
  }
  p(n - 1, 0) = -1;
  p(n - 1, n - 1) = 1;
  return p;
}

IntMatrix cyclic_perturbation(std::size_t n) {
  require_dim(n, 2, "C_n");
  IntMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
  return c;
}

IntMatrix an_gram(std::size_t n) {
  require_dim(n, 1, "A_n");
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return g;
}

lattice::RealMatrix cholesky(const RatMatrix& g) {
  if (!g.is_square()) throw DimensionError("Cholesky needs a square matrix");
  const std::size_t n = g.rows();
  std::vector<long double> a(n * n), l(n * n, 0.0L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long double>(lattice::to_double(g(i, j)));
  for (std::size_t j = 0; j < n; ++j) {
    long double d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (!(d > 0)) throw DegenerateBasisError("Gram matrix is not positive definite");
    l[j * n + j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      long double s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / l[j * n + j];
    }
  }
  lattice::RealMatrix out(n, n);
  for (std::size_t k = 0; k < n * n; ++k) out.data[k] = static_cast<double>(l[k]);
  return out;
}

CatalogEntry dn(std::size_t n) {
  CatalogEntry e;
  e.name = "d" + std::to_string(n);
  e.description = "D_" + std::to_string(n) + " from the generated D_n* basis";
  e.dim = n;
  e.dual_base = dn_dual(n);
  e.good_perturbation = dn_good_perturbation(n);
  return e;
}

std::vector<CatalogEntry> e_series() {
  std::vector<CatalogEntry> out;
  const std::pair<const char*, const char*> names[] = {{"e7", "E_7"}, {"e8-1", "E_8, first representation"},
                                                      {"e8-2", "E_8, second representation"}};
  for (const auto& [stem, desc] : names) {
    CatalogEntry e;
    e.name = stem;
    e.description = desc;
    e.dual_base = load_int(std::string(stem) + "-dual", &e);
    e.good_perturbation = load_int(std::string(stem) + "-good", &e);
    e.dim = e.dual_base->rows();
    out.push_back(std::move(e));
  }
  return out;
}

CatalogEntry leech(int variant) {
  if (variant != 1 && variant != 2) throw CatalogError("Leech variant must be 1 or 2");
  CatalogEntry e;
  e.name = "leech-" + std::to_string(variant);
  e.description = variant == 1 ? "Leech lattice, first representation (dual 4 L^-T)"
                               : "Leech lattice, second representation (dual 8 L^-T)";
  const IntMatrix l = load_int(e.name + "-primal", &e);
  e.dim = l.rows();
  const RatMatrix dual = mpq_class(variant == 1 ? 4 : 8) * exact::inverse(l).transpose();
  if (!exact::is_integral(dual)) throw CatalogError(e.name + ": scaled inverse transpose is not integral");
  e.dual_base = exact::to_integer(dual);
  if (variant == 1) {
    e.good_perturbation = block_diagonal(load_int("e8-1-good", &e), 3);
  } else {
    e.good_perturbation = IntMatrix(e.dim, e.dim);
  }
  return e;
}

CatalogEntry gram_dual_family(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  static const std::regex an("a([1-9][0-9]*)");
  std::smatch m;
  if (name == "e6") {
    e.target_gram = load_rat("e6-gram", &e);
    e.description = "E_6 via Cholesky factor of the inverse Gram";
  } else if (std::regex_match(name, m, an)) {
    e.target_gram = exact::to_rational(an_gram(std::stoul(m[1].str())));
    e.description = "A_" + m[1].str() + " via Cholesky factor of the inverse Gram";
  } else {
    throw CatalogError("unknown Gram family '" + name + "'");
  }
  e.dim = e.target_gram->rows();
  e.dual_base_real = cholesky(exact::inverse(*e.target_gram));
  return e;
}

CatalogEntry lookup(const std::string& name) {
  static const std::regex dn_re("d([1-9][0-9]*)");
  std::smatch m;
  if (std::regex_match(name, m, dn_re)) return dn(std::stoul(m[1].str()));
  for (CatalogEntry& e : e_series())
    if (e.name == name) return e;
  if (name == "leech-1") return leech(1);
  if (name == "leech-2") return leech(2);
  if (name == "e6" || (!name.empty() && name[0] == 'a')) return gram_dual_family(name);
  throw CatalogError("unknown catalog name '" + name + "'");
}

std::vector<NameInfo> list_names() {
  return {{"dN", "D_N for N >= 3, generated D_N* with the good perturbation P_N"},
          {"e6", "E_6, rounded path from the Cholesky factor of the inverse Gram"},
          {"e7", "E_7 with perturbation P_7"},
          {"e8-1", "E_8 first representation with P_8,1"},
          {"e8-2", "E_8 second representation with P_8,2"},
          {"leech-1", "Leech lattice, dual 4 L^-T, perturbation blockdiag(P_8,1)"},
          {"leech-2", "Leech lattice, dual 8 L^-T, no perturbation"},
          {"aN", "A_N for N >= 1, rounded path from the Cholesky factor of the inverse Gram"}};
}

mpq_class target_density_squared(const CatalogEntry& e) {
  if (e.target_gram) return lattice::center_density_squared(*e.target_gram);
  if (!e.dual_base) throw CatalogError(e.name + " has no target lattice");
  return lattice::center_density_squared(lattice::LatticeBasis(exact::dualadj(*e.dual_base)));
}

}  // namespace sublat::catalog
