#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sublat/catalog/catalog.hpp"
#include "sublat/catalog/matrix_file.hpp"
#include "sublat/errors.hpp"
#include "sublat/exact/linalg.hpp"
#include "sublat/lattice/density.hpp"
#include "sublat/sphere/torus_code.hpp"
#include "sublat/suborth/sequence.hpp"
#include "sublat/tables/tables.hpp"

namespace {

using namespace sublat;
using exact::IntMatrix;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;
constexpr int kExitSingular = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxPrintedMatrix = 12;

// A dual generator read from the catalog or a file, in exact or floating form.
struct Source {
  std::string label;
  std::optional<IntMatrix> dual;
  std::optional<lattice::RealMatrix> dual_real;
  std::optional<catalog::CatalogEntry> entry;
  std::vector<std::pair<std::string, std::string>> provenance;

  std::size_t dim() const { return dual ? dual->rows() : dual_real->rows; }
};

catalog::MatrixText read_file(const std::string& path, std::vector<std::pair<std::string, std::string>>& prov) {
  catalog::MatrixText text = catalog::read_matrix_file(path);
  prov.emplace_back(path, catalog::checksum(text));
  return text;
}

lattice::RealMatrix to_real(const exact::RatMatrix& m) {
  lattice::RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = lattice::to_double(m(i, j));
  return r;
}

lattice::RealMatrix to_real(const IntMatrix& m) { return to_real(exact::to_rational(m)); }

Source load_source(const std::string& name) {
  Source s;
  s.label = name;
  if (std::filesystem::is_regular_file(name)) {
    const catalog::MatrixText text = read_file(name, s.provenance);
    const exact::RatMatrix m = catalog::to_rat_matrix(text);
    bool integral = true;
    for (std::size_t i = 0; i < m.rows() && integral; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j).get_den() != 1) integral = false;
    if (m.rows() != m.cols()) throw DimensionError("dual basis in " + name + " must be square");
    if (integral)
      s.dual = catalog::to_int_matrix(text);
    else
      s.dual_real = to_real(m);
    return s;
  }
  catalog::CatalogEntry e = catalog::lookup(name);
  s.dual = e.dual_base;
  s.dual_real = e.dual_base_real;
  s.provenance = e.provenance;
  s.entry = std::move(e);
  return s;
}

IntMatrix load_perturbation(const std::string& name, const Source& src,
                            std::vector<std::pair<std::string, std::string>>& prov) {
  const std::size_t n = src.dim();
  if (name == "zero") return IntMatrix(n, n);
  if (name == "cyclic") return catalog::cyclic_perturbation(n);
  if (name == "good") {
    if (!src.entry || !src.entry->good_perturbation)
      throw UsageError("no good perturbation is known for " + src.label);
    return *src.entry->good_perturbation;
  }
  const IntMatrix p = catalog::to_int_matrix(read_file(name, prov));
  if (p.rows() != n || p.cols() != n) throw DimensionError("perturbation shape does not match the dual basis");
  return p;
}

std::optional<mpq_class> load_target(const std::string& name, const Source& src,
                                     std::vector<std::pair<std::string, std::string>>& prov) {
  if (name.empty()) {
    if (src.entry) return catalog::target_density_squared(*src.entry);
    return std::nullopt;
  }
  if (std::filesystem::is_regular_file(name))
    return lattice::center_density_squared(lattice::LatticeBasis(catalog::to_rat_matrix(read_file(name, prov))));
  return catalog::target_density_squared(catalog::lookup(name));
}

std::vector<double> parse_w_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find("..") != std::string::npos) {
      const tables::WRange r = tables::parse_w_range(item);
      for (long w = r.from; w <= r.to; ++w) out.push_back(static_cast<double>(w));
      continue;
    }
    std::size_t used = 0;
    double w = 0;
    try {
      w = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || !(w > 0)) throw UsageError("bad w value '" + item + "'");
    out.push_back(w);
  }
  if (out.empty()) throw UsageError("empty w list");
  return out;
}

struct ConstructOptions {
  std::string source;
  std::string perturb = "zero";
  std::string w_list = "1";
  std::string show = "size,group,density";
  std::string target;
  std::string format = "text";
  std::uint64_t node_budget = 0;
};

std::set<std::string> parse_show(const std::string& text) {
  static const std::set<std::string> known{"member", "group", "density", "sphere", "classify", "size"};
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) {
      if (!known.count(item)) throw UsageError("unknown --show item '" + item + "'");
      out.insert(item);
    }
  return out;
}

void print_matrix(std::ostream& out, const char* name, const IntMatrix& m) {
  out << "  " << name << " =\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "   ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << " " << m(i, j).get_str();
    out << "\n";
  }
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

int run_construct(const ConstructOptions& o) {
  const Source src = load_source(o.source);
  const std::set<std::string> show = parse_show(o.show);
  const std::vector<double> ws = parse_w_list(o.w_list);
  const bool json = o.format == "json";
  std::vector<std::pair<std::string, std::string>> provenance = src.provenance;
  const std::optional<mpq_class> target = load_target(o.target, src, provenance);
  std::optional<suborth::SequenceSpec> spec;
  if (src.dual) spec.emplace(*src.dual, load_perturbation(o.perturb, src, provenance), src.label);
  else if (o.perturb != "zero")
    throw UsageError(src.label + " is not integral; only --perturb zero applies on the rounded path");

  ordered_json doc;
  std::ostringstream text;
  doc["source"] = src.label;
  doc["perturbation"] = o.perturb;
  doc["provenance"] = {{"seedless", true}, {"data", ordered_json::array()}};
  for (const auto& [file, sum] : provenance)
    doc["provenance"]["data"].push_back({{"file", file}, {"checksum", sum}});
  text << "# construct " << src.label << ", perturbation " << o.perturb << "\n";
  for (const auto& [file, sum] : provenance) text << "# data: " << file << " " << sum << "\n";
  text << "# seedless: output is a deterministic function of the inputs\n";

  if (show.count("classify")) {
    if (!spec) throw UsageError("classify needs an integral dual basis");
    const suborth::ConvergenceClass c = suborth::classify(*spec);
    doc["classification"] = c.describe();
    text << "classification = " << c.describe() << "\n";
  }

  doc["members"] = ordered_json::array();
  for (double w : ws) {
    const bool integral_w = std::floor(w) == w;
    ordered_json m_doc;
    m_doc["w"] = tables::full_precision(w);
    text << "w = " << tables::full_precision(w) << "\n";
    try {
      suborth::SequenceMember m;
      if (spec && integral_w) {
        m = suborth::primal_member(*spec, static_cast<long>(w));
      } else {
        if (spec && !spec->perturbation.is_zero())
          throw UsageError("fractional w uses the rounded path, which takes no perturbation");
        const lattice::RealMatrix base = src.dual_real ? *src.dual_real : to_real(*src.dual);
        m = suborth::member_from_dual(suborth::rounded_dual_member(base, w), w);
      }
      const std::size_t n = m.dim();
      if (show.count("size")) {
        m_doc["M"] = suborth::code_size(m).get_str();
        text << "  M = " << suborth::code_size(m).get_str() << "\n";
      }
      if (show.count("member")) {
        m_doc["dual"] = matrix_json(m.dual);
        m_doc["primal"] = matrix_json(m.primal);
        m_doc["det"] = m.det_dual.get_str();
        text << "  det = " << m.det_dual.get_str() << "\n";
        if (n <= kMaxPrintedMatrix) {
          print_matrix(text, "dual", m.dual);
          print_matrix(text, "primal", m.primal);
        } else {
          text << "  (matrices above " << kMaxPrintedMatrix << "x" << kMaxPrintedMatrix << " omitted; use --format json)\n";
        }
      }
      if (show.count("group")) {
        const std::string g = suborth::quotient_group(m).to_string();
        m_doc["group"] = g;
        text << "  group = " << g << "\n";
      }
      if (show.count("density")) {
        const mpq_class d2 = suborth::member_density_squared(m);
        const double delta = lattice::sqrt_to_double(d2);
        m_doc["delta"] = delta;
        text << "  delta = " << tables::six_digits(delta) << "\n";
        if (target) {
          const double ratio = suborth::density_ratio(m, *target);
          m_doc["ratio"] = ratio;
          text << "  ratio = " << tables::six_digits(ratio) << "\n";
        }
      }
      if (show.count("sphere")) {
        sphere::SearchOptions so;
        so.node_budget = o.node_budget;
        const sphere::TorusCode code(m);
        const sphere::CodeDistance d = sphere::min_distance(code, so);
        m_doc["distance"] = d.value;
        m_doc["certified"] = d.certified;
        m_doc["lower_bound"] = d.lower_bound;
        ordered_json wit = ordered_json::array();
        for (const auto& x : d.witness) wit.push_back(x.get_str());
        m_doc["witness"] = wit;
        text << "  distance = " << tables::six_digits(d.value) << (d.certified ? "" : " (uncertified)") << "\n";
        if (!d.certified) text << "  lower bound = " << tables::six_digits(d.lower_bound) << "\n";
      }
    } catch (const SingularMatrixError& e) {
      if (ws.size() == 1) {
        std::cerr << "sublat: " << e.what() << "\n";
        return kExitSingular;
      }
      m_doc["skipped"] = "singular member";
      text << "  skipped: singular member\n";
    }
    doc["members"].push_back(std::move(m_doc));
  }
  std::cout << (json ? doc.dump(2) + "\n" : text.str());
  return kExitOk;
}

int run_table(int id, const std::string& format, const std::string& range, std::uint64_t budget) {
  tables::TableOptions opts;
  if (id < 1 || id > 6) throw UsageError("unknown table " + std::to_string(id) + " (expected 1..6)");
  if (!range.empty()) {
    try {
      opts.range = tables::parse_w_range(range);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  opts.node_budget = budget;
  const tables::Table t = tables::build_table(id, opts);
  if (format == "json")
    std::cout << tables::to_json(t);
  else if (format == "md")
    std::cout << tables::to_markdown(t);
  else
    std::cout << tables::to_csv(t);
  return t.partial ? kExitCapability : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice sequences with orthogonal sublattices, their densities and torus codes"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option("--data-dir", data_dir, "Directory holding catalog/*.mat");

  auto* table = app.add_subcommand("table", "Print one of the reference tables 1..6");
  int table_id = 0;
  std::string format = "csv", range;
  std::uint64_t budget = 0;
  table->add_option("id", table_id, "Table number")->required();
  table->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "md"}));
  table->add_option("--w-range", range, "Inclusive w range a..b");
  table->add_option("--node-budget", budget, "Enumeration node budget per torus code (0: unlimited)");

  auto* construct = app.add_subcommand("construct", "Build members of a sequence w B* + P");
  ConstructOptions co;
  construct->add_option("source", co.source, "Catalog name or matrix file holding B*")->required();
  construct->add_option("--perturb", co.perturb, "zero, cyclic, good or a matrix file");
  construct->add_option("--w", co.w_list, "Comma-separated w values or ranges a..b");
  construct->add_option("--show", co.show, "Any of member,group,density,sphere,classify,size");
  construct->add_option("--target", co.target, "Catalog name or generator file of the target lattice");
  construct->add_option("--format", co.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  construct->add_option("--node-budget", co.node_budget, "Enumeration node budget (0: unlimited)");

  auto* cat = app.add_subcommand("catalog", "Inspect the lattice catalog");
  auto* list = cat->add_subcommand("list", "List catalog names");
  cat->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!data_dir.empty()) catalog::set_data_dir(data_dir);
    if (*table) return run_table(table_id, format, range, budget);
    if (*construct) return run_construct(co);
    if (*list) {
      for (const auto& info : catalog::list_names()) std::cout << info.name << "\t" << info.description << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "sublat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogError& e) {
    std::cerr << "sublat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "sublat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "sublat: " << e.what() << "\n";
    return kExitCapability;
  } catch (const SingularMatrixError& e) {
    std::cerr << "sublat: " << e.what() << "\n";
    return kExitSingular;
  } catch (const Error& e) {
    std::cerr << "sublat: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
