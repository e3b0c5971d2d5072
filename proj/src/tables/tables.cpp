#include "sublat/tables/tables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "sublat/catalog/catalog.hpp"
#include "sublat/errors.hpp"
#include "sublat/lattice/density.hpp"
#include "sublat/sphere/torus_code.hpp"
#include "sublat/suborth/sequence.hpp"

namespace sublat::tables {

namespace {

using catalog::CatalogEntry;
using suborth::SequenceMember;
using suborth::SequenceSpec;

constexpr double kTable6Fractional[] = {9,     9.1,  9.2,   9.35, 9.4,  9.55,  9.6,  9.7,   10,
                                        10.05, 10.1, 10.3, 10.45, 10.5, 10.65, 10.7, 10.85, 11};

struct Series {
  std::string key;
  std::string header;
  CatalogEntry entry;
  SequenceSpec spec;

  Series(std::string k, std::string h, CatalogEntry e, const std::string& perturbation)
      : key(std::move(k)), header(std::move(h)), entry(std::move(e)), spec(entry.spec(perturbation)) {}
};

void add_provenance(Table& t, const CatalogEntry& e) {
  for (const auto& p : e.provenance)
    if (std::find(t.provenance.begin(), t.provenance.end(), p) == t.provenance.end()) t.provenance.push_back(p);
}

double log10_of(const mpz_class& v) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log10(m) + static_cast<double>(e) * std::log10(2.0);
}

// Evaluates one cell group; singular members and capability limits become flagged cells.
void fill(Table& t, Row& row, std::size_t width, const std::function<std::vector<Cell>()>& compute) {
  try {
    auto cells = compute();
    row.cells.insert(row.cells.end(), cells.begin(), cells.end());
    return;
  } catch (const SingularMatrixError&) {
    row.cells.insert(row.cells.end(), width, Cell::empty("singular"));
    if (!row.note.empty()) row.note += "; ";
    row.note += "singular member skipped";
  } catch (const CapabilityError& e) {
    row.cells.insert(row.cells.end(), width, Cell::empty("capability"));
    if (!row.note.empty()) row.note += "; ";
    row.note += e.what();
    t.partial = true;
  }
}

Table group_table(int id, std::string title, std::vector<Series> series, bool with_size, bool with_ratio,
                  const WRange& range) {
  Table t;
  t.id = id;
  t.title = std::move(title);
  std::vector<mpq_class> targets;
  for (const Series& s : series) {
    add_provenance(t, s.entry);
    if (with_size) t.columns.push_back({"M_" + s.key, "M(w) " + s.header});
    if (with_ratio) {
      t.columns.push_back({"ratio_" + s.key, "ratio " + s.header});
      targets.push_back(catalog::target_density_squared(s.entry));
    } else {
      t.columns.push_back({"delta_" + s.key, "delta " + s.header});
    }
    t.columns.push_back({"group_" + s.key, "group " + s.header});
  }
  for (long w = range.from; w <= range.to; ++w) {
    Row row;
    row.w = std::to_string(w);
    for (std::size_t i = 0; i < series.size(); ++i) {
      fill(t, row, with_size ? 3 : 2, [&] {
        const SequenceMember m = suborth::primal_member(series[i].spec, w);
        std::vector<Cell> out;
        if (with_size) out.push_back(Cell::of(suborth::code_size(m)));
        if (with_ratio)
          out.push_back(Cell::of(suborth::density_ratio(m, targets[i])));
        else
          out.push_back(Cell::of(lattice::sqrt_to_double(suborth::member_density_squared(m))));
        out.push_back(Cell::of(suborth::quotient_group(m).to_string()));
        return out;
      });
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table sphere_table(int id, std::string title, std::vector<Series> series, bool log_size, const WRange& range,
                   std::uint64_t budget) {
  Table t;
  t.id = id;
  t.title = std::move(title);
  for (const Series& s : series) {
    add_provenance(t, s.entry);
    t.columns.push_back({"distance_" + s.key, "distance " + s.header});
    if (log_size)
      t.columns.push_back({"log10M_" + s.key, "log10 M " + s.header});
    else
      t.columns.push_back({"M_" + s.key, "M " + s.header});
  }
  sphere::SearchOptions opts;
  opts.node_budget = budget;
  for (long w = range.from; w <= range.to; ++w) {
    Row row;
    row.w = std::to_string(w);
    for (const Series& s : series) {
      fill(t, row, 2, [&] {
        const sphere::TorusCode code(suborth::primal_member(s.spec, w));
        const sphere::CodeDistance d = sphere::min_distance(code, opts);
        Cell dist = Cell::of(d.value);
        if (!d.certified) {
          dist.flag = "uncertified";
          if (!row.note.empty()) row.note += "; ";
          row.note += s.key + " bracket [" + six_digits(d.lower_bound) + ", " + six_digits(d.value) + "]";
        }
        return std::vector<Cell>{dist, log_size ? Cell::of(log10_of(code.size)) : Cell::of(code.size)};
      });
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table6(const TableOptions& opts) {
  Table t;
  t.id = 6;
  t.title = "E6 through the rounded Cholesky path, integer and fractional w";
  const CatalogEntry e6 = catalog::lookup("e6");
  add_provenance(t, e6);
  const mpq_class target = catalog::target_density_squared(e6);
  t.columns = {{"part", "part"}, {"M", "M(w)"}, {"ratio", "ratio E6"}};

  std::vector<std::pair<double, std::string>> ws;
  const WRange ints = opts.range.value_or(default_range(6));
  for (long w = ints.from; w <= ints.to; ++w) ws.emplace_back(static_cast<double>(w), "integer");
  for (double w : kTable6Fractional)
    if (!opts.range || (w >= static_cast<double>(opts.range->from) && w <= static_cast<double>(opts.range->to)))
      ws.emplace_back(w, "fractional");

  for (const auto& [w, part] : ws) {
    Row row;
    row.w = full_precision(w);
    row.cells.push_back(Cell::of(part));
    fill(t, row, 2, [&] {
      const SequenceMember m = suborth::member_from_dual(suborth::rounded_dual_member(*e6.dual_base_real, w), w);
      return std::vector<Cell>{Cell::of(suborth::code_size(m)), Cell::of(suborth::density_ratio(m, target))};
    });
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string display(const Cell& c) {
  switch (c.kind) {
    case CellKind::Integer:
      return c.integer.get_str();
    case CellKind::Real:
      return six_digits(c.real);
    case CellKind::Text:
      return c.text;
    case CellKind::Empty:
      break;
  }
  return "";
}

std::string marked(const Cell& c) {
  std::string s = display(c);
  if (c.flag.empty()) return s;
  return s.empty() ? "(" + c.flag + ")" : s + " (" + c.flag + ")";
}

}  // namespace

Cell Cell::of(mpz_class v) {
  Cell c;
  c.kind = CellKind::Integer;
  c.integer = std::move(v);
  return c;
}

Cell Cell::of(double v) {
  Cell c;
  c.kind = CellKind::Real;
  c.real = v;
  return c;
}

Cell Cell::of(std::string v) {
  Cell c;
  c.kind = CellKind::Text;
  c.text = std::move(v);
  return c;
}

Cell Cell::empty(std::string flag) {
  Cell c;
  c.flag = std::move(flag);
  return c;
}

WRange parse_w_range(const std::string& text) {
  auto parse_long = [&](std::string_view s) {
    long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("bad w range: " + text);
    return v;
  };
  const std::string_view sv(text);
  const auto dots = sv.find("..");
  WRange r;
  if (dots == std::string_view::npos) {
    r.from = r.to = parse_long(sv);
  } else {
    r.from = parse_long(sv.substr(0, dots));
    r.to = parse_long(sv.substr(dots + 2));
  }
  if (r.from < 1 || r.to < r.from) throw std::invalid_argument("w range must satisfy 1 <= a <= b: " + text);
  return r;
}

WRange default_range(int id) {
  switch (id) {
    case 1:
    case 2:
    case 3:
      return {1, 10};
    case 4:
      return {2, 10};
    case 5:
      return {1, 13};
    case 6:
      return {1, 18};
    default:
      throw std::out_of_range("no table " + std::to_string(id));
  }
}

Table build_table(int id, const TableOptions& opts) {
  const WRange range = opts.range.value_or(default_range(id));
  Table t;
  switch (id) {
    case 1: {
      const CatalogEntry d3 = catalog::dn(3);
      t = group_table(1, "D3 with zero, good and cyclic perturbation",
                      {Series("zero", "P=0", d3, "zero"), Series("good", "P3", d3, "good"),
                       Series("cyclic", "C3", d3, "cyclic")},
                      true, false, range);
      break;
    }
    case 2: {
      std::vector<Series> s;
      for (std::size_t n = 3; n <= 6; ++n) {
        const std::string name = "d" + std::to_string(n);
        s.emplace_back(name, "D" + std::to_string(n), catalog::dn(n), "good");
      }
      t = group_table(2, "D3 to D6 with good perturbation", std::move(s), false, true, range);
      break;
    }
    case 3: {
      std::vector<Series> s;
      for (const CatalogEntry& e : catalog::e_series()) s.emplace_back(e.name, e.name, e, "good");
      t = group_table(3, "E7 and both E8 bases with good perturbation", std::move(s), false, true, range);
      break;
    }
    case 4: {
      const CatalogEntry a = catalog::lookup("e8-1"), b = catalog::lookup("e8-2");
      t = sphere_table(4, "Torus codes from both E8 bases",
                       {Series("e8-1_zero", "e8-1 P=0", a, "zero"), Series("e8-2_zero", "e8-2 P=0", b, "zero"),
                        Series("e8-1_good", "e8-1 P", a, "good"), Series("e8-2_good", "e8-2 P", b, "good")},
                       false, range, opts.node_budget);
      break;
    }
    case 5:
      t = sphere_table(5, "Torus codes from two Leech lattice bases",
                       {Series("leech-1", "leech-1 P", catalog::leech(1), "good"),
                        Series("leech-2", "leech-2 P=0", catalog::leech(2), "zero")},
                       true, range, opts.node_budget);
      break;
    case 6:
      t = table6(opts);
      break;
    default:
      throw std::out_of_range("no table " + std::to_string(id));
  }
  t.w_range = std::to_string(range.from) + ".." + std::to_string(range.to);
  if (id == 6) t.w_range += " plus fractional w in range";
  return t;
}

std::string full_precision(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string six_digits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::ostringstream out;
  out << "# table " << t.id << ": " << t.title << "\n";
  out << "# w range: " << t.w_range << "\n";
  for (const auto& [file, sum] : t.provenance) out << "# data: " << file << " " << sum << "\n";
  out << "# seedless: output is a deterministic function of the inputs\n";
  if (t.partial) out << "# partial: some cells hit a capability limit\n";
  out << "w";
  for (const Column& c : t.columns) out << "," << c.key;
  out << ",note\n";
  for (const Row& r : t.rows) {
    out << r.w;
    for (const Cell& c : r.cells) out << "," << csv_field(marked(c));
    out << "," << csv_field(r.note) << "\n";
  }
  return out.str();
}

std::string to_json(const Table& t) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["table"] = t.id;
  doc["title"] = t.title;
  ordered_json prov;
  prov["w_range"] = t.w_range;
  prov["seedless"] = true;
  prov["data"] = ordered_json::array();
  for (const auto& [file, sum] : t.provenance) prov["data"].push_back({{"file", file}, {"checksum", sum}});
  doc["provenance"] = prov;
  doc["partial"] = t.partial;
  doc["columns"] = ordered_json::array();
  for (const Column& c : t.columns) doc["columns"].push_back({{"key", c.key}, {"header", c.header}});
  doc["rows"] = ordered_json::array();
  for (const Row& r : t.rows) {
    ordered_json row;
    row["w"] = r.w;
    ordered_json cells = ordered_json::object();
    ordered_json printed = ordered_json::object();
    ordered_json flags = ordered_json::object();
    for (std::size_t i = 0; i < r.cells.size() && i < t.columns.size(); ++i) {
      const Cell& c = r.cells[i];
      const std::string& key = t.columns[i].key;
      switch (c.kind) {
        case CellKind::Integer:
          cells[key] = c.integer.get_str();
          break;
        case CellKind::Real:
          cells[key] = c.real;
          printed[key] = six_digits(c.real);
          break;
        case CellKind::Text:
          cells[key] = c.text;
          break;
        case CellKind::Empty:
          cells[key] = nullptr;
          break;
      }
      if (!c.flag.empty()) flags[key] = c.flag;
    }
    row["cells"] = cells;
    row["printed"] = printed;
    if (!flags.empty()) row["flags"] = flags;
    if (!r.note.empty()) row["note"] = r.note;
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string to_markdown(const Table& t) {
  std::ostringstream out;
  out << "## Table " << t.id << ": " << t.title << "\n\n";
  out << "- w range: " << t.w_range << "\n";
  for (const auto& [file, sum] : t.provenance) out << "- data: `" << file << "` " << sum << "\n";
  out << "- seedless: output is a deterministic function of the inputs\n";
  if (t.partial) out << "- partial: some cells hit a capability limit\n";
  out << "\n| w |";
  for (const Column& c : t.columns) out << " " << c.header << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
  out << "\n";
  bool notes = false;
  for (const Row& r : t.rows) {
    out << "| " << r.w << " |";
    for (const Cell& c : r.cells) out << " " << marked(c) << " |";
    out << "\n";
    notes = notes || !r.note.empty();
  }
  if (notes) {
    out << "\n";
    for (const Row& r : t.rows)
      if (!r.note.empty()) out << "- w = " << r.w << ": " << r.note << "\n";
  }
  return out.str();
}

}  // namespace sublat::tables
