// Acceptance report: one PASS/FAIL line per criterion, with the reference
// tables compared cell by cell. Details go to stdout above the summary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "oracles.hpp"
#include "properties.hpp"
#include "reference_values.hpp"
#include "sublat/catalog/catalog.hpp"
#include "sublat/sphere/torus_code.hpp"
#include "sublat/suborth/sequence.hpp"
#include "sublat/tables/tables.hpp"

namespace {

using namespace sublat;
using tables::Cell;
using tables::Table;

struct Verdict {
  int id = 0;
  bool pass = false;
  std::string summary;
  double seconds = 0;
};

const Cell& cell(const Table& t, std::size_t row, const std::string& key) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i].key == key) return t.rows.at(row).cells.at(i);
  throw std::out_of_range("no column " + key);
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

class Report {
 public:
  void detail(const std::string& line) { std::cout << "  " << line << "\n"; }

  Verdict run(int id, const std::string& title, const std::function<Verdict()>& body) {
    std::cout << "criterion " << id << ": " << title << "\n";
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v.pass = false;
      v.summary = std::string("error: ") + e.what();
    }
    v.id = id;
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "  -> " << (v.pass ? "PASS" : "FAIL") << " (" << fmt("%.2f", v.seconds) << " s)\n\n";
    verdicts_.push_back(v);
    return v;
  }

  const std::vector<Verdict>& verdicts() const { return verdicts_; }

 private:
  std::vector<Verdict> verdicts_;
};

Report report;

Verdict criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const Table t = tables::build_table(1);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* keys[] = {"zero", "good", "cyclic"};
  std::size_t ok = 0, total = 0;
  for (std::size_t w = 0; w < 10; ++w)
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& ref = reference::kTable1[w][k];
      const Cell& m = cell(t, w, std::string("M_") + keys[k]);
      const Cell& g = cell(t, w, std::string("group_") + keys[k]);
      total += 2;
      const bool m_ok = m.integer == mpz_class(ref.size);
      const bool g_ok = g.text == ref.group;
      ok += m_ok + g_ok;
      if (!m_ok) report.detail("w=" + t.rows[w].w + " " + keys[k] + ": M " + m.integer.get_str() + " vs " + ref.size);
      if (!g_ok) report.detail("w=" + t.rows[w].w + " " + keys[k] + ": group " + g.text + " vs " + std::string(ref.group));
    }
  Verdict v;
  v.pass = ok == total && secs < 1.0;
  v.summary = std::to_string(ok) + "/" + std::to_string(total) + " sizes and groups exact, built in " + fmt("%.3f", secs) + " s";
  return v;
}

Verdict criterion2() {
  const auto start = std::chrono::steady_clock::now();
  const Table t = tables::build_table(1);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* keys[] = {"zero", "good", "cyclic"};
  std::size_t ok = 0;
  double worst = 0;
  bool first_column = true;
  for (std::size_t w = 0; w < 10; ++w) {
    for (std::size_t k = 0; k < 3; ++k) {
      const double got = cell(t, w, std::string("delta_") + keys[k]).real;
      const double diff = std::abs(got - reference::kTable1[w][k].value);
      worst = std::max(worst, diff);
      if (diff <= 1e-4)
        ++ok;
      else
        report.detail("w=" + t.rows[w].w + " " + keys[k] + ": " + tables::six_digits(got) + " vs " +
                      fmt("%g", reference::kTable1[w][k].value));
    }
    first_column = first_column && tables::six_digits(cell(t, w, "delta_zero").real) == "0.176777";
  }
  Verdict v;
  v.pass = ok == 30 && first_column && secs < 5.0;
  v.summary = std::to_string(ok) + "/30 densities within 1e-4 (max |diff| " + fmt("%.2e", worst) + "), P=0 column " +
              (first_column ? "0.176777 throughout" : "not constant");
  return v;
}

Verdict ratio_table(int id, std::size_t columns, const std::vector<std::string>& keys,
                    const std::function<const reference::GroupCell&(std::size_t, std::size_t)>& ref, double limit_s,
                    const std::string& exact_one_key) {
  const auto start = std::chrono::steady_clock::now();
  const Table t = tables::build_table(id);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t ratios = 0, groups = 0;
  double worst = 0, one_dev = 0;
  for (std::size_t w = 0; w < 10; ++w)
    for (std::size_t k = 0; k < columns; ++k) {
      const double got = cell(t, w, "ratio_" + keys[k]).real;
      const double diff = std::abs(got - ref(w, k).value);
      worst = std::max(worst, diff);
      if (diff <= 5e-4)
        ++ratios;
      else
        report.detail("w=" + t.rows[w].w + " " + keys[k] + ": ratio " + tables::six_digits(got) + " vs " +
                      fmt("%g", ref(w, k).value));
      const std::string& g = cell(t, w, "group_" + keys[k]).text;
      if (g == ref(w, k).group)
        ++groups;
      else
        report.detail("w=" + t.rows[w].w + " " + keys[k] + ": group " + g + " vs " + std::string(ref(w, k).group));
      if (keys[k] == exact_one_key) one_dev = std::max(one_dev, std::abs(got - 1.0));
    }
  const std::size_t total = 10 * columns;
  Verdict v;
  v.pass = ratios == total && groups == total && secs < limit_s && one_dev <= 1e-9;
  v.summary = std::to_string(ratios) + "/" + std::to_string(total) + " ratios within 5e-4 (max |diff| " +
              fmt("%.2e", worst) + "), " + std::to_string(groups) + "/" + std::to_string(total) + " groups exact";
  if (!exact_one_key.empty()) v.summary += ", " + exact_one_key + " max |ratio - 1| " + fmt("%.1e", one_dev);
  v.summary += ", " + fmt("%.2f", secs) + " s";
  return v;
}

Verdict criterion5() {
  const auto start = std::chrono::steady_clock::now();
  const Table t = tables::build_table(4);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* keys[] = {"e8-1_zero", "e8-2_zero", "e8-1_good", "e8-2_good"};
  std::size_t pairs = 0, sizes = 0, below = 0;
  for (std::size_t w = 0; w < 9; ++w)
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& ref = reference::kTable4[w][k];
      const Cell& d = cell(t, w, std::string("distance_") + keys[k]);
      const Cell& m = cell(t, w, std::string("M_") + keys[k]);
      const bool m_ok = m.integer == mpz_class(ref.size);
      const bool d_ok = d.flag.empty() && std::abs(d.real - ref.distance) <= 1e-5;
      sizes += m_ok;
      pairs += m_ok && d_ok;
      if (!d_ok && d.flag.empty() && d.real < ref.distance) ++below;
      if (!m_ok || !d_ok)
        report.detail("w=" + t.rows[w].w + " " + keys[k] + ": M " + m.integer.get_str() + (m_ok ? " (match)" : " vs " + std::string(ref.size)) +
                      ", distance " + tables::six_digits(d.real) + (d.flag.empty() ? " certified" : " " + d.flag) + " vs " +
                      fmt("%.6f", ref.distance));
    }
  // Exhaustive coset check on every code with M <= 1e5.
  std::size_t oracle_cases = 0, oracle_ok = 0;
  for (const auto& [name, pert] : std::vector<std::pair<std::string, std::string>>{
           {"e8-1", "zero"}, {"e8-2", "zero"}, {"e8-1", "good"}, {"e8-2", "good"}}) {
    const suborth::SequenceSpec spec = catalog::lookup(name).spec(pert);
    for (long w = 2; w <= 10; ++w) {
      const sphere::TorusCode code(suborth::primal_member(spec, w));
      if (code.size > 100000) break;
      ++oracle_cases;
      const double mine = sphere::min_distance(code).value;
      const double brute = std::sqrt(static_cast<double>(oracle::coset_min_distance_sq(code.member.primal, code.modulus)));
      const bool agree = std::abs(mine - brute) <= 1e-12;
      oracle_ok += agree;
      report.detail("brute force " + name + " " + pert + " w=" + std::to_string(w) + " (M=" + code.size.get_str() +
                    "): " + fmt("%.6f", brute) + (agree ? " agrees" : " DISAGREES"));
    }
  }
  Verdict v;
  v.pass = pairs == 36 && oracle_ok == oracle_cases && secs < 900;
  v.summary = std::to_string(pairs) + "/36 (distance, M) pairs match, " + std::to_string(sizes) + "/36 M exact, " +
              std::to_string(below) + " mismatches lie below the reference value, brute force " +
              std::to_string(oracle_ok) + "/" + std::to_string(oracle_cases) + " agree, " + fmt("%.2f", secs) + " s";
  return v;
}

Verdict criterion6() {
  const auto start = std::chrono::steady_clock::now();
  const Table t = tables::build_table(5);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* keys[] = {"leech-1", "leech-2"};
  std::size_t head_ok[2] = {0, 0}, rest_ok[2] = {0, 0};
  bool brackets = true;
  for (std::size_t w = 0; w < t.rows.size(); ++w)
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& ref = reference::kTable5[w][k];
      const Cell& d = cell(t, w, std::string("distance_") + keys[k]);
      const double lm = cell(t, w, std::string("log10M_") + keys[k]).real;
      bool ok = std::abs(lm - ref.log10_size) <= 1e-3;
      if (d.flag.empty()) {
        ok = ok && std::abs(d.real - ref.distance) <= 1e-4;
      } else {
        const std::string& note = t.rows[w].note;
        report.detail("w=" + t.rows[w].w + " " + keys[k] + " uncertified: " + note);
        brackets = brackets && d.real >= ref.distance - 1e-6;
        ok = false;
      }
      (w < 3 ? head_ok : rest_ok)[k] += ok;
      report.detail("w=" + t.rows[w].w + " " + keys[k] + ": log10 M " + fmt("%.4f", lm) + " vs " +
                    fmt("%.4f", ref.log10_size) + ", distance " + tables::six_digits(d.real) + " vs " +
                    fmt("%g", ref.distance) + (ok ? "  match" : "  differ"));
    }
  Verdict v;
  v.pass = head_ok[0] == 3 && head_ok[1] == 3 && brackets && secs < 7200;
  v.summary = "first three rows: leech-1 " + std::to_string(head_ok[0]) + "/3, leech-2 " + std::to_string(head_ok[1]) +
              "/3; remaining rows: leech-1 " + std::to_string(rest_ok[0]) + "/10, leech-2 " +
              std::to_string(rest_ok[1]) + "/10; " + fmt("%.1f", secs) + " s";
  return v;
}

Verdict criterion7() {
  const Table t = tables::build_table(6);
  const catalog::CatalogEntry e6 = catalog::lookup("e6");
  const lattice::RealMatrix& base = *e6.dual_base_real;
  const std::size_t n = base.rows;
  // Rounding moves each entry of w B* by at most 1/2, so every entry of
  // G*_w / w^2 - G* is at most K / w with K below.
  double k_bound = static_cast<double>(n) / 4;
  {
    double row_max = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += std::abs(base(i, j));
      row_max = std::max(row_max, s);
    }
    k_bound += row_max;
  }
  std::size_t m_match = 0, r_match = 0, rows = 0;
  bool monotone = true, bounded = true, linear = true;
  mpz_class prev_m = 0;
  double worst_linear = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const bool integer_part = cell(t, r, "part").text == "integer";
    const double w = std::stod(t.rows[r].w);
    const mpz_class m = cell(t, r, "M").integer;
    const double ratio = cell(t, r, "ratio").real;
    const reference::RoundedCell* ref = nullptr;
    for (const auto& c : integer_part ? reference::kTable6Integer : reference::kTable6Fractional)
      if (c.w == w) ref = &c;
    ++rows;
    const bool mm = ref && m == mpz_class(static_cast<long>(ref->size));
    const bool rm = ref && std::abs(ratio - ref->ratio) <= 5e-4;
    m_match += mm;
    r_match += rm;
    report.detail(std::string(integer_part ? "integer " : "fractional ") + "w=" + t.rows[r].w + ": M " + m.get_str() +
                  " vs " + (ref ? std::to_string(ref->size) : "?") + ", ratio " + tables::six_digits(ratio) + " vs " +
                  (ref ? fmt("%g", ref->ratio) : "?") + (mm && rm ? "" : "  differ"));
    if (integer_part) {
      monotone = monotone && m >= prev_m;
      prev_m = m;
    }
    bounded = bounded && ratio <= 1 + 1e-12 && ratio > 0;
    const exact::IntMatrix dual = suborth::rounded_dual_member(base, w);
    double err = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double gw = 0, g = 0;
        for (std::size_t c = 0; c < n; ++c) {
          gw += dual(i, c).get_d() * dual(j, c).get_d();
          g += base(i, c) * base(j, c);
        }
        err = std::max(err, std::abs(gw / (w * w) - g));
      }
    worst_linear = std::max(worst_linear, w * err);
    linear = linear && w * err <= k_bound * (1 + 1e-9);
  }
  report.detail("w * max|G*_w / w^2 - G*| peaks at " + fmt("%.4f", worst_linear) + " (bound " + fmt("%.4f", k_bound) + ")");
  Verdict v;
  v.pass = monotone && bounded && linear;
  v.summary = std::string("M nondecreasing on integer w: ") + (monotone ? "yes" : "no") +
              ", ratios in (0, 1]: " + (bounded ? "yes" : "no") + ", linear error bound: " + (linear ? "yes" : "no") +
              "; side by side " + std::to_string(m_match) + "/" + std::to_string(rows) + " M and " +
              std::to_string(r_match) + "/" + std::to_string(rows) + " ratios agree";
  return v;
}

Verdict criterion8() {
  std::size_t passed = 0, required = 0;
  double total = 0;
  bool extras_ok = true;
  for (const props::Suite& s : props::suites()) {
    const props::Outcome o = props::run(s.name);
    total += o.seconds;
    const bool ok = o.ok() && o.cases >= 200;
    report.detail(std::string(s.required ? "[required] " : "[extra]    ") + s.name + ": " + std::to_string(o.cases) +
                  " cases, " + std::to_string(o.failures) + " failures, " + fmt("%.3f", o.seconds) + " s" +
                  (o.first_failure.empty() ? "" : " (" + o.first_failure + ")"));
    if (s.required) {
      ++required;
      passed += ok;
    } else {
      extras_ok = extras_ok && ok;
    }
  }
  Verdict v;
  v.pass = passed == required && extras_ok && total < 60;
  v.summary = std::to_string(passed) + "/" + std::to_string(required) + " required suites pass (>= 200 cases each), " +
              "extra suites " + (extras_ok ? "pass" : "FAIL") + ", " + fmt("%.2f", total) + " s total";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance report for criteria 1..8"};
  std::vector<int> expect_fail;
  std::vector<int> only;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail; exit 0 only if exactly these fail")
      ->delimiter(',');
  app.add_option("--only", only, "Run a subset of criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  if (wanted(1)) report.run(1, "Table 1 sizes and groups", criterion1);
  if (wanted(2)) report.run(2, "Table 1 densities", criterion2);
  if (wanted(3))
    report.run(3, "Table 2 ratios and groups", [] {
      return ratio_table(2, 4, {"d3", "d4", "d5", "d6"},
                         [](std::size_t w, std::size_t k) -> const reference::GroupCell& { return reference::kTable2[w][k]; },
                         30, "d4");
    });
  if (wanted(4))
    report.run(4, "Table 3 ratios and groups", [] {
      return ratio_table(3, 3, {"e7", "e8-1", "e8-2"},
                         [](std::size_t w, std::size_t k) -> const reference::GroupCell& { return reference::kTable3[w][k]; },
                         600, "");
    });
  if (wanted(5)) report.run(5, "Table 4 torus codes in dimension 8", criterion5);
  if (wanted(6)) report.run(6, "Table 5 torus codes in dimension 24", criterion6);
  if (wanted(7)) report.run(7, "Table 6 rounded E6 path", criterion7);
  if (wanted(8)) report.run(8, "property suites", criterion8);

  std::cout << "summary\n";
  std::set<int> failed;
  for (const Verdict& v : report.verdicts()) {
    std::cout << "criterion " << v.id << " " << (v.pass ? "PASS" : "FAIL") << ": " << v.summary << "\n";
    if (!v.pass) failed.insert(v.id);
  }
  std::set<int> expected;
  for (int id : expect_fail)
    if (wanted(id)) expected.insert(id);
  if (failed == expected) {
    if (!expected.empty()) std::cout << "failures match the expected set\n";
    return 0;
  }
  std::cout << "failures differ from the expected set\n";
  return 1;
}
