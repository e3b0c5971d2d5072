#include "sublat/catalog/matrix_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sublat::catalog {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const MatrixText& m, const std::string& what) {
  throw CatalogError(m.source + ": " + what);
}

mpq_class parse_exact(const std::string& tok, const MatrixText& m) {
  try {
    const auto dot = tok.find('.');
    if (dot == std::string::npos) {
      mpq_class q(tok, 10);
      q.canonicalize();
      if (q.get_den() == 0) fail(m, "zero denominator in '" + tok + "'");
      return q;
    }
    if (tok.find_first_of("eE/") != std::string::npos) fail(m, "unsupported number '" + tok + "'");
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") fail(m, "malformed number '" + tok + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < tok.size(); ++i) den *= 10;
    mpq_class q(mpz_class(digits, 10), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(m, "malformed number '" + tok + "'");
  }
}

}  // namespace

MatrixText parse_matrix_text(std::istream& in, const std::string& source) {
  MatrixText m;
  m.source = source;
  std::string line;
  bool have_shape = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      const std::string tag = "checksum:";
      if (body.rfind(tag, 0) == 0) {
        m.checksum = trim(body.substr(tag.size()));
      } else if (m.description.empty()) {
        m.description = body;
      }
      continue;
    }
    std::istringstream ls(t);
    if (!have_shape) {
      long r = 0, c = 0;
      std::string extra;
      if (!(ls >> r >> c) || (ls >> extra) || r < 1 || c < 1) fail(m, "expected a 'rows cols' header");
      m.rows = static_cast<std::size_t>(r);
      m.cols = static_cast<std::size_t>(c);
      have_shape = true;
      continue;
    }
    std::string tok;
    std::size_t count = 0;
    while (ls >> tok) {
      m.tokens.push_back(tok);
      ++count;
    }
    if (count != m.cols) fail(m, "row has " + std::to_string(count) + " entries, expected " + std::to_string(m.cols));
  }
  if (!have_shape) fail(m, "missing 'rows cols' header");
  if (m.tokens.size() != m.rows * m.cols) fail(m, "expected " + std::to_string(m.rows) + " rows");
  if (m.checksum && *m.checksum != checksum(m))
    fail(m, "checksum mismatch (file says " + *m.checksum + ", content is " + checksum(m) + ")");
  return m;
}

MatrixText read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open matrix file " + path.string());
  return parse_matrix_text(in, path.string());
}

exact::IntMatrix to_int_matrix(const MatrixText& m) {
  exact::IntMatrix a(m.rows, m.cols);
  for (std::size_t k = 0; k < m.tokens.size(); ++k) {
    const mpq_class q = parse_exact(m.tokens[k], m);
    if (q.get_den() != 1) fail(m, "entry '" + m.tokens[k] + "' is not an integer");
    a(k / m.cols, k % m.cols) = q.get_num();
  }
  return a;
}

exact::RatMatrix to_rat_matrix(const MatrixText& m) {
  exact::RatMatrix a(m.rows, m.cols);
  for (std::size_t k = 0; k < m.tokens.size(); ++k) a(k / m.cols, k % m.cols) = parse_exact(m.tokens[k], m);
  return a;
}

std::string canonical_text(const MatrixText& m) {
  std::string s = std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) s += ' ';
      s += m.tokens[i * m.cols + j];
    }
    s += '\n';
  }
  return s;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string checksum(const MatrixText& m) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical_text(m))));
  return std::string("fnv1a64:") + buf;
}

void write_matrix(std::ostream& out, const exact::IntMatrix& a, const std::string& description) {
  MatrixText m;
  m.rows = a.rows();
  m.cols = a.cols();
  for (const auto& x : a.entries()) m.tokens.push_back(x.get_str());
  if (!description.empty()) out << "# " << description << "\n";
  out << "# checksum: " << checksum(m) << "\n" << canonical_text(m);
}

}  // namespace sublat::catalog
