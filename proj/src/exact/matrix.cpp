#include "sublat/exact/matrix.hpp"

#include <ostream>
#include <sstream>

namespace sublat::exact {

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = mpq_class(a(i, j));
  return r;
}

bool is_integral(const RatMatrix& a) {
  for (const auto& x : a.entries())
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1) throw ConsistencyError("matrix entry is not an integer");
      r(i, j) = a(i, j).get_num();
    }
  }
  return r;
}

mpz_class common_denominator(const RatMatrix& a) {
  mpz_class l = 1;
  for (const auto& x : a.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

IntVector row_times(std::span<const mpz_class> v, const IntMatrix& a) {
  if (v.size() != a.rows()) throw DimensionError("vector-matrix product shape mismatch");
  IntVector out(a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_addmul(out[j].get_mpz_t(), v[k].get_mpz_t(), a(k, j).get_mpz_t());
  }
  return out;
}

mpz_class dot(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

mpz_class max_abs(const IntMatrix& a) {
  mpz_class m = 0;
  for (const auto& x : a.entries())
    if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
  return m;
}

mpq_class max_abs(const RatMatrix& a) {
  mpq_class m = 0;
  for (const auto& x : a.entries()) {
    mpq_class ax = abs(x);
    if (ax > m) m = ax;
  }
  return m;
}

namespace {

template <class T>
std::string render(const Matrix<T>& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const IntMatrix& a) { return render(a); }
std::string to_string(const RatMatrix& a) { return render(a); }
std::ostream& operator<<(std::ostream& os, const IntMatrix& a) { return os << render(a); }
std::ostream& operator<<(std::ostream& os, const RatMatrix& a) { return os << render(a); }

}  // namespace sublat::exact
