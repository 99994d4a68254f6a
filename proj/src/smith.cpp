#include "fpg/smith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace fpg {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw std::invalid_argument("parse_matrix: missing dimensions");
  IntMatrix m(rows, cols);
  std::string token;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(in >> token)) throw std::invalid_argument("parse_matrix: too few entries");
      if (m(r, c).set_str(token, 10) != 0)
        throw std::invalid_argument("parse_matrix: bad entry '" + token + "'");
    }
  if (in >> token) throw std::invalid_argument("parse_matrix: trailing data");
  return m;
}

namespace {

bool less_abs(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  mpz_class best;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const mpz_class& v = m(r, c);
      if (sgn(v) == 0) continue;
      if (!found || less_abs(v, best)) {
        best = v;
        pr = r;
        pc = c;
        found = true;
        if (best == 1 || best == -1) return true;
      }
    }
  return found;
}

// Clears column t below and row t right of the pivot using Euclidean
// steps, re-selecting the smallest remainder as pivot until both are zero.
void clear_cross(IntMatrix& m, std::size_t t) {
  mpz_class q;
  for (;;) {
    bool clean = true;
    for (std::size_t r = t + 1; r < m.rows(); ++r) {
      if (sgn(m(r, t)) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
      if (sgn(q) != 0)
        for (std::size_t c = t; c < m.cols(); ++c)
          if (sgn(m(t, c)) != 0) m(r, c) -= q * m(t, c);
      if (sgn(m(r, t)) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < m.cols(); ++c) {
      if (sgn(m(t, c)) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
      if (sgn(q) != 0)
        for (std::size_t r = t; r < m.rows(); ++r)
          if (sgn(m(r, t)) != 0) m(r, c) -= q * m(r, t);
      if (sgn(m(t, c)) != 0) clean = false;
    }
    if (clean) return;
    // Move the smallest leftover in the cross onto the diagonal.
    std::size_t br = t, bc = t;
    for (std::size_t r = t + 1; r < m.rows(); ++r)
      if (sgn(m(r, t)) != 0 && less_abs(m(r, t), m(br, bc))) {
        br = r;
        bc = t;
      }
    for (std::size_t c = t + 1; c < m.cols(); ++c)
      if (sgn(m(t, c)) != 0 && less_abs(m(t, c), m(br, bc))) {
        br = t;
        bc = c;
      }
    m.swap_rows(t, br);
    m.swap_cols(t, bc);
  }
}

}  // namespace

std::vector<mpz_class> smith_normal_form(IntMatrix m) {
  std::vector<mpz_class> diag;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    m.swap_rows(t, pr);
    m.swap_cols(t, pc);
    clear_cross(m, t);
    diag.push_back(abs(m(t, t)));
  }
  // diag(a, b) is equivalent to diag(gcd, lcm); sweeping pairs yields the
  // divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g = gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      mpz_class l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

}  // namespace fpg
