#include "lcs/f2.hpp"

#include <algorithm>
#include <bit>

namespace lcs {

F2Vector F2Vector::from_string(std::string_view bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw ParseError("bit vector may contain only 0/1 characters");
  }
  return v;
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
  if (len_ != o.len_) throw DimensionMismatch("vector length mismatch in xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool F2Vector::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool F2Vector::dot(const F2Vector& o) const { return dot_int(o) & 1; }

int F2Vector::dot_int(const F2Vector& o) const {
  if (len_ != o.len_) throw DimensionMismatch("vector length mismatch in dot");
  int n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    n += std::popcount(words_[i] & o.words_[i]);
  return n;
}

std::size_t F2Vector::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool F2Vector::lex_less(const F2Vector& o) const {
  if (len_ != o.len_) throw DimensionMismatch("vector length mismatch in compare");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t d = words_[i] ^ o.words_[i];
    if (d) {
      // The lowest differing bit decides; 0 beats 1.
      return ((words_[i] >> std::countr_zero(d)) & 1u) == 0;
    }
  }
  return false;
}

F2Vector F2Vector::concat(const F2Vector& tail) const {
  F2Vector r(len_ + tail.len_);
  for (std::size_t i = 0; i < len_; ++i) r.set(i, get(i));
  for (std::size_t i = 0; i < tail.len_; ++i) r.set(len_ + i, tail.get(i));
  return r;
}

F2Vector F2Vector::slice(std::size_t begin, std::size_t end) const {
  F2Vector r(end - begin);
  for (std::size_t i = begin; i < end; ++i) r.set(i - begin, get(i));
  return r;
}

std::string F2Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector>& rows) {
  F2Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

F2Matrix F2Matrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<F2Vector> vs;
  vs.reserve(rows.size());
  for (const auto& s : rows) vs.push_back(F2Vector::from_string(s));
  return from_rows(vs);
}

void F2Matrix::set_row(std::size_t i, const F2Vector& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length mismatch in set_row");
  data_[i] = v;
}

void F2Matrix::add_col(std::size_t dst, std::size_t src) {
  for (std::size_t i = 0; i < rows_; ++i)
    if (data_[i].get(src)) data_[i].flip(dst);
}

void F2Matrix::swap_cols(std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) {
    bool a = data_[r].get(i), b = data_[r].get(j);
    data_[r].set(i, b);
    data_[r].set(j, a);
  }
}

bool F2Matrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.is_zero()) return false;
  return true;
}

bool F2Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

F2Matrix F2Matrix::transposed() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

void F2Matrix::paste(std::size_t i, std::size_t j, const F2Matrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) set(i + r, j + c, b.get(r, c));
}

F2Matrix F2Matrix::block(std::size_t i, std::size_t j, std::size_t h, std::size_t w) const {
  F2Matrix b(h, w);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < w; ++c) b.set(r, c, get(i + r, j + c));
  return b;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("inner dimension mismatch in multiply");
  F2Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    F2Vector acc(b.cols());
    for (std::size_t t = 0; t < a.cols(); ++t)
      if (a.get(i, t)) acc ^= b.row(t);
    c.set_row(i, acc);
  }
  return c;
}

F2Vector operator*(const F2Vector& v, const F2Matrix& a) {
  if (v.size() != a.rows()) throw DimensionMismatch("vector/matrix dimension mismatch");
  F2Vector acc(a.cols());
  for (std::size_t t = 0; t < a.rows(); ++t)
    if (v.get(t)) acc ^= a.row(t);
  return acc;
}

RowReduceResult row_reduce(const F2Matrix& a) {
  RowReduceResult res{a, {}, F2Matrix::identity(a.rows())};
  F2Matrix& r = res.rref;
  F2Matrix& t = res.transform;
  std::size_t cur = 0;
  for (std::size_t col = 0; col < a.cols() && cur < a.rows(); ++col) {
    std::size_t piv = cur;
    while (piv < a.rows() && !r.get(piv, col)) ++piv;
    if (piv == a.rows()) continue;
    r.swap_rows(cur, piv);
    t.swap_rows(cur, piv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != cur && r.get(i, col)) {
        r.add_row(i, cur);
        t.add_row(i, cur);
      }
    }
    res.pivots.push_back(col);
    ++cur;
  }
  return res;
}

std::size_t rank(const F2Matrix& a) { return row_reduce(a).pivots.size(); }

F2Matrix inverse(const F2Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse requires a square matrix");
  auto rr = row_reduce(a);
  if (rr.pivots.size() < a.rows()) throw SingularMatrix("matrix is singular over GF(2)");
  return rr.transform;
}

std::optional<AffineSolution> solve_affine(const F2Matrix& a, const F2Vector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("rhs length mismatch in solve_affine");
  auto rr = row_reduce(a);
  // y = transform * b, entrywise dot of transform rows with b.
  F2Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y.set(i, rr.transform.row(i).dot(b));
  for (std::size_t i = rr.pivots.size(); i < a.rows(); ++i)
    if (y.get(i)) return std::nullopt;

  AffineSolution sol;
  sol.particular = F2Vector(a.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    sol.particular.set(rr.pivots[i], y.get(i));

  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    F2Vector k(a.cols());
    k.set(f, true);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      if (rr.rref.get(i, f)) k.set(rr.pivots[i], true);
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

F2Vector lex_min_affine(const AffineSolution& sol) {
  // Bring the kernel basis into row-echelon form, then clear the pivot bits
  // of the particular solution in pivot order. Leading bit = lowest index.
  std::vector<F2Vector> basis = sol.kernel_basis;
  std::vector<std::size_t> lead;
  std::vector<F2Vector> ech;
  for (auto v : basis) {
    for (std::size_t i = 0; i < ech.size(); ++i)
      if (!v.is_zero() && v.get(lead[i])) v ^= ech[i];
    if (v.is_zero()) continue;
    std::size_t l = 0;
    while (!v.get(l)) ++l;
    // keep echelon rows sorted by leading index
    std::size_t pos = 0;
    while (pos < lead.size() && lead[pos] < l) ++pos;
    lead.insert(lead.begin() + pos, l);
    ech.insert(ech.begin() + pos, std::move(v));
  }
  // second pass: full reduction so each leading bit appears once
  for (std::size_t i = 0; i < ech.size(); ++i)
    for (std::size_t j = i + 1; j < ech.size(); ++j)
      if (ech[i].get(lead[j])) ech[i] ^= ech[j];

  F2Vector best = sol.particular;
  for (std::size_t i = 0; i < ech.size(); ++i)
    if (best.get(lead[i])) best ^= ech[i];
  return best;
}

}  // namespace lcs
