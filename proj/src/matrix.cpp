#include "gfcech/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gfcech {

namespace {

constexpr int kSparseThreshold = 512;

/* Row echelon on sparse rows, rank only; used above the dense size threshold. */
int sparse_rank(const Matrix& m) {
  using Row = std::map<int, Scalar>;
  std::vector<Row> rows;
  for (int r = 0; r < m.rows(); ++r) {
    Row row;
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) row.emplace(c, m.at(r, c));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::map<int, Row> pivots;
  int rk = 0;
  for (auto& row : rows) {
    Row cur = std::move(row);
    while (!cur.empty()) {
      int lead = cur.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Scalar inv = cur.begin()->second.inverse();
        for (auto& [c, v] : cur) v = v * inv;
        pivots.emplace(lead, std::move(cur));
        ++rk;
        break;
      }
      Scalar factor = cur.begin()->second;
      for (const auto& [c, v] : it->second) {
        auto jt = cur.find(c);
        Scalar delta = factor * v;
        if (jt == cur.end()) {
          delta = -delta;
          if (!delta.is_zero()) cur.emplace(c, std::move(delta));
        } else {
          jt->second = jt->second - delta;
          if (jt->second.is_zero()) cur.erase(jt);
        }
      }
    }
  }
  return rk;
}

struct Rref {
  Matrix m;
  std::vector<int> pivot_cols;
};

Rref rref(Matrix m) {
  Rref out;
  int lead_row = 0;
  for (int c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    int p = -1;
    for (int r = lead_row; r < m.rows(); ++r) {
      if (!m.at(r, c).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != lead_row)
      for (int cc = 0; cc < m.cols(); ++cc) std::swap(m.at(p, cc), m.at(lead_row, cc));
    Scalar inv = m.at(lead_row, c).inverse();
    for (int cc = 0; cc < m.cols(); ++cc) m.at(lead_row, cc) = m.at(lead_row, cc) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c);
      for (int cc = 0; cc < m.cols(); ++cc) m.at(r, cc) = m.at(r, cc) - f * m.at(lead_row, cc);
    }
    out.pivot_cols.push_back(c);
    ++lead_row;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

Matrix::Matrix(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + v * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hcat row mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() > kSparseThreshold || m.cols() > kSparseThreshold) return sparse_rank(m);
  return static_cast<int>(rref(m).pivot_cols.size());
}

Matrix kernel_basis(const Matrix& m) {
  if (m.cols() == 0) return Matrix(m.field(), 0, 0);
  if (m.rows() == 0) return Matrix::identity(m.field(), m.cols());
  Rref r = rref(m);
  std::vector<int> free_cols;
  std::size_t pi = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c)
      ++pi;
    else
      free_cols.push_back(c);
  }
  Matrix k(m.field(), m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.at(fc, static_cast<int>(j)) = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      k.at(r.pivot_cols[i], static_cast<int>(j)) = -r.m.at(static_cast<int>(i), fc);
  }
  return k;
}

int rank_modulo(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows()) throw std::invalid_argument("rank_modulo row mismatch");
  return rank(x.hcat(y)) - rank(y);
}

std::optional<std::vector<Scalar>> solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve shape mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  for (int c : r.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  std::vector<Scalar> z(a.cols(), Scalar::zero(a.field()));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) z[r.pivot_cols[i]] = r.m.at(static_cast<int>(i), a.cols());
  return z;
}

}  // namespace gfcech
