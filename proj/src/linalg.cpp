#include "subcode/linalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace subcode {

Matrix::Matrix(const GaloisField& f, int rows, int cols)
    : field_(&f), rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim)
    throw std::invalid_argument("matrix shape out of range");
}

Matrix Matrix::identity(const GaloisField& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const GaloisField& f, int cols, const std::vector<std::vector<Fq>>& rows) {
  Matrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Fq> r) {
  if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
  if (rows_ >= kMaxDim) throw std::invalid_argument("too many rows");
  for (Fq x : r) {
    if (x >= field_->order()) throw std::invalid_argument("entry is not a field element");
  }
  entries_.insert(entries_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  const GaloisField& f = *field_;
  Matrix out(f, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Fq a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, rhs(k, j)));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_->add(entries_[i], rhs.entries_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_->sub(entries_[i], rhs.entries_[i]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(*field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out = top;
  for (int i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (int i = 0; i < left.rows(); ++i) {
    for (int j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (int j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

namespace {

// Gauss-Jordan on a row-major buffer; returns pivot columns. Rows beyond the
// rank are left zero.
int reduce(const GaloisField& f, Fq* a, int rows, int cols, int* pivots, bool full_reduce) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a[i * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    const Fq inv = f.inv(a[r * cols + c]);
    if (inv != 1)
      for (int j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
    for (int i = full_reduce ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const Fq t = a[i * cols + c];
      if (t == 0) continue;
      const Fq nt = f.neg(t);
      for (int j = c; j < cols; ++j) a[i * cols + j] = f.add(a[i * cols + j], f.mul(nt, a[r * cols + j]));
    }
    if (pivots) pivots[r] = c;
    ++r;
  }
  return r;
}

}  // namespace

Rref rref(Matrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<Fq> buf(m.entries().begin(), m.entries().end());
  std::array<int, kMaxDim> piv{};
  const int r = rows == 0 ? 0 : reduce(m.field(), buf.data(), rows, cols, piv.data(), true);
  Rref out;
  out.cm = Matrix(m.field(), 0, cols);
  for (int i = 0; i < r; ++i) out.cm.append_row(std::span<const Fq>(buf.data() + i * cols, cols));
  out.pivots.assign(piv.begin(), piv.begin() + r);
  return out;
}

int rank_in_place(const GaloisField& f, Fq* data, int rows, int cols) {
  return reduce(f, data, rows, cols, nullptr, false);
}

int rank(const Matrix& m) {
  if (m.rows() == 0) return 0;
  std::array<Fq, kMaxDim * kMaxDim> buf{};
  std::copy(m.entries().begin(), m.entries().end(), buf.begin());
  return rank_in_place(m.field(), buf.data(), m.rows(), m.cols());
}

bool is_canonical(const Matrix& m) {
  int prev = -1;
  for (int i = 0; i < m.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0 || p <= prev || m(i, p) != 1) return false;
    for (int k = 0; k < m.rows(); ++k)
      if (k != i && m(k, p) != 0) return false;
    prev = p;
  }
  return true;
}

Matrix canonical_product_check(const Matrix& z, const Matrix& u) {
  if (z.cols() != u.rows()) throw std::invalid_argument("canonical product: cols(Z) != rows(U)");
  Matrix p = z.rows() == 0 ? Matrix(u.field(), 0, u.cols()) : z * u;
  if (!is_canonical(p)) throw std::logic_error("product of canonical matrices is not canonical");
  return p;
}

void for_each_canonical_matrix(const GaloisField& f, int rows, int cols,
                               const std::function<void(const Matrix&)>& fn) {
  if (rows < 0 || rows > cols) return;
  const int q = f.order();
  std::vector<int> piv(rows);
  for (int i = 0; i < rows; ++i) piv[i] = i;
  std::vector<std::pair<int, int>> free;
  while (true) {
    // Free positions: row i, non-pivot columns right of its pivot.
    free.clear();
    for (int i = 0; i < rows; ++i) {
      int k = i + 1;
      for (int j = piv[i] + 1; j < cols; ++j) {
        if (k < rows && piv[k] == j) {
          ++k;
          continue;
        }
        free.emplace_back(i, j);
      }
    }
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) m(i, piv[i]) = 1;
    std::vector<int> digit(free.size(), 0);
    while (true) {
      fn(m);
      int pos = static_cast<int>(free.size()) - 1;
      while (pos >= 0 && digit[pos] == q - 1) {
        digit[pos] = 0;
        m(free[pos].first, free[pos].second) = 0;
        --pos;
      }
      if (pos < 0) break;
      ++digit[pos];
      m(free[pos].first, free[pos].second) = static_cast<Fq>(digit[pos]);
    }
    // Next pivot tuple in lexicographic order.
    int i = rows - 1;
    while (i >= 0 && piv[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < rows; ++j) piv[j] = piv[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const GaloisField& f, int v) : cm_(f, 0, v) {}

Subspace Subspace::span(const Matrix& m) {
  Rref r = rref(m);
  Subspace s;
  s.cm_ = std::move(r.cm);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::from_canonical(Matrix cm) {
  if (!is_canonical(cm)) throw std::invalid_argument("matrix is not in canonical form");
  Subspace s;
  for (int i = 0; i < cm.rows(); ++i)
    for (int j = 0; j < cm.cols(); ++j)
      if (cm(i, j) != 0) {
        s.pivots_.push_back(j);
        break;
      }
  s.cm_ = std::move(cm);
  return s;
}

Subspace Subspace::full(const GaloisField& f, int v) { return from_canonical(Matrix::identity(f, v)); }

bool Subspace::contains_vector(std::span<const Fq> x) const {
  // Reduce x against the canonical rows; x lies in the span iff the residue
  // vanishes, i.e. iff x equals the combination given by its pivot entries.
  const GaloisField& f = field();
  std::array<Fq, kMaxDim> acc{};
  for (int i = 0; i < dim(); ++i) {
    const Fq c = x[pivots_[i]];
    if (c == 0) continue;
    for (int j = 0; j < ambient(); ++j) acc[j] = f.add(acc[j], f.mul(c, cm_(i, j)));
  }
  for (int j = 0; j < ambient(); ++j)
    if (acc[j] != x[j]) return false;
  return true;
}

bool Subspace::contains(const Subspace& w) const {
  if (w.ambient() != ambient()) throw std::invalid_argument("ambient mismatch");
  for (int i = 0; i < w.dim(); ++i)
    if (!contains_vector(w.cm().row(i))) return false;
  return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  const auto ea = a.cm_.entries();
  const auto eb = b.cm_.entries();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t Subspace::hash() const {
  std::size_t h = static_cast<std::size_t>(ambient()) * 1315423911u + static_cast<std::size_t>(dim());
  for (Fq x : cm_.entries()) h = h * 31 + x;
  return h;
}

std::string Subspace::to_string() const {
  if (dim() == 0) return "-";
  std::string s;
  for (int i = 0; i < dim(); ++i) {
    if (i) s += ',';
    for (int j = 0; j < ambient(); ++j) s += static_cast<char>('0' + cm_(i, j));
  }
  return s;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
  return Subspace::span(vstack(u.cm(), w.cm()));
}

int join_dim(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
  const int rows = u.dim() + w.dim();
  const int cols = u.ambient();
  if (rows == 0) return 0;
  std::array<Fq, 2 * kMaxDim * kMaxDim> buf{};
  const auto eu = u.cm().entries();
  const auto ew = w.cm().entries();
  std::copy(eu.begin(), eu.end(), buf.begin());
  std::copy(ew.begin(), ew.end(), buf.begin() + eu.size());
  return rank_in_place(u.field(), buf.data(), rows, cols);
}

Subspace dual(const Subspace& u) {
  const GaloisField& f = u.field();
  const int v = u.ambient();
  const auto& piv = u.pivots();
  Matrix k(f, 0, v);
  std::vector<Fq> row(v);
  std::size_t pi = 0;
  for (int j = 0; j < v; ++j) {
    if (pi < piv.size() && piv[pi] == j) {
      ++pi;
      continue;
    }
    // e_j - sum_i U[i][j] e_{p_i} is orthogonal to every row of cm(U).
    std::fill(row.begin(), row.end(), 0);
    row[j] = 1;
    for (int i = 0; i < u.dim(); ++i) row[piv[i]] = f.neg(u.cm()(i, j));
    k.append_row(row);
  }
  return Subspace::span(k);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
  return dual(sum(dual(u), dual(w)));
}

int subspace_distance(const Subspace& u, const Subspace& w) {
  return 2 * join_dim(u, w) - u.dim() - w.dim();
}

void for_each_subspace(const Subspace& u, int t, const std::function<void(const Subspace&)>& fn) {
  if (t < 0 || t > u.dim()) return;
  if (t == 0) {
    fn(Subspace(u.field(), u.ambient()));
    return;
  }
  for_each_canonical_matrix(u.field(), t, u.dim(), [&](const Matrix& z) {
    fn(Subspace::from_canonical(canonical_product_check(z, u.cm())));
  });
}

std::vector<Subspace> subspaces_of(const Subspace& u, int t) {
  std::vector<Subspace> out;
  for_each_subspace(u, t, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

// ---------------------------------------------------------------------------

SubspaceCode::SubspaceCode(const GaloisField& f, int v) : field_(&f), v_(v) {}

SubspaceCode::SubspaceCode(const GaloisField& f, int v, std::vector<Subspace> members)
    : field_(&f), v_(v), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.ambient() != v || &m.field() != &f) throw std::invalid_argument("codeword ambient mismatch");
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("duplicate codeword");
}

bool SubspaceCode::insert(const Subspace& u) {
  if (u.ambient() != v_) throw std::invalid_argument("codeword ambient mismatch");
  auto it = std::lower_bound(members_.begin(), members_.end(), u);
  if (it != members_.end() && *it == u) return false;
  members_.insert(it, u);
  return true;
}

bool SubspaceCode::contains(const Subspace& u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

int SubspaceCode::constant_dim() const {
  if (members_.empty()) return -1;
  const int k = members_.front().dim();
  for (const auto& m : members_)
    if (m.dim() != k) return -1;
  return k;
}

SubspaceCode dual_code(const SubspaceCode& c) {
  std::vector<Subspace> out;
  out.reserve(c.size());
  for (const auto& m : c.members()) out.push_back(dual(m));
  return SubspaceCode(c.field(), c.ambient(), std::move(out));
}

SubspaceCode code_union(const SubspaceCode& a, const SubspaceCode& b) {
  SubspaceCode out = a;
  for (const auto& m : b.members()) out.insert(m);
  return out;
}

}  // namespace subcode
