/*
   Copyright 2026 modind contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "modind/linalg.hpp"

#include <algorithm>
#include <deque>

namespace modind::linalg {

using gf::FieldElem;

// ------------------------------------------------------------------- Matrix

Matrix::Matrix(gf::Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, field_ ? FieldElem::zero(field_) : FieldElem()) {}

Matrix Matrix::zero(const gf::Field& f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

Matrix Matrix::identity(const gf::Field& f, std::size_t n) { return scalar(f, n, FieldElem::one(f)); }

Matrix Matrix::scalar(const gf::Field& f, std::size_t n, const gf::FieldElem& c) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

Matrix Matrix::from_rows(const gf::Field& f, const std::vector<std::vector<gf::FieldElem>>& rows) {
    require_input(!rows.empty(), "from_rows needs at least one row");
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_input(rows[i].size() == m.cols_, "ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::row(std::size_t i) const { return block(i, 0, 1, cols_); }

std::vector<gf::FieldElem> Matrix::row_vector(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::flatten() const {
    Matrix f(field_, 1, rows_ * cols_);
    f.entries_ = entries_;
    return f;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    Matrix b(field_, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
    return b;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_input(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch in +");
    Matrix c(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] + b.entries_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_input(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch in -");
    Matrix c(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_input(a.cols_ == b.rows_, "matrix shape mismatch in *");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElem& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
        }
    }
    return c;
}

Matrix Matrix::operator*(const gf::FieldElem& c) const {
    Matrix m(*this);
    for (auto& e : m.entries_) e = e * c;
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& e : m.entries_) e = -e;
    return m;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const FieldElem& e) { return e.is_zero(); });
}

std::optional<Matrix> Matrix::try_inverse() const {
    require_input(is_square(), "inverse of non-square matrix");
    // Gauss-Jordan on [M | I].
    Matrix aug(field_, rows_, 2 * cols_);
    aug.set_block(0, 0, *this);
    aug.set_block(0, cols_, identity(field_, rows_));
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < rows_; ++i)
        if (r.pivots.size() <= i || r.pivots[i] != i) return std::nullopt;
    return r.reduced.block(0, cols_, rows_, cols_);
}

Matrix Matrix::inverse() const {
    auto inv = try_inverse();
    require_input(inv.has_value(), "matrix is singular");
    return *inv;
}

Matrix Matrix::pow(std::int64_t e) const {
    require_input(is_square(), "pow of non-square matrix");
    if (e < 0) return inverse().pow(-e);
    Matrix base = *this;
    Matrix r = identity(field_, rows_);
    auto n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Matrix vstack(const std::vector<Matrix>& ms) {
    require_input(!ms.empty(), "vstack of empty list");
    std::size_t rows = 0;
    for (const auto& m : ms) {
        require_input(m.cols() == ms[0].cols(), "vstack column mismatch");
        rows += m.rows();
    }
    Matrix out(ms[0].field(), rows, ms[0].cols());
    std::size_t r = 0;
    for (const auto& m : ms) {
        out.set_block(r, 0, m);
        r += m.rows();
    }
    return out;
}

// --------------------------------------------------------------------- rref

RrefResult rref(const Matrix& m) {
    Matrix a(m);
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pr, j), a.at(r, j));
        const FieldElem inv = a.at(r, c).inv();
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) = a.at(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const FieldElem f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

// ----------------------------------------------------------------- Subspace

Subspace::Subspace(gf::Field field, std::size_t ambient)
    : field_(std::move(field)), ambient_(ambient), basis_(field_, 0, ambient) {}

Subspace Subspace::from_spanning(const Matrix& spanning) {
    Subspace s(spanning.field(), spanning.cols());
    RrefResult r = rref(spanning);
    s.basis_ = r.reduced.block(0, 0, r.rank, spanning.cols());
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::full(const gf::Field& f, std::size_t ambient) {
    return from_spanning(Matrix::identity(f, ambient));
}

bool Subspace::contains(const Matrix& row_vec) const { return coordinates(row_vec).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<std::vector<gf::FieldElem>> Subspace::coordinates(const Matrix& row_vec) const {
    require_input(row_vec.rows() == 1 && row_vec.cols() == ambient_, "vector has wrong shape");
    // RREF basis: the coordinate on row i is the vector's entry at pivot i.
    std::vector<FieldElem> coords;
    Matrix v = row_vec;
    coords.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        const FieldElem c = v.at(0, pivots_[i]);
        coords.push_back(c);
        if (!c.is_zero())
            for (std::size_t j = 0; j < ambient_; ++j) v.at(0, j) = v.at(0, j) - c * basis_.at(i, j);
    }
    if (!v.is_zero()) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    require_input(ambient_ == other.ambient_, "subspace ambient mismatch");
    if (dim() == 0) return other;
    if (other.dim() == 0) return *this;
    return from_spanning(vstack({basis_, other.basis_}));
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

bool Subspace::operator<(const Subspace& other) const {
    if (dim() != other.dim()) return dim() < other.dim();
    if (pivots_ != other.pivots_) return pivots_ < other.pivots_;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) {
            const auto a = basis_.at(i, j).index(), b = other.basis_.at(i, j).index();
            if (a != b) return a < b;
        }
    return false;
}

Subspace null_space(const Matrix& m) {
    // Solve M v = 0 by reducing M; free columns parameterize the kernel.
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<FieldElem> v(n, FieldElem::zero(m.field()));
        v[c] = FieldElem::one(m.field());
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced.at(i, c);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return Subspace(m.field(), n);
    return Subspace::from_spanning(Matrix::from_rows(m.field(), rows));
}

Subspace left_null_space(const Matrix& m) { return null_space(m.transpose()); }

Subspace row_space(const Matrix& m) { return Subspace::from_spanning(m); }

// -------------------------------------------------------- sylvester systems

Subspace solve_sylvester_set(const std::vector<std::pair<Matrix, Matrix>>& pairs) {
    require_input(!pairs.empty(), "empty sylvester system");
    const gf::Field& f = pairs[0].first.field();
    const std::size_t d = pairs[0].first.rows();
    for (const auto& [a, b] : pairs) {
        require_input(a.is_square() && b.is_square(), "sylvester matrices must be square");
        require_input(a.rows() == d && b.rows() == d, "sylvester dimension mismatch");
    }
    // Unknown M flattened row-major: M[k][l] at index k*d+l.
    // Equation (i,j): sum_k A[i][k] M[k][j] - sum_l M[i][l] B[l][j] = 0.
    Matrix sys(f, pairs.size() * d * d, d * d);
    std::size_t e = 0;
    for (const auto& [a, b] : pairs) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t k = 0; k < d; ++k) sys.at(e, k * d + j) = sys.at(e, k * d + j) + a.at(i, k);
                for (std::size_t l = 0; l < d; ++l) sys.at(e, i * d + l) = sys.at(e, i * d + l) - b.at(l, j);
                ++e;
            }
    }
    return null_space(sys);
}

Matrix unflatten(const Matrix& row_vec, std::size_t rows, std::size_t cols) {
    require_input(row_vec.rows() == 1 && row_vec.cols() == rows * cols, "unflatten shape mismatch");
    Matrix m(row_vec.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = row_vec.at(0, i * cols + j);
    return m;
}

std::vector<Matrix> sylvester_basis(const std::vector<std::pair<Matrix, Matrix>>& pairs) {
    const std::size_t d = pairs[0].first.rows();
    Subspace s = solve_sylvester_set(pairs);
    std::vector<Matrix> out;
    out.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(unflatten(s.basis().row(i), d, d));
    return out;
}

std::vector<Matrix> commutant(const std::vector<Matrix>& mats) {
    require_input(!mats.empty(), "commutant of empty list");
    std::vector<std::pair<Matrix, Matrix>> pairs;
    pairs.reserve(mats.size());
    for (const auto& m : mats) pairs.emplace_back(m, m);
    return sylvester_basis(pairs);
}

// --------------------------------------------------------------------- spin

namespace {

/// Incremental echelon basis with reduced insertion.
class Echelon {
   public:
    Echelon(gf::Field f, std::size_t n) : field_(std::move(f)), n_(n) {}

    /// Returns true when the vector enlarged the span.
    bool insert(std::vector<FieldElem> v) {
        for (const auto& [piv, row] : rows_) {
            if (!v[piv].is_zero()) {
                const FieldElem c = v[piv];
                for (std::size_t j = 0; j < n_; ++j) v[j] = v[j] - c * row[j];
            }
        }
        std::size_t piv = n_;
        for (std::size_t j = 0; j < n_; ++j)
            if (!v[j].is_zero()) {
                piv = j;
                break;
            }
        if (piv == n_) return false;
        const FieldElem inv = v[piv].inv();
        for (std::size_t j = 0; j < n_; ++j) v[j] = v[j] * inv;
        rows_.emplace_back(piv, std::move(v));
        return true;
    }

    std::size_t dim() const { return rows_.size(); }

    Subspace to_subspace() const {
        if (rows_.empty()) return Subspace(field_, n_);
        std::vector<std::vector<FieldElem>> rs;
        rs.reserve(rows_.size());
        for (const auto& [piv, row] : rows_) rs.push_back(row);
        return Subspace::from_spanning(Matrix::from_rows(field_, rs));
    }

    const std::vector<std::pair<std::size_t, std::vector<FieldElem>>>& rows() const { return rows_; }

   private:
    gf::Field field_;
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::vector<FieldElem>>> rows_;
};

}  // namespace

Subspace spin(const Subspace& seed, const std::vector<Matrix>& generators) {
    const std::size_t n = seed.ambient();
    for (const auto& g : generators) require_input(g.rows() == n && g.cols() == n, "generator ambient mismatch");
    Echelon ech(seed.field(), n);
    std::deque<std::vector<FieldElem>> work;
    for (std::size_t i = 0; i < seed.dim(); ++i) {
        auto v = seed.basis().row_vector(i);
        if (ech.insert(v)) work.push_back(std::move(v));
    }
    while (!work.empty() && ech.dim() < n) {
        const auto v = std::move(work.front());
        work.pop_front();
        Matrix vm = Matrix::from_rows(seed.field(), {v});
        for (const auto& g : generators) {
            auto img = (vm * g).row_vector(0);
            if (ech.insert(img)) work.push_back(std::move(img));
        }
    }
    if (ech.dim() == n) return Subspace::full(seed.field(), n);
    return ech.to_subspace();
}

// ----------------------------------------------------------------- min_poly

gf::Poly min_poly(const Matrix& m) {
    require_input(m.is_square(), "min_poly of non-square matrix");
    const gf::Field& f = m.field();
    const std::size_t d = m.rows();
    // Krylov on flattened powers: the first power lying in the span of the
    // earlier ones yields the minimal polynomial coefficients.
    std::vector<Matrix> powers;
    Matrix p = Matrix::identity(f, d);
    for (std::size_t n = 0; n <= d; ++n) {
        if (!powers.empty()) {
            CoordSolver solver(vstack(powers));
            if (auto coords = solver.solve(p.flatten())) {
                std::vector<FieldElem> c(*coords);
                for (auto& e : c) e = -e;
                c.push_back(FieldElem::one(f));
                return gf::Poly(f, std::move(c));
            }
        }
        powers.push_back(p.flatten());
        p = p * m;
    }
    throw internal_error("minimal polynomial not found within dimension bound");
}

Matrix eval_poly(const gf::Poly& f, const Matrix& m) {
    require_input(m.is_square(), "eval_poly of non-square matrix");
    Matrix r = Matrix::zero(m.field(), m.rows(), m.cols());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) r = r * m + Matrix::scalar(m.field(), m.rows(), f.coeff(i));
    return r;
}

// -------------------------------------------------------------- CoordSolver

CoordSolver::CoordSolver(const Matrix& spanning_rows)
    : field_(spanning_rows.field()),
      n_rows_(spanning_rows.rows()),
      n_cols_(spanning_rows.cols()),
      reduced_(field_, 0, 0),
      transform_(field_, 0, 0) {
    Matrix aug(field_, n_rows_, n_cols_ + n_rows_);
    aug.set_block(0, 0, spanning_rows);
    aug.set_block(0, n_cols_, Matrix::identity(field_, n_rows_));
    RrefResult r = rref(aug);
    // Pivots inside the first n_cols_ columns belong to the row space; the
    // rest record combinations that vanish.
    std::size_t rank = 0;
    while (rank < r.pivots.size() && r.pivots[rank] < n_cols_) ++rank;
    rank_ = rank;
    reduced_ = r.reduced.block(0, 0, rank, n_cols_);
    transform_ = r.reduced.block(0, n_cols_, rank, n_rows_);
    pivots_.assign(r.pivots.begin(), r.pivots.begin() + static_cast<std::ptrdiff_t>(rank));
}

std::optional<std::vector<gf::FieldElem>> CoordSolver::solve(const Matrix& row_vec) const {
    require_input(row_vec.rows() == 1 && row_vec.cols() == n_cols_, "CoordSolver vector shape mismatch");
    Matrix v = row_vec;
    Matrix c(field_, 1, rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        const FieldElem ci = v.at(0, pivots_[i]);
        c.at(0, i) = ci;
        if (!ci.is_zero())
            for (std::size_t j = 0; j < n_cols_; ++j) v.at(0, j) = v.at(0, j) - ci * reduced_.at(i, j);
    }
    if (!v.is_zero()) return std::nullopt;
    return (c * transform_).row_vector(0);
}

}  // namespace modind::linalg
