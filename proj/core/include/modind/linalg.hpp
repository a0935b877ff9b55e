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

#ifndef MODIND_LINALG_HPP
#define MODIND_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "modind/gf.hpp"

namespace modind::linalg {

/**
 * Dense exact matrix over a gf field.  Row-vector convention throughout:
 * matrices act on the right, v -> v*M.  Immutable in spirit: operations
 * return fresh values.
 */
class Matrix {
   public:
    Matrix(gf::Field field, std::size_t rows, std::size_t cols);

    static Matrix zero(const gf::Field& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const gf::Field& f, std::size_t n);
    static Matrix from_rows(const gf::Field& f, const std::vector<std::vector<gf::FieldElem>>& rows);
    static Matrix scalar(const gf::Field& f, std::size_t n, const gf::FieldElem& c);

    const gf::Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const gf::FieldElem& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    gf::FieldElem& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Matrix row(std::size_t i) const;  // 1 x cols
    std::vector<gf::FieldElem> row_vector(std::size_t i) const;
    Matrix transpose() const;
    /// Rows concatenated into a single 1 x (rows*cols) matrix.
    Matrix flatten() const;
    /// Submatrix block of size r x c at (i0, j0).
    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const Matrix& b);

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator*(const gf::FieldElem& c) const;
    Matrix operator-() const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    std::optional<Matrix> try_inverse() const;
    Matrix inverse() const;
    Matrix pow(std::int64_t e) const;

   private:
    gf::Field field_;
    std::size_t rows_, cols_;
    std::vector<gf::FieldElem> entries_;
};

/// Stack matrices vertically; all must agree in column count.
Matrix vstack(const std::vector<Matrix>& ms);

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form via Gaussian elimination with first-nonzero
/// pivoting (exact arithmetic, no pivot growth concerns).
RrefResult rref(const Matrix& m);

/**
 * A subspace of F^n in canonical form: its basis matrix is the RREF of any
 * spanning set with zero rows dropped, so two equal subspaces compare
 * bitwise equal.
 */
class Subspace {
   public:
    Subspace(gf::Field field, std::size_t ambient);  // zero subspace
    /// Canonicalizes the row space of `spanning`.
    static Subspace from_spanning(const Matrix& spanning);
    static Subspace full(const gf::Field& f, std::size_t ambient);

    const gf::Field& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Matrix& row_vec) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of a vector in the canonical basis, if it lies here.
    std::optional<std::vector<gf::FieldElem>> coordinates(const Matrix& row_vec) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }
    /// Deterministic total order (dim, then entry indices) for sorting.
    bool operator<(const Subspace& other) const;

   private:
    gf::Field field_;
    std::size_t ambient_;
    Matrix basis_;  // RREF, no zero rows
    std::vector<std::size_t> pivots_;
};

/// {v : M v^T = 0}, returned canonically; dim = cols - rank.
Subspace null_space(const Matrix& m);
/// {v : v M = 0}.
Subspace left_null_space(const Matrix& m);
Subspace row_space(const Matrix& m);

/// Canonical basis of {M : A_i M = M B_i for all i}, flattened row-major as
/// a subspace of the d^2-dimensional matrix space.
Subspace solve_sylvester_set(const std::vector<std::pair<Matrix, Matrix>>& pairs);
/// The same basis unflattened into d x d matrices.
std::vector<Matrix> sylvester_basis(const std::vector<std::pair<Matrix, Matrix>>& pairs);
Matrix unflatten(const Matrix& row_vec, std::size_t rows, std::size_t cols);

/// Smallest subspace containing `seed` and invariant under every generator
/// (row action v -> v*g).
Subspace spin(const Subspace& seed, const std::vector<Matrix>& generators);

/// Basis of the algebra of matrices commuting with every input.
std::vector<Matrix> commutant(const std::vector<Matrix>& mats);

/// Monic minimal polynomial.
gf::Poly min_poly(const Matrix& m);

/// Evaluate a polynomial at a matrix.
Matrix eval_poly(const gf::Poly& f, const Matrix& m);

/**
 * Coordinate solver for a fixed list of (independent or not) spanning rows:
 * expresses vectors as combinations of the original rows.  Built once via an
 * augmented RREF; used for commutant coordinates and subquotient actions.
 */
class CoordSolver {
   public:
    explicit CoordSolver(const Matrix& spanning_rows);
    /// x with x * spanning = v, or nullopt if v is outside the row space.
    std::optional<std::vector<gf::FieldElem>> solve(const Matrix& row_vec) const;
    std::size_t rank() const { return rank_; }

   private:
    gf::Field field_;
    std::size_t n_rows_, n_cols_;
    Matrix reduced_;    // RREF of spanning rows
    Matrix transform_;  // transform * spanning = reduced
    std::vector<std::size_t> pivots_;
    std::size_t rank_;
};

}  // namespace modind::linalg

#endif
