#ifndef OSCSEC_MATRIX_HPP
#define OSCSEC_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "oscsec/field.hpp"
#include "oscsec/form.hpp"

namespace oscsec {

/// Dense row-major matrix over GF(p). Rows usually hold forms of one degree
/// in canonical monomial coordinates, so the row space is a subspace of R_d.
class BasisMatrix {
   public:
    BasisMatrix(std::size_t rows, std::size_t cols, PrimeField field);
    BasisMatrix(std::size_t rows, std::size_t cols, PrimeField field, std::vector<Residue> entries);

    /// One row per form; all forms must share (n, degree, p).
    static BasisMatrix from_forms(std::span<const Form> forms);
    /// Empty (0-row) matrix with the given width.
    static BasisMatrix empty(std::size_t cols, PrimeField field) { return BasisMatrix(0, cols, field); }
    static BasisMatrix identity(std::size_t size, PrimeField field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return field_; }

    Residue operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Residue value) noexcept { entries_[r * cols_ + c] = field_.reduce(value); }
    std::span<const Residue> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Residue> entries() const noexcept { return entries_; }

    void append_row(std::span<const Residue> values);

    BasisMatrix transposed() const;

    friend bool operator==(const BasisMatrix&, const BasisMatrix&) = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    PrimeField field_;
    std::vector<Residue> entries_;
};

/// Exact rank by Gaussian elimination; the argument is not modified.
std::size_t rank(const BasisMatrix& m);

/// Rows form a basis of {v : M v = 0}; cols - rank(M) rows.
BasisMatrix kernel_basis(const BasisMatrix& m);

/// Linearly independent rows spanning the row space (reduced echelon form).
BasisMatrix row_basis(const BasisMatrix& m);

/// Vertical concatenation. Throws std::invalid_argument on an empty list or
/// mismatched widths or primes.
BasisMatrix stack(std::span<const BasisMatrix> blocks);
BasisMatrix stack(const BasisMatrix& a, const BasisMatrix& b);

/// Basis of the intersection of the row spaces, computed pairwise from
/// left kernels (never from a perp of the sum).
BasisMatrix intersection_basis(std::span<const BasisMatrix> blocks);
std::size_t intersection_dim(std::span<const BasisMatrix> blocks);

/// Row space of `inner` is contained in the row space of `outer`.
bool contains(const BasisMatrix& outer, const BasisMatrix& inner);
bool same_row_space(const BasisMatrix& a, const BasisMatrix& b);

}  // namespace oscsec

#endif  // OSCSEC_MATRIX_HPP
