#include "oscsec/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace oscsec {

namespace {

// Scratch copy under elimination. Pivots are the first nonzero entry in
// column order; pivot rows are normalized to a leading 1.
struct Elimination {
    std::size_t rows;
    std::size_t cols;
    PrimeField field;
    std::vector<Residue> a;
    std::vector<std::size_t> pivot_cols;

    explicit Elimination(const BasisMatrix& m)
        : rows(m.rows()), cols(m.cols()), field(m.field()), a(m.entries().begin(), m.entries().end()) {}

    Residue* row(std::size_t r) { return a.data() + r * cols; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        Residue* p = row(r1);
        Residue* q = row(r2);
        for (std::size_t j = 0; j < cols; ++j) std::swap(p[j], q[j]);
    }

    // row(target) -= factor * row(source), over columns from `start`.
    void eliminate(std::size_t target, std::size_t source, Residue factor, std::size_t start) {
        const Residue neg = field.neg(factor);
        Residue* t = row(target);
        const Residue* s = row(source);
        for (std::size_t j = start; j < cols; ++j) {
            if (s[j] != 0) t[j] = field.fma(t[j], neg, s[j]);
        }
    }

    // Reduces to (reduced, if `full`) row echelon form; returns the rank.
    std::size_t run(bool full) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t pivot = r;
            while (pivot < rows && row(pivot)[c] == 0) ++pivot;
            if (pivot == rows) continue;
            swap_rows(r, pivot);
            Residue* pr = row(r);
            const Residue inv = field.inv(pr[c]);
            for (std::size_t j = c; j < cols; ++j) pr[j] = field.mul(pr[j], inv);
            for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
                if (i == r) continue;
                const Residue f = row(i)[c];
                if (f != 0) eliminate(i, r, f, c);
            }
            pivot_cols.push_back(c);
            ++r;
        }
        return r;
    }
};

}  // namespace

BasisMatrix::BasisMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, 0) {}

BasisMatrix::BasisMatrix(std::size_t rows, std::size_t cols, PrimeField field, std::vector<Residue> entries)
    : rows_(rows), cols_(cols), field_(field), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw std::invalid_argument("entry count does not match matrix shape");
    for (Residue& x : entries_) x = field_.reduce(x);
}

BasisMatrix BasisMatrix::from_forms(std::span<const Form> forms) {
    if (forms.empty()) throw std::invalid_argument("from_forms needs at least one form");
    const Form& first = forms.front();
    BasisMatrix m(0, first.coefficients().size(), first.field());
    m.entries_.reserve(forms.size() * m.cols_);
    for (const Form& f : forms) {
        if (f.n() != first.n() || f.degree() != first.degree() || f.field() != first.field()) {
            throw std::invalid_argument("from_forms: forms live in different graded pieces");
        }
        m.append_row(f.coefficients());
    }
    return m;
}

BasisMatrix BasisMatrix::identity(std::size_t size, PrimeField field) {
    BasisMatrix m(size, size, field);
    for (std::size_t i = 0; i < size; ++i) m.entries_[i * size + i] = 1;
    return m;
}

void BasisMatrix::append_row(std::span<const Residue> values) {
    if (values.size() != cols_) {
        throw std::invalid_argument("row of width " + std::to_string(values.size()) + " appended to matrix of width " +
                                    std::to_string(cols_));
    }
    for (Residue x : values) entries_.push_back(field_.reduce(x));
    ++rows_;
}

BasisMatrix BasisMatrix::transposed() const {
    BasisMatrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
    return t;
}

std::size_t rank(const BasisMatrix& m) {
    Elimination e(m);
    return e.run(false);
}

BasisMatrix row_basis(const BasisMatrix& m) {
    Elimination e(m);
    const std::size_t r = e.run(true);
    std::vector<Residue> kept(e.a.begin(), e.a.begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
    return BasisMatrix(r, m.cols(), m.field(), std::move(kept));
}

BasisMatrix kernel_basis(const BasisMatrix& m) {
    Elimination e(m);
    const std::size_t r = e.run(true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    BasisMatrix kernel(0, m.cols(), m.field());
    std::vector<Residue> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        // Pivot variable i equals minus its row's entry in the free column.
        for (std::size_t i = 0; i < r; ++i) v[e.pivot_cols[i]] = m.field().neg(e.row(i)[free]);
        kernel.append_row(v);
    }
    return kernel;
}

BasisMatrix stack(std::span<const BasisMatrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("stack needs at least one matrix");
    const BasisMatrix& first = blocks.front();
    std::vector<Residue> entries;
    std::size_t rows = 0;
    for (const BasisMatrix& b : blocks) {
        if (b.cols() != first.cols()) {
            throw std::invalid_argument("stack: widths " + std::to_string(first.cols()) + " and " +
                                        std::to_string(b.cols()) + " differ");
        }
        if (b.field() != first.field()) throw std::invalid_argument("stack: matrices over different primes");
        entries.insert(entries.end(), b.entries().begin(), b.entries().end());
        rows += b.rows();
    }
    return BasisMatrix(rows, first.cols(), first.field(), std::move(entries));
}

BasisMatrix stack(const BasisMatrix& a, const BasisMatrix& b) {
    const BasisMatrix pair[] = {a, b};
    return stack(pair);
}

BasisMatrix intersection_basis(std::span<const BasisMatrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("intersection needs at least one matrix");
    for (const BasisMatrix& b : blocks) {
        if (b.cols() != blocks.front().cols()) throw std::invalid_argument("intersection: mismatched widths");
        if (b.field() != blocks.front().field()) throw std::invalid_argument("intersection: different primes");
    }
    const PrimeField& field = blocks.front().field();
    BasisMatrix current = row_basis(blocks.front());
    for (std::size_t i = 1; i < blocks.size() && current.rows() > 0; ++i) {
        const BasisMatrix other = row_basis(blocks[i]);
        if (other.rows() == 0) return BasisMatrix::empty(current.cols(), field);
        // x U = y V  <=>  (x, -y) is a left-kernel vector of [U; V].
        const BasisMatrix relations = kernel_basis(stack(current, other).transposed());
        BasisMatrix meet(0, current.cols(), field);
        std::vector<Residue> v(current.cols());
        for (std::size_t r = 0; r < relations.rows(); ++r) {
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t j = 0; j < current.rows(); ++j) {
                const Residue x = relations(r, j);
                if (x == 0) continue;
                for (std::size_t c = 0; c < v.size(); ++c) v[c] = field.fma(v[c], x, current(j, c));
            }
            meet.append_row(v);
        }
        current = row_basis(meet);
    }
    return current;
}

std::size_t intersection_dim(std::span<const BasisMatrix> blocks) {
    return intersection_basis(blocks).rows();
}

bool contains(const BasisMatrix& outer, const BasisMatrix& inner) {
    return rank(stack(outer, inner)) == rank(outer);
}

bool same_row_space(const BasisMatrix& a, const BasisMatrix& b) {
    return contains(a, b) && contains(b, a);
}

}  // namespace oscsec
