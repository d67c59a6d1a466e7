#include "hdvf/gf2.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace hdvf {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
} // namespace

Gf2Vector::Gf2Vector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

bool Gf2Vector::get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Gf2Vector::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void Gf2Vector::flip(std::size_t i) {
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    if (size_ != other.size_)
        throw std::invalid_argument("Gf2Vector size mismatch in xor");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool Gf2Vector::operator==(const Gf2Vector& other) const {
    return size_ == other.size_ && words_ == other.words_;
}

bool Gf2Vector::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t Gf2Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<std::size_t> Gf2Vector::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
}

std::vector<std::size_t> Gf2Vector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const { return data_[r].get(c); }

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) { data_[r].set(c, value); }

Gf2Vector Gf2Matrix::column(std::size_t c) const {
    Gf2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.set(r, get(r, c));
    return v;
}

void Gf2Matrix::set_column(std::size_t c, const Gf2Vector& v) {
    if (v.size() != rows_)
        throw std::invalid_argument("set_column size mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        set(r, c, v.get(r));
}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) { data_[dst] ^= data_[src]; }

bool Gf2Matrix::operator==(const Gf2Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool Gf2Matrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.is_zero()) return false;
    return true;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : data_[r].support())
            t.set(c, r, true);
    return t;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    Gf2Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k : a.data_[r].support())
            out.data_[r] ^= b.data_[k];
    return out;
}

Gf2Vector operator*(const Gf2Matrix& a, const Gf2Vector& v) {
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector dimension mismatch");
    Gf2Vector out(a.rows());
    for (std::size_t k : v.support())
        out ^= a.column(k);
    return out;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    Gf2Matrix out = a;
    for (std::size_t r = 0; r < out.rows(); ++r)
        out.data_[r] ^= b.data_[r];
    return out;
}

void Gf2Matrix::paste(std::size_t r0, std::size_t c0, const Gf2Matrix& block) {
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        throw std::invalid_argument("paste block out of range");
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c : block.data_[r].support())
            set(r0 + r, c0 + c, true);
}

namespace {

struct Echelon {
    Gf2Matrix reduced;
    // pivots[i] = (row, col) of the i-th pivot, rows in final position.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::vector<bool> is_pivot_col;
};

// Reduced row echelon form. Pivot choice is the lowest remaining row with a
// set bit in the current column, scanning columns left to right, so results
// are deterministic for a given matrix.
Echelon rref(Gf2Matrix m) {
    Echelon e{Gf2Matrix(), {}, std::vector<bool>(m.cols(), false)};
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && !m.get(pivot, c))
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != next_row) {
            // row swap through xor triple
            m.xor_row(next_row, pivot);
            m.xor_row(pivot, next_row);
            m.xor_row(next_row, pivot);
        }
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.get(r, c))
                m.xor_row(r, next_row);
        e.pivots.emplace_back(next_row, c);
        e.is_pivot_col[c] = true;
        ++next_row;
    }
    e.reduced = std::move(m);
    return e;
}

} // namespace

std::size_t rank(const Gf2Matrix& m) { return rref(m).pivots.size(); }

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m) {
    Echelon e = rref(m);
    std::vector<Gf2Vector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (e.is_pivot_col[c])
            continue;
        Gf2Vector v(m.cols());
        v.set(c, true);
        for (const auto& [pr, pc] : e.pivots)
            if (e.reduced.get(pr, c))
                v.set(pc, true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::variant<Gf2Matrix, Singular> invert(const Gf2Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("invert requires a square matrix");
    const std::size_t n = m.rows();
    // Gauss-Jordan on [m | I].
    Gf2Matrix aug(n, 2 * n);
    aug.paste(0, 0, m);
    for (std::size_t i = 0; i < n; ++i)
        aug.set(i, n + i, true);
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = next_row;
        while (pivot < n && !aug.get(pivot, c))
            ++pivot;
        if (pivot == n) {
            auto ker = kernel_basis(m);
            return Singular{ker.front()};
        }
        if (pivot != next_row) {
            aug.xor_row(next_row, pivot);
            aug.xor_row(pivot, next_row);
            aug.xor_row(next_row, pivot);
        }
        for (std::size_t r = 0; r < n; ++r)
            if (r != next_row && aug.get(r, c))
                aug.xor_row(r, next_row);
        ++next_row;
    }
    Gf2Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv.set(r, c, aug.get(r, n + c));
    return inv;
}

std::variant<Gf2Vector, NoSolution> solve(const Gf2Matrix& m, const Gf2Vector& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve rhs size mismatch");
    Gf2Matrix aug(m.rows(), m.cols() + 1);
    aug.paste(0, 0, m);
    aug.set_column(m.cols(), b);
    Echelon e = rref(std::move(aug));
    for (const auto& [pr, pc] : e.pivots)
        if (pc == m.cols())
            return NoSolution{};
    Gf2Vector x(m.cols());
    for (const auto& [pr, pc] : e.pivots)
        if (e.reduced.get(pr, m.cols()))
            x.set(pc, true);
    return x;
}

std::ostream& operator<<(std::ostream& os, const Gf2Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (v.get(i) ? '1' : '0');
    return os;
}

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (m.get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os;
}

} // namespace hdvf
