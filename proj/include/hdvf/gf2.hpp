#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hdvf {

/// Dense vector over GF(2), packed 64 coordinates per word.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t size);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    /// In-place xor. Sizes must agree.
    Gf2Vector& operator^=(const Gf2Vector& other);
    bool operator==(const Gf2Vector& other) const;

    bool is_zero() const;
    std::size_t popcount() const;
    /// Index of the lowest set coordinate, or nullopt when zero.
    std::optional<std::size_t> lowest_set() const;
    /// Indices of all set coordinates, ascending.
    std::vector<std::size_t> support() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
    friend class Gf2Matrix;
};

/// Witness that a square matrix has no inverse: a nonzero kernel vector.
struct Singular {
    Gf2Vector kernel_vector;
};

struct NoSolution {};

/// Dense matrix over GF(2), stored as bit-packed rows.
///
/// Throughout the project a linear map Span A -> Span B is stored with
/// columns indexed by A and rows indexed by B, so composition reads as
/// matrix product in the usual order.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    const Gf2Vector& row(std::size_t r) const { return data_[r]; }
    Gf2Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Gf2Vector& v);
    void xor_row(std::size_t dst, std::size_t src);

    bool operator==(const Gf2Matrix& other) const;
    bool is_zero() const;

    Gf2Matrix transposed() const;

    /// Matrix product; inner dimensions must agree.
    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    /// Matrix-vector product, v indexed by columns.
    friend Gf2Vector operator*(const Gf2Matrix& a, const Gf2Vector& v);
    /// Entrywise sum (xor); shapes must agree.
    friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);

    /// Paste `block` with top-left corner at (r0, c0).
    void paste(std::size_t r0, std::size_t c0, const Gf2Matrix& block);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Gf2Vector> data_;
};

std::size_t rank(const Gf2Matrix& m);

/// Inverse of a square matrix, or a kernel witness when singular.
std::variant<Gf2Matrix, Singular> invert(const Gf2Matrix& m);

/// One solution x of m x = b, or NoSolution. Deterministic: elimination
/// always picks the lowest available pivot row and free variables are 0.
std::variant<Gf2Vector, NoSolution> solve(const Gf2Matrix& m, const Gf2Vector& b);

/// Basis of ker m, ordered by ascending free-column index.
std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m);

std::ostream& operator<<(std::ostream& os, const Gf2Vector& v);
std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m);

} // namespace hdvf
