#pragma once

#include "hdvf/gf2.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hdvf {

using CellId = std::string;

/// GF(2) chain: a set of cells of one homogeneous dimension. Addition is
/// symmetric difference of supports.
class Chain {
public:
    Chain() = default;
    explicit Chain(int dim) : dim_(dim) {}
    Chain(int dim, std::set<CellId> cells) : dim_(dim), cells_(std::move(cells)) {}

    int dim() const { return dim_; }
    const std::set<CellId>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    bool contains(const CellId& id) const { return cells_.count(id) > 0; }

    /// Toggle one cell (coefficient flip).
    void add(const CellId& id);

    Chain& operator+=(const Chain& other);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    bool operator==(const Chain& other) const;

private:
    int dim_ = 0;
    std::set<CellId> cells_;
};

/// One cell of a complex as given to the builder: id, dimension, and the
/// GF(2) support of its boundary (ids of (dim-1)-cells; duplicates cancel).
struct CellSpec {
    CellId id;
    int dim = 0;
    std::vector<CellId> boundary;
};

struct ComplexError {
    std::string message;
};

/// Finite chain complex over GF(2). Immutable once built; construction
/// validates that boundary-of-boundary vanishes for every cell.
class ChainComplex {
public:
    /// Builds from explicit boundary lists. Reports the first offending
    /// cell on duplicate ids, unknown or wrong-dimension boundary entries,
    /// or a nonzero d(d(cell)).
    static std::variant<ChainComplex, ComplexError> from_boundary_lists(
        const std::vector<CellSpec>& cells);

    /// Full 2D cubical complex of the 1-pixels of a grid (row-major,
    /// grid[y][x]): one square per pixel plus all its edges and vertices.
    /// Ids are v_x_y, eh_x_y, ev_x_y, sq_x_y with x growing right and y down.
    static ChainComplex build_cubical(const std::vector<std::vector<int>>& grid);

    /// Top dimension, -1 for the empty complex.
    int top_dim() const { return top_dim_; }
    std::size_t cell_count() const { return order_.size(); }
    /// Cells of dimension q in insertion order; empty above top_dim.
    const std::vector<CellId>& cells(int q) const;
    /// Cells of dimension q sorted by id.
    const std::vector<CellId>& cells_sorted(int q) const;
    /// All cells in insertion order.
    const std::vector<CellId>& cell_order() const { return order_; }

    bool has_cell(const CellId& id) const { return dims_.count(id) > 0; }
    int dim_of(const CellId& id) const;

    Chain boundary_of(const CellId& id) const;
    Chain boundary(const Chain& c) const;
    /// Coboundary within the complex: cells of dim+1 whose boundary
    /// contains a support cell an odd number of times.
    Chain coboundary(const Chain& c) const;

    /// Matrix of the boundary map restricted to prescribed cells: entry
    /// (i, j) = coefficient of rows[i] in the boundary of cols[j].
    Gf2Matrix boundary_matrix(const std::vector<CellId>& rows,
                              const std::vector<CellId>& cols) const;

    /// Betti number by rank-nullity on the full boundary matrices. Pure
    /// Gaussian elimination; shares nothing with the reduction machinery.
    std::size_t betti(int q) const;

    /// Smallest subcomplex containing `seed`: closure under boundaries.
    /// Unknown ids are an error.
    ChainComplex induced_subcomplex(const std::set<CellId>& seed) const;

    /// Dual complex: q-cells become (n-q)-cells and the boundary map is
    /// transposed. Ids toggle a '*' prefix, so dual(dual(k)) restores the
    /// original ids.
    ChainComplex dual_complex() const;

    /// Chain from cell ids; every id must exist and share one dimension.
    Chain chain_of(const std::vector<CellId>& ids) const;

    Gf2Vector to_vector(const Chain& c, const std::vector<CellId>& basis) const;
    Chain from_vector(const Gf2Vector& v, const std::vector<CellId>& basis, int dim) const;

private:
    ChainComplex() = default;
    void index_cells();

    std::vector<CellId> order_;
    std::map<CellId, int> dims_;
    std::map<CellId, Chain> boundaries_;
    std::vector<std::vector<CellId>> by_dim_;        // insertion order
    std::vector<std::vector<CellId>> by_dim_sorted_; // ascending id
    std::map<CellId, std::vector<CellId>> cofaces_;  // sorted by id
    int top_dim_ = -1;
};

} // namespace hdvf
