#include "hdvf/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdvf {

void Chain::add(const CellId& id) {
    auto it = cells_.find(id);
    if (it == cells_.end())
        cells_.insert(id);
    else
        cells_.erase(it);
}

Chain& Chain::operator+=(const Chain& other) {
    if (!other.empty() && !empty() && dim_ != other.dim_)
        throw std::invalid_argument("chain sum across dimensions");
    if (empty())
        dim_ = other.dim_;
    for (const auto& id : other.cells_)
        add(id);
    return *this;
}

bool Chain::operator==(const Chain& other) const {
    if (cells_.empty() && other.cells_.empty())
        return true;
    return dim_ == other.dim_ && cells_ == other.cells_;
}

std::variant<ChainComplex, ComplexError> ChainComplex::from_boundary_lists(
    const std::vector<CellSpec>& cells) {
    ChainComplex k;
    for (const auto& spec : cells) {
        if (spec.dim < 0)
            return ComplexError{"cell " + spec.id + " has negative dimension"};
        if (k.dims_.count(spec.id))
            return ComplexError{"duplicate cell id " + spec.id};
        k.dims_[spec.id] = spec.dim;
        k.order_.push_back(spec.id);
    }
    for (const auto& spec : cells) {
        Chain b(spec.dim - 1);
        for (const auto& face : spec.boundary) {
            auto it = k.dims_.find(face);
            if (it == k.dims_.end())
                return ComplexError{"cell " + spec.id + " lists unknown boundary cell " + face};
            if (it->second != spec.dim - 1)
                return ComplexError{"cell " + spec.id + " (dim " + std::to_string(spec.dim) +
                                    ") lists " + face + " of dimension " +
                                    std::to_string(it->second) + " in its boundary"};
            b.add(face);
        }
        k.boundaries_[spec.id] = std::move(b);
    }
    for (const auto& spec : cells) {
        Chain bb(spec.dim - 2);
        for (const auto& face : k.boundaries_[spec.id].cells())
            bb += k.boundaries_[face];
        if (!bb.empty())
            return ComplexError{"boundary of boundary of " + spec.id + " is nonzero"};
    }
    k.index_cells();
    return k;
}

void ChainComplex::index_cells() {
    top_dim_ = -1;
    for (const auto& [id, d] : dims_)
        top_dim_ = std::max(top_dim_, d);
    by_dim_.assign(top_dim_ + 1, {});
    for (const auto& id : order_)
        by_dim_[dims_[id]].push_back(id);
    by_dim_sorted_ = by_dim_;
    for (auto& v : by_dim_sorted_)
        std::sort(v.begin(), v.end());
    cofaces_.clear();
    for (const auto& id : order_)
        cofaces_[id] = {};
    for (const auto& id : order_)
        for (const auto& face : boundaries_[id].cells())
            cofaces_[face].push_back(id);
    for (auto& [id, v] : cofaces_)
        std::sort(v.begin(), v.end());
}

namespace {
std::string xy(std::size_t x, std::size_t y) {
    return std::to_string(x) + "_" + std::to_string(y);
}
} // namespace

ChainComplex ChainComplex::build_cubical(const std::vector<std::vector<int>>& grid) {
    const std::size_t h = grid.size();
    std::size_t w = 0;
    for (const auto& row : grid) {
        if (w == 0)
            w = row.size();
        else if (row.size() != w)
            throw std::invalid_argument("cubical grid rows differ in length");
    }
    std::set<std::string> vertices, hedges, vedges, squares;
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            if (!grid[y][x])
                continue;
            squares.insert(xy(x, y));
            hedges.insert(xy(x, y));
            hedges.insert(xy(x, y + 1));
            vedges.insert(xy(x, y));
            vedges.insert(xy(x + 1, y));
            vertices.insert(xy(x, y));
            vertices.insert(xy(x + 1, y));
            vertices.insert(xy(x, y + 1));
            vertices.insert(xy(x + 1, y + 1));
        }
    auto parse = [](const std::string& s) {
        auto sep = s.find('_');
        return std::pair<std::size_t, std::size_t>(std::stoull(s.substr(0, sep)),
                                                   std::stoull(s.substr(sep + 1)));
    };
    std::vector<CellSpec> specs;
    for (const auto& s : vertices)
        specs.push_back({"v_" + s, 0, {}});
    for (const auto& s : hedges) {
        auto [x, y] = parse(s);
        specs.push_back({"eh_" + s, 1, {"v_" + xy(x, y), "v_" + xy(x + 1, y)}});
    }
    for (const auto& s : vedges) {
        auto [x, y] = parse(s);
        specs.push_back({"ev_" + s, 1, {"v_" + xy(x, y), "v_" + xy(x, y + 1)}});
    }
    for (const auto& s : squares) {
        auto [x, y] = parse(s);
        specs.push_back({"sq_" + s, 2,
                         {"eh_" + xy(x, y), "eh_" + xy(x, y + 1),
                          "ev_" + xy(x, y), "ev_" + xy(x + 1, y)}});
    }
    auto built = from_boundary_lists(specs);
    return std::get<ChainComplex>(built);
}

const std::vector<CellId>& ChainComplex::cells(int q) const {
    static const std::vector<CellId> none;
    if (q < 0 || q > top_dim_)
        return none;
    return by_dim_[q];
}

const std::vector<CellId>& ChainComplex::cells_sorted(int q) const {
    static const std::vector<CellId> none;
    if (q < 0 || q > top_dim_)
        return none;
    return by_dim_sorted_[q];
}

int ChainComplex::dim_of(const CellId& id) const {
    auto it = dims_.find(id);
    if (it == dims_.end())
        throw std::invalid_argument("unknown cell " + id);
    return it->second;
}

Chain ChainComplex::boundary_of(const CellId& id) const {
    auto it = boundaries_.find(id);
    if (it == boundaries_.end())
        throw std::invalid_argument("unknown cell " + id);
    return it->second;
}

Chain ChainComplex::boundary(const Chain& c) const {
    Chain out(c.dim() - 1);
    for (const auto& id : c.cells())
        out += boundary_of(id);
    return out;
}

Chain ChainComplex::coboundary(const Chain& c) const {
    Chain out(c.dim() + 1);
    for (const auto& id : c.cells()) {
        auto it = cofaces_.find(id);
        if (it == cofaces_.end())
            throw std::invalid_argument("unknown cell " + id);
        for (const auto& cof : it->second)
            out.add(cof);
    }
    return out;
}

Gf2Matrix ChainComplex::boundary_matrix(const std::vector<CellId>& rows,
                                        const std::vector<CellId>& cols) const {
    std::map<CellId, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index[rows[i]] = i;
    Gf2Matrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Chain faces = boundary_of(cols[j]);
        for (const auto& face : faces.cells()) {
            auto it = row_index.find(face);
            if (it != row_index.end())
                m.set(it->second, j, true);
        }
    }
    return m;
}

std::size_t ChainComplex::betti(int q) const {
    if (q < 0 || q > top_dim_)
        return 0;
    const auto& cq = cells_sorted(q);
    const std::size_t rank_dq = rank(boundary_matrix(cells_sorted(q - 1), cq));
    const std::size_t rank_dq1 =
        rank(boundary_matrix(cq, cells_sorted(q + 1)));
    return cq.size() - rank_dq - rank_dq1;
}

ChainComplex ChainComplex::induced_subcomplex(const std::set<CellId>& seed) const {
    std::set<CellId> keep;
    std::vector<CellId> queue(seed.begin(), seed.end());
    while (!queue.empty()) {
        CellId id = queue.back();
        queue.pop_back();
        if (!has_cell(id))
            throw std::invalid_argument("induced_subcomplex: unknown cell " + id);
        if (!keep.insert(id).second)
            continue;
        const Chain faces = boundary_of(id);
        for (const auto& face : faces.cells())
            queue.push_back(face);
    }
    std::vector<CellSpec> specs;
    for (const auto& id : order_) {
        if (!keep.count(id))
            continue;
        CellSpec s{id, dims_.at(id), {}};
        for (const auto& face : boundaries_.at(id).cells())
            s.boundary.push_back(face);
        specs.push_back(std::move(s));
    }
    return std::get<ChainComplex>(from_boundary_lists(specs));
}

namespace {
CellId toggle_star(const CellId& id) {
    if (!id.empty() && id.front() == '*')
        return id.substr(1);
    return "*" + id;
}
} // namespace

ChainComplex ChainComplex::dual_complex() const {
    std::vector<CellSpec> specs;
    for (int q = top_dim_; q >= 0; --q)
        for (const auto& id : cells(q)) {
            CellSpec s{toggle_star(id), top_dim_ - q, {}};
            for (const auto& cof : cofaces_.at(id))
                s.boundary.push_back(toggle_star(cof));
            specs.push_back(std::move(s));
        }
    return std::get<ChainComplex>(from_boundary_lists(specs));
}

Chain ChainComplex::chain_of(const std::vector<CellId>& ids) const {
    if (ids.empty())
        return Chain();
    Chain c(dim_of(ids.front()));
    for (const auto& id : ids) {
        if (dim_of(id) != c.dim())
            throw std::invalid_argument("chain_of: mixed dimensions");
        c.add(id);
    }
    return c;
}

Gf2Vector ChainComplex::to_vector(const Chain& c, const std::vector<CellId>& basis) const {
    std::map<CellId, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index[basis[i]] = i;
    Gf2Vector v(basis.size());
    for (const auto& id : c.cells()) {
        auto it = index.find(id);
        if (it == index.end())
            throw std::invalid_argument("to_vector: cell " + id + " outside basis");
        v.set(it->second, true);
    }
    return v;
}

Chain ChainComplex::from_vector(const Gf2Vector& v, const std::vector<CellId>& basis,
                                int dim) const {
    Chain c(dim);
    for (std::size_t i : v.support())
        c.add(basis[i]);
    return c;
}

} // namespace hdvf
