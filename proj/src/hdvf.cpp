#include "hdvf/hdvf.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdvf {

char label_char(Label l) {
    switch (l) {
    case Label::Primary: return 'P';
    case Label::Secondary: return 'S';
    case Label::Critical: return 'C';
    }
    return '?';
}

std::variant<Hdvf, HdvfInvalid> Hdvf::validate(const ChainComplex& k, Labels labels) {
    if (labels.size() != k.cell_count())
        throw std::invalid_argument("labeling does not cover the complex");
    for (const auto& [id, l] : labels) {
        (void)l;
        if (!k.has_cell(id))
            throw std::invalid_argument("label for unknown cell " + id);
    }
    const int n = k.top_dim();
    Hdvf x;
    x.complex_ = &k;
    x.labels_ = std::move(labels);
    auto& red = x.red_;
    red.p_.assign(n + 1, {});
    red.s_.assign(n + 1, {});
    red.c_.assign(n + 1, {});
    for (int q = 0; q <= n; ++q)
        for (const auto& id : k.cells_sorted(q)) {
            switch (x.labels_.at(id)) {
            case Label::Primary: red.p_[q].push_back(id); break;
            case Label::Secondary: red.s_[q].push_back(id); break;
            case Label::Critical: red.c_[q].push_back(id); break;
            }
        }
    auto secondary_at = [&](int q) -> const std::vector<CellId>& {
        static const std::vector<CellId> none;
        return (q >= 0 && q <= n) ? red.s_[q] : none;
    };
    auto primary_at = [&](int q) -> const std::vector<CellId>& {
        static const std::vector<CellId> none;
        return (q >= 0 && q <= n) ? red.p_[q] : none;
    };
    // The block of secondary q-cells against primary (q-1)-cells must be
    // square and invertible for every q, including q = 0 and q = n + 1
    // where one side is forced empty.
    for (int q = 0; q <= n + 1; ++q) {
        const auto& sq = secondary_at(q);
        const auto& pq = primary_at(q - 1);
        if (sq.size() != pq.size())
            return HdvfInvalid{q,
                               "secondary/primary block at dimension " + std::to_string(q) +
                                   " is not square: " + std::to_string(sq.size()) +
                                   " secondary against " + std::to_string(pq.size()) +
                                   " primary",
                               Chain(q)};
    }
    red.h_.assign(n + 1, {});
    red.f_.assign(n + 1, {});
    red.g_.assign(n + 1, {});
    red.d_.assign(n + 1, {});
    for (int q = 0; q <= n; ++q) {
        const auto& s_up = secondary_at(q + 1);
        Gf2Matrix block = k.boundary_matrix(red.p_[q], s_up);
        auto inv = invert(block);
        if (std::holds_alternative<Singular>(inv)) {
            const auto& w = std::get<Singular>(inv).kernel_vector;
            Chain witness(q + 1);
            for (std::size_t i : w.support())
                witness.add(s_up[i]);
            return HdvfInvalid{q + 1,
                               "secondary/primary block at dimension " + std::to_string(q + 1) +
                                   " is singular",
                               witness};
        }
        red.h_[q] = std::get<Gf2Matrix>(std::move(inv));
    }
    for (int q = 0; q <= n; ++q) {
        const auto& s_up = secondary_at(q + 1);
        red.f_[q] = k.boundary_matrix(red.c_[q], s_up) * red.h_[q];
        if (q > 0) {
            Gf2Matrix d_cp = k.boundary_matrix(red.p_[q - 1], red.c_[q]);
            red.g_[q] = red.h_[q - 1] * d_cp;
            red.d_[q] = k.boundary_matrix(red.c_[q - 1], red.c_[q]) +
                        k.boundary_matrix(red.c_[q - 1], red.s_[q]) * red.h_[q - 1] * d_cp;
        } else {
            red.g_[q] = Gf2Matrix(red.s_[q].size(), red.c_[q].size());
            red.d_[q] = Gf2Matrix(0, red.c_[q].size());
        }
    }
    return x;
}

Hdvf Hdvf::build(const ChainComplex& k, Labels labels) {
    auto r = validate(k, std::move(labels));
    if (std::holds_alternative<HdvfInvalid>(r))
        throw std::invalid_argument("invalid vector field: " + std::get<HdvfInvalid>(r).reason);
    return std::get<Hdvf>(std::move(r));
}

Hdvf Hdvf::all_critical(const ChainComplex& k) {
    Labels labels;
    for (const auto& id : k.cell_order())
        labels[id] = Label::Critical;
    return build(k, std::move(labels));
}

Label Hdvf::label(const CellId& id) const {
    auto it = labels_.find(id);
    if (it == labels_.end())
        throw std::invalid_argument("unknown cell " + id);
    return it->second;
}

bool Hdvf::is_perfect() const {
    for (const auto& d : red_.d_)
        if (!d.is_zero())
            return false;
    return true;
}

namespace {

Chain project(const Chain& x, const Hdvf::Labels& labels, Label which) {
    Chain out(x.dim());
    for (const auto& id : x.cells())
        if (labels.at(id) == which)
            out.add(id);
    return out;
}

} // namespace

Chain Hdvf::apply_f(const Chain& x) const {
    const int q = x.dim();
    Chain out = project(x, labels_, Label::Critical);
    Chain xp = project(x, labels_, Label::Primary);
    if (!xp.empty()) {
        Gf2Vector v = complex_->to_vector(xp, red_.primary(q));
        out += complex_->from_vector(red_.f_block(q) * v, red_.critical(q), q);
    }
    return out;
}

Chain Hdvf::apply_g(const Chain& c) const {
    const int q = c.dim();
    for (const auto& id : c.cells())
        if (labels_.at(id) != Label::Critical)
            throw std::invalid_argument("apply_g: " + id + " is not critical");
    Chain out = c;
    if (!c.empty()) {
        Gf2Vector v = complex_->to_vector(c, red_.critical(q));
        out += complex_->from_vector(red_.g_block(q) * v, red_.secondary(q), q);
    }
    return out;
}

Chain Hdvf::apply_h(const Chain& x) const {
    const int q = x.dim();
    Chain xp = project(x, labels_, Label::Primary);
    Chain out(q + 1);
    if (!xp.empty()) {
        Gf2Vector v = complex_->to_vector(xp, red_.primary(q));
        out += complex_->from_vector(red_.h_block(q) * v, red_.secondary(q + 1), q + 1);
    }
    return out;
}

Chain Hdvf::apply_d(const Chain& c) const {
    const int q = c.dim();
    for (const auto& id : c.cells())
        if (labels_.at(id) != Label::Critical)
            throw std::invalid_argument("apply_d: " + id + " is not critical");
    Chain out(q - 1);
    if (!c.empty()) {
        Gf2Vector v = complex_->to_vector(c, red_.critical(q));
        out += complex_->from_vector(red_.d_block(q) * v, red_.critical(q - 1), q - 1);
    }
    return out;
}

Chain Hdvf::apply_f_star(const CellId& critical) const {
    if (label(critical) != Label::Critical)
        throw std::invalid_argument("apply_f_star: " + critical + " is not critical");
    const int q = complex_->dim_of(critical);
    const auto& crit = red_.critical(q);
    const std::size_t row = static_cast<std::size_t>(
        std::lower_bound(crit.begin(), crit.end(), critical) - crit.begin());
    Chain out(q);
    out.add(critical);
    const auto& f = red_.f_block(q);
    for (std::size_t j : f.row(row).support())
        out.add(red_.primary(q)[j]);
    return out;
}

Chain Hdvf::d_column(const CellId& critical) const {
    Chain c(complex_->dim_of(critical));
    c.add(critical);
    return apply_d(c);
}

Chain Hdvf::canonical_cycle(const Chain& x) const {
    if (!is_perfect())
        throw std::logic_error("canonical_cycle requires a perfect vector field");
    return x + apply_h(complex_->boundary(x));
}

Chain Hdvf::canonical_cocycle(const Chain& x) const {
    if (!is_perfect())
        throw std::logic_error("canonical_cocycle requires a perfect vector field");
    const int q = x.dim();
    Chain cob = project(complex_->coboundary(x), labels_, Label::Secondary);
    Chain out = x;
    if (!cob.empty()) {
        Gf2Vector v = complex_->to_vector(cob, red_.secondary(q + 1));
        out += complex_->from_vector(red_.h_block(q).transposed() * v, red_.primary(q), q);
    }
    return out;
}

std::vector<Chain> Hdvf::homology_basis(int q) const {
    if (!is_perfect())
        throw std::logic_error("homology_basis requires a perfect vector field");
    std::vector<Chain> out;
    for (const auto& id : red_.critical(q)) {
        Chain c(q);
        c.add(id);
        out.push_back(apply_g(c));
    }
    return out;
}

std::vector<Chain> Hdvf::cohomology_basis(int q) const {
    if (!is_perfect())
        throw std::logic_error("cohomology_basis requires a perfect vector field");
    std::vector<Chain> out;
    for (const auto& id : red_.critical(q))
        out.push_back(apply_f_star(id));
    return out;
}

namespace {

// Trade matrix for W/M validity, rows and cols over sorted cell sets.
// Cross-dimension entries vanish because f and g preserve dimension.
Gf2Matrix trade_matrix(const std::vector<CellId>& rows, const std::vector<Chain>& col_images,
                       const std::map<CellId, std::size_t>& row_index) {
    Gf2Matrix m(rows.size(), col_images.size());
    for (std::size_t j = 0; j < col_images.size(); ++j)
        for (const auto& id : col_images[j].cells()) {
            auto it = row_index.find(id);
            if (it != row_index.end())
                m.set(it->second, j, true);
        }
    return m;
}

} // namespace

std::variant<Hdvf, InvalidOperation> Hdvf::op_w(const std::set<CellId>& sigma,
                                                const std::set<CellId>& gamma) const {
    if (sigma.size() != gamma.size())
        throw std::invalid_argument("op_w: trade sets differ in size");
    for (const auto& id : sigma)
        if (label(id) != Label::Secondary)
            throw std::invalid_argument("op_w: " + id + " is not secondary");
    for (const auto& id : gamma)
        if (label(id) != Label::Critical)
            throw std::invalid_argument("op_w: " + id + " is not critical");
    std::vector<CellId> rows(sigma.begin(), sigma.end());
    std::vector<CellId> cols(gamma.begin(), gamma.end());
    std::map<CellId, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index[rows[i]] = i;
    std::vector<Chain> images;
    for (const auto& id : cols) {
        Chain c(complex_->dim_of(id));
        c.add(id);
        images.push_back(apply_g(c));
    }
    auto inv = invert(trade_matrix(rows, images, row_index));
    if (std::holds_alternative<Singular>(inv)) {
        std::vector<CellId> support;
        for (std::size_t i : std::get<Singular>(inv).kernel_vector.support())
            support.push_back(cols[i]);
        return InvalidOperation{"g image of the traded critical cells meets the chosen "
                                "secondary cells degenerately",
                                complex_->chain_of(support)};
    }
    Labels labels = labels_;
    for (const auto& id : sigma)
        labels[id] = Label::Critical;
    for (const auto& id : gamma)
        labels[id] = Label::Secondary;
    auto next = validate(*complex_, std::move(labels));
    if (std::holds_alternative<HdvfInvalid>(next))
        throw std::logic_error("op_w produced an invalid field despite an invertible trade");
    return std::get<Hdvf>(std::move(next));
}

std::variant<Hdvf, InvalidOperation> Hdvf::op_m(const std::set<CellId>& pi,
                                                const std::set<CellId>& gamma) const {
    if (pi.size() != gamma.size())
        throw std::invalid_argument("op_m: trade sets differ in size");
    for (const auto& id : pi)
        if (label(id) != Label::Primary)
            throw std::invalid_argument("op_m: " + id + " is not primary");
    for (const auto& id : gamma)
        if (label(id) != Label::Critical)
            throw std::invalid_argument("op_m: " + id + " is not critical");
    std::vector<CellId> rows(gamma.begin(), gamma.end());
    std::vector<CellId> cols(pi.begin(), pi.end());
    std::map<CellId, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index[rows[i]] = i;
    std::vector<Chain> images;
    for (const auto& id : cols) {
        Chain c(complex_->dim_of(id));
        c.add(id);
        images.push_back(apply_f(c));
    }
    auto inv = invert(trade_matrix(rows, images, row_index));
    if (std::holds_alternative<Singular>(inv)) {
        std::vector<CellId> support;
        for (std::size_t i : std::get<Singular>(inv).kernel_vector.support())
            support.push_back(cols[i]);
        return InvalidOperation{"f image of the traded primary cells meets the chosen "
                                "critical cells degenerately",
                                complex_->chain_of(support)};
    }
    Labels labels = labels_;
    for (const auto& id : pi)
        labels[id] = Label::Critical;
    for (const auto& id : gamma)
        labels[id] = Label::Primary;
    auto next = validate(*complex_, std::move(labels));
    if (std::holds_alternative<HdvfInvalid>(next))
        throw std::logic_error("op_m produced an invalid field despite an invertible trade");
    return std::get<Hdvf>(std::move(next));
}

Hdvf complete(Hdvf x) {
    for (;;) {
        const ChainComplex& k = x.complex();
        CellId pick;
        Chain column;
        bool found = false;
        // Lowest-id critical cell with a nonzero d-column, across all dims.
        std::vector<CellId> criticals;
        for (int q = 0; q <= k.top_dim(); ++q)
            for (const auto& id : x.reduction().critical(q))
                criticals.push_back(id);
        std::sort(criticals.begin(), criticals.end());
        for (const auto& id : criticals) {
            Chain d = x.d_column(id);
            if (!d.empty()) {
                pick = id;
                column = d;
                found = true;
                break;
            }
        }
        if (!found)
            return x;
        const CellId partner = *column.cells().begin();
        Hdvf::Labels labels = x.labels();
        labels[pick] = Label::Secondary;
        labels[partner] = Label::Primary;
        x = Hdvf::build(x.complex(), std::move(labels));
    }
}

Hdvf extend(const Hdvf& x, const ChainComplex& larger) {
    const ChainComplex& small = x.complex();
    for (const auto& id : small.cell_order()) {
        if (!larger.has_cell(id) || larger.dim_of(id) != small.dim_of(id))
            throw std::invalid_argument("extend: target complex lacks cell " + id);
        if (!(larger.boundary_of(id) == small.boundary_of(id)))
            throw std::invalid_argument("extend: boundary of " + id + " differs");
    }
    Hdvf::Labels labels = x.labels();
    for (const auto& id : larger.cell_order())
        if (!labels.count(id))
            labels[id] = Label::Critical;
    return Hdvf::build(larger, std::move(labels));
}

Hdvf complete_preserving(const Hdvf& x, const ChainComplex& larger,
                         const std::set<CellId>& preserve) {
    if (!x.is_perfect())
        throw PreconditionError("complete_preserving: field is not perfect");
    int q = -1;
    for (const auto& id : preserve) {
        if (x.label(id) != Label::Critical)
            throw PreconditionError("complete_preserving: " + id + " is not critical");
        const int d = x.complex().dim_of(id);
        if (q == -1)
            q = d;
        else if (d != q)
            throw PreconditionError("complete_preserving: preserved cells span dimensions");
    }
    if (!preserve.empty()) {
        // The preserved cycle classes must stay independent in the larger
        // complex: comparing ranks against the boundary space detects any
        // that die or merge.
        const auto& basis = larger.cells_sorted(q);
        const auto& up = larger.cells_sorted(q + 1);
        Gf2Matrix bounds = larger.boundary_matrix(basis, up);
        Gf2Matrix joint(basis.size(), preserve.size() + up.size());
        std::size_t j = 0;
        for (const auto& id : preserve) {
            Chain c(q);
            c.add(id);
            joint.set_column(j++, larger.to_vector(x.apply_g(c), basis));
        }
        joint.paste(0, preserve.size(), bounds);
        if (rank(joint) - rank(bounds) != preserve.size())
            throw PreconditionError(
                "complete_preserving: preserved classes are dependent in the larger complex");
    }
    Hdvf done = complete(extend(x, larger));
    std::vector<CellId> demoted;
    for (const auto& id : preserve) {
        if (done.label(id) == Label::Secondary)
            throw std::logic_error("complete_preserving: preserved cell became secondary");
        if (done.label(id) == Label::Primary)
            demoted.push_back(id);
    }
    if (demoted.empty())
        return done;
    // Trade the demoted cells back to critical against critical q-cells
    // outside the preserved set; f restricted that way has full column
    // rank, so Gaussian pivoting always finds partners.
    std::vector<CellId> pool;
    for (const auto& id : done.reduction().critical(q))
        if (!preserve.count(id))
            pool.push_back(id);
    Gf2Matrix m(pool.size(), demoted.size());
    for (std::size_t jj = 0; jj < demoted.size(); ++jj) {
        Chain c(q);
        c.add(demoted[jj]);
        Chain img = done.apply_f(c);
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (img.contains(pool[i]))
                m.set(i, jj, true);
    }
    std::set<CellId> partners;
    std::vector<bool> used(pool.size(), false);
    for (std::size_t col = 0; col < demoted.size(); ++col) {
        std::size_t pivot = pool.size();
        for (std::size_t r = 0; r < pool.size(); ++r)
            if (!used[r] && m.get(r, col)) {
                pivot = r;
                break;
            }
        if (pivot == pool.size())
            throw std::logic_error("complete_preserving: no pivot row for demoted cell");
        used[pivot] = true;
        partners.insert(pool[pivot]);
        for (std::size_t r = 0; r < pool.size(); ++r)
            if (r != pivot && m.get(r, col))
                m.xor_row(r, pivot);
    }
    auto traded = done.op_m(std::set<CellId>(demoted.begin(), demoted.end()), partners);
    if (std::holds_alternative<InvalidOperation>(traded))
        throw std::logic_error("complete_preserving: pivot trade was rejected");
    return std::get<Hdvf>(std::move(traded));
}

} // namespace hdvf
