#include "hdvf/tripartition.hpp"

#include <algorithm>

namespace hdvf {

namespace {

void require_q_cells(const ChainComplex& k, const std::set<CellId>& a, int q,
                     const char* who) {
    for (const auto& id : a)
        if (!k.has_cell(id) || k.dim_of(id) != q)
            throw std::invalid_argument(std::string(who) + ": " + id + " is not a " +
                                        std::to_string(q) + "-cell");
}

} // namespace

bool is_tree(const ChainComplex& k, const std::set<CellId>& a, int q) {
    require_q_cells(k, a, q, "is_tree");
    std::vector<CellId> cols(a.begin(), a.end());
    return rank(k.boundary_matrix(k.cells_sorted(q - 1), cols)) == cols.size();
}

bool is_cotree(const ChainComplex& k, const std::set<CellId>& a, int q) {
    require_q_cells(k, a, q, "is_cotree");
    std::vector<CellId> rows(a.begin(), a.end());
    // rank of the coboundary on a equals rank of the boundary restricted
    // to these rows.
    return rank(k.boundary_matrix(rows, k.cells_sorted(q + 1))) == rows.size();
}

bool is_maximal_tree(const ChainComplex& k, const std::set<CellId>& a, int q) {
    if (!is_tree(k, a, q))
        throw PreconditionError("is_maximal_tree: input is not a tree");
    for (const auto& id : k.cells_sorted(q)) {
        if (a.count(id))
            continue;
        std::set<CellId> grown = a;
        grown.insert(id);
        if (is_tree(k, grown, q))
            return false;
    }
    return true;
}

bool is_maximal_cotree(const ChainComplex& k, const std::set<CellId>& a, int q) {
    if (!is_cotree(k, a, q))
        throw PreconditionError("is_maximal_cotree: input is not a cotree");
    for (const auto& id : k.cells_sorted(q)) {
        if (a.count(id))
            continue;
        std::set<CellId> grown = a;
        grown.insert(id);
        if (is_cotree(k, grown, q))
            return false;
    }
    return true;
}

TriPartitionReport validate_tripartition(const ChainComplex& k, const TriPartition& t) {
    std::set<CellId> seen;
    std::size_t total = 0;
    for (const auto* part : {&t.cotree, &t.tree, &t.essential}) {
        total += part->size();
        seen.insert(part->begin(), part->end());
    }
    if (seen.size() != total)
        throw std::invalid_argument("validate_tripartition: sets overlap");
    const auto& cells = k.cells_sorted(t.q);
    if (seen.size() != cells.size() ||
        !std::all_of(cells.begin(), cells.end(), [&](const CellId& id) { return seen.count(id); }))
        throw std::invalid_argument(
            "validate_tripartition: sets do not partition the " + std::to_string(t.q) + "-cells");
    TriPartitionReport rep;
    std::string failures;
    auto note = [&failures](const std::string& f) {
        failures += (failures.empty() ? "" : "; ") + f;
    };
    if (!is_cotree(k, t.cotree, t.q))
        note("cotree contains a cocycle");
    else if (!is_maximal_cotree(k, t.cotree, t.q))
        note("cotree is not maximal");
    if (!is_tree(k, t.tree, t.q))
        note("tree contains a cycle");
    else if (!is_maximal_tree(k, t.tree, t.q))
        note("tree is not maximal");
    if (t.essential.size() != k.betti(t.q))
        note("essential count " + std::to_string(t.essential.size()) +
             " differs from the number of holes " + std::to_string(k.betti(t.q)));
    rep.valid = failures.empty();
    rep.failure = std::move(failures);
    return rep;
}

std::vector<TriPartition> hdvf_to_tripartitions(const Hdvf& x) {
    if (!x.is_perfect())
        throw PreconditionError("hdvf_to_tripartitions: field is not perfect");
    std::vector<TriPartition> layers;
    for (int q = 0; q <= x.complex().top_dim(); ++q) {
        const auto& red = x.reduction();
        TriPartition t;
        t.q = q;
        t.cotree = {red.primary(q).begin(), red.primary(q).end()};
        t.tree = {red.secondary(q).begin(), red.secondary(q).end()};
        t.essential = {red.critical(q).begin(), red.critical(q).end()};
        layers.push_back(std::move(t));
    }
    return layers;
}

Hdvf tripartitions_to_hdvf(const ChainComplex& k, const std::vector<TriPartition>& stack) {
    std::set<int> covered;
    for (const auto& t : stack) {
        if (covered.count(t.q))
            throw std::invalid_argument("tripartitions_to_hdvf: dimension " +
                                        std::to_string(t.q) + " appears twice");
        covered.insert(t.q);
        TriPartitionReport rep = validate_tripartition(k, t);
        if (!rep.valid)
            throw std::invalid_argument("tripartitions_to_hdvf: layer at dimension " +
                                        std::to_string(t.q) + " is invalid: " + rep.failure);
    }
    for (int q = 0; q <= k.top_dim(); ++q)
        if (!covered.count(q))
            throw std::invalid_argument("tripartitions_to_hdvf: no layer for dimension " +
                                        std::to_string(q));
    Hdvf::Labels labels;
    for (const auto& t : stack) {
        for (const auto& id : t.cotree)
            labels[id] = Label::Primary;
        for (const auto& id : t.tree)
            labels[id] = Label::Secondary;
        for (const auto& id : t.essential)
            labels[id] = Label::Critical;
    }
    Hdvf x = Hdvf::build(k, std::move(labels));
    if (!x.is_perfect())
        throw std::logic_error("tripartitions_to_hdvf: stack of valid layers is imperfect");
    return x;
}

Chain tripartition_cycle(const ChainComplex& k, const TriPartition& t, const CellId& tau) {
    if (t.tree.count(tau))
        throw PreconditionError("tripartition_cycle: " + tau + " lies in the tree");
    if (!t.cotree.count(tau) && !t.essential.count(tau))
        throw PreconditionError("tripartition_cycle: " + tau + " is not in the partition");
    std::vector<CellId> tree(t.tree.begin(), t.tree.end());
    const auto& below = k.cells_sorted(t.q - 1);
    Gf2Matrix restricted = k.boundary_matrix(below, tree);
    Chain c(t.q);
    c.add(tau);
    Gf2Vector rhs = k.to_vector(k.boundary(c), below);
    auto sol = solve(restricted, rhs);
    if (std::holds_alternative<NoSolution>(sol))
        throw PreconditionError("tripartition_cycle: no cycle in tau + Span(tree); "
                                "the tree is not maximal");
    return c + k.from_vector(std::get<Gf2Vector>(sol), tree, t.q);
}

Chain tripartition_cocycle(const ChainComplex& k, const TriPartition& t, const CellId& tau) {
    if (t.cotree.count(tau))
        throw PreconditionError("tripartition_cocycle: " + tau + " lies in the cotree");
    if (!t.tree.count(tau) && !t.essential.count(tau))
        throw PreconditionError("tripartition_cocycle: " + tau + " is not in the partition");
    std::vector<CellId> cotree(t.cotree.begin(), t.cotree.end());
    const auto& above = k.cells_sorted(t.q + 1);
    Gf2Matrix restricted = k.boundary_matrix(cotree, above).transposed();
    Chain c(t.q);
    c.add(tau);
    Gf2Vector rhs = k.to_vector(k.coboundary(c), above);
    auto sol = solve(restricted, rhs);
    if (std::holds_alternative<NoSolution>(sol))
        throw PreconditionError("tripartition_cocycle: no cocycle in tau + Span(cotree); "
                                "the cotree is not maximal");
    return c + k.from_vector(std::get<Gf2Vector>(sol), cotree, t.q);
}

} // namespace hdvf
