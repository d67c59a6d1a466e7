#include "hdvf/explicit_basis.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace hdvf {

namespace {

std::set<CellId> support_union(const std::vector<Chain>& gens, std::size_t mask) {
    std::set<CellId> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask & (std::size_t{1} << i))
            out.insert(gens[i].cells().begin(), gens[i].cells().end());
    return out;
}

std::vector<std::size_t> generators_without_private(const std::vector<Chain>& gens) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool has_private = false;
        for (const auto& id : gens[i].cells()) {
            bool elsewhere = false;
            for (std::size_t j = 0; j < gens.size() && !elsewhere; ++j)
                elsewhere = j != i && gens[j].contains(id);
            if (!elsewhere) {
                has_private = true;
                break;
            }
        }
        if (!has_private)
            out.push_back(i);
    }
    return out;
}

// Number of independent classes the given cycles span in H_q, computed
// against the boundary space of the ambient complex.
std::size_t class_rank(const ChainComplex& k, int q, const std::vector<Gf2Vector>& cycles) {
    const auto& basis = k.cells_sorted(q);
    const auto& up = k.cells_sorted(q + 1);
    Gf2Matrix bounds = k.boundary_matrix(basis, up);
    Gf2Matrix joint(basis.size(), cycles.size() + up.size());
    for (std::size_t j = 0; j < cycles.size(); ++j)
        joint.set_column(j, cycles[j]);
    joint.paste(0, cycles.size(), bounds);
    return rank(joint) - rank(bounds);
}

} // namespace

std::optional<std::string> validate_homology_basis(const HomologyBasis& b) {
    if (!b.complex)
        return "basis has no complex";
    const ChainComplex& k = *b.complex;
    if (b.q < 0)
        return "negative dimension";
    for (std::size_t i = 0; i < b.generators.size(); ++i) {
        const Chain& g = b.generators[i];
        if (g.empty())
            return "generator " + std::to_string(i + 1) + " is the zero chain";
        if (g.dim() != b.q)
            return "generator " + std::to_string(i + 1) + " has dimension " +
                   std::to_string(g.dim());
        for (const auto& id : g.cells()) {
            if (!k.has_cell(id))
                return "generator " + std::to_string(i + 1) + " uses unknown cell " + id;
            if (k.dim_of(id) != b.q)
                return "generator " + std::to_string(i + 1) + " uses cell " + id +
                       " of dimension " + std::to_string(k.dim_of(id));
        }
        if (!k.boundary(g).empty())
            return "generator " + std::to_string(i + 1) + " is not a cycle";
    }
    if (b.generators.size() != k.betti(b.q))
        return "generator count " + std::to_string(b.generators.size()) +
               " differs from the number of holes " + std::to_string(k.betti(b.q));
    std::vector<Gf2Vector> vecs;
    for (const auto& g : b.generators)
        vecs.push_back(k.to_vector(g, k.cells_sorted(b.q)));
    if (class_rank(k, b.q, vecs) != b.generators.size())
        return "generator classes are not independent";
    return std::nullopt;
}

ExplicitReport is_explicit(const HomologyBasis& b) {
    if (auto err = validate_homology_basis(b))
        throw PreconditionError("is_explicit: " + *err);
    const ChainComplex& k = *b.complex;
    ExplicitReport rep;
    rep.generators_without_private = generators_without_private(b.generators);
    const std::size_t beta = b.generators.size();
    const std::size_t full = beta == 0 ? 0 : (std::size_t{1} << beta) - 1;
    ChainComplex support = k.induced_subcomplex(support_union(b.generators, full));
    rep.support_betti = support.betti(b.q);
    rep.explicit_basis = rep.generators_without_private.empty() && rep.support_betti == beta;
    if (rep.explicit_basis) {
        rep.summary = "explicit";
    } else {
        std::string s;
        for (std::size_t i : rep.generators_without_private)
            s += (s.empty() ? "" : "; ") + std::string("generator ") + std::to_string(i + 1) +
                 " has no private cell";
        if (rep.support_betti != beta)
            s += (s.empty() ? "" : "; ") + std::string("support subcomplex carries ") +
                 std::to_string(rep.support_betti) + " independent cycles for " +
                 std::to_string(beta) + " generators";
        rep.summary = s;
    }
    return rep;
}

CharacterizationReport check_characterizations(const HomologyBasis& b, std::size_t limit) {
    if (auto err = validate_homology_basis(b))
        throw PreconditionError("check_characterizations: " + *err);
    const std::size_t beta = b.generators.size();
    if (beta > limit)
        throw std::invalid_argument(
            "check_characterizations: basis size " + std::to_string(beta) +
            " exceeds the subset enumeration limit " + std::to_string(limit) +
            "; use is_explicit instead");
    const ChainComplex& k = *b.complex;
    const int q = b.q;
    const auto& full_q = k.cells_sorted(q);
    const auto& below = k.cells_sorted(q - 1);
    std::vector<Gf2Vector> gen_vecs;
    for (const auto& g : b.generators)
        gen_vecs.push_back(k.to_vector(g, full_q));

    CharacterizationReport rep;
    rep.definition = is_explicit(b).explicit_basis;
    bool injective = generators_without_private(b.generators).empty();
    bool containment = true;
    for (std::size_t mask = 1; mask < (std::size_t{1} << beta); ++mask) {
        const std::size_t size_j = static_cast<std::size_t>(std::popcount(mask));
        std::set<CellId> cells = support_union(b.generators, mask);
        std::vector<CellId> cols(cells.begin(), cells.end());
        Gf2Matrix restricted = k.boundary_matrix(below, cols);
        std::vector<Gf2Vector> kernel = kernel_basis(restricted);
        // Cycles supported in the subset subcomplex, in full coordinates.
        std::vector<Gf2Vector> cycles;
        for (const auto& z : kernel) {
            Chain c = k.from_vector(z, cols, q);
            cycles.push_back(k.to_vector(c, full_q));
        }
        if (kernel.size() != size_j || class_rank(k, q, cycles) != size_j)
            injective = false;
        Gf2Matrix span(full_q.size(), size_j);
        std::size_t col = 0;
        for (std::size_t i = 0; i < beta; ++i)
            if (mask & (std::size_t{1} << i))
                span.set_column(col++, gen_vecs[i]);
        for (const auto& z : cycles)
            if (std::holds_alternative<NoSolution>(solve(span, z)))
                containment = false;
        if (!injective && !containment)
            break;
    }
    rep.injective_subsets = injective;
    rep.kernel_containment = containment;
    rep.agree = rep.injective_subsets == rep.kernel_containment &&
                rep.kernel_containment == rep.definition;
    return rep;
}

bool is_elementary(const ChainComplex& k, const Chain& c) {
    if (!k.boundary(c).empty())
        throw PreconditionError("is_elementary: chain is not a cycle");
    if (c.empty())
        return false;
    std::vector<CellId> cols(c.cells().begin(), c.cells().end());
    Gf2Matrix restricted = k.boundary_matrix(k.cells_sorted(c.dim() - 1), cols);
    return cols.size() - rank(restricted) == 1;
}

Hdvf hdvf_from_explicit_basis(const HomologyBasis& b) {
    ExplicitReport rep = is_explicit(b);
    if (!rep.explicit_basis)
        throw ExplicitnessError(std::move(rep));
    const ChainComplex& k = *b.complex;
    const int q = b.q;
    const std::size_t beta = b.generators.size();
    // Chosen private cell of each generator: lowest id works because any
    // private cell does.
    std::vector<CellId> privates;
    for (std::size_t i = 0; i < beta; ++i) {
        CellId pick;
        for (const auto& id : b.generators[i].cells()) {
            bool elsewhere = false;
            for (std::size_t j = 0; j < beta && !elsewhere; ++j)
                elsewhere = j != i && b.generators[j].contains(id);
            if (!elsewhere) {
                pick = id;
                break;
            }
        }
        privates.push_back(pick);
    }
    // Induction over the subcomplexes spanned by the first k generators;
    // the deque keeps every intermediate complex alive while fields still
    // reference it.
    std::deque<ChainComplex> arena;
    arena.push_back(std::get<ChainComplex>(ChainComplex::from_boundary_lists({})));
    Hdvf x = Hdvf::all_critical(arena.back());
    std::set<CellId> preserved;
    for (std::size_t step = 0; step < beta; ++step) {
        std::size_t mask = (std::size_t{1} << (step + 1)) - 1;
        arena.push_back(k.induced_subcomplex(support_union(b.generators, mask)));
        x = complete_preserving(x, arena.back(), preserved);
        const auto& crit = x.reduction().critical(q);
        if (crit.size() != step + 1)
            throw std::logic_error("hdvf_from_explicit_basis: unexpected critical count");
        CellId tau;
        for (const auto& id : crit)
            if (!preserved.count(id))
                tau = id;
        if (tau != privates[step]) {
            auto traded = x.op_w({privates[step]}, {tau});
            if (std::holds_alternative<InvalidOperation>(traded))
                throw std::logic_error("hdvf_from_explicit_basis: private trade rejected");
            x = std::get<Hdvf>(std::move(traded));
        }
        preserved.insert(privates[step]);
    }
    return complete_preserving(x, k, preserved);
}

ExplicitReport is_explicit_cohomology(const ChainComplex& k, int q,
                                      const std::vector<Chain>& cochains) {
    ChainComplex dual = k.dual_complex();
    const int dual_dim = k.top_dim() - q;
    std::vector<Chain> mapped;
    for (const auto& c : cochains) {
        std::vector<CellId> ids;
        for (const auto& id : c.cells())
            ids.push_back(id.empty() || id.front() == '*' ? id.substr(1) : "*" + id);
        Chain m(dual_dim);
        for (const auto& id : ids)
            m.add(id);
        mapped.push_back(std::move(m));
    }
    HomologyBasis dual_basis{&dual, dual_dim, std::move(mapped)};
    return is_explicit(dual_basis);
}

} // namespace hdvf
