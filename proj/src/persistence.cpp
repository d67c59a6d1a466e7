#include "hdvf/persistence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hdvf {

std::optional<std::string> validate_filtration(const Filtration& f) {
    if (!f.complex)
        return "filtration has no complex";
    const ChainComplex& k = *f.complex;
    if (f.order.size() != k.cell_count())
        return "order lists " + std::to_string(f.order.size()) + " cells, complex has " +
               std::to_string(k.cell_count());
    std::map<CellId, std::size_t> step;
    for (std::size_t i = 0; i < f.order.size(); ++i) {
        const CellId& id = f.order[i];
        if (!k.has_cell(id))
            return "order lists unknown cell " + id;
        if (!step.emplace(id, i + 1).second)
            return "cell " + id + " appears twice in the order";
    }
    for (const auto& id : f.order) {
        const Chain faces = k.boundary_of(id);
        for (const auto& face : faces.cells())
            if (step.at(face) > step.at(id))
                return "face " + face + " of " + id + " is inserted after it";
    }
    if (!f.values.empty()) {
        if (f.values.size() != f.order.size())
            return "value count differs from order length";
        for (std::size_t i = 1; i < f.values.size(); ++i)
            if (f.values[i] < f.values[i - 1])
                return "values decrease at step " + std::to_string(i + 1);
    }
    return std::nullopt;
}

PersistenceDiagram normalized(PersistenceDiagram d) {
    auto key = [](const DiagramPoint& p) {
        return std::tuple<int, std::size_t, std::size_t>(
            p.q, p.birth, p.death ? *p.death : std::size_t(-1));
    };
    std::sort(d.begin(), d.end(),
              [&](const DiagramPoint& a, const DiagramPoint& b) { return key(a) < key(b); });
    return d;
}

ChainComplex prefix_complex(const Filtration& f, std::size_t step) {
    if (step > f.order.size())
        throw std::invalid_argument("prefix_complex: step beyond the filtration");
    std::vector<CellSpec> specs;
    for (std::size_t i = 0; i < step; ++i) {
        const CellId& id = f.order[i];
        CellSpec s{id, f.complex->dim_of(id), {}};
        const Chain faces = f.complex->boundary_of(id);
        for (const auto& face : faces.cells())
            s.boundary.push_back(face);
        specs.push_back(std::move(s));
    }
    return std::get<ChainComplex>(ChainComplex::from_boundary_lists(specs));
}

PersistenceResult compute_persistence(const Filtration& f, bool retain_steps) {
    if (auto err = validate_filtration(f))
        throw std::invalid_argument("compute_persistence: " + *err);
    PersistenceResult out;
    Hdvf::Labels labels;
    std::map<CellId, std::size_t> birth;
    const std::size_t n = f.order.size();
    for (std::size_t i = 1; i <= n; ++i) {
        const CellId& tau = f.order[i - 1];
        ChainComplex prefix = prefix_complex(f, i);
        labels[tau] = Label::Critical;
        Hdvf x = Hdvf::build(prefix, labels);
        Chain column = x.d_column(tau);
        if (column.empty()) {
            birth[tau] = i;
        } else {
            // Youngest critical cell in the reduced boundary closes.
            CellId partner;
            std::size_t partner_birth = 0;
            for (const auto& id : column.cells())
                if (birth.at(id) > partner_birth) {
                    partner_birth = birth.at(id);
                    partner = id;
                }
            labels[tau] = Label::Secondary;
            labels[partner] = Label::Primary;
            x = Hdvf::build(prefix, labels);
            if (!x.is_perfect())
                throw std::logic_error("compute_persistence: step field is not perfect");
            out.diagram.push_back(
                {f.complex->dim_of(partner), partner_birth, std::optional<std::size_t>(i)});
            out.generators.push_back({partner, f.complex->dim_of(partner), partner_birth,
                                      std::optional<std::size_t>(i), Chain()});
        }
        if (retain_steps)
            out.step_labels.push_back(labels);
    }
    for (const auto& [id, b] : birth)
        if (labels.at(id) == Label::Critical) {
            out.diagram.push_back({f.complex->dim_of(id), b, std::nullopt});
            out.generators.push_back({id, f.complex->dim_of(id), b, std::nullopt, Chain()});
        }
    out.final_labels = labels;
    Hdvf final_field = Hdvf::build(*f.complex, labels);
    for (auto& g : out.generators) {
        Chain c(g.q);
        c.add(g.cell);
        g.chain = final_field.canonical_cycle(c);
    }
    std::sort(out.generators.begin(), out.generators.end(),
              [](const PersistentGenerator& a, const PersistentGenerator& b) {
                  auto key = [](const PersistentGenerator& g) {
                      return std::tuple<int, std::size_t, std::size_t, CellId>(
                          g.q, g.birth, g.death ? *g.death : std::size_t(-1), g.cell);
                  };
                  return key(a) < key(b);
              });
    out.diagram = normalized(std::move(out.diagram));
    return out;
}

PersistenceDiagram persistence_oracle(const Filtration& f) {
    if (auto err = validate_filtration(f))
        throw std::invalid_argument("persistence_oracle: " + *err);
    const std::size_t n = f.order.size();
    std::map<CellId, std::size_t> step;
    for (std::size_t i = 0; i < n; ++i)
        step[f.order[i]] = i + 1;
    std::vector<std::set<std::size_t>> cols(n + 1);
    std::map<std::size_t, std::size_t> owner_of_low;
    std::set<std::size_t> paired_births;
    PersistenceDiagram diagram;
    for (std::size_t j = 1; j <= n; ++j) {
        std::set<std::size_t> col;
        const Chain faces = f.complex->boundary_of(f.order[j - 1]);
        for (const auto& face : faces.cells())
            col.insert(step.at(face));
        while (!col.empty()) {
            auto it = owner_of_low.find(*col.rbegin());
            if (it == owner_of_low.end())
                break;
            for (std::size_t s : cols[it->second]) {
                if (col.count(s))
                    col.erase(s);
                else
                    col.insert(s);
            }
        }
        if (!col.empty()) {
            const std::size_t b = *col.rbegin();
            owner_of_low[b] = j;
            cols[j] = std::move(col);
            paired_births.insert(b);
            diagram.push_back({f.complex->dim_of(f.order[b - 1]), b,
                               std::optional<std::size_t>(j)});
        }
    }
    // Positive cells (their column reduced to zero) that no later cell
    // paired with carry classes to infinity.
    for (std::size_t b = 1; b <= n; ++b)
        if (cols[b].empty() && !paired_births.count(b))
            diagram.push_back({f.complex->dim_of(f.order[b - 1]), b, std::nullopt});
    return normalized(std::move(diagram));
}

std::vector<Chain> persistent_basis(const Filtration& f, const PersistenceResult& r,
                                    std::size_t step, int q) {
    if (step > f.order.size())
        throw std::invalid_argument("persistent_basis: step beyond the filtration");
    if (step == 0)
        return {};
    if (r.step_labels.size() == f.order.size()) {
        ChainComplex prefix = prefix_complex(f, step);
        Hdvf x = Hdvf::build(prefix, r.step_labels[step - 1]);
        return x.homology_basis(q);
    }
    // Without retained steps the final canonical cycles stand in for the
    // step generators; they agree on every step of each class's lifetime.
    std::vector<const PersistentGenerator*> alive;
    for (const auto& g : r.generators)
        if (g.q == q && g.birth <= step && (!g.death || *g.death > step))
            alive.push_back(&g);
    std::sort(alive.begin(), alive.end(),
              [](const PersistentGenerator* a, const PersistentGenerator* b) {
                  return a->cell < b->cell;
              });
    std::vector<Chain> out;
    for (const auto* g : alive)
        out.push_back(g->chain);
    return out;
}

bool check_generator_preservation(const Filtration& f, const PersistenceResult& r) {
    if (r.step_labels.size() != f.order.size())
        throw PreconditionError("check_generator_preservation: run did not retain steps");
    std::map<CellId, Chain> seen;
    for (std::size_t i = 1; i <= f.order.size(); ++i) {
        ChainComplex prefix = prefix_complex(f, i);
        Hdvf x = Hdvf::build(prefix, r.step_labels[i - 1]);
        for (int q = 0; q <= prefix.top_dim(); ++q)
            for (const auto& id : x.reduction().critical(q)) {
                Chain c(q);
                c.add(id);
                Chain gen = x.apply_g(c);
                auto [it, fresh] = seen.emplace(id, gen);
                if (!fresh && !(it->second == gen))
                    return false;
            }
    }
    for (const auto& g : r.generators)
        if (!g.death && !(seen.at(g.cell) == g.chain))
            return false;
    return true;
}

} // namespace hdvf
