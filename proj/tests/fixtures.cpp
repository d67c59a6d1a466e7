#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fixtures {

using namespace hdvf;

ChainComplex must_build(const std::vector<CellSpec>& specs) {
    auto built = ChainComplex::from_boundary_lists(specs);
    if (std::holds_alternative<ComplexError>(built))
        throw std::runtime_error("fixture rejected: " + std::get<ComplexError>(built).message);
    return std::get<ChainComplex>(std::move(built));
}

ChainComplex simplicial(const std::string& prefix,
                        const std::vector<std::array<int, 3>>& triangles,
                        const std::vector<std::array<int, 2>>& edges) {
    auto vname = [&](int i) { return prefix + "v" + std::to_string(i); };
    auto ename = [&](int i, int j) {
        if (i > j)
            std::swap(i, j);
        return prefix + "e" + std::to_string(i) + "_" + std::to_string(j);
    };
    std::set<int> verts;
    std::set<std::array<int, 2>> segs;
    for (auto [i, j] : edges) {
        if (i > j)
            std::swap(i, j);
        verts.insert({i, j});
        segs.insert({i, j});
    }
    for (auto t : triangles) {
        std::sort(t.begin(), t.end());
        verts.insert(t.begin(), t.end());
        segs.insert({t[0], t[1]});
        segs.insert({t[0], t[2]});
        segs.insert({t[1], t[2]});
    }
    std::vector<CellSpec> specs;
    for (int v : verts)
        specs.push_back({vname(v), 0, {}});
    for (auto [i, j] : segs)
        specs.push_back({ename(i, j), 1, {vname(i), vname(j)}});
    for (auto t : triangles) {
        std::sort(t.begin(), t.end());
        specs.push_back({prefix + "t" + std::to_string(t[0]) + "_" + std::to_string(t[1]) +
                             "_" + std::to_string(t[2]),
                         2,
                         {ename(t[0], t[1]), ename(t[0], t[2]), ename(t[1], t[2])}});
    }
    return must_build(specs);
}

ChainComplex single_vertex() {
    return must_build({{"v", 0, {}}});
}

ChainComplex hollow_triangle() {
    return must_build({
        {"V1", 0, {}},
        {"V2", 0, {}},
        {"V3", 0, {}},
        {"e12", 1, {"V1", "V2"}},
        {"e23", 1, {"V2", "V3"}},
        {"e13", 1, {"V1", "V3"}},
    });
}

Hdvf::Labels hollow_triangle_labels() {
    return {
        {"V1", Label::Critical},  {"V2", Label::Primary},   {"V3", Label::Primary},
        {"e12", Label::Secondary}, {"e23", Label::Secondary}, {"e13", Label::Critical},
    };
}

ChainComplex filled_triangle() {
    return must_build({
        {"V1", 0, {}},
        {"V2", 0, {}},
        {"V3", 0, {}},
        {"e12", 1, {"V1", "V2"}},
        {"e23", 1, {"V2", "V3"}},
        {"e13", 1, {"V1", "V3"}},
        {"F", 2, {"e12", "e23", "e13"}},
    });
}

ChainComplex worked_example() {
    return must_build({
        {"A", 0, {}},
        {"B", 0, {}},
        {"C", 0, {}},
        {"D", 0, {}},
        {"a", 1, {"A", "B"}},
        {"b", 1, {"A", "C"}},
        {"c", 1, {"B", "C"}},
        {"d", 1, {"B", "D"}},
        {"e", 1, {"C", "D"}},
        {"phi", 2, {"a", "b", "c"}},
    });
}

Hdvf::Labels worked_example_labels() {
    return {
        {"A", Label::Critical}, {"B", Label::Primary},  {"C", Label::Primary},
        {"D", Label::Critical}, {"a", Label::Secondary}, {"b", Label::Secondary},
        {"c", Label::Primary},  {"d", Label::Critical}, {"e", Label::Critical},
        {"phi", Label::Secondary},
    };
}

ChainComplex figure_eight() {
    return simplicial("f", {}, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
}

ChainComplex torus() {
    // Seven-vertex triangulation: faces {i, i+1, i+3} and {i, i+2, i+3}
    // modulo 7 cover each of the 21 edges exactly twice.
    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return simplicial("t", faces);
}

ChainComplex klein_bottle() {
    // 3x3 grid of squares split into triangles; left-right glued
    // straight, top-bottom glued with a flip.
    auto vx = [](int x, int y) {
        if (y == 3) {
            x = 3 - x;
            y = 0;
        }
        if (x == 3)
            x = 0;
        return "kv" + std::to_string(x) + "_" + std::to_string(y);
    };
    auto hedge = [](int x, int y) {
        if (y == 3) {
            x = 2 - x;
            y = 0;
        }
        return "kh" + std::to_string(x) + "_" + std::to_string(y);
    };
    auto vedge = [](int x, int y) {
        if (x == 3)
            x = 0;
        return "ku" + std::to_string(x) + "_" + std::to_string(y);
    };
    auto dedge = [](int x, int y) { return "kd" + std::to_string(x) + "_" + std::to_string(y); };

    std::vector<CellSpec> specs;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            specs.push_back({vx(x, y), 0, {}});
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            specs.push_back({hedge(x, y), 1, {vx(x, y), vx(x + 1, y)}});
            specs.push_back({vedge(x, y), 1, {vx(x, y), vx(x, y + 1)}});
            specs.push_back({dedge(x, y), 1, {vx(x, y), vx(x + 1, y + 1)}});
        }
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            specs.push_back({"ka" + std::to_string(x) + "_" + std::to_string(y),
                             2,
                             {hedge(x, y), vedge(x + 1, y), dedge(x, y)}});
            specs.push_back({"kb" + std::to_string(x) + "_" + std::to_string(y),
                             2,
                             {dedge(x, y), hedge(x, y + 1), vedge(x, y)}});
        }
    return must_build(specs);
}

ChainComplex projective_plane() {
    return simplicial("p", {
                               {1, 2, 3},
                               {1, 3, 4},
                               {1, 4, 5},
                               {1, 5, 6},
                               {1, 2, 6},
                               {2, 3, 5},
                               {3, 4, 6},
                               {2, 4, 5},
                               {3, 5, 6},
                               {2, 4, 6},
                           });
}

ChainComplex ring_with_chords() {
    return must_build({
        {"n1", 0, {}},
        {"n2", 0, {}},
        {"n3", 0, {}},
        {"n4", 0, {}},
        {"e12", 1, {"n1", "n2"}},
        {"e23", 1, {"n2", "n3"}},
        {"e34", 1, {"n3", "n4"}},
        {"e14", 1, {"n1", "n4"}},
        {"c13", 1, {"n1", "n3"}},
        {"c24", 1, {"n2", "n4"}},
    });
}

HomologyBasis ring_with_chords_basis(const ChainComplex& k) {
    return {&k, 1,
            {
                k.chain_of({"e12", "e23", "e34", "e14"}),
                k.chain_of({"c13", "e12", "c24", "e34"}),
                k.chain_of({"e12", "e23", "c13"}),
            }};
}

ChainComplex parallel_edges() {
    return must_build({
        {"u", 0, {}},
        {"v", 0, {}},
        {"a", 1, {"u", "v"}},
        {"b", 1, {"u", "v"}},
        {"c", 1, {"u", "v"}},
        {"d", 1, {"u", "v"}},
        {"F", 2, {"a", "b"}},
    });
}

HomologyBasis parallel_edges_basis(const ChainComplex& k) {
    return {&k, 1, {k.chain_of({"a", "c"}), k.chain_of({"b", "d"})}};
}

HomologyBasis parallel_edges_explicit_basis(const ChainComplex& k) {
    return {&k, 1, {k.chain_of({"a", "c"}), k.chain_of({"a", "d"})}};
}

std::vector<std::vector<int>> four_holes_grid() {
    std::vector<std::vector<int>> grid(5, std::vector<int>(5, 1));
    grid[1][1] = grid[1][3] = grid[3][1] = grid[3][3] = 0;
    return grid;
}

HomologyBasis four_holes_basis(const ChainComplex& k) {
    auto ring = [&](int x, int y) {
        return k.chain_of({
            "eh_" + std::to_string(x) + "_" + std::to_string(y),
            "eh_" + std::to_string(x) + "_" + std::to_string(y + 1),
            "ev_" + std::to_string(x) + "_" + std::to_string(y),
            "ev_" + std::to_string(x + 1) + "_" + std::to_string(y),
        });
    };
    return {&k, 1, {ring(1, 1), ring(1, 3), ring(3, 1), ring(3, 3)}};
}

ChainComplex random_cubical(std::mt19937_64& gen, std::size_t max_cells) {
    std::uniform_int_distribution<int> side(1, 3);
    std::bernoulli_distribution fill(0.7);
    for (;;) {
        const int w = side(gen), h = side(gen);
        std::vector<std::vector<int>> grid(h, std::vector<int>(w, 0));
        bool any = false;
        for (auto& row : grid)
            for (auto& square : row) {
                square = fill(gen) ? 1 : 0;
                any = any || square == 1;
            }
        if (!any)
            continue;
        ChainComplex k = ChainComplex::build_cubical(grid);
        if (k.cell_count() <= max_cells)
            return k;
    }
}

ChainComplex random_simplicial(std::mt19937_64& gen, std::size_t max_cells) {
    std::uniform_int_distribution<int> nverts(4, 6);
    std::bernoulli_distribution face(0.25);
    std::bernoulli_distribution loose_edge(0.2);
    for (;;) {
        const int n = nverts(gen);
        std::vector<std::array<int, 3>> tris;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int l = j + 1; l <= n; ++l)
                    if (face(gen))
                        tris.push_back({i, j, l});
        std::vector<std::array<int, 2>> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (loose_edge(gen))
                    edges.push_back({i, j});
        if (tris.empty() && edges.empty())
            continue;
        ChainComplex k = simplicial("r", tris, edges);
        if (k.cell_count() <= max_cells)
            return k;
    }
}

ChainComplex random_complex(std::mt19937_64& gen, std::size_t max_cells) {
    std::bernoulli_distribution coin(0.5);
    return coin(gen) ? random_cubical(gen, max_cells) : random_simplicial(gen, max_cells);
}

std::vector<CellId> random_order(std::mt19937_64& gen, const ChainComplex& k) {
    std::vector<CellId> remaining = k.cell_order();
    std::set<CellId> placed;
    std::vector<CellId> out;
    while (!remaining.empty()) {
        std::vector<std::size_t> ready;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            bool ok = true;
            const Chain faces = k.boundary_of(remaining[i]);
            for (const auto& face : faces.cells())
                ok = ok && placed.count(face) > 0;
            if (ok)
                ready.push_back(i);
        }
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        const std::size_t at = ready[pick(gen)];
        placed.insert(remaining[at]);
        out.push_back(remaining[at]);
        remaining.erase(remaining.begin() + static_cast<long>(at));
    }
    return out;
}

Hdvf random_valid_hdvf(std::mt19937_64& gen, const ChainComplex& k) {
    Hdvf x = Hdvf::all_critical(k);
    std::uniform_int_distribution<std::size_t> budget_dist(0, k.cell_count() / 2);
    const std::size_t budget = budget_dist(gen);
    for (std::size_t step = 0; step < budget; ++step) {
        // Any critical cell with a nonzero reduced boundary may trade
        // with any cell in that boundary; the entry is the new pivot.
        std::vector<std::pair<CellId, CellId>> candidates;
        for (const auto& [id, label] : x.labels()) {
            if (label != Label::Critical)
                continue;
            const Chain column = x.d_column(id);
            for (const auto& partner : column.cells())
                candidates.emplace_back(id, partner);
        }
        if (candidates.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const auto& [tau, sigma] = candidates[pick(gen)];
        Hdvf::Labels labels = x.labels();
        labels[tau] = Label::Secondary;
        labels[sigma] = Label::Primary;
        x = Hdvf::build(k, labels);
    }
    return x;
}

} // namespace fixtures
