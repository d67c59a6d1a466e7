#pragma once

// Shared complexes, vector fields, bases, and randomized corpus builders
// used by the unit and acceptance suites.

#include "hdvf/explicit_basis.hpp"
#include "hdvf/hdvf.hpp"
#include "hdvf/persistence.hpp"

#include <array>
#include <random>
#include <vector>

namespace fixtures {

/// from_boundary_lists that throws on failure instead of returning the
/// error variant; fixtures are known-good by construction.
hdvf::ChainComplex must_build(const std::vector<hdvf::CellSpec>& specs);

/// Closure of a set of triangles (given as vertex index triples), with
/// optional extra edges (vertex index pairs). Cells are named
/// <prefix>v<i>, <prefix>e<i>_<j>, <prefix>t<i>_<j>_<k>.
hdvf::ChainComplex simplicial(const std::string& prefix,
                              const std::vector<std::array<int, 3>>& triangles,
                              const std::vector<std::array<int, 2>>& edges = {});

/// One 0-cell "v".
hdvf::ChainComplex single_vertex();

/// Triangle boundary: V1,V2,V3 and e12,e23,e13. Betti (1,1).
hdvf::ChainComplex hollow_triangle();

/// Valid field on the hollow triangle: P={V2,V3}, S={e12,e23},
/// C={V1,e13}. Perfect; g(e13) is the full triangle cycle.
hdvf::Hdvf::Labels hollow_triangle_labels();

/// Hollow triangle plus the face "F". Betti (1,0,0).
hdvf::ChainComplex filled_triangle();

/// Four vertices A-D, five edges a-e, one face phi with boundary a+b+c.
/// Betti (1,1,0).
hdvf::ChainComplex worked_example();

/// Valid but imperfect field on worked_example: P={B,C,c}, S={a,b,phi},
/// C={A,D,d,e}. Its d_1 block is [[1,1],[1,1]].
hdvf::Hdvf::Labels worked_example_labels();

/// Two edge triangles sharing the vertex f1; the six-edge cycle is not
/// elementary. Betti (1,2).
hdvf::ChainComplex figure_eight();

/// Seven-vertex triangulated torus. Betti (1,2,1).
hdvf::ChainComplex torus();

/// Nine-vertex triangulated Klein bottle. Betti (1,2,1) over GF(2).
hdvf::ChainComplex klein_bottle();

/// Six-vertex triangulated projective plane. Betti (1,1,1) over GF(2).
hdvf::ChainComplex projective_plane();

/// Square ring n1-n2-n3-n4 with both chords c13 and c24. Betti (1,3).
hdvf::ChainComplex ring_with_chords();

/// Valid 1-homology basis of ring_with_chords whose third generator has
/// no private cell; rejected by is_explicit.
hdvf::HomologyBasis ring_with_chords_basis(const hdvf::ChainComplex& k);

/// Two vertices joined by four parallel edges a,b,c,d and a face F with
/// boundary a+b. Betti (1,2,0).
hdvf::ChainComplex parallel_edges();

/// Valid basis {a+c, b+d} of parallel_edges whose support subcomplex
/// carries three independent cycles; rejected by is_explicit.
hdvf::HomologyBasis parallel_edges_basis(const hdvf::ChainComplex& k);

/// Explicit basis {a+c, a+d} of the same complex.
hdvf::HomologyBasis parallel_edges_explicit_basis(const hdvf::ChainComplex& k);

/// 5x5 square grid with four separated holes. Betti (1,4,0).
std::vector<std::vector<int>> four_holes_grid();

/// The four disjoint hole rings; an explicit 1-homology basis.
hdvf::HomologyBasis four_holes_basis(const hdvf::ChainComplex& k);

/// Random nonempty 2D cubical complex with at most max_cells cells.
hdvf::ChainComplex random_cubical(std::mt19937_64& gen, std::size_t max_cells);

/// Random 2-dimensional simplicial complex on up to six vertices, with
/// at most max_cells cells.
hdvf::ChainComplex random_simplicial(std::mt19937_64& gen, std::size_t max_cells);

/// Either of the above, evenly.
hdvf::ChainComplex random_complex(std::mt19937_64& gen, std::size_t max_cells);

/// Uniformly random face-respecting total order on the cells of k.
std::vector<hdvf::CellId> random_order(std::mt19937_64& gen, const hdvf::ChainComplex& k);

/// Valid field grown from the all-critical one by a random number of
/// random pairings; may be perfect or far from it.
hdvf::Hdvf random_valid_hdvf(std::mt19937_64& gen, const hdvf::ChainComplex& k);

} // namespace fixtures
