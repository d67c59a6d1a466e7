#pragma once

#include "hdvf/hdvf.hpp"

namespace hdvf {

/// One-dimension slice of homology bookkeeping: a maximal cotree, a
/// maximal tree, and the essential cells carrying the holes.
struct TriPartition {
    int q = 0;
    std::set<CellId> cotree;
    std::set<CellId> tree;
    std::set<CellId> essential;
};

/// True iff Span(a) contains no nonzero cycle: the boundary restricted to
/// a has full column rank. All of a must be q-cells.
bool is_tree(const ChainComplex& k, const std::set<CellId>& a, int q);

/// True iff Span(a) contains no nonzero cocycle: the coboundary
/// restricted to a has full column rank.
bool is_cotree(const ChainComplex& k, const std::set<CellId>& a, int q);

/// Maximality by exhaustive augmentation: no single q-cell can be added.
/// Raises PreconditionError when a is not a tree (resp. cotree).
bool is_maximal_tree(const ChainComplex& k, const std::set<CellId>& a, int q);
bool is_maximal_cotree(const ChainComplex& k, const std::set<CellId>& a, int q);

struct TriPartitionReport {
    bool valid = false;
    std::string failure;
};

/// Checks maximal cotree, maximal tree, and essential count against the
/// Betti number. The three sets must partition the q-cells (anything else
/// throws); condition failures land in the report.
TriPartitionReport validate_tripartition(const ChainComplex& k, const TriPartition& t);

/// Slices a perfect field into layers: dimension q gives (primary,
/// secondary, critical) as (cotree, tree, essential).
std::vector<TriPartition> hdvf_to_tripartitions(const Hdvf& x);

/// Reassembles a stack of layers covering every dimension into a perfect
/// field: cotrees label primary, trees secondary, essentials critical.
/// An invalid or missing layer is reported by dimension.
Hdvf tripartitions_to_hdvf(const ChainComplex& k, const std::vector<TriPartition>& stack);

/// Unique cycle in tau + Span(tree), for tau in cotree or essential.
Chain tripartition_cycle(const ChainComplex& k, const TriPartition& t, const CellId& tau);

/// Unique cocycle in tau + Span(cotree), for tau in tree or essential.
Chain tripartition_cocycle(const ChainComplex& k, const TriPartition& t, const CellId& tau);

} // namespace hdvf
