#pragma once

#include "hdvf/hdvf.hpp"

#include <optional>

namespace hdvf {

/// Total insertion order on the cells of a complex, every face before its
/// cofaces. Step indices are 1-based. Values, when present, must be
/// monotone along the order; diagrams are indexed by step.
struct Filtration {
    const ChainComplex* complex = nullptr;
    std::vector<CellId> order;
    std::vector<double> values;
};

/// nullopt when f is valid; otherwise the first violation (missing or
/// duplicated cell, a face after its coface, non-monotone values).
std::optional<std::string> validate_filtration(const Filtration& f);

struct DiagramPoint {
    int q = 0;
    std::size_t birth = 0;
    std::optional<std::size_t> death; // nullopt encodes infinity
    bool operator==(const DiagramPoint&) const = default;
};

using PersistenceDiagram = std::vector<DiagramPoint>;

/// Sorted copy: by dimension, birth, death (infinite points last).
PersistenceDiagram normalized(PersistenceDiagram d);

struct PersistentGenerator {
    CellId cell;
    int q = 0;
    std::size_t birth = 0;
    std::optional<std::size_t> death;
    /// Canonical cycle of the final field at the cell; equals the step
    /// generator g^i(cell) on every step of the class's lifetime.
    Chain chain;
};

struct PersistenceResult {
    PersistenceDiagram diagram;
    std::vector<PersistentGenerator> generators;
    /// Cell labeling after each step (step i at index i-1); filled only
    /// when the run retains steps.
    std::vector<Hdvf::Labels> step_labels;
    Hdvf::Labels final_labels;
};

/// Left-to-right persistence: inserting cell tau as critical, a nonzero
/// reduced boundary column pairs tau (secondary) with the youngest
/// critical cell in its support (primary), closing that cell's class;
/// otherwise tau stays critical and opens one. Diagram points are
/// (dim, birth step, death step or infinity).
PersistenceResult compute_persistence(const Filtration& f, bool retain_steps = false);

/// Textbook boundary-matrix column reduction over the same order; used to
/// cross-check compute_persistence.
PersistenceDiagram persistence_oracle(const Filtration& f);

/// Complex spanned by the first `step` cells of the order.
ChainComplex prefix_complex(const Filtration& f, std::size_t step);

/// Homology basis of the step-i field at dimension q, ascending by
/// critical cell id. Uses retained labels when present, otherwise the
/// final field's canonical cycles of the classes alive at the step.
std::vector<Chain> persistent_basis(const Filtration& f, const PersistenceResult& r,
                                    std::size_t step, int q);

/// True iff every critical cell keeps one generator chain over its whole
/// lifetime and surviving classes match the final canonical cycles.
/// Requires a run with retained steps.
bool check_generator_preservation(const Filtration& f, const PersistenceResult& r);

} // namespace hdvf
