#pragma once

#include "hdvf/hdvf.hpp"

#include <optional>

namespace hdvf {

/// A q-homology basis: cycles whose classes are independent and span H_q.
struct HomologyBasis {
    const ChainComplex* complex = nullptr;
    int q = 0;
    std::vector<Chain> generators;
};

/// nullopt when b is a valid q-homology basis; otherwise the first failure
/// (wrong count, non-cycle, foreign cell, dependent classes).
std::optional<std::string> validate_homology_basis(const HomologyBasis& b);

struct ExplicitReport {
    bool explicit_basis = false;
    /// 0-based indices of generators without a private cell.
    std::vector<std::size_t> generators_without_private;
    /// Number of independent q-cycles supported in the union of the
    /// generator supports; must equal the generator count.
    std::size_t support_betti = 0;
    std::string summary;
};

/// Decides explicitness by the defining conditions: every generator keeps
/// a private cell and the union of supports carries no extra cycles.
/// Invalid bases raise PreconditionError.
ExplicitReport is_explicit(const HomologyBasis& b);

struct CharacterizationReport {
    /// Private cells plus, for every generator subset J, the inclusion of
    /// the J-support subcomplex inducing an injective map of rank |J|.
    bool injective_subsets = false;
    /// For every J, each cycle supported in the J-support subcomplex is a
    /// combination of the J generators.
    bool kernel_containment = false;
    /// The defining conditions, as in is_explicit.
    bool definition = false;
    bool agree = false;
};

/// Evaluates all three equivalent forms of explicitness by brute force
/// over the 2^beta generator subsets. Refuses bases larger than `limit`.
CharacterizationReport check_characterizations(const HomologyBasis& b, std::size_t limit = 6);

/// True iff the cycle c contains no smaller nonzero cycle: the boundary
/// map restricted to support(c) has a one-dimensional kernel. The zero
/// chain is not elementary; non-cycles raise PreconditionError.
bool is_elementary(const ChainComplex& k, const Chain& c);

struct ExplicitnessError : PreconditionError {
    explicit ExplicitnessError(ExplicitReport r)
        : PreconditionError("basis is not explicit: " + r.summary), report(std::move(r)) {}
    ExplicitReport report;
};

/// Realizes an explicit basis: returns a perfect vector field on
/// b.complex whose q-homology basis is exactly b.generators. Builds the
/// field by induction over the subcomplexes spanned by the first k
/// generators, keeping one chosen private cell per generator critical.
/// Non-explicit bases raise ExplicitnessError with the report.
Hdvf hdvf_from_explicit_basis(const HomologyBasis& b);

/// Explicitness for cochains: a q-cohomology basis of k is explicit iff
/// the corresponding (n-q)-chains form an explicit homology basis of the
/// dual complex.
ExplicitReport is_explicit_cohomology(const ChainComplex& k, int q,
                                      const std::vector<Chain>& cochains);

} // namespace hdvf
