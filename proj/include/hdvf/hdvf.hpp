#pragma once

#include "hdvf/complex.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <variant>

namespace hdvf {

enum class Label { Primary, Secondary, Critical };

char label_char(Label l);

/// Why a labeling is not a valid vector field: at some dimension q the
/// secondary/primary boundary block is non-square or singular. For the
/// singular case `witness` is a combination of secondary q-cells whose
/// boundary has no primary part.
struct HdvfInvalid {
    int dim = 0;
    std::string reason;
    Chain witness;
};

/// Why a W or M operation cannot be applied: the trade matrix is singular.
/// `witness` is a kernel combination of the cells proposed for trading.
struct InvalidOperation {
    std::string reason;
    Chain witness;
};

/// Reduction data of a valid labeling, all blocks indexed per dimension.
/// Cell lists are sorted by id; matrix rows and columns follow them.
class Reduction {
public:
    const std::vector<CellId>& primary(int q) const { return at(p_, q); }
    const std::vector<CellId>& secondary(int q) const { return at(s_, q); }
    const std::vector<CellId>& critical(int q) const { return at(c_, q); }

    /// h_q: Span P_q -> Span S_{q+1}. Rows secondary(q+1), cols primary(q).
    const Gf2Matrix& h_block(int q) const { return at(h_, q); }
    /// Primary-to-critical part of f_q. Rows critical(q), cols primary(q).
    const Gf2Matrix& f_block(int q) const { return at(f_, q); }
    /// Critical-to-secondary part of g_q. Rows secondary(q), cols critical(q).
    const Gf2Matrix& g_block(int q) const { return at(g_, q); }
    /// Reduced boundary d_q. Rows critical(q-1), cols critical(q).
    const Gf2Matrix& d_block(int q) const { return at(d_, q); }

private:
    template <class T>
    static const T& at(const std::vector<T>& v, int q) {
        static const T none{};
        if (q < 0 || q >= static_cast<int>(v.size()))
            return none;
        return v[static_cast<std::size_t>(q)];
    }
    std::vector<std::vector<CellId>> p_, s_, c_;
    std::vector<Gf2Matrix> h_, f_, g_, d_;
    friend class Hdvf;
};

/// Homological discrete vector field: a labeling of the cells of a complex
/// as primary, secondary, or critical whose secondary/primary boundary
/// blocks are invertible in every dimension. Carries the full reduction
/// (f, g, h, d) computed at construction.
class Hdvf {
public:
    using Labels = std::map<CellId, Label>;

    /// Checks the labeling and computes the reduction. The labeling must
    /// assign every cell of `k` exactly once (anything else throws); an
    /// invalid vector field is reported with dimension and witness.
    static std::variant<Hdvf, HdvfInvalid> validate(const ChainComplex& k, Labels labels);

    /// validate() that throws on invalid labelings.
    static Hdvf build(const ChainComplex& k, Labels labels);

    /// The trivial field: every cell critical.
    static Hdvf all_critical(const ChainComplex& k);

    const ChainComplex& complex() const { return *complex_; }
    const Labels& labels() const { return labels_; }
    Label label(const CellId& id) const;
    const Reduction& reduction() const { return red_; }

    /// True when every reduced boundary d_q vanishes; homology is then
    /// carried by the critical cells alone.
    bool is_perfect() const;

    Chain apply_f(const Chain& x) const;
    Chain apply_g(const Chain& c) const;
    Chain apply_h(const Chain& x) const;
    Chain apply_d(const Chain& c) const;
    /// Row of f read as a cochain: the critical cell plus the primary
    /// q-cells mapped onto it.
    Chain apply_f_star(const CellId& critical) const;

    /// d-column of one critical cell.
    Chain d_column(const CellId& critical) const;

    /// Unique cycle in x + Span(secondary). Perfect fields only.
    Chain canonical_cycle(const Chain& x) const;
    /// Unique cocycle in x + Span(primary). Perfect fields only.
    Chain canonical_cocycle(const Chain& x) const;

    /// g of each critical q-cell, ascending by cell id. Perfect only.
    std::vector<Chain> homology_basis(int q) const;
    /// f-star of each critical q-cell, ascending by cell id. Perfect only.
    std::vector<Chain> cohomology_basis(int q) const;

    /// Trade secondary cells `sigma` against critical cells `gamma`:
    /// sigma become critical, gamma become secondary. Applicable iff the
    /// matrix of <g(gamma), sigma> is invertible.
    std::variant<Hdvf, InvalidOperation> op_w(const std::set<CellId>& sigma,
                                              const std::set<CellId>& gamma) const;

    /// Trade primary cells `pi` against critical cells `gamma`: pi become
    /// critical, gamma become primary. Applicable iff the matrix of
    /// <f(pi), gamma> is invertible.
    std::variant<Hdvf, InvalidOperation> op_m(const std::set<CellId>& pi,
                                              const std::set<CellId>& gamma) const;

private:
    Hdvf() = default;
    const ChainComplex* complex_ = nullptr;
    Labels labels_;
    Reduction red_;
};

/// Pairs critical cells until the field is perfect: repeatedly takes the
/// lowest-id critical cell with a nonzero d-column and trades it against
/// the lowest-id critical cell in that column. Terminates on any finite
/// complex because each pairing removes two critical cells.
Hdvf complete(Hdvf x);

/// Same labeling on a larger complex; the added cells are critical.
/// `larger` must contain every cell of x's complex with equal boundary.
Hdvf extend(const Hdvf& x, const ChainComplex& larger);

/// Extends a perfect field to a larger complex and completes it without
/// losing the classes of the given critical q-cells: afterwards every cell
/// of `preserve` is critical again and its g-cycle class is unchanged.
/// Preconditions: x perfect, `preserve` critical cells of one dimension,
/// and their cycle classes stay independent in `larger` (PreconditionError
/// otherwise).
Hdvf complete_preserving(const Hdvf& x, const ChainComplex& larger,
                         const std::set<CellId>& preserve);

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hdvf
