#pragma once

#include "hdvf/explicit_basis.hpp"
#include "hdvf/persistence.hpp"
#include "hdvf/tripartition.hpp"

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace hdvf::io {

/// Raised on malformed input files; the message names the line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complex file: one cell per line, `<id> <dim> <k> <b1> ... <bk>`.
/// Blank lines and `#` comments are skipped.
std::vector<CellSpec> parse_complex_file(std::istream& in);

/// Parses and builds; complex validation failures raise ParseError with
/// the offending cell.
ChainComplex load_complex(std::istream& in);

/// Cubical grid: `width height` header, then height rows of width 0/1
/// entries.
std::vector<std::vector<int>> parse_grid(std::istream& in);

/// Filtration file: `<id> <dim> <value> <k> <b1> ... <bk>` per cell,
/// reordered by ascending value with ties kept in line order.
struct FiltrationInput {
    std::vector<CellSpec> cells; // in filtration order
    std::vector<double> values;  // parallel to cells
};
FiltrationInput parse_filtration_file(std::istream& in);

/// Basis file: one generator per line, `<q> <cell id> ...`.
struct BasisLine {
    int q = 0;
    std::vector<CellId> cells;
};
std::vector<BasisLine> parse_basis_file(std::istream& in);

/// Result document skeleton: the five stable keys (betti, generators,
/// diagram, hdvf, report) every command emits.
nlohmann::json result_skeleton();

nlohmann::json betti_json(const ChainComplex& k);
/// Homology bases of a perfect field, per dimension, each generator a
/// sorted cell-id list.
nlohmann::json generators_json(const Hdvf& x);
nlohmann::json labels_json(const Hdvf::Labels& labels);
/// Diagram points as [q, birth, death-or-null].
nlohmann::json diagram_json(const PersistenceDiagram& d);
nlohmann::json chain_json(const Chain& c);

/// CSV rows `q,birth,death` with `inf` for surviving classes.
std::string diagram_csv(const PersistenceDiagram& d);

/// Scatter plot, birth on x, death on y, diagonal drawn, infinite points
/// on a top band.
std::string diagram_svg(const PersistenceDiagram& d, std::size_t steps);

} // namespace hdvf::io
