// Command-line surface over the hdvf library. Every command prints one
// JSON document with the keys betti, generators, diagram, hdvf, report
// (plus command-specific extras) and exits 0 iff no error occurred.

#include "hdvf/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace hdvf;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io::ParseError("cannot open '" + path + "'");
    return in;
}

ChainComplex read_complex(const std::string& file, const std::string& cubical) {
    if (!cubical.empty()) {
        auto in = open_input(cubical);
        return ChainComplex::build_cubical(io::parse_grid(in));
    }
    if (file.empty())
        throw io::ParseError("no input: give a complex file or --cubical");
    auto in = open_input(file);
    return io::load_complex(in);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw io::ParseError("cannot write '" + path + "'");
    out << text;
}

nlohmann::json cell_set_json(const std::set<CellId>& cells) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& id : cells)
        out.push_back(id);
    return out;
}

/// Basis-file lines grouped into per-dimension bases against k. The
/// declared dimension wins so a mismatch is reported by validation rather
/// than swallowed.
std::map<int, HomologyBasis> group_basis(const ChainComplex& k,
                                         const std::vector<io::BasisLine>& lines) {
    std::map<int, HomologyBasis> groups;
    for (const auto& line : lines) {
        auto& b = groups[line.q];
        if (b.complex == nullptr) {
            b.complex = &k;
            b.q = line.q;
        }
        b.generators.push_back(k.chain_of(line.cells));
    }
    return groups;
}

int cmd_homology(const std::string& file, const std::string& cubical) {
    ChainComplex k = read_complex(file, cubical);
    Hdvf x = complete(Hdvf::all_critical(k));
    auto doc = io::result_skeleton();
    doc["betti"] = io::betti_json(k);
    doc["generators"] = io::generators_json(x);
    doc["hdvf"] = io::labels_json(x.labels());
    doc["report"] = "perfect field over " + std::to_string(k.cell_count()) + " cells";
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_check_explicit(const std::string& file, const std::string& basis_file,
                       bool all_characterizations) {
    ChainComplex k = read_complex(file, "");
    auto in = open_input(basis_file);
    auto groups = group_basis(k, io::parse_basis_file(in));

    auto doc = io::result_skeleton();
    doc["betti"] = io::betti_json(k);
    bool all_explicit = true;
    std::string report;
    for (auto& [q, b] : groups) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : b.generators)
            gens.push_back(io::chain_json(g));
        doc["generators"][std::to_string(q)] = std::move(gens);

        ExplicitReport r = is_explicit(b);
        all_explicit = all_explicit && r.explicit_basis;
        if (!report.empty())
            report += "; ";
        report += "q=" + std::to_string(q) + ": " + r.summary;

        if (all_characterizations) {
            CharacterizationReport c = check_characterizations(b);
            doc["characterizations"][std::to_string(q)] = {
                {"injective_subsets", c.injective_subsets},
                {"kernel_containment", c.kernel_containment},
                {"definition", c.definition},
                {"agree", c.agree},
            };
        }
    }
    doc["explicit"] = all_explicit;
    doc["report"] = report;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_basis_to_hdvf(const std::string& file, const std::string& basis_file) {
    ChainComplex k = read_complex(file, "");
    auto in = open_input(basis_file);
    auto lines = io::parse_basis_file(in);
    auto groups = group_basis(k, lines);
    if (groups.size() > 1)
        throw std::invalid_argument("basis file mixes dimensions; give one dimension per run");

    HomologyBasis b;
    if (groups.empty()) {
        b.complex = &k;
        b.q = 1; // empty basis: any dimension without holes realizes it
    } else {
        b = groups.begin()->second;
    }

    Hdvf x = hdvf_from_explicit_basis(b);
    bool round_trip = true;
    auto result = x.homology_basis(b.q);
    for (const auto& g : b.generators) {
        bool found = false;
        for (const auto& r : result)
            found = found || r == g;
        round_trip = round_trip && found;
    }
    round_trip = round_trip && result.size() == b.generators.size();

    auto doc = io::result_skeleton();
    doc["betti"] = io::betti_json(k);
    doc["generators"] = io::generators_json(x);
    doc["hdvf"] = io::labels_json(x.labels());
    doc["round_trip"] = round_trip;
    doc["report"] = round_trip ? "field realizes the given basis"
                               : "field built but basis mismatch";
    std::cout << doc.dump(2) << "\n";
    return round_trip ? 0 : 1;
}

int cmd_persistence(const std::string& file, const std::string& csv_out,
                    const std::string& svg_out, bool oracle) {
    auto in = open_input(file);
    io::FiltrationInput fi = io::parse_filtration_file(in);
    auto built = ChainComplex::from_boundary_lists(fi.cells);
    if (std::holds_alternative<ComplexError>(built))
        throw io::ParseError(std::get<ComplexError>(built).message);
    const ChainComplex k = std::get<ChainComplex>(std::move(built));

    Filtration f{&k, {}, fi.values};
    for (const auto& spec : fi.cells)
        f.order.push_back(spec.id);

    PersistenceResult result = compute_persistence(f);

    auto doc = io::result_skeleton();
    doc["betti"] = io::betti_json(k);
    doc["diagram"] = io::diagram_json(result.diagram);
    doc["hdvf"] = io::labels_json(result.final_labels);
    for (const auto& g : result.generators) {
        if (g.death)
            continue; // surviving classes are the homology of the full complex
        doc["generators"][std::to_string(g.q)].push_back(io::chain_json(g.chain));
    }
    doc["report"] = std::to_string(result.diagram.size()) + " diagram points over " +
                    std::to_string(f.order.size()) + " steps";

    if (!csv_out.empty())
        write_file(csv_out, io::diagram_csv(result.diagram));
    if (!svg_out.empty())
        write_file(svg_out, io::diagram_svg(result.diagram, f.order.size()));

    int exit_code = 0;
    if (oracle) {
        auto expect = normalized(persistence_oracle(f));
        auto got = normalized(result.diagram);
        if (expect != got) {
            doc["report"] = "oracle mismatch: column reduction disagrees with the field run";
            exit_code = 1;
        }
    }
    std::cout << doc.dump(2) << "\n";
    return exit_code;
}

int cmd_tripartition(const std::string& file, const std::string& cubical, int q) {
    if (q < 0)
        throw std::invalid_argument("dimension must be nonnegative");
    ChainComplex k = read_complex(file, cubical);
    Hdvf x = complete(Hdvf::all_critical(k));

    TriPartition layer;
    layer.q = q;
    if (q <= k.top_dim()) {
        for (const auto& t : hdvf_to_tripartitions(x))
            if (t.q == q)
                layer = t;
    }

    auto doc = io::result_skeleton();
    doc["betti"] = io::betti_json(k);
    doc["generators"] = io::generators_json(x);
    doc["hdvf"] = io::labels_json(x.labels());
    doc["tripartition"] = {
        {"q", layer.q},
        {"cotree", cell_set_json(layer.cotree)},
        {"tree", cell_set_json(layer.tree)},
        {"essential", cell_set_json(layer.essential)},
    };
    doc["report"] = "dimension " + std::to_string(q) + ": " +
                    std::to_string(layer.essential.size()) + " essential cells";
    std::cout << doc.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology, explicit bases, tri-partitions, and persistence "
                 "of finite cell complexes over GF(2)"};
    app.require_subcommand(1);

    std::string complex_file, cubical_file, basis_file, filtration_file;
    std::string csv_out, svg_out;
    bool all_characterizations = false;
    bool oracle = false;
    int dim = 0;

    auto* homology = app.add_subcommand("homology", "Betti numbers and a homology basis");
    homology->add_option("complex", complex_file, "complex file");
    homology->add_option("--cubical", cubical_file, "0/1 grid file")
        ->excludes(homology->get_option("complex"));

    auto* check = app.add_subcommand("check-explicit", "Test a basis for explicitness");
    check->add_option("complex", complex_file, "complex file")->required();
    check->add_option("basis", basis_file, "basis file, one `<q> <cells...>` per line")
        ->required();
    check->add_flag("--all-characterizations", all_characterizations,
                    "also evaluate the three equivalent forms (beta <= 6)");

    auto* realize = app.add_subcommand("basis-to-hdvf", "Realize an explicit basis as a field");
    realize->add_option("complex", complex_file, "complex file")->required();
    realize->add_option("basis", basis_file, "basis file, single dimension")->required();

    auto* persistence = app.add_subcommand("persistence", "Persistence diagram of a filtration");
    persistence->add_option("filtration", filtration_file, "filtration file")->required();
    persistence->add_option("--csv", csv_out, "write diagram rows to this file");
    persistence->add_option("--svg", svg_out, "write a diagram plot to this file");
    persistence->add_flag("--oracle", oracle, "cross-check against column reduction");

    auto* tripartition = app.add_subcommand("tripartition", "Cotree/tree/essential split");
    tripartition->add_option("complex", complex_file, "complex file");
    tripartition->add_option("--cubical", cubical_file, "0/1 grid file")
        ->excludes(tripartition->get_option("complex"));
    tripartition->add_option("--dim", dim, "dimension to slice")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (homology->parsed())
            return cmd_homology(complex_file, cubical_file);
        if (check->parsed())
            return cmd_check_explicit(complex_file, basis_file, all_characterizations);
        if (realize->parsed())
            return cmd_basis_to_hdvf(complex_file, basis_file);
        if (persistence->parsed())
            return cmd_persistence(filtration_file, csv_out, svg_out, oracle);
        if (tripartition->parsed())
            return cmd_tripartition(complex_file, cubical_file, dim);
    } catch (const std::exception& e) {
        auto doc = io::result_skeleton();
        doc["report"] = e.what();
        std::cout << doc.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
