#include "hdvf/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace hdvf::io {

namespace {

// Lines as token vectors, with blank and comment lines dropped but line
// numbers preserved for error messages.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(std::istream& in) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok)
            tokens.push_back(tok);
        if (!tokens.empty())
            out.emplace_back(number, std::move(tokens));
    }
    return out;
}

int parse_int(const std::string& tok, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": " + what + " '" + tok +
                         "' is not an integer");
    }
}

double parse_double(const std::string& tok, std::size_t line) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": value '" + tok +
                         "' is not a number");
    }
}

CellSpec parse_cell_tokens(const std::vector<std::string>& tokens, std::size_t line,
                           std::size_t base) {
    CellSpec spec;
    spec.id = tokens[0];
    spec.dim = parse_int(tokens[1], line, "dimension");
    const int count = parse_int(tokens[base], line, "boundary count");
    if (count < 0 || tokens.size() != base + 1 + static_cast<std::size_t>(count))
        throw ParseError("line " + std::to_string(line) + ": expected " +
                         std::to_string(count) + " boundary ids, found " +
                         std::to_string(tokens.size() - base - 1));
    spec.boundary.assign(tokens.begin() + static_cast<long>(base) + 1, tokens.end());
    return spec;
}

} // namespace

std::vector<CellSpec> parse_complex_file(std::istream& in) {
    std::vector<CellSpec> specs;
    for (const auto& [line, tokens] : tokenize(in)) {
        if (tokens.size() < 3)
            throw ParseError("line " + std::to_string(line) +
                             ": expected `<id> <dim> <k> <b1> ... <bk>`");
        specs.push_back(parse_cell_tokens(tokens, line, 2));
    }
    return specs;
}

ChainComplex load_complex(std::istream& in) {
    auto built = ChainComplex::from_boundary_lists(parse_complex_file(in));
    if (std::holds_alternative<ComplexError>(built))
        throw ParseError(std::get<ComplexError>(built).message);
    return std::get<ChainComplex>(std::move(built));
}

std::vector<std::vector<int>> parse_grid(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty())
        throw ParseError("grid file is empty");
    const auto& [hline, header] = lines.front();
    if (header.size() != 2)
        throw ParseError("line " + std::to_string(hline) + ": expected `width height`");
    const int w = parse_int(header[0], hline, "width");
    const int h = parse_int(header[1], hline, "height");
    if (w < 0 || h < 0)
        throw ParseError("line " + std::to_string(hline) + ": negative grid size");
    if (lines.size() != static_cast<std::size_t>(h) + 1)
        throw ParseError("grid has " + std::to_string(lines.size() - 1) + " rows, expected " +
                         std::to_string(h));
    std::vector<std::vector<int>> grid;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& [line, tokens] = lines[r];
        if (tokens.size() != static_cast<std::size_t>(w))
            throw ParseError("line " + std::to_string(line) + ": expected " + std::to_string(w) +
                             " entries");
        std::vector<int> row;
        for (const auto& tok : tokens) {
            if (tok != "0" && tok != "1")
                throw ParseError("line " + std::to_string(line) + ": entry '" + tok +
                                 "' is not 0 or 1");
            row.push_back(tok == "1" ? 1 : 0);
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

FiltrationInput parse_filtration_file(std::istream& in) {
    struct Row {
        CellSpec spec;
        double value;
        std::size_t line;
    };
    std::vector<Row> rows;
    for (const auto& [line, tokens] : tokenize(in)) {
        if (tokens.size() < 4)
            throw ParseError("line " + std::to_string(line) +
                             ": expected `<id> <dim> <value> <k> <b1> ... <bk>`");
        std::vector<std::string> cell_tokens = {tokens[0], tokens[1]};
        cell_tokens.insert(cell_tokens.end(), tokens.begin() + 3, tokens.end());
        Row row{parse_cell_tokens(cell_tokens, line, 2), parse_double(tokens[2], line), line};
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.value < b.value; });
    FiltrationInput out;
    for (auto& row : rows) {
        out.cells.push_back(std::move(row.spec));
        out.values.push_back(row.value);
    }
    return out;
}

std::vector<BasisLine> parse_basis_file(std::istream& in) {
    std::vector<BasisLine> out;
    for (const auto& [line, tokens] : tokenize(in)) {
        if (tokens.size() < 2)
            throw ParseError("line " + std::to_string(line) +
                             ": expected `<q> <cell id> ...`");
        BasisLine gen;
        gen.q = parse_int(tokens[0], line, "dimension");
        gen.cells.assign(tokens.begin() + 1, tokens.end());
        out.push_back(std::move(gen));
    }
    return out;
}

nlohmann::json result_skeleton() {
    nlohmann::json doc;
    doc["betti"] = nlohmann::json::object();
    doc["generators"] = nlohmann::json::object();
    doc["diagram"] = nlohmann::json::array();
    doc["hdvf"] = nlohmann::json::object();
    doc["report"] = "";
    return doc;
}

nlohmann::json betti_json(const ChainComplex& k) {
    nlohmann::json out = nlohmann::json::object();
    for (int q = 0; q <= k.top_dim(); ++q)
        out[std::to_string(q)] = k.betti(q);
    return out;
}

nlohmann::json chain_json(const Chain& c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& id : c.cells())
        out.push_back(id);
    return out;
}

nlohmann::json generators_json(const Hdvf& x) {
    nlohmann::json out = nlohmann::json::object();
    for (int q = 0; q <= x.complex().top_dim(); ++q) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& g : x.homology_basis(q))
            list.push_back(chain_json(g));
        out[std::to_string(q)] = std::move(list);
    }
    return out;
}

nlohmann::json labels_json(const Hdvf::Labels& labels) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [id, l] : labels)
        out[id] = std::string(1, label_char(l));
    return out;
}

nlohmann::json diagram_json(const PersistenceDiagram& d) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : d) {
        nlohmann::json point = nlohmann::json::array();
        point.push_back(p.q);
        point.push_back(p.birth);
        if (p.death)
            point.push_back(*p.death);
        else
            point.push_back(nullptr);
        out.push_back(std::move(point));
    }
    return out;
}

std::string diagram_csv(const PersistenceDiagram& d) {
    std::string out = "q,birth,death\n";
    for (const auto& p : d) {
        out += std::to_string(p.q) + "," + std::to_string(p.birth) + ",";
        out += p.death ? std::to_string(*p.death) : std::string("inf");
        out += "\n";
    }
    return out;
}

std::string diagram_svg(const PersistenceDiagram& d, std::size_t steps) {
    const double size = 420.0, margin = 40.0, band = 24.0;
    const double span = size - 2 * margin;
    const double scale = span / static_cast<double>(steps ? steps : 1);
    auto sx = [&](std::size_t step) { return margin + scale * static_cast<double>(step); };
    auto sy = [&](std::size_t step) {
        return size - margin - scale * static_cast<double>(step);
    };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    // Diagonal birth = death reference.
    svg << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(steps)
        << "\" y2=\"" << sy(steps) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    // Band for classes that never die.
    svg << "  <line x1=\"" << margin << "\" y1=\"" << margin - band << "\" x2=\""
        << size - margin << "\" y2=\"" << margin - band
        << "\" stroke=\"#ccc\"/>\n  <text x=\"" << size - margin + 4 << "\" y=\""
        << margin - band + 4 << "\" font-size=\"11\">inf</text>\n";
    const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    for (const auto& p : d) {
        const char* color = palette[static_cast<std::size_t>(p.q) % 5];
        const double x = sx(p.birth);
        const double y = p.death ? sy(*p.death) : margin - band;
        svg << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"" << color
            << "\" fill-opacity=\"0.8\"><title>q=" << p.q << " birth=" << p.birth
            << " death=" << (p.death ? std::to_string(*p.death) : std::string("inf"))
            << "</title></circle>\n";
    }
    svg << "  <text x=\"" << size / 2 << "\" y=\"" << size - 8
        << "\" font-size=\"12\" text-anchor=\"middle\">birth step</text>\n";
    svg << "  <text x=\"12\" y=\"" << size / 2
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 12 "
        << size / 2 << ")\">death step</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace hdvf::io
