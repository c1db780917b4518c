#include "sqtop/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sqtop {

namespace {

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

SimplicialComplex parse_complex_text(const std::string& text) {
    int m = -1;
    std::vector<std::vector<int>> facets;
    for (const auto& line : nonblank_lines(text)) {
        std::istringstream in(line);
        std::string word;
        in >> word;
        if (word == "vertices") {
            if (!(in >> m) || m < 0)
                throw ParseError("bad vertices line: " + line);
        } else if (word == "facet") {
            std::vector<int> vs;
            int v;
            while (in >> v)
                vs.push_back(v);
            facets.push_back(std::move(vs));
        } else {
            throw ParseError("unrecognized line: " + line);
        }
    }
    if (m < 0)
        throw ParseError("missing 'vertices m' line");
    try {
        return SimplicialComplex::from_facets(m, facets);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string complex_to_text(const SimplicialComplex& k) {
    std::ostringstream out;
    out << "vertices " << k.vertex_count() << "\n";
    for (VertexMask f : k.facets()) {
        out << "facet";
        for (int v : mask_vertices(f))
            out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

SimplicialComplex parse_complex_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw ParseError("complex JSON needs 'vertices' and 'facets'");
    try {
        const int m = j.at("vertices").get<int>();
        const auto facets = j.at("facets").get<std::vector<std::vector<int>>>();
        return SimplicialComplex::from_facets(m, facets);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad complex JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string complex_to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["vertices"] = k.vertex_count();
    auto& facets = j["facets"] = nlohmann::json::array();
    for (VertexMask f : k.facets())
        facets.push_back(mask_vertices(f));
    return j.dump();
}

Cochain parse_cochain_text(const SimplicialComplex& k, const std::string& text) {
    std::vector<VertexMask> faces;
    for (const auto& line : nonblank_lines(text)) {
        std::istringstream in(line);
        std::vector<int> vs;
        int v;
        while (in >> v)
            vs.push_back(v);
        if (!in.eof())
            throw ParseError("bad cochain line: " + line);
        if (vs.empty())
            continue;
        try {
            faces.push_back(mask_from_vertices(vs));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (faces.empty())
        throw ParseError("cochain file has no simplices");
    try {
        return Cochain::sum_of_duals(k, faces);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string cochain_to_text(const Cochain& c) {
    std::ostringstream out;
    for (VertexMask f : c.support()) {
        bool first = true;
        for (int v : mask_vertices(f)) {
            if (!first)
                out << ' ';
            first = false;
            out << v;
        }
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

SimplicialComplex resolve_complex(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        const std::string text = read_file(arg);
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            return parse_complex_json(text);
        return parse_complex_text(text);
    }
    if (auto named = named_complex(arg))
        return *named;
    throw ParseError("unknown complex (not a registry name or a file): " + arg);
}

std::vector<SimplicialComplex> resolve_complex_list(const std::string& arg) {
    std::vector<SimplicialComplex> out;
    std::string::size_type start = 0;
    while (start <= arg.size()) {
        auto comma = arg.find(',', start);
        if (comma == std::string::npos)
            comma = arg.size();
        const std::string piece = arg.substr(start, comma - start);
        if (!piece.empty())
            out.push_back(resolve_complex(piece));
        start = comma + 1;
    }
    return out;
}

}  // namespace sqtop
