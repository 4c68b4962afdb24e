#include "extremal/io.hpp"

#include <fstream>
#include <sstream>

namespace extremal {

namespace {

// Non-comment, non-blank lines split into whitespace tokens.
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        fail(Errc::ParseError, "expected an integer, got '" + s + "'");
    }
    if (used != s.size()) fail(Errc::ParseError, "expected an integer, got '" + s + "'");
    return value;
}

} // namespace

std::string write_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "d " << d.order() << ' ' << d.size() << '\n';
    for (auto [u, v] : d.arcs()) out << "a " << u << ' ' << v << '\n';
    return out.str();
}

Digraph parse_digraph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "d")
        fail(Errc::ParseError, "expected header 'd <n> <m>'");
    int n = to_int(lines[0][1]), m = to_int(lines[0][2]);
    if (static_cast<int>(lines.size()) != m + 1)
        fail(Errc::ParseError, "arc count does not match the header");
    std::vector<Arc> arcs;
    for (int i = 1; i <= m; ++i) {
        if (lines[i].size() != 3 || lines[i][0] != "a")
            fail(Errc::ParseError, "expected arc line 'a <u> <v>'");
        arcs.emplace_back(to_int(lines[i][1]), to_int(lines[i][2]));
    }
    try {
        return Digraph::build(n, std::move(arcs));
    } catch (const Error& e) {
        fail(Errc::ParseError, std::string("invalid digraph: ") + e.what());
    }
}

std::string write_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "h " << h.order() << ' ' << h.size() << '\n';
    for (const auto& e : h.edges()) {
        out << 'e';
        for (int v : e) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

Hypergraph parse_hypergraph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "h")
        fail(Errc::ParseError, "expected header 'h <n> <m>'");
    int n = to_int(lines[0][1]), m = to_int(lines[0][2]);
    if (static_cast<int>(lines.size()) != m + 1)
        fail(Errc::ParseError, "hyperedge count does not match the header");
    std::vector<std::vector<int>> edges;
    for (int i = 1; i <= m; ++i) {
        if (lines[i].size() < 3 || lines[i][0] != "e")
            fail(Errc::ParseError, "expected hyperedge line 'e <v1> <v2> ...'");
        std::vector<int> e;
        for (std::size_t j = 1; j < lines[i].size(); ++j) e.push_back(to_int(lines[i][j]));
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph::build(n, std::move(edges));
    } catch (const Error& e) {
        fail(Errc::ParseError, std::string("invalid hypergraph: ") + e.what());
    }
}

std::string write_dicolouring(const Dicolouring& phi) {
    std::ostringstream out;
    for (std::size_t v = 0; v < phi.colour.size(); ++v)
        out << "c " << v << ' ' << phi.colour[v] << '\n';
    return out.str();
}

Dicolouring parse_dicolouring(const std::string& text) {
    auto lines = tokenize(text);
    std::vector<std::pair<int, int>> entries;
    for (const auto& tokens : lines) {
        if (tokens.size() != 3 || tokens[0] != "c")
            fail(Errc::ParseError, "expected colour line 'c <v> <colour>'");
        entries.emplace_back(to_int(tokens[1]), to_int(tokens[2]));
    }
    Dicolouring phi;
    phi.colour.assign(entries.size(), 0);
    for (auto [v, c] : entries) {
        if (v < 0 || v >= static_cast<int>(entries.size()) || phi.colour[v] != 0)
            fail(Errc::ParseError, "colour lines must cover each vertex exactly once");
        if (c < 1) fail(Errc::ParseError, "colours are positive");
        phi.colour[v] = c;
        phi.k = std::max(phi.k, c);
    }
    return phi;
}

std::string to_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph {\n";
    for (int v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : d.arcs()) {
        if (d.has_arc(v, u) && u > v) continue; // digon already emitted
        out << "  " << u << " -> " << v;
        if (d.has_arc(v, u)) out << " [dir=both]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::ParseError, "cannot write " + path);
    out << content;
}

} // namespace extremal
