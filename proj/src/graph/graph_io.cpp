#include "tuza/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tuza {

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    g.for_each_edge([&](Vertex u, Vertex v) { out << u << ' ' << v << '\n'; });
}

void write_graph(std::ostream& out, const SidedGraph& k) {
    out << "sides: " << k.x_count << '\n';
    out << k.graph.order() << ' ' << k.graph.size() << '\n';
    k.graph.for_each_edge(
        [&](Vertex u, Vertex v) { out << u << ' ' << v << ' ' << edge_type_code(k.edge_type(u, v)) << '\n'; });
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void parse_error(const std::string& what) { throw std::runtime_error("graph text: " + what); }

}  // namespace

SidedGraph read_graph(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) parse_error("empty input");
    std::optional<std::size_t> sides;
    if (line.rfind("sides:", 0) == 0) {
        std::istringstream ss(line.substr(6));
        std::size_t t = 0;
        if (!(ss >> t)) parse_error("bad sides header");
        sides = t;
        if (!next_content_line(in, line)) parse_error("missing 'n m' header");
    }
    std::istringstream header(line);
    std::size_t n = 0, m = 0;
    if (!(header >> n >> m)) parse_error("bad 'n m' header: " + line);
    if (sides && *sides > n) parse_error("sides exceeds vertex count");

    SidedGraph k;
    k.graph = Graph(n);
    k.x_count = sides.value_or(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) parse_error("expected " + std::to_string(m) + " edges");
        std::istringstream ss(line);
        long long u = -1, v = -1;
        if (!(ss >> u >> v) || u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n || u >= v)
            parse_error("bad edge line: " + line);
        const auto a = static_cast<Vertex>(u);
        const auto b = static_cast<Vertex>(v);
        if (k.graph.has_edge(a, b)) parse_error("duplicate edge: " + line);
        k.graph.add_edge(a, b);
        std::string type;
        if (ss >> type) {
            if (type != "i" && type != "e" && type != "x") parse_error("bad edge type: " + line);
            if (sides && type != "x") {
                const bool external = k.side(a) != k.side(b);
                if (external != (type == "e")) parse_error("edge type disagrees with sides: " + line);
            }
        }
    }
    return k;
}

void save_graph(const std::string& path, const SidedGraph& k) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_graph(out, k);
}

SidedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return read_graph(in);
}

}  // namespace tuza
