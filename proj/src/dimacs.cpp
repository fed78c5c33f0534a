#include "geoclique/dimacs.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

struct Cursor {
    std::string_view line;
    std::size_t pos = 0;
    int line_no = 0;

    void skip_space() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    }
    int column() const { return static_cast<int>(pos) + 1; }
    bool at_end() {
        skip_space();
        return pos >= line.size();
    }
    std::string_view word() {
        skip_space();
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
        return line.substr(start, pos - start);
    }
    [[noreturn]] void fail(const std::string& what, int col) const {
        throw MalformedInput("DIMACS: " + what, line_no, col);
    }
    long long integer(const char* what) {
        skip_space();
        int col = column();
        auto tok = word();
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            fail(std::string("expected integer ") + what, col);
        return value;
    }
    double real(const char* what) {
        skip_space();
        int col = column();
        auto tok = word();
        double value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            fail(std::string("expected number ") + what, col);
        return value;
    }
};

} // namespace

Graph parse_dimacs(std::string_view text) {
    long long n = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<Vertex, double>> weight_lines;
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        Cursor cur{text.substr(start, end - start), 0, ++line_no};
        start = end + 1;
        if (cur.at_end()) {
            if (end == text.size()) break;
            continue;
        }
        int col = cur.column();
        auto kind = cur.word();
        if (kind == "c") {
            continue;
        } else if (kind == "p") {
            if (n >= 0) cur.fail("duplicate problem line", col);
            int fmt_col = (cur.skip_space(), cur.column());
            auto fmt = cur.word();
            if (fmt != "edge" && fmt != "col") cur.fail("expected 'edge' format", fmt_col);
            n = cur.integer("vertex count");
            if (n < 0 || n > (1LL << 30)) cur.fail("vertex count out of range", col);
            long long m = cur.integer("edge count");
            if (m < 0) cur.fail("negative edge count", col);
            edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 24)));
        } else if (kind == "e") {
            if (n < 0) cur.fail("edge before problem line", col);
            int ucol = (cur.skip_space(), cur.column());
            long long u = cur.integer("endpoint");
            int vcol = (cur.skip_space(), cur.column());
            long long v = cur.integer("endpoint");
            if (u < 1 || u > n) cur.fail("endpoint out of range", ucol);
            if (v < 1 || v > n) cur.fail("endpoint out of range", vcol);
            if (u == v) cur.fail("self-loop", ucol);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else if (kind == "w" || kind == "n") {
            if (n < 0) cur.fail("weight before problem line", col);
            int vcol = (cur.skip_space(), cur.column());
            long long v = cur.integer("vertex");
            if (v < 1 || v > n) cur.fail("vertex out of range", vcol);
            int wcol = (cur.skip_space(), cur.column());
            double w = cur.real("weight");
            if (!std::isfinite(w) || w < 0) cur.fail("weight must be finite and >= 0", wcol);
            weight_lines.emplace_back(static_cast<Vertex>(v - 1), w);
        } else {
            cur.fail("unknown line type '" + std::string(kind) + "'", col);
        }
        if (!cur.at_end()) cur.fail("trailing characters", cur.column());
    }
    if (n < 0) throw MalformedInput("DIMACS: missing 'p edge <n> <m>' line", line_no, 1);
    Graph g = Graph::from_edge_list(static_cast<int>(n), edges);
    if (!weight_lines.empty()) {
        std::vector<double> w(static_cast<std::size_t>(n), 1.0);
        for (auto [v, value] : weight_lines) w[v] = value;
        g = g.with_weights(std::move(w));
    }
    return g;
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_dimacs(buffer.str());
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    if (g.weighted()) {
        char buf[64];
        for (Vertex v = 0; v < g.n(); ++v) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g.weight(v));
            out << "w " << v + 1 << ' ' << std::string_view(buf, ptr - buf) << '\n';
        }
    }
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

} // namespace geoclique
