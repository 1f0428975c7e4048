#include "ore3/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ore3 {
namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno)
{
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        return true;
    }
    return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg)
{
    throw GraphError("edge list line " + std::to_string(lineno) + ": " + msg);
}

} // namespace

Hypergraph3 read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    if (!next_data_line(in, line, lineno))
        throw GraphError("edge list: missing header line");

    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
            fail(lineno, "expected header 'n m'");
    }

    std::vector<Triple> triples;
    triples.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream ls(line);
        long long a, b, c;
        std::string extra;
        if (!(ls >> a >> b >> c) || (ls >> extra))
            fail(lineno, "expected three vertex ids");
        if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
            fail(lineno, "vertex out of range");
        triples.push_back({Vertex(a), Vertex(b), Vertex(c)});
    }
    if (next_data_line(in, line, lineno))
        fail(lineno, "trailing data after " + std::to_string(m) + " edges");

    try {
        return Hypergraph3::build(static_cast<std::size_t>(n), triples);
    } catch (const GraphError& e) {
        throw GraphError(std::string("edge list: ") + e.what());
    }
}

Hypergraph3 read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Hypergraph3& h, const std::vector<std::string>& comments)
{
    for (const auto& c : comments)
        out << "# " << c << '\n';
    out << h.order() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges())
        out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

} // namespace ore3
