#include "secfan/dot.hpp"

#include <sstream>

namespace secfan {

std::string dual_graph_dot(const PointConfiguration& config, const Subdivision& s)
{
    DualGraph g = dual_graph(config, s);
    std::ostringstream out;
    out << "graph dual {\n";
    for (std::size_t i = 0; i < s.cells.size(); ++i)
        out << "  c" << i << " [label=\"" << i << " (" << s.cells[i].size() << ")\"];\n";
    for (const auto& [a, b] : g.edges)
        out << "  c" << a << " -- c" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string tight_span_dot(const TightSpan& span, int digits)
{
    std::ostringstream out;
    out << "graph tight_span {\n";
    for (std::size_t i = 0; i < span.env.vertices.size(); ++i) {
        out << "  v" << i << " [label=\"" << span.env.subdivision.cells[i].size() << " | (";
        const auto& x = span.env.vertices[i];
        for (std::size_t j = 0; j < x.size(); ++j)
            out << (j ? ", " : "") << to_decimal(x[j], digits);
        out << ")\"];\n";
    }
    for (const auto* f : span.faces_of_dim(1))
        if (f->vertices.size() == 2)
            out << "  v" << f->vertices[0] << " -- v" << f->vertices[1] << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace secfan
