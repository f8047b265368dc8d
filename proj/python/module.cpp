#include "secfan/dot.hpp"
#include "secfan/hypersimplex.hpp"
#include "secfan/json_io.hpp"
#include "secfan/metrics.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

namespace py = pybind11;
using namespace secfan;

namespace {

py::object fraction(const Rational& q)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(q));
}

py::list fractions(const QVector& v)
{
    py::list out;
    for (const auto& x : v)
        out.append(fraction(x));
    return out;
}

/** Accepts ints, Fractions, decimal strings and floats (read through their repr). */
Rational to_rational(const py::handle& h)
{
    if (py::isinstance<py::bool_>(h))
        throw InvalidInput("booleans are not heights");
    return parse_rational(py::str(h).cast<std::string>());
}

QVector to_vector(const py::iterable& values)
{
    QVector v;
    for (auto h : values)
        v.push_back(to_rational(h));
    return v;
}

py::list cells(const Subdivision& s)
{
    py::list out;
    for (const auto& c : s.cells)
        out.append(py::cast(c));
    return out;
}

Subdivision to_subdivision(const std::vector<Cell>& c)
{
    return Subdivision(c);
}

PointConfiguration delta(int k, int n)
{
    return vertices({k, n});
}

py::dict catalog_dict(const OrbitCatalog& c)
{
    py::list reps;
    for (std::size_t i = 0; i < c.orbits(); ++i) {
        py::dict r;
        r["cells"] = cells(c.representatives[i]);
        r["orbit_size"] = py::int_(py::str(c.orbit_sizes[i].get_str()));
        if (i < c.heights.size())
            r["heights"] = fractions(c.heights[i]);
        reps.append(r);
    }
    py::dict d;
    d["representatives"] = reps;
    d["total"] = py::int_(py::str(c.total().get_str()));
    d["spread_histogram"] = py::cast(c.spread_histogram);
    d["nonregular_neighbours"] = c.nonregular_neighbours;
    return d;
}

DissimilarityMap metric_from(const QVector& m)
{
    int n = 2;
    while (pair_count(n) < m.size())
        ++n;
    if (pair_count(n) != m.size())
        throw InvalidInput("metric length is not a binomial coefficient C(n,2)");
    return DissimilarityMap(n, m);
}

PointGroup group_for(int k, int n, const std::string& group)
{
    HypersimplexSpec spec{k, n};
    return PointGroup::for_hypersimplex(spec, group == "default" ? default_group(spec) : GroupSpec::parse(group));
}

}  // namespace

PYBIND11_MODULE(_secfan, m)
{
    m.doc() = "Exact regular subdivisions of hypersimplices, secondary fans and split decompositions";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def("vertices", [](int k, int n) { return hypersimplex_vertex_list({k, n}); }, py::arg("k"), py::arg("n"),
          "Vertices of Δ(k,n) in descending lexicographic order.");
    m.def("lambda_lift", [](int k, int n) { return fractions(lambda_lift({k, n})); }, py::arg("k"), py::arg("n"));
    m.def("kappa_lift", [](int k, int n) { return fractions(kappa_lift({k, n})); }, py::arg("k"), py::arg("n"));
    m.def("thrackle", [](int n) { return fractions(thrackle(n).values()); }, py::arg("n"),
          "Thrackle metric in pair order (1,2),(1,3),...");
    m.def("split_metric", [](int n, const std::vector<int>& part) { return fractions(split_pseudometric(n, part).values()); },
          py::arg("n"), py::arg("part"), "D_{A,B} for the 0-based side A.");
    m.def("eulerian", [](int n, int k) { return py::int_(py::str(eulerian(n, k).get_str())); }, py::arg("n"), py::arg("k"));

    m.def(
        "regular_subdivision",
        [](int k, int n, const py::iterable& heights) { return cells(regular_subdivision(delta(k, n), to_vector(heights))); },
        py::arg("k"), py::arg("n"), py::arg("heights"), "Maximal cells (0-based vertex indices) of Δ(k,n)^ω.");
    m.def(
        "cell_volumes",
        [](int k, int n, const std::vector<Cell>& c) {
            PointConfiguration config = delta(k, n);
            std::vector<long> out;
            for (const auto& cell : c)
                out.push_back(config.volume(cell).get_si());
            return out;
        },
        py::arg("k"), py::arg("n"), py::arg("cells"));
    m.def(
        "is_coarsest",
        [](int k, int n, const py::iterable& heights) { return is_coarsest(delta(k, n), to_vector(heights)); },
        py::arg("k"), py::arg("n"), py::arg("heights"));
    m.def(
        "secondary_cone_dim",
        [](int k, int n, const std::vector<Cell>& c) {
            return secondary_cone_dim(delta(k, n), to_subdivision(c));
        },
        py::arg("k"), py::arg("n"), py::arg("cells"));
    m.def(
        "secondary_rays",
        [](int k, int n, const std::vector<Cell>& c) {
            PointConfiguration config = delta(k, n);
            Subdivision s = to_subdivision(c);
            auto rays = s.is_triangulation(config.dim()) ? secondary_rays(config, s)
                                                         : secondary_rays_of_subdivision(config, s);
            py::list out;
            for (const auto& r : rays) {
                py::dict d;
                d["ray"] = fractions(r.ray);
                d["cells"] = cells(r.subdivision);
                out.append(d);
            }
            return out;
        },
        py::arg("k"), py::arg("n"), py::arg("cells"), "Rays of the secondary cone with their coarsest subdivisions.");
    m.def(
        "enumerate_triangulations",
        [](int k, int n, const std::string& group, std::size_t threads) {
            EnumerationOptions opt;
            opt.threads = threads;
            EnumerationResult r;
            {
                py::gil_scoped_release release;
                r = enumerate_regular_triangulations(delta(k, n), group_for(k, n, group), opt);
            }
            return catalog_dict(r.catalog);
        },
        py::arg("k"), py::arg("n"), py::arg("group") = "default", py::arg("threads") = 1,
        "Regular triangulations up to symmetry.");
    m.def(
        "coarsest_subdivisions",
        [](int k, int n, const std::string& group, std::size_t threads) {
            OrbitCatalog rays;
            {
                py::gil_scoped_release release;
                PointConfiguration config = delta(k, n);
                PointGroup g = group_for(k, n, group);
                EnumerationOptions opt;
                opt.threads = threads;
                EnumerationResult r = enumerate_regular_triangulations(config, g, opt);
                rays = collect_coarsest_orbits(config, g, r.catalog, threads);
            }
            return catalog_dict(rays);
        },
        py::arg("k"), py::arg("n"), py::arg("group") = "default", py::arg("threads") = 1,
        "Rays of the secondary fan up to symmetry.");

    m.def(
        "parse_metric",
        [](const std::string& text) {
            ParsedMetric p = parse_metric(text);
            return py::make_tuple(p.taxa, fractions(p.map.values()));
        },
        py::arg("text"), "Parses a distance matrix; returns (taxa, values in pair order).");
    m.def(
        "split_decompose",
        [](const py::iterable& metric) {
            DissimilarityMap d = metric_from(to_vector(metric));
            const int n = d.n();
            SplitDecomposition dec = split_decompose(metric_configuration(n), d.as_heights());
            py::list splits;
            for (const auto& t : dec.terms) {
                py::dict e;
                e["part"] = t.split.part;
                e["coefficient"] = fraction(t.coefficient);
                splits.append(e);
            }
            py::dict out;
            out["splits"] = splits;
            out["prime_part"] = fractions(DissimilarityMap::from_heights(n, dec.prime_part).values());
            out["spread"] = dec.subdivision.spread();
            out["coherent"] = dec.coherent;
            out["split_prime"] = dec.prime_is_split_prime;
            return out;
        },
        py::arg("metric"), "Split decomposition of a metric given in pair order.");
    m.def(
        "coherency_index",
        [](const py::iterable& metric, const py::iterable& other) -> py::object {
            DissimilarityMap a = metric_from(to_vector(metric));
            DissimilarityMap b = metric_from(to_vector(other));
            if (a.n() != b.n())
                throw InvalidInput("metrics on different numbers of points");
            auto idx = coherency_index(metric_configuration(a.n()), a.as_heights(), b.as_heights());
            if (!idx)
                return py::float_(std::numeric_limits<double>::infinity());
            return fraction(*idx);
        },
        py::arg("metric"), py::arg("other"), "Coherency index of -metric with respect to -other on Δ(2,n).");
    m.def(
        "metric_cone_rays",
        [](int n) {
            MetricRays r = metric_cone_rays(n);
            py::list orbits;
            for (const auto& o : r.orbits) {
                py::dict d;
                d["representative"] = fractions(o.representative);
                d["size"] = py::int_(py::str(o.size.get_str()));
                d["type"] = o.type.tag();
                orbits.append(d);
            }
            py::dict out;
            out["rays"] = r.cone.rays.size();
            out["orbits"] = orbits;
            return out;
        },
        py::arg("n"), "Extreme rays of the metric cone MC(n) up to Sym(n).");
    m.def(
        "tight_span_dot",
        [](const py::iterable& metric) {
            DissimilarityMap d = metric_from(to_vector(metric));
            return tight_span_dot(tight_span(metric_configuration(d.n()), d.as_heights(), 1));
        },
        py::arg("metric"), "Tight span of a metric as a DOT graph.");
}
