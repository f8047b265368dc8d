// secfan: command line front end for regular subdivisions of hypersimplices,
// secondary fans and split decompositions of finite metrics.

#include "secfan/dot.hpp"
#include "secfan/enumerate.hpp"
#include "secfan/hypersimplex.hpp"
#include "secfan/json_io.hpp"
#include "secfan/metrics.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace secfan;

namespace {

struct Common
{
    int k = 0;
    int n = 0;
    std::string config_file;
    std::string group = "default";
    std::size_t threads = 1;
    std::string output;
    bool unchecked = false;
};

struct Lifting
{
    bool lambda = false;
    bool kappa = false;
    bool thrackle = false;
    std::string split;
    std::string metric;
    std::string heights;
    bool strict = false;
};

void add_common(CLI::App* sub, Common& c, bool with_config = true)
{
    sub->add_option("--k", c.k, "hypersimplex parameter k");
    sub->add_option("--n", c.n, "hypersimplex parameter n");
    if (with_config)
        sub->add_option("--config", c.config_file, "configuration JSON instead of --k/--n");
    sub->add_option("-o,--output", c.output, "write the result here instead of stdout");
    sub->add_flag("--unchecked", c.unchecked, "skip internal invariant checks");
}

void add_lifting(CLI::App* sub, Lifting& l)
{
    sub->add_flag("--lambda", l.lambda, "the lifting λ of Δ(k,n)");
    sub->add_flag("--kappa", l.kappa, "the lifting κ of Δ(k,n)");
    sub->add_flag("--thrackle", l.thrackle, "the negated thrackle metric on Δ(2,n)");
    sub->add_option("--split", l.split, "negated split metric D_{A,B} on Δ(2,n); A as 1-based labels, e.g. 1,2");
    sub->add_option("--metric", l.metric, "distance matrix file, lifted as its negative on Δ(2,n)");
    sub->add_option("--heights", l.heights, "height vector file (JSON array or whitespace separated rationals)");
    sub->add_flag("--strict", l.strict, "reject metric files that violate the triangle inequality");
}

void emit(const Common& c, const std::string& text)
{
    if (c.output.empty())
        std::cout << text;
    else
        write_text_file(c.output, text);
}

void emit(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

std::vector<int> parse_part(const std::string& text, int n)
{
    std::vector<int> part;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.find_first_not_of(" \t") == std::string::npos)
            continue;
        int label = 0;
        try {
            label = std::stoi(token);
        }
        catch (const std::exception&) {
            throw InvalidInput("--split: bad label '" + token + "'");
        }
        if (label < 1 || label > n)
            throw InvalidInput("--split: label " + token + " outside 1.." + std::to_string(n));
        part.push_back(label - 1);
    }
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
    if (part.empty() || static_cast<int>(part.size()) == n)
        throw InvalidInput("--split: both sides of the split must be nonempty");
    return part;
}

QVector read_heights_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw InvalidInput("cannot open " + path);
    std::stringstream buffer;
    buffer << f.rdbuf();
    std::string text = buffer.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded())
            throw InvalidInput("malformed JSON in " + path);
        return vector_from_json(j.is_object() ? j.at("heights") : j);
    }
    QVector v;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token[0] == '#') {
            std::getline(in, token);
            continue;
        }
        v.push_back(parse_rational(token));
    }
    return v;
}

/** The configuration and the metric (if any) that a command operates on. */
struct Input
{
    PointConfiguration config;
    std::optional<HypersimplexSpec> spec;
    std::vector<std::string> taxa;
    std::optional<DissimilarityMap> metric;
    HeightFunction heights;
    std::string lifting;
};

PointConfiguration load_configuration(Common& c)
{
    if (!c.config_file.empty())
        return configuration_from_json(read_json_file(c.config_file));
    if (c.k == 0 || c.n == 0)
        throw InvalidInput("give --k and --n (or --config)");
    HypersimplexSpec spec{c.k, c.n};
    check_hypersimplex(spec);
    return vertices(spec);
}

int require_delta2(const Input& in, const std::string& flag)
{
    if (!in.spec || in.spec->k != 2)
        throw InvalidInput(flag + " needs the configuration Δ(2,n)");
    return in.spec->n;
}

Input resolve(Common& c, const Lifting& l, bool need_lifting = true)
{
    int sources = int(l.lambda) + int(l.kappa) + int(l.thrackle) + int(!l.split.empty()) + int(!l.metric.empty()) +
                  int(!l.heights.empty());
    if (sources > 1)
        throw InvalidInput("give exactly one lifting source");
    if (sources == 0 && need_lifting)
        throw InvalidInput("no lifting given (use one of --lambda --kappa --thrackle --split --metric --heights)");

    Input in;
    std::optional<ParsedMetric> parsed;
    if (!l.metric.empty()) {
        parsed = read_metric_file(l.metric);
        if (c.k == 0 && c.n == 0 && c.config_file.empty()) {
            c.k = 2;
            c.n = parsed->map.n();
        }
    }
    in.config = load_configuration(c);
    in.spec = in.config.hypersimplex();

    if (l.lambda || l.kappa) {
        if (!in.spec)
            throw InvalidInput("--lambda/--kappa need a hypersimplex configuration");
        check_proper_hypersimplex(*in.spec);
        in.heights = l.lambda ? lambda_lift(*in.spec) : kappa_lift(*in.spec);
        in.lifting = l.lambda ? "lambda" : "kappa";
    }
    else if (l.thrackle) {
        int n = require_delta2(in, "--thrackle");
        in.metric = thrackle(n);
        in.heights = in.metric->as_heights();
        in.lifting = "thrackle";
    }
    else if (!l.split.empty()) {
        int n = require_delta2(in, "--split");
        in.metric = split_pseudometric(n, parse_part(l.split, n));
        in.heights = in.metric->as_heights();
        in.lifting = "split " + l.split;
    }
    else if (parsed) {
        int n = require_delta2(in, "--metric");
        if (parsed->map.n() != n)
            throw InvalidInput("metric has " + std::to_string(parsed->map.n()) + " points, configuration needs " +
                               std::to_string(n));
        if (l.strict && !is_pseudometric(parsed->map))
            throw InvalidInput("metric violates the triangle inequality");
        in.taxa = parsed->taxa;
        in.metric = parsed->map;
        in.heights = in.metric->as_heights();
        in.lifting = "metric " + l.metric;
    }
    else if (!l.heights.empty()) {
        in.heights = read_heights_file(l.heights);
        in.lifting = "heights " + l.heights;
    }
    if (sources > 0 && in.heights.size() != in.config.size())
        throw InvalidInput("height vector has " + std::to_string(in.heights.size()) + " entries, configuration has " +
                           std::to_string(in.config.size()) + " points");
    return in;
}

PointGroup make_group(const Common& c, const PointConfiguration& config)
{
    const auto& spec = config.hypersimplex();
    if (c.group == "trivial" || !spec)
        return PointGroup::trivial(config.size());
    GroupSpec g = c.group == "default" ? default_group(*spec) : GroupSpec::parse(c.group);
    return PointGroup::for_hypersimplex(*spec, g);
}

Json config_summary(const Input& in)
{
    Json j;
    if (in.spec) {
        j["k"] = in.spec->k;
        j["n"] = in.spec->n;
    }
    j["points"] = in.config.size();
    j["dim"] = in.config.dim();
    j["volume"] = in.config.volume().get_str();
    return j;
}

Json metric_side(const QVector& metric)
{
    Json j = Json::array();
    for (const auto& x : metric)
        j.push_back(exact_and_decimal(x));
    return j;
}

std::vector<int> one_based(const std::vector<int>& v)
{
    std::vector<int> out;
    for (int x : v)
        out.push_back(x + 1);
    return out;
}

Json ray_type_json(const RayType& t)
{
    Json j{{"type", t.tag()}, {"spread", t.spread}};
    if (t.is_split)
        j["A"] = one_based(t.part);
    return j;
}

int cmd_gen(Common& c)
{
    if (c.k == 0 || c.n == 0)
        throw InvalidInput("gen needs --k and --n");
    HypersimplexSpec spec{c.k, c.n};
    check_hypersimplex(spec);
    emit(c, configuration_json(vertices(spec)));
    return 0;
}

Json subdivision_report(const Input& in, const Subdivision& s, bool checked)
{
    const auto& config = in.config;
    if (checked)
        validate_subdivision(config, s);
    Json j;
    j["configuration"] = config_summary(in);
    j["lifting"] = in.lifting;
    j["heights"] = vector_json(in.heights);
    j["spread"] = s.spread();
    j["cells"] = cells_json(s);
    Json volumes = Json::array();
    for (const auto& cell : s.cells)
        volumes.push_back(config.volume(cell).get_str());
    j["cell_volumes"] = volumes;
    j["triangulation"] = s.is_triangulation(config.dim());

    DualGraph g = dual_graph(config, s);
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back({a, b});
    j["dual_graph"] = {{"edges", edges},
                       {"simple", g.is_simple()},
                       {"connected", g.is_connected()},
                       {"complete", g.is_complete()}};
    if (checked && (!g.is_simple() || !g.is_connected()))
        throw InvariantViolation("dual graph is not simple and connected");

    const std::size_t lineality = static_cast<std::size_t>(config.dim()) + 1;
    std::size_t dim = secondary_cone_dim(config, s);
    j["secondary_cone_dim"] = dim;
    j["lineality_dim"] = lineality;
    j["split"] = is_split(s);
    j["coarsest"] = s.spread() > 1 ? Json(dim == lineality + 1) : Json(nullptr);
    j["coarsest_by_complete_dual"] = is_coarsest_by_complete_dual(config, s);
    if (checked && s.spread() > 1 && g.is_complete() && dim != lineality + 1)
        throw InvariantViolation("complete dual graph but the subdivision is not coarsest");
    auto ms = is_multisplit(config, s);
    j["multisplit"] = {{"value", ms.is_multisplit}, {"ell", ms.ell}};
    if (in.spec) {
        bool matroidal = all_cells_matroidal(config, s);
        bool dressian = is_tropical_pluecker(config, in.heights);
        j["matroidal"] = matroidal;
        j["dressian"] = dressian;
        if (checked && matroidal != dressian)
            throw InvariantViolation("matroidal cells and tropical Plücker test disagree");
    }
    if (in.metric) {
        j["pseudometric"] = is_pseudometric(*in.metric);
        j["metric"] = is_metric(*in.metric);
    }
    return j;
}

int cmd_subdivide(Common& c, const Lifting& l, const std::string& dot)
{
    Input in = resolve(c, l);
    Subdivision s = regular_subdivision(in.config, in.heights);
    Json j = subdivision_report(in, s, !c.unchecked);
    if (!dot.empty())
        write_text_file(dot, dual_graph_dot(in.config, s));
    emit(c, j);
    return 0;
}

int cmd_tightspan(Common& c, const Lifting& l, int max_dim, bool as_json)
{
    Input in = resolve(c, l);
    TightSpan ts = tight_span(in.config, in.heights, max_dim);
    if (!c.unchecked) {
        if (ts.env.vertices.size() != ts.env.subdivision.spread())
            throw InvariantViolation("envelope vertices do not match the maximal cells");
        for (std::size_t v = 0; v < ts.env.vertices.size(); ++v)
            if (dual_cell(in.config, ts.env, v) != ts.env.subdivision.cells[v])
                throw InvariantViolation("dual cell of an envelope vertex is not its maximal cell");
    }
    if (!as_json) {
        emit(c, tight_span_dot(ts));
        return 0;
    }
    Json vertices = Json::array();
    for (std::size_t v = 0; v < ts.env.vertices.size(); ++v)
        vertices.push_back({{"coordinates", vector_json(ts.env.vertices[v])}, {"cell", ts.env.subdivision.cells[v]}});
    Json faces = Json::array();
    for (const auto& f : ts.faces)
        faces.push_back({{"dim", f.dim}, {"vertices", f.vertices}, {"dual_face", f.dual_face}});
    emit(c, Json{{"vertices", vertices}, {"faces", faces}, {"max_dim", ts.max_dim}});
    return 0;
}

int cmd_seccone(Common& c, const Lifting& l)
{
    Input in = resolve(c, l);
    Subdivision s = regular_subdivision(in.config, in.heights);
    HCone cone = secondary_cone(in.config, s);
    std::vector<SecondaryRay> rays;
    if (s.spread() > 1)
        rays = s.is_triangulation(in.config.dim()) ? secondary_rays(in.config, s)
                                                  : secondary_rays_of_subdivision(in.config, s);
    PointGroup group = make_group(c, in.config);
    std::set<Subdivision> orbits;
    const bool delta2 = in.spec && in.spec->k == 2;
    Json out_rays = Json::array();
    for (const auto& r : rays) {
        if (!c.unchecked && !is_coarsest(in.config, r.ray))
            throw InvariantViolation("a secondary ray does not induce a coarsest subdivision");
        Subdivision canon = group.canonical(r.subdivision);
        orbits.insert(canon);
        Json jr{{"heights", vector_json(r.ray)}, {"spread", r.subdivision.spread()}, {"cells", cells_json(r.subdivision)}};
        if (delta2) {
            int n = in.spec->n;
            QVector metric = metric_representative(n, r.ray);
            jr["metric"] = vector_json(metric);
            jr["classification"] = ray_type_json(classify_ray(n, metric));
        }
        out_rays.push_back(std::move(jr));
    }
    Json j;
    j["configuration"] = config_summary(in);
    j["lifting"] = in.lifting;
    j["spread"] = s.spread();
    j["dim"] = cone_dim(cone);
    j["lineality_dim"] = in.config.dim() + 1;
    j["facets"] = cone.inequalities.size();
    j["equations"] = cone.equations.size();
    j["group_order"] = group.order();
    j["ray_orbits"] = orbits.size();
    j["rays"] = out_rays;
    emit(c, j);
    return 0;
}

struct EnumerateArgs
{
    std::string checkpoint;
    bool resume = false;
    std::size_t max_levels = 0;
    std::size_t max_orbits = 0;
    std::uint64_t seed = 1;
    std::string catalog;
    std::string coarsest;
    bool verbose = false;
};

Json catalog_summary(const OrbitCatalog& cat)
{
    Json hist = Json::object();
    for (auto [spread, count] : cat.spread_histogram)
        hist[std::to_string(spread)] = count;
    std::size_t max_spread = cat.spread_histogram.empty() ? 0 : cat.spread_histogram.rbegin()->first;
    return {{"orbits", cat.orbits()}, {"total", cat.total().get_str()}, {"spread_histogram", hist},
            {"max_spread", max_spread}};
}

int cmd_enumerate(Common& c, const EnumerateArgs& a)
{
    Input in;
    in.config = load_configuration(c);
    in.spec = in.config.hypersimplex();
    PointGroup group = make_group(c, in.config);
    EnumerationOptions opt;
    opt.threads = std::max<std::size_t>(1, c.threads);
    opt.checkpoint = a.checkpoint;
    opt.resume = a.resume;
    opt.max_levels = a.max_levels;
    opt.max_orbits = a.max_orbits;
    opt.seed = a.seed;
    if (a.verbose)
        opt.progress = [](std::size_t level, std::size_t known, std::size_t frontier) {
            std::cerr << "level " << level << ": " << known << " orbits, frontier " << frontier << "\n";
        };
    EnumerationResult r = enumerate_regular_triangulations(in.config, group, opt);
    Json j;
    j["configuration"] = config_summary(in);
    j["group_order"] = group.order();
    j["complete"] = r.complete;
    j["levels"] = r.levels;
    j["triangulations"] = catalog_summary(r.catalog);
    j["triangulations"]["nonregular_neighbours"] = r.catalog.nonregular_neighbours;
    if (!a.catalog.empty())
        write_text_file(a.catalog, catalog_json(r.catalog).dump() + "\n");
    if (r.complete && !a.coarsest.empty()) {
        OrbitCatalog rays = collect_coarsest_orbits(in.config, group, r.catalog, opt.threads);
        j["coarsest"] = catalog_summary(rays);
        write_text_file(a.coarsest, catalog_json(rays).dump() + "\n");
    }
    emit(c, j);
    return 0;
}

int cmd_coarsest(Common& c, const std::string& catalog_file)
{
    PointConfiguration config = load_configuration(c);
    PointGroup group = make_group(c, config);
    OrbitCatalog tri = catalog_from_json(read_json_file(catalog_file));
    if (!c.unchecked)
        for (const auto& t : tri.representatives)
            if (!t.is_triangulation(config.dim()))
                throw InvalidInput("catalog entry is not a triangulation of this configuration");
    OrbitCatalog rays = collect_coarsest_orbits(config, group, tri, std::max<std::size_t>(1, c.threads));
    Json j = catalog_json(rays);
    j["max_spread"] = rays.spread_histogram.empty() ? 0 : rays.spread_histogram.rbegin()->first;
    emit(c, j);
    return 0;
}

int cmd_decompose(Common& c, const Lifting& l, const std::string& dot)
{
    Input in = resolve(c, l);
    if (in.metric && !is_pseudometric(*in.metric))
        throw InvalidInput("decompose needs a pseudo-metric (triangle inequality violated)");
    int n = require_delta2(in, "decompose");
    SplitDecomposition d = split_decompose(in.config, in.heights);
    if (!c.unchecked) {
        QVector sum = d.prime_part;
        for (const auto& t : d.terms)
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += t.coefficient * t.split.heights[i];
        if (sum != in.heights)
            throw InvariantViolation("split decomposition does not reconstruct the input");
        if (!d.coherent)
            throw InvariantViolation("split decomposition is not coherent");
        if (!d.prime_is_split_prime)
            throw InvariantViolation("split-prime part has a split ray");
    }
    Json splits = Json::array();
    for (const auto& t : d.terms)
        splits.push_back({{"A", one_based(t.split.part)},
                          {"type", "D_{" + std::to_string(split_type(n, t.split.part).first) + "," +
                                       std::to_string(split_type(n, t.split.part).second) + "}"},
                          {"coefficient", exact_and_decimal(t.coefficient)}});

    // all rays of the secondary cone with their coherency indices
    PointGroup group = make_group(c, in.config);
    Json rays = Json::array();
    std::set<Subdivision> orbits;
    Envelope env = envelope(in.config, in.heights);
    if (d.subdivision.spread() > 1) {
        auto found = d.subdivision.is_triangulation(in.config.dim()) ? secondary_rays(in.config, d.subdivision)
                                                                     : secondary_rays_of_subdivision(in.config, d.subdivision);
        for (const auto& r : found) {
            QVector metric = metric_representative(n, r.ray);
            HeightFunction h(metric.size());
            for (std::size_t i = 0; i < h.size(); ++i)
                h[i] = -metric[i];
            auto index = coherency_index(in.config, env, envelope(in.config, h));
            orbits.insert(group.canonical(r.subdivision));
            Json jr{{"metric", vector_json(metric)}, {"classification", ray_type_json(classify_ray(n, metric))}};
            jr["coherency_index"] = index ? exact_and_decimal(*index) : Json(nullptr);
            rays.push_back(std::move(jr));
        }
    }
    DissimilarityMap prime = DissimilarityMap::from_heights(n, d.prime_part);
    Json j;
    j["taxa"] = in.taxa;
    j["lifting"] = in.lifting;
    j["spread"] = d.subdivision.spread();
    j["triangulation"] = d.subdivision.is_triangulation(in.config.dim());
    j["splits"] = splits;
    j["prime_part"] = metric_side(prime.values());
    j["coherent"] = d.coherent;
    j["split_prime"] = d.prime_is_split_prime;
    j["ray_orbits"] = orbits.size();
    j["rays"] = rays;
    if (!dot.empty())
        write_text_file(dot, tight_span_dot(tight_span(in.config, in.heights, 1)));
    emit(c, j);
    return 0;
}

int cmd_metric_fan(Common& c, bool allow_large, const std::string& sigma_file)
{
    if (c.n == 0)
        throw InvalidInput("metric-fan needs --n");
    MetricRays mc = metric_cone_rays(c.n, allow_large);
    auto orbit_json = [](const std::vector<RayOrbit>& orbits) {
        Json out = Json::array();
        for (const auto& o : orbits) {
            Json j{{"representative", vector_json(o.representative)}, {"size", o.size.get_str()}};
            j.update(ray_type_json(o.type));
            out.push_back(std::move(j));
        }
        return out;
    };
    Json j;
    j["n"] = c.n;
    j["metric_cone"] = {{"rays", mc.cone.rays.size()}, {"orbits", mc.orbits.size()}, {"ray_orbits", orbit_json(mc.orbits)}};
    if (!sigma_file.empty()) {
        OrbitCatalog sigma = catalog_from_json(read_json_file(sigma_file));
        auto fan = metric_fan_rays(c.n, sigma);
        auto missing = orbits_missing_from(mc.orbits, fan);
        if (!c.unchecked && !missing.empty())
            throw InvariantViolation("an extreme ray orbit of the metric cone is missing from the metric fan");
        Integer total = 0;
        for (const auto& o : fan)
            total += o.size;
        j["metric_fan"] = {{"rays", total.get_str()}, {"orbits", fan.size()}, {"ray_orbits", orbit_json(fan)}};
    }
    emit(c, j);
    return 0;
}

int cmd_coherency(Common& c, const Lifting& l, const Lifting& wrt)
{
    Input in = resolve(c, l);
    Common c2 = c;
    Input other = resolve(c2, wrt);
    if (other.config.points() != in.config.points())
        throw InvalidInput("the two liftings live on different configurations");
    auto index = coherency_index(in.config, in.heights, other.heights);
    Json j{{"lifting", in.lifting}, {"with_respect_to", other.lifting}};
    j["coherency_index"] = index ? exact_and_decimal(*index) : Json("infinity");
    emit(c, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Regular subdivisions of hypersimplices, secondary fans and split decompositions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t threads = 1;
    app.add_option("--threads", threads, "worker threads (default $SECFAN_THREADS or 1)")
        ->envname("SECFAN_THREADS")
        ->check(CLI::PositiveNumber);
    std::string group = "default";
    app.add_option("--group", group, "symmetry group: default, sym, sym_x2, trivial or generator cycles");

    Common common;
    Lifting lifting;

    auto* gen = app.add_subcommand("gen", "vertices of Δ(k,n) in descending lexicographic order");
    add_common(gen, common, false);

    std::string dot;
    auto* subdivide = app.add_subcommand("subdivide", "regular subdivision induced by a lifting");
    add_common(subdivide, common);
    add_lifting(subdivide, lifting);
    subdivide->add_option("--dot", dot, "write the dual graph in DOT format to this file");

    int max_dim = 1;
    bool as_json = false;
    auto* tightspan = app.add_subcommand("tightspan", "tight span (bounded faces of the envelope) as DOT");
    add_common(tightspan, common);
    add_lifting(tightspan, lifting);
    tightspan->add_option("--max-dim", max_dim, "largest face dimension to compute (-1 for all)");
    tightspan->add_flag("--json", as_json, "print the face list as JSON instead of DOT");

    auto* seccone = app.add_subcommand("seccone", "secondary cone and its rays");
    add_common(seccone, common);
    add_lifting(seccone, lifting);

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "regular triangulations up to symmetry by flips");
    add_common(enumerate, common);
    enumerate->add_option("--checkpoint", en.checkpoint, "append-only checkpoint file (one line per level)");
    enumerate->add_flag("--resume", en.resume, "continue from --checkpoint");
    enumerate->add_option("--max-levels", en.max_levels, "stop after this many BFS levels in this run");
    enumerate->add_option("--max-orbits", en.max_orbits, "resource cap on the number of orbits");
    enumerate->add_option("--seed", en.seed, "seed for random seed triangulations");
    enumerate->add_option("--catalog", en.catalog, "write the triangulation catalog JSON here");
    enumerate->add_option("--coarsest", en.coarsest, "also collect coarsest subdivisions, catalog JSON here");
    enumerate->add_flag("-v,--verbose", en.verbose, "progress on stderr");

    std::string catalog_file;
    auto* coarsest = app.add_subcommand("coarsest", "coarsest subdivisions from a triangulation catalog");
    add_common(coarsest, common);
    coarsest->add_option("--catalog", catalog_file, "triangulation catalog from 'enumerate --catalog'")->required();

    auto* decompose = app.add_subcommand("decompose", "split decomposition of a metric");
    add_common(decompose, common);
    add_lifting(decompose, lifting);
    decompose->add_option("--dot", dot, "write the tight span 1-skeleton in DOT format to this file");

    bool allow_large = false;
    std::string sigma_file;
    auto* metric_fan = app.add_subcommand("metric-fan", "rays of the metric cone MC(n) and the metric fan");
    add_common(metric_fan, common, false);
    metric_fan->add_flag("--allow-large", allow_large, "permit n > 6");
    metric_fan->add_option("--sigma", sigma_file, "coarsest catalog of Δ(2,n) (from enumerate --coarsest)");

    Lifting wrt;
    auto* coherency = app.add_subcommand("coherency", "coherency index of one lifting with respect to another");
    add_common(coherency, common);
    add_lifting(coherency, lifting);
    coherency->add_option("--wrt-heights", wrt.heights, "heights file of the second lifting");
    coherency->add_option("--wrt-metric", wrt.metric, "metric file of the second lifting");
    coherency->add_option("--wrt-split", wrt.split, "split A (1-based labels) of the second lifting");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    common.threads = threads;
    common.group = group;

    try {
        if (*gen)
            return cmd_gen(common);
        if (*subdivide)
            return cmd_subdivide(common, lifting, dot);
        if (*tightspan)
            return cmd_tightspan(common, lifting, max_dim, as_json);
        if (*seccone)
            return cmd_seccone(common, lifting);
        if (*enumerate)
            return cmd_enumerate(common, en);
        if (*coarsest)
            return cmd_coarsest(common, catalog_file);
        if (*decompose)
            return cmd_decompose(common, lifting, dot);
        if (*metric_fan)
            return cmd_metric_fan(common, allow_large, sigma_file);
        if (*coherency)
            return cmd_coherency(common, lifting, wrt);
    }
    catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    }
    catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    }
    catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
