#include "secfan/json_io.hpp"

#include <fstream>
#include <sstream>

namespace secfan {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_number_float())
        return parse_rational(j.dump());
    throw InvalidInput("expected a rational number, got " + j.dump());
}

Json vector_json(const QVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(rational_json(x));
    return out;
}

QVector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected an array of rationals");
    QVector v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Json exact_and_decimal(const Rational& q) { return {{"exact", to_string(q)}, {"decimal", to_decimal(q)}}; }

Json cells_json(const Subdivision& s)
{
    Json out = Json::array();
    for (const auto& c : s.cells)
        out.push_back(c);
    return out;
}

Subdivision subdivision_from_json(const Json& j)
{
    const Json& cells = j.is_object() ? j.at("cells") : j;
    if (!cells.is_array())
        throw InvalidInput("subdivision: expected an array of cells");
    std::vector<Cell> out;
    for (const auto& c : cells) {
        if (!c.is_array())
            throw InvalidInput("subdivision: a cell is not an array");
        Cell cell;
        for (const auto& x : c) {
            if (!x.is_number_integer())
                throw InvalidInput("subdivision: cell entries must be integers");
            cell.push_back(x.get<int>());
        }
        out.push_back(std::move(cell));
    }
    return Subdivision(std::move(out));
}

Json configuration_json(const PointConfiguration& config)
{
    Json j;
    if (const auto& spec = config.hypersimplex()) {
        j["k"] = spec->k;
        j["n"] = spec->n;
    }
    Json points = Json::array();
    for (std::size_t i = 0; i < config.size(); ++i) {
        Json row = Json::array();
        for (const auto& x : config.points().row(i)) {
            if (x.get_den() == 1 && x.get_num().fits_slong_p())
                row.push_back(x.get_num().get_si());
            else
                row.push_back(to_string(x));
        }
        points.push_back(std::move(row));
    }
    j["points"] = std::move(points);
    return j;
}

PointConfiguration configuration_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("points"))
        throw InvalidInput("configuration JSON needs a \"points\" array");
    std::vector<QVector> rows;
    for (const auto& r : j.at("points"))
        rows.push_back(vector_from_json(r));
    if (rows.empty())
        throw InvalidInput("configuration has no points");
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw InvalidInput("configuration points have different lengths");
    std::optional<HypersimplexSpec> spec;
    if (j.contains("k") && j.contains("n"))
        spec = HypersimplexSpec{j.at("k").get<int>(), j.at("n").get<int>()};
    return PointConfiguration(QMatrix(rows), spec);
}

namespace {

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string())
        return Integer(j.get<std::string>(), 10);
    throw InvalidInput("expected an integer, got " + j.dump());
}

}  // namespace

Json catalog_json(const OrbitCatalog& catalog)
{
    Json reps = Json::array();
    for (std::size_t i = 0; i < catalog.representatives.size(); ++i) {
        Json r;
        r["cells"] = cells_json(catalog.representatives[i]);
        r["spread"] = catalog.representatives[i].spread();
        r["orbit_size"] = integer_json(catalog.orbit_sizes[i]);
        if (i < catalog.heights.size())
            r["heights"] = vector_json(catalog.heights[i]);
        reps.push_back(std::move(r));
    }
    Json hist = Json::object();
    for (auto [spread, count] : catalog.spread_histogram)
        hist[std::to_string(spread)] = count;
    return {{"orbits", catalog.orbits()},
            {"total", integer_json(catalog.total())},
            {"nonregular_neighbours", catalog.nonregular_neighbours},
            {"spread_histogram", hist},
            {"representatives", reps}};
}

OrbitCatalog catalog_from_json(const Json& j)
{
    OrbitCatalog c;
    for (const auto& r : j.at("representatives")) {
        c.representatives.push_back(subdivision_from_json(r.at("cells")));
        c.orbit_sizes.push_back(integer_from_json(r.at("orbit_size")));
        if (r.contains("heights"))
            c.heights.push_back(vector_from_json(r.at("heights")));
    }
    for (const auto& [key, value] : j.at("spread_histogram").items())
        c.spread_histogram[std::stoul(key)] = value.get<std::size_t>();
    c.nonregular_neighbours = j.value("nonregular_neighbours", std::size_t{0});
    return c;
}

Json read_json_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(f);
    }
    catch (const Json::parse_error& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f)
        throw InvalidInput("cannot write " + path);
    f << text;
}

}  // namespace secfan
