#include "secfan/dissimilarity.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace secfan {

std::size_t pair_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

std::size_t pair_index(int n, int i, int j)
{
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw InvalidInput("pair_index: invalid pair");
    if (i > j)
        std::swap(i, j);
    // pairs before row i: sum_{r<i} (n-1-r)
    std::size_t before = static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * n - i - 1) / 2;
    return before + static_cast<std::size_t>(j - i - 1);
}

DissimilarityMap::DissimilarityMap(int n, QVector values) : n_(n), values_(std::move(values))
{
    if (n < 2)
        throw InvalidInput("dissimilarity map needs at least two points");
    if (values_.size() != pair_count(n))
        throw InvalidInput("dissimilarity map on " + std::to_string(n) + " points needs " +
                           std::to_string(pair_count(n)) + " values, got " + std::to_string(values_.size()));
}

DissimilarityMap DissimilarityMap::from_matrix(const std::vector<QVector>& matrix)
{
    const int n = static_cast<int>(matrix.size());
    QVector values;
    for (int i = 0; i < n; ++i) {
        if (matrix[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n))
            throw InvalidInput("distance matrix is not square");
        if (matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
            throw InvalidInput("distance matrix has a nonzero diagonal entry in row " + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (a != matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw InvalidInput("distance matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
            values.push_back(a);
        }
    return DissimilarityMap(n, std::move(values));
}

const Rational& DissimilarityMap::operator()(int i, int j) const
{
    static const Rational zero(0);
    if (i == j)
        return zero;
    return values_[pair_index(n_, i, j)];
}

QVector DissimilarityMap::as_heights() const
{
    QVector h(values_.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = -values_[i];
    return h;
}

DissimilarityMap DissimilarityMap::from_heights(int n, const QVector& heights)
{
    QVector v(heights.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = -heights[i];
    return DissimilarityMap(n, std::move(v));
}

namespace {

std::vector<bool> membership(int n, const std::vector<int>& part)
{
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int a : part) {
        if (a < 0 || a >= n)
            throw InvalidInput("split part contains an invalid point " + std::to_string(a));
        in[static_cast<std::size_t>(a)] = true;
    }
    auto size = std::count(in.begin(), in.end(), true);
    if (size == 0 || size == n)
        throw InvalidInput("split part must be a nonempty proper subset");
    return in;
}

}  // namespace

DissimilarityMap split_pseudometric(int n, const std::vector<int>& part)
{
    auto in = membership(n, part);
    QVector values;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            values.emplace_back(in[static_cast<std::size_t>(i)] != in[static_cast<std::size_t>(j)] ? 1 : 0);
    return DissimilarityMap(n, std::move(values));
}

std::pair<int, int> split_type(int n, const std::vector<int>& part)
{
    auto in = membership(n, part);
    int a = static_cast<int>(std::count(in.begin(), in.end(), true));
    return {std::min(a, n - a), std::max(a, n - a)};
}

std::vector<std::vector<int>> all_splits(int n, int min_part)
{
    if (n < 2 || n > 30)
        throw InvalidInput("all_splits: n out of range");
    std::vector<std::vector<int>> out;
    const unsigned long full = (1UL << n) - 1;
    for (unsigned long mask = 1; mask < full; ++mask) {
        if ((mask & 1UL) == 0)
            continue;
        std::vector<int> part;
        for (int i = 0; i < n; ++i)
            if (mask & (1UL << i))
                part.push_back(i);
        int a = static_cast<int>(part.size());
        if (std::min(a, n - a) >= min_part)
            out.push_back(std::move(part));
    }
    return out;
}

DissimilarityMap thrackle(int n)
{
    if (n < 3)
        throw InvalidInput("thrackle metric needs n >= 3");
    QVector values;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            values.emplace_back((j - i) * (n - j + i));
    return DissimilarityMap(n, std::move(values));
}

bool is_pseudometric(const DissimilarityMap& d)
{
    const int n = d.n();
    for (const auto& v : d.values())
        if (v < 0)
            return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                if (d(i, k) > d(i, j) + d(j, k))
                    return false;
            }
    return true;
}

bool is_metric(const DissimilarityMap& d)
{
    if (!is_pseudometric(d))
        return false;
    return std::none_of(d.values().begin(), d.values().end(), [](const Rational& v) { return v == 0; });
}

namespace {

std::optional<Rational> try_number(const std::string& token)
{
    try {
        return parse_rational(token);
    }
    catch (const InvalidInput&) {
        return std::nullopt;
    }
}

struct Row
{
    std::string name;
    QVector values;
};

}  // namespace

ParsedMetric parse_metric(std::string_view text)
{
    std::vector<std::vector<std::string>> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
        if (!tokens.empty())
            lines.push_back(std::move(tokens));
    }
    if (lines.empty())
        throw InvalidInput("metric file contains no data");

    ParsedMetric out;
    std::size_t first = 0;
    std::optional<std::size_t> declared;
    if (lines[0].size() == 1 && lines.size() > 1) {
        auto count = try_number(lines[0][0]);
        if (count && count->get_den() == 1 && *count > 0 && lines.size() == count->get_num().get_ui() + 1) {
            declared = count->get_num().get_ui();
            first = 1;
        }
    }
    if (!declared) {
        bool names = std::all_of(lines[0].begin(), lines[0].end(), [](const std::string& t) { return !try_number(t); });
        if (names) {
            out.taxa = lines[0];
            first = 1;
        }
    }

    std::vector<Row> rows;
    bool named_rows = false;
    for (std::size_t l = first; l < lines.size(); ++l) {
        Row row;
        std::size_t start = 0;
        if (!try_number(lines[l][0])) {
            row.name = lines[l][0];
            named_rows = true;
            start = 1;
        }
        for (std::size_t t = start; t < lines[l].size(); ++t) {
            auto v = try_number(lines[l][t]);
            if (!v)
                throw InvalidInput("malformed entry '" + lines[l][t] + "' in distance matrix");
            row.values.push_back(*v);
        }
        rows.push_back(std::move(row));
    }
    const std::size_t r = rows.size();
    if (r == 0)
        throw InvalidInput("metric file contains no matrix rows");

    auto lengths_match = [&](auto expected) {
        for (std::size_t i = 0; i < r; ++i)
            if (rows[i].values.size() != expected(i))
                return false;
        return true;
    };

    std::size_t n = 0;
    std::vector<QVector> full;
    auto place = [&](std::size_t i, std::size_t j, const Rational& v) {
        if (i == j) {
            if (v != 0)
                throw InvalidInput("distance matrix has a nonzero diagonal entry");
            return;
        }
        full[i][j] = v;
        full[j][i] = v;
    };

    if (lengths_match([&](std::size_t) { return r; })) {
        n = r;
        for (const auto& row : rows)
            full.push_back(row.values);
    }
    else if (lengths_match([](std::size_t i) { return i + 1; })) {
        bool diag = std::all_of(rows.begin(), rows.end(), [](const Row& row) { return row.values.back() == 0; });
        n = diag ? r : r + 1;
        full.assign(n, QVector(n));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                place(diag ? i : i + 1, j, rows[i].values[j]);
    }
    else if (lengths_match([](std::size_t i) { return i; })) {
        n = r;
        full.assign(n, QVector(n));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < i; ++j)
                place(i, j, rows[i].values[j]);
    }
    else if (lengths_match([&](std::size_t i) { return r - i; })) {
        bool diag = std::all_of(rows.begin(), rows.end(), [](const Row& row) { return row.values.front() == 0; });
        n = diag ? r : r + 1;
        full.assign(n, QVector(n));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t t = 0; t < rows[i].values.size(); ++t)
                place(i, diag ? i + t : i + 1 + t, rows[i].values[t]);
    }
    else if (lengths_match([&](std::size_t i) { return r - 1 - i; })) {
        n = r;
        full.assign(n, QVector(n));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t t = 0; t < rows[i].values.size(); ++t)
                place(i, i + 1 + t, rows[i].values[t]);
    }
    else {
        throw InvalidInput("distance matrix rows do not form a full or triangular matrix");
    }
    if (declared && *declared != n)
        throw InvalidInput("declared taxon count does not match the matrix");

    if (named_rows) {
        out.taxa.clear();
        for (const auto& row : rows)
            out.taxa.push_back(row.name);
        if (out.taxa.size() + 1 == n)
            out.taxa.insert(out.taxa.begin(), std::string());
    }
    if (!out.taxa.empty() && out.taxa.size() != n)
        throw InvalidInput("number of taxon names does not match the matrix");
    out.map = DissimilarityMap::from_matrix(full);
    return out;
}

ParsedMetric read_metric_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw InvalidInput("cannot open metric file " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_metric(buf.str());
}

}  // namespace secfan
