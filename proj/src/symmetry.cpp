#include "secfan/symmetry.hpp"

#include "secfan/hypersimplex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace secfan {

GroupSpec GroupSpec::parse(const std::string& text)
{
    GroupSpec g;
    if (text == "sym" || text == "trivial") {
        g.kind = text;
        return g;
    }
    if (text == "sym_x2") {
        g.kind = "sym";
        g.complement = true;
        return g;
    }
    // explicit generators: comma separated products of cycles on 0-based coordinates
    g.kind = "generators";
    std::stringstream all(text);
    std::string gen;
    while (std::getline(all, gen, ',')) {
        std::vector<std::vector<int>> cycles;
        std::size_t pos = 0;
        while ((pos = gen.find('(', pos)) != std::string::npos) {
            auto end = gen.find(')', pos);
            if (end == std::string::npos)
                throw InvalidInput("group generator has an unclosed cycle: " + gen);
            std::stringstream cs(gen.substr(pos + 1, end - pos - 1));
            std::vector<int> cycle;
            int x = 0;
            while (cs >> x)
                cycle.push_back(x);
            if (!cs.eof())
                throw InvalidInput("group generator has a malformed cycle: " + gen);
            cycles.push_back(std::move(cycle));
            pos = end + 1;
        }
        if (cycles.empty())
            throw InvalidInput("unknown group '" + text + "' (expected sym, sym_x2, trivial or cycles)");
        int m = 0;
        for (const auto& c : cycles)
            for (int x : c) {
                if (x < 0)
                    throw InvalidInput("negative point in group generator");
                m = std::max(m, x + 1);
            }
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (const auto& c : cycles)
            for (int x : c) {
                if (used[static_cast<std::size_t>(x)])
                    throw InvalidInput("point " + std::to_string(x) + " repeated in group generator " + gen);
                used[static_cast<std::size_t>(x)] = true;
            }
        Permutation p(static_cast<std::size_t>(m));
        std::iota(p.begin(), p.end(), 0);
        for (const auto& c : cycles)
            for (std::size_t i = 0; i < c.size(); ++i)
                p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
        g.generators.push_back(std::move(p));
    }
    return g;
}

std::string GroupSpec::to_string() const
{
    if (kind == "sym")
        return complement ? "sym_x2" : "sym";
    if (kind == "trivial")
        return kind;
    std::string out;
    for (const auto& p : generators) {
        if (!out.empty())
            out += ",";
        std::vector<bool> seen(p.size(), false);
        std::string gen;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (seen[i] || p[i] == static_cast<int>(i))
                continue;
            gen += "(";
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
                seen[j] = true;
                gen += (gen.back() == '(' ? "" : " ") + std::to_string(j);
            }
            gen += ")";
        }
        out += gen.empty() ? "()" : gen;
    }
    return out;
}

GroupSpec default_group(const HypersimplexSpec& spec)
{
    GroupSpec g;
    g.complement = (spec.n == 2 * spec.k);
    return g;
}

namespace {

std::map<std::vector<int>, int> vertex_labels(const HypersimplexSpec& spec)
{
    std::map<std::vector<int>, int> labels;
    auto list = hypersimplex_vertex_list(spec);
    for (std::size_t i = 0; i < list.size(); ++i)
        labels[list[i]] = static_cast<int>(i);
    return labels;
}

}  // namespace

Permutation induced_vertex_permutation(const Permutation& g, const HypersimplexSpec& spec)
{
    if (g.size() != static_cast<std::size_t>(spec.n))
        throw InvalidInput("coordinate permutation has the wrong degree");
    auto list = hypersimplex_vertex_list(spec);
    auto labels = vertex_labels(spec);
    Permutation out(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::vector<int> image(list[i].size());
        for (std::size_t j = 0; j < image.size(); ++j)
            image[static_cast<std::size_t>(g[j])] = list[i][j];
        out[i] = labels.at(image);
    }
    return out;
}

Permutation complement_vertex_permutation(const HypersimplexSpec& spec)
{
    if (spec.n != 2 * spec.k)
        throw InvalidInput("the complement is a symmetry of Δ(k,n) only for n = 2k");
    auto list = hypersimplex_vertex_list(spec);
    auto labels = vertex_labels(spec);
    Permutation out(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::vector<int> image = list[i];
        for (auto& x : image)
            x = 1 - x;
        out[i] = labels.at(image);
    }
    return out;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& generators, std::size_t m)
{
    Permutation id(m);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> seen{id};
    std::vector<Permutation> queue{id};
    for (const auto& g : generators)
        if (g.size() != m)
            throw InvalidInput("group generator has the wrong degree");
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& g : generators) {
            Permutation h(m);
            for (std::size_t i = 0; i < m; ++i)
                h[i] = g[static_cast<std::size_t>(queue[q][i])];
            if (seen.insert(h).second)
                queue.push_back(std::move(h));
            if (queue.size() > 1'000'000)
                throw ResourceLimit("group has more than a million elements");
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

PointGroup::PointGroup(std::vector<Permutation> elements) : elements_(std::move(elements))
{
    if (elements_.empty())
        throw InvalidInput("group has no elements");
    degree_ = elements_.front().size();
    Permutation id(degree_);
    std::iota(id.begin(), id.end(), 0);
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (!std::binary_search(elements_.begin(), elements_.end(), id))
        elements_.insert(elements_.begin(), id);
}

PointGroup PointGroup::trivial(std::size_t points)
{
    Permutation id(points);
    std::iota(id.begin(), id.end(), 0);
    return PointGroup({id});
}

PointGroup PointGroup::for_hypersimplex(const HypersimplexSpec& spec, const GroupSpec& group)
{
    check_hypersimplex(spec);
    const auto n = static_cast<std::size_t>(spec.n);
    std::size_t points = binomial(spec.n, spec.k).get_ui();
    if (group.kind == "trivial")
        return trivial(points);

    std::vector<Permutation> coordinate_gens;
    if (group.kind == "sym") {
        if (n > 8)
            throw ResourceLimit("exhaustive Sym(n) is limited to n <= 8");
        Permutation t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        Permutation c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = static_cast<int>((i + 1) % n);
        coordinate_gens = {t, c};
    }
    else if (group.kind == "generators") {
        for (auto g : group.generators) {
            if (g.size() > n)
                throw InvalidInput("group generator moves a coordinate beyond n");
            for (std::size_t i = g.size(); i < n; ++i)
                g.push_back(static_cast<int>(i));
            coordinate_gens.push_back(std::move(g));
        }
    }
    else {
        throw InvalidInput("unknown group kind " + group.kind);
    }
    std::vector<Permutation> vertex_gens;
    for (const auto& g : coordinate_gens)
        vertex_gens.push_back(induced_vertex_permutation(g, spec));
    if (group.complement)
        vertex_gens.push_back(complement_vertex_permutation(spec));
    return PointGroup(generate_group(vertex_gens, points));
}

Subdivision PointGroup::apply(const Permutation& g, const Subdivision& s) const
{
    std::vector<Cell> cells;
    cells.reserve(s.cells.size());
    for (const auto& c : s.cells) {
        Cell image;
        image.reserve(c.size());
        for (int i : c)
            image.push_back(g[static_cast<std::size_t>(i)]);
        cells.push_back(std::move(image));
    }
    return Subdivision(std::move(cells));
}

QVector PointGroup::apply(const Permutation& g, const QVector& v) const
{
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[static_cast<std::size_t>(g[i])] = v[i];
    return out;
}

namespace {

using Mask = std::uint64_t;

/** Lexicographic order of the sorted element lists of two sets. */
bool mask_less(Mask a, Mask b)
{
    if (a == b)
        return false;
    int x = std::countr_zero(a ^ b);
    auto above = [x](Mask m) { return x == 63 ? Mask{0} : (m >> (x + 1)); };
    if ((a >> x) & 1U)
        return above(b) != 0;
    return above(a) == 0;
}

std::vector<Mask> to_masks(const Subdivision& s)
{
    std::vector<Mask> out;
    for (const auto& c : s.cells) {
        Mask m = 0;
        for (int i : c)
            m |= Mask{1} << i;
        out.push_back(m);
    }
    return out;
}

void image_masks(const Permutation& g, const std::vector<Mask>& cells, std::vector<Mask>& out)
{
    out.clear();
    for (Mask c : cells) {
        Mask m = 0;
        while (c) {
            int i = std::countr_zero(c);
            c &= c - 1;
            m |= Mask{1} << g[static_cast<std::size_t>(i)];
        }
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), mask_less);
}

bool list_less(const std::vector<Mask>& a, const std::vector<Mask>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), mask_less);
}

Subdivision from_masks(const std::vector<Mask>& masks)
{
    std::vector<Cell> cells;
    for (Mask m : masks) {
        Cell c;
        while (m) {
            c.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        cells.push_back(std::move(c));
    }
    return Subdivision(std::move(cells));
}

}  // namespace

Subdivision PointGroup::canonical(const Subdivision& s) const
{
    if (degree_ > 64) {
        Subdivision best = s;
        for (const auto& g : elements_)
            best = std::min(best, apply(g, s));
        return best;
    }
    std::vector<Mask> cells = to_masks(s);
    std::vector<Mask> best;
    std::vector<Mask> image;
    for (const auto& g : elements_) {
        image_masks(g, cells, image);
        if (best.empty() || list_less(image, best))
            best = image;
    }
    return from_masks(best);
}

std::size_t PointGroup::stabilizer_size(const Subdivision& s) const
{
    std::size_t count = 0;
    for (const auto& g : elements_)
        if (apply(g, s) == s)
            ++count;
    return count;
}

Integer PointGroup::orbit_size(const Subdivision& s) const
{
    return Integer(static_cast<unsigned long>(order())) / Integer(static_cast<unsigned long>(stabilizer_size(s)));
}

QVector PointGroup::canonical(const QVector& v, const RowSpace* lineality) const
{
    std::optional<QVector> best;
    for (const auto& g : elements_) {
        QVector w = apply(g, v);
        if (lineality)
            lineality->reduce(w);
        w = to_rational(primitive(w));
        if (!best || w < *best)
            best = std::move(w);
    }
    return *best;
}

Integer PointGroup::orbit_size(const QVector& v, const RowSpace* lineality) const
{
    std::set<QVector> images;
    for (const auto& g : elements_) {
        QVector w = apply(g, v);
        if (lineality)
            lineality->reduce(w);
        images.insert(to_rational(primitive(w)));
    }
    return Integer(static_cast<unsigned long>(images.size()));
}

RowSpace affine_lineality(const PointConfiguration& config)
{
    const QMatrix& h = config.homogenized();
    std::vector<QVector> rows;
    for (std::size_t c = 0; c < h.cols(); ++c) {
        QVector col(h.rows());
        for (std::size_t r = 0; r < h.rows(); ++r)
            col[r] = h(r, c);
        rows.push_back(std::move(col));
    }
    return row_space(rows, h.rows());
}

}  // namespace secfan
