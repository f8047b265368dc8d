#include "secfan/metrics.hpp"

#include "secfan/hypersimplex.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace secfan {

HCone metric_cone(int n)
{
    if (n < 2)
        throw InvalidInput("metric cone needs n >= 2");
    HCone cone;
    cone.ambient_dim = pair_count(n);
    for (std::size_t p = 0; p < cone.ambient_dim; ++p) {
        QVector row(cone.ambient_dim);
        row[p] = 1;
        cone.inequalities.push_back(std::move(row));
    }
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k)
                    continue;
                QVector row(cone.ambient_dim);
                row[pair_index(n, i, j)] += 1;
                row[pair_index(n, j, k)] += 1;
                row[pair_index(n, i, k)] -= 1;
                cone.inequalities.push_back(std::move(row));
            }
    return cone;
}

PointConfiguration metric_configuration(int n)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const PointConfiguration>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_shared<const PointConfiguration>(vertices({2, n}));
    return *slot;
}

PointGroup metric_group(int n) { return PointGroup::for_hypersimplex({2, n}, GroupSpec{}); }

std::string RayType::tag() const
{
    if (is_split)
        return "D_{" + std::to_string(split.first) + "," + std::to_string(split.second) + "}";
    return "non-split";
}

namespace {

QVector reduced(const RowSpace& lineality, QVector v)
{
    lineality.reduce(v);
    return v;
}

/** c > 0 with a = c*b, or nothing. */
std::optional<Rational> positive_multiple(const QVector& a, const QVector& b)
{
    std::optional<Rational> c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] == 0) {
            if (a[i] != 0)
                return std::nullopt;
            continue;
        }
        Rational r = a[i] / b[i];
        if (c && *c != r)
            return std::nullopt;
        c = r;
    }
    if (!c || *c <= 0)
        return std::nullopt;
    return c;
}

}  // namespace

RayType classify_ray(int n, const QVector& metric)
{
    if (metric.size() != pair_count(n))
        throw InvalidInput("classify_ray: vector length does not match n");
    const PointConfiguration config = metric_configuration(n);
    const RowSpace lineality = affine_lineality(config);
    RayType t;
    QVector m = reduced(lineality, metric);
    if (is_zero(m)) {
        for (int i = 0; i < n; ++i) {
            if (positive_multiple(metric, split_pseudometric(n, {i}).values())) {
                t.is_split = true;
                t.split = {1, n - 1};
                t.part = i == 0 ? std::vector<int>{0} : std::vector<int>{};
                if (t.part.empty())
                    for (int j = 0; j < n; ++j)
                        if (j != i)
                            t.part.push_back(j);
                t.spread = 1;
                return t;
            }
        }
        t.spread = 1;
        return t;
    }
    for (const auto& part : all_splits(n, 2)) {
        QVector s = reduced(lineality, split_pseudometric(n, part).values());
        if (positive_multiple(m, s)) {
            t.is_split = true;
            t.split = split_type(n, part);
            t.part = part;
            t.spread = 2;
            return t;
        }
    }
    QVector h(metric.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = -metric[i];
    t.spread = regular_subdivision(config, h).spread();
    return t;
}

namespace {

std::vector<RayOrbit> orbits_of(int n, const std::vector<QVector>& rays)
{
    const PointGroup group = metric_group(n);
    std::map<QVector, RayOrbit> orbits;
    for (const auto& r : rays) {
        QVector key = group.canonical(r);
        if (orbits.count(key))
            continue;
        RayOrbit o;
        o.representative = key;
        o.size = group.orbit_size(key);
        o.type = classify_ray(n, key);
        orbits.emplace(key, std::move(o));
    }
    std::vector<RayOrbit> out;
    for (auto& [key, o] : orbits)
        out.push_back(std::move(o));
    return out;
}

}  // namespace

MetricRays metric_cone_rays(int n, bool allow_large)
{
    if (n < 3)
        throw InvalidInput("metric_cone_rays needs n >= 3");
    if (n > 6 && !allow_large)
        throw ResourceLimit("metric cone rays beyond n = 6 need an explicit override");
    MetricRays out;
    out.cone = dd_rays(metric_cone(n));
    out.orbits = orbits_of(n, out.cone.rays);
    return out;
}

bool cone_contains(const HCone& cone, const QVector& v)
{
    for (const auto& a : cone.inequalities)
        if (dot(a, v) < 0)
            return false;
    for (const auto& e : cone.equations)
        if (dot(e, v) != 0)
            return false;
    return true;
}

HCone secondary_metric_cone(const DissimilarityMap& delta)
{
    const int n = delta.n();
    const PointConfiguration config = metric_configuration(n);
    Subdivision s = regular_subdivision(config, delta.as_heights());
    HCone sec = secondary_cone(config, s);
    HCone out = metric_cone(n);
    for (auto row : sec.inequalities) {
        for (auto& x : row)
            x = -x;
        out.inequalities.push_back(std::move(row));
    }
    out.equations = sec.equations;
    return out;
}

std::vector<RayOrbit> metric_fan_rays(int n, const OrbitCatalog& sigma)
{
    if (sigma.heights.size() != sigma.representatives.size())
        throw InvalidInput("metric_fan_rays: the catalog carries no ray heights");
    std::vector<QVector> rays;
    for (std::size_t i = 0; i < sigma.heights.size(); ++i) {
        // δ = -r, so that -δ = r induces the coarsest subdivision
        DissimilarityMap delta = DissimilarityMap::from_heights(n, sigma.heights[i]);
        VCone v = dd_rays(secondary_metric_cone(delta));
        if (!v.lineality_basis.empty())
            throw InvariantViolation("secondary metric cone is not pointed");
        std::size_t found = 0;
        for (const auto& r : v.rays) {
            RayType t = classify_ray(n, r);
            if (t.is_split && t.split.first == 1)
                continue;
            rays.push_back(r);
            ++found;
        }
        if (found == 0)
            throw InvariantViolation("secondary metric cone of a fan ray has no non-star ray");
    }
    for (int i = 0; i < n; ++i)
        rays.push_back(split_pseudometric(n, {i}).values());
    return orbits_of(n, rays);
}

QVector metric_representative(int n, const QVector& heights)
{
    if (heights.size() != pair_count(n))
        throw InvalidInput("metric_representative: vector length does not match n");
    const RowSpace lineality = affine_lineality(metric_configuration(n));
    QVector target(heights.size());
    for (std::size_t i = 0; i < heights.size(); ++i)
        target[i] = -heights[i];
    QVector key = reduced(lineality, target);
    if (is_zero(key))
        return target;
    DissimilarityMap delta = DissimilarityMap::from_heights(n, heights);
    VCone v = dd_rays(secondary_metric_cone(delta));
    std::optional<QVector> best;
    for (const auto& r : v.rays) {
        if (!positive_multiple(reduced(lineality, r), key))
            continue;
        QVector p = to_rational(primitive(r));
        if (!best || lex_less(p, *best))
            best = std::move(p);
    }
    if (best)
        return *best;
    return to_rational(primitive(key));
}

std::vector<RayOrbit> orbits_missing_from(const std::vector<RayOrbit>& mc, const std::vector<RayOrbit>& fan)
{
    std::set<QVector> have;
    for (const auto& o : fan)
        have.insert(o.representative);
    std::vector<RayOrbit> missing;
    for (const auto& o : mc)
        if (!have.count(o.representative))
            missing.push_back(o);
    return missing;
}

std::vector<SplitCandidate> hypersimplex_split_candidates(int n)
{
    std::vector<SplitCandidate> out;
    for (const auto& part : all_splits(n, 2)) {
        SplitCandidate c;
        c.part = part;
        c.label = "{";
        for (std::size_t i = 0; i < part.size(); ++i)
            c.label += (i ? "," : "") + std::to_string(part[i] + 1);
        c.label += "}";
        c.heights = split_pseudometric(n, part).as_heights();
        out.push_back(std::move(c));
    }
    return out;
}

SplitDecomposition split_decompose(const PointConfiguration& config, const HeightFunction& omega,
                                   const std::vector<SplitCandidate>* candidates)
{
    std::vector<SplitCandidate> defaults;
    if (!candidates) {
        const auto& spec = config.hypersimplex();
        if (!spec || spec->k != 2)
            throw InvalidInput("split_decompose: supply split candidates for configurations other than Δ(2,n)");
        defaults = hypersimplex_split_candidates(spec->n);
        candidates = &defaults;
    }
    if (omega.size() != config.size())
        throw InvalidInput("split_decompose: height vector has the wrong length");

    SplitDecomposition out;
    Envelope env = envelope(config, omega);
    out.subdivision = env.subdivision;
    HCone cone = secondary_cone_raw(config, out.subdivision);
    out.prime_part = omega;
    HeightFunction split_sum(config.size());
    for (const auto& c : *candidates) {
        if (c.heights.size() != config.size())
            throw InvalidInput("split candidate " + c.label + " has the wrong length");
        if (!cone_contains(cone, c.heights))
            continue;
        Envelope split_env = envelope(config, c.heights);
        if (split_env.subdivision.spread() != 2)
            throw InvalidInput("split candidate " + c.label + " does not induce a split");
        auto index = coherency_index(config, env, split_env);
        if (!index || *index <= 0)
            throw InvariantViolation("split in the secondary cone has a nonpositive coherency index");
        for (std::size_t i = 0; i < config.size(); ++i) {
            out.prime_part[i] -= *index * c.heights[i];
            split_sum[i] += *index * c.heights[i];
        }
        out.terms.push_back({c, *index});
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const SplitTerm& a, const SplitTerm& b) { return a.coefficient > b.coefficient; });

    out.coherent = is_coherent_decomposition(config, omega, out.prime_part, split_sum);
    Subdivision prime = regular_subdivision(config, out.prime_part);
    out.prime_is_split_prime = true;
    if (prime.spread() > 1)
        for (const auto& r : secondary_rays_of_subdivision(config, prime))
            if (r.subdivision.spread() == 2)
                out.prime_is_split_prime = false;
    return out;
}

}  // namespace secfan
