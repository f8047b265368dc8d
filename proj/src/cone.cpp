#include "secfan/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace secfan {

namespace {

class Bits
{
  public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bits operator&(const Bits& o) const
    {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] &= o.words_[i];
        return r;
    }

    bool subset_of(const Bits& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0)
                return false;
        return true;
    }

  private:
    std::vector<std::uint64_t> words_;
};

/** A generator together with its values on all inequalities. */
struct Generator
{
    ZVector coords;
    ZVector slack;  // slack[i] = a_i . coords
    Bits zeros;     // processed inequalities vanishing on coords
};

void make_primitive(Generator& g)
{
    Integer c = 0;
    for (const auto& x : g.coords)
        if (x != 0) {
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
            if (c == 1)
                return;
        }
    if (c <= 1)
        return;
    for (auto& x : g.coords)
        if (x != 0)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : g.slack)
        if (x != 0)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

/** p * x + q * y, entrywise. */
ZVector combine(const Integer& p, const ZVector& x, const Integer& q, const ZVector& y)
{
    ZVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0)
            mpz_mul(out[i].get_mpz_t(), p.get_mpz_t(), x[i].get_mpz_t());
        if (y[i] != 0)
            mpz_addmul(out[i].get_mpz_t(), q.get_mpz_t(), y[i].get_mpz_t());
    }
    return out;
}

class DoubleDescription
{
  public:
    DoubleDescription(const HCone& cone, const DDOptions& options) : dim_(cone.ambient_dim), options_(options)
    {
        for (const auto& a : cone.inequalities) {
            if (a.size() != dim_)
                throw InvalidInput("inequality length does not match cone dimension");
            if (!is_zero(a))
                ineqs_.push_back(primitive(a));
        }
        for (const auto& e : cone.equations)
            if (e.size() != dim_)
                throw InvalidInput("equation length does not match cone dimension");
        auto basis = nullspace(cone.equations, dim_);
        space_dim_ = basis.size();
        for (const auto& b : basis) {
            Generator g;
            g.coords = primitive(b);
            g.slack = values(g.coords);
            g.zeros = Bits(ineqs_.size());
            lineality_.push_back(std::move(g));
        }
    }

    void run()
    {
        std::vector<bool> done(ineqs_.size(), false);
        std::size_t remaining = ineqs_.size();
        while (remaining > 0) {
            std::size_t next = choose(done);
            process(next);
            done[next] = true;
            --remaining;
        }
    }

    VCone result() const
    {
        VCone out;
        out.ambient_dim = dim_;
        RowSpace lin;
        lin.cols = dim_;
        for (const auto& l : lineality_)
            lin.insert(to_rational(l.coords));
        for (const auto& r : lin.rows)
            out.lineality_basis.push_back(normalize_line(r));
        for (const auto& r : rays_) {
            QVector v = to_rational(r.coords);
            lin.reduce(v);
            out.rays.push_back(normalize_ray(v));
        }
        std::sort(out.rays.begin(), out.rays.end(), lex_less);
        return out;
    }

  private:
    ZVector values(const ZVector& x) const
    {
        ZVector s(ineqs_.size());
        for (std::size_t i = 0; i < ineqs_.size(); ++i)
            s[i] = dot(ineqs_[i], x);
        return s;
    }

    std::size_t choose(const std::vector<bool>& done) const
    {
        // an inequality that cuts the lineality space is handled first
        for (std::size_t i = 0; i < ineqs_.size(); ++i) {
            if (done[i])
                continue;
            for (const auto& l : lineality_)
                if (l.slack[i] != 0)
                    return i;
        }
        // otherwise: free steps first, then most zeros, then fewest pairs
        std::size_t best = ineqs_.size();
        std::size_t best_zeros = 0;
        std::size_t best_pairs = 0;
        bool best_free = false;
        for (std::size_t i = 0; i < ineqs_.size(); ++i) {
            if (done[i])
                continue;
            std::size_t plus = 0, minus = 0, zeros = 0;
            for (const auto& r : rays_) {
                int s = sgn(r.slack[i]);
                if (s > 0)
                    ++plus;
                else if (s < 0)
                    ++minus;
                else
                    ++zeros;
            }
            bool free = minus == 0;
            std::size_t pairs = plus * minus;
            bool better = best == ineqs_.size() || (free && !best_free) ||
                          (free == best_free && (zeros > best_zeros || (zeros == best_zeros && pairs < best_pairs)));
            if (better) {
                best = i;
                best_zeros = zeros;
                best_pairs = pairs;
                best_free = free;
            }
        }
        return best;
    }

    void process(std::size_t a)
    {
        for (std::size_t li = 0; li < lineality_.size(); ++li) {
            if (lineality_[li].slack[a] != 0) {
                lineality_step(a, li);
                return;
            }
        }
        ray_step(a);
    }

    void lineality_step(std::size_t a, std::size_t li)
    {
        Generator l = std::move(lineality_[li]);
        lineality_.erase(lineality_.begin() + static_cast<std::ptrdiff_t>(li));
        if (l.slack[a] < 0) {
            for (auto& x : l.coords)
                x = -x;
            for (auto& x : l.slack)
                x = -x;
        }
        const Integer la = l.slack[a];
        for (auto& g : lineality_) {
            if (g.slack[a] == 0)
                continue;
            Integer ga = -g.slack[a];
            g.coords = combine(la, g.coords, ga, l.coords);
            g.slack = combine(la, g.slack, ga, l.slack);
            make_primitive(g);
        }
        for (auto& r : rays_) {
            if (r.slack[a] == 0) {
                r.zeros.set(a);
                continue;
            }
            Integer ra = -r.slack[a];
            r.coords = combine(la, r.coords, ra, l.coords);
            r.slack = combine(la, r.slack, ra, l.slack);
            make_primitive(r);
            r.zeros.set(a);
        }
        // the former line vanishes on every processed inequality
        l.zeros = Bits(ineqs_.size());
        for (std::size_t i = 0; i < processed_.size(); ++i)
            l.zeros.set(processed_[i]);
        rays_.push_back(std::move(l));
        processed_.push_back(a);
    }

    void ray_step(std::size_t a)
    {
        std::vector<std::size_t> plus, minus;
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            int s = sgn(rays_[i].slack[a]);
            if (s > 0)
                plus.push_back(i);
            else if (s < 0)
                minus.push_back(i);
        }
        if (minus.empty()) {
            for (auto& r : rays_)
                if (r.slack[a] == 0)
                    r.zeros.set(a);
            processed_.push_back(a);
            return;
        }

        const std::size_t pointed_dim = space_dim_ - lineality_.size();
        const std::size_t need = pointed_dim >= 2 ? pointed_dim - 2 : 0;

        std::vector<Generator> created;
        for (auto p : plus) {
            for (auto n : minus) {
                Bits common = rays_[p].zeros & rays_[n].zeros;
                if (common.count() < need)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays_.size() && adjacent; ++r) {
                    if (r == p || r == n)
                        continue;
                    if (common.subset_of(rays_[r].zeros))
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                const Integer& pa = rays_[p].slack[a];
                Integer na = -rays_[n].slack[a];
                Generator g;
                g.coords = combine(pa, rays_[n].coords, na, rays_[p].coords);
                g.slack = combine(pa, rays_[n].slack, na, rays_[p].slack);
                make_primitive(g);
                g.zeros = std::move(common);
                g.zeros.set(a);
                created.push_back(std::move(g));
            }
        }

        std::vector<Generator> next;
        next.reserve(rays_.size() - minus.size() + created.size());
        for (auto& r : rays_) {
            int s = sgn(r.slack[a]);
            if (s < 0)
                continue;
            if (s == 0)
                r.zeros.set(a);
            next.push_back(std::move(r));
        }
        for (auto& g : created)
            next.push_back(std::move(g));
        rays_ = std::move(next);
        processed_.push_back(a);
        if (options_.max_rays != 0 && rays_.size() > options_.max_rays)
            throw ResourceLimit("double description exceeded " + std::to_string(options_.max_rays) + " rays");
    }

    std::size_t dim_;
    std::size_t space_dim_ = 0;
    DDOptions options_;
    std::vector<ZVector> ineqs_;
    std::vector<Generator> lineality_;
    std::vector<Generator> rays_;
    std::vector<std::size_t> processed_;
};

}  // namespace

bool lex_less(const QVector& a, const QVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

QVector normalize_ray(const QVector& v) { return to_rational(primitive(v)); }

QVector normalize_line(const QVector& v)
{
    ZVector z = primitive(v);
    for (const auto& x : z) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : z)
                y = -y;
        break;
    }
    return to_rational(z);
}

VCone dd_rays(const HCone& cone, const DDOptions& options)
{
    DoubleDescription dd(cone, options);
    dd.run();
    return dd.result();
}

HCone facets_of(const VCone& cone)
{
    HCone dual;
    dual.ambient_dim = cone.ambient_dim;
    dual.inequalities = cone.rays;
    dual.equations = cone.lineality_basis;
    VCone d = dd_rays(dual);
    HCone out;
    out.ambient_dim = cone.ambient_dim;
    out.inequalities = d.rays;
    out.equations = d.lineality_basis;
    return out;
}

std::size_t cone_dim(const VCone& cone)
{
    std::vector<QVector> gens = cone.lineality_basis;
    gens.insert(gens.end(), cone.rays.begin(), cone.rays.end());
    return rank(gens, cone.ambient_dim);
}

std::size_t cone_dim(const HCone& cone) { return cone_dim(dd_rays(cone)); }

HCone minimize(const HCone& cone, const VCone& generators)
{
    const std::size_t d = cone.ambient_dim;
    std::vector<QVector> span = generators.lineality_basis;
    span.insert(span.end(), generators.rays.begin(), generators.rays.end());
    const std::size_t dim = rank(span, d);

    HCone out;
    out.ambient_dim = d;
    RowSpace eqs = row_space(nullspace(span, d), d);
    for (const auto& r : eqs.rows)
        out.equations.push_back(normalize_line(r));

    std::vector<std::vector<std::size_t>> seen_tight;
    for (const auto& a : cone.inequalities) {
        std::vector<std::size_t> tight;
        for (std::size_t r = 0; r < generators.rays.size(); ++r)
            if (sgn(dot(a, generators.rays[r])) == 0)
                tight.push_back(r);
        if (tight.size() == generators.rays.size())
            continue;  // implicit equality, already covered by the equations
        std::vector<QVector> face = generators.lineality_basis;
        for (auto r : tight)
            face.push_back(generators.rays[r]);
        if (rank(face, d) + 1 != dim)
            continue;
        if (std::find(seen_tight.begin(), seen_tight.end(), tight) != seen_tight.end())
            continue;
        seen_tight.push_back(tight);
        QVector v = a;
        eqs.reduce(v);
        out.inequalities.push_back(normalize_ray(v));
    }
    std::sort(out.inequalities.begin(), out.inequalities.end(), lex_less);
    return out;
}

std::optional<QVector> strict_interior_point(const HCone& cone, const VCone& generators)
{
    QVector point(cone.ambient_dim);
    for (const auto& r : generators.rays)
        for (std::size_t i = 0; i < point.size(); ++i)
            point[i] += r[i];
    // every ray is nonnegative on every inequality, so the sum is strictly
    // positive on an inequality iff some ray is
    for (const auto& a : cone.inequalities)
        if (sgn(dot(a, point)) <= 0)
            return std::nullopt;
    return point;
}

std::optional<QVector> strict_interior_point(const HCone& cone) { return strict_interior_point(cone, dd_rays(cone)); }

}  // namespace secfan
