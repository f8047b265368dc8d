#include "secfan/rational.hpp"

#include <algorithm>
#include <cctype>

namespace secfan {

QMatrix::QMatrix(const std::vector<QVector>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InvalidInput("QMatrix: ragged rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::select_rows(std::span<const int> indices) const
{
    QMatrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        auto src = row(static_cast<std::size_t>(indices[i]));
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

std::vector<QVector> QMatrix::to_rows() const
{
    std::vector<QVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row_vector(i));
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            s += a[i] * b[i];
    return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    if (s.empty())
        throw InvalidInput("empty number");
    bool negative = false;
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InvalidInput("malformed rational '" + std::string(s) + "'");
        Integer d(std::string(den), 10);
        if (d == 0)
            throw InvalidInput("zero denominator in '" + std::string(s) + "'");
        value = Rational(Integer(std::string(num), 10), d);
    }
    else {
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_part = body.substr(e + 1);
            bool exp_negative = false;
            if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
                exp_negative = exp_part.front() == '-';
                exp_part.remove_prefix(1);
            }
            if (exp_part.empty() || exp_part.size() > 6 || !all_digits(exp_part))
                throw InvalidInput("malformed exponent in '" + std::string(s) + "'");
            exponent = std::stol(std::string(exp_part));
            if (exp_negative)
                exponent = -exponent;
            body = body.substr(0, e);
        }
        auto dot_pos = body.find('.');
        std::string_view int_part = body.substr(0, dot_pos);
        std::string_view frac_part = dot_pos == std::string_view::npos ? std::string_view{} : body.substr(dot_pos + 1);
        if (int_part.empty() && frac_part.empty())
            throw InvalidInput("malformed number '" + std::string(s) + "'");
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
            throw InvalidInput("malformed number '" + std::string(s) + "'");
        std::string digits = std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        value = Rational(Integer(digits, 10), den);
        if (exponent != 0) {
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
            if (exponent > 0)
                value *= scale;
            else
                value /= scale;
        }
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(q) * scale;
    // round half away from zero
    Integer num = scaled.get_num() * 2 + scaled.get_den();
    Integer den = scaled.get_den() * 2;
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string s = rounded.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sgn(q) < 0 && rounded != 0)
        s.insert(0, "-");
    return s;
}

double to_double(const Rational& q) { return q.get_d(); }

void make_primitive(ZVector& v)
{
    Integer g = 0;
    for (const auto& x : v) {
        if (x != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1)
                return;
        }
    }
    if (g > 1)
        for (auto& x : v)
            if (x != 0)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ZVector primitive(std::span<const Rational> v)
{
    Integer l = 1;
    for (const auto& x : v)
        if (x.get_den() != 1)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    ZVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0)
            continue;
        Integer t = l / v[i].get_den();
        out[i] = v[i].get_num() * t;
    }
    make_primitive(out);
    return out;
}

QVector to_rational(std::span<const Integer> v)
{
    QVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.emplace_back(x);
    return out;
}

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

int leading_sign(std::span<const Rational> v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return sgn(x);
    return 0;
}

}  // namespace secfan
