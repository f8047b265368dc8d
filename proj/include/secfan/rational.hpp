/**
 * Exact rational scalars, vectors and matrices.
 *
 * All geometry in this library is carried out over GMP rationals; there is
 * no floating point anywhere on the computational path.  Integer vectors
 * (`ZVector`) are used internally wherever a fraction-free representation
 * is cheaper, e.g. for the rays maintained by the double description method.
 */
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace secfan {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

/** Raised for malformed user input (maps to CLI exit code 2). */
class InvalidInput : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/** Raised when a computation would exceed a configured resource cap (exit code 3). */
class ResourceLimit : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/** Raised when an internal consistency check fails (exit code 4). */
class InvariantViolation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

/**
 * Dense row-major matrix of rationals with explicit dimensions.
 */
class QMatrix
{
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit QMatrix(const std::vector<QVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    QVector row_vector(std::size_t i) const { auto r = row(i); return {r.begin(), r.end()}; }

    /** Rows selected by index, in the given order. */
    QMatrix select_rows(std::span<const int> indices) const;
    std::vector<QVector> to_rows() const;

    bool operator==(const QMatrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/** Parses "p/q", an integer, or a decimal such as "0.09010340" or "1.5e-3" exactly. */
Rational parse_rational(std::string_view text);

/** "p/q", or "p" when the denominator is one. */
std::string to_string(const Rational& q);

/** Decimal rendering rounded half away from zero to `digits` fractional digits. */
std::string to_decimal(const Rational& q, int digits = 8);

double to_double(const Rational& q);

/** Clears denominators and divides by the content; the sign is preserved. */
ZVector primitive(std::span<const Rational> v);
/** Divides by the content (gcd of entries); the sign is preserved. */
void make_primitive(ZVector& v);

QVector to_rational(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

/** Sign (-1, 0, 1) of the first nonzero entry. */
int leading_sign(std::span<const Rational> v);

}  // namespace secfan
