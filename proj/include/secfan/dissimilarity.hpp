/**
 * Dissimilarity maps on n points, stored as vectors over the pairs
 * {i,j}, i<j, in row-wise upper triangle order: (1,2),(1,3),...,(1,n),(2,3),...
 * This agrees with the descending lexicographic vertex order of Δ(2,n), so
 * a map is directly a height vector on Δ(2,n) (after negation).
 *
 * Point indices in this interface are 0-based.
 */
#pragma once

#include "secfan/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace secfan {

std::size_t pair_count(int n);
/** Position of the pair {i,j} (i != j) in the pair order. */
std::size_t pair_index(int n, int i, int j);

class DissimilarityMap
{
  public:
    DissimilarityMap() = default;
    /** `values` in pair order; throws InvalidInput on a length mismatch. */
    DissimilarityMap(int n, QVector values);
    /** Full symmetric matrix with zero diagonal; throws InvalidInput otherwise. */
    static DissimilarityMap from_matrix(const std::vector<QVector>& matrix);

    int n() const { return n_; }
    const QVector& values() const { return values_; }
    const Rational& operator()(int i, int j) const;

    /** The height function -D on Δ(2,n). */
    QVector as_heights() const;
    static DissimilarityMap from_heights(int n, const QVector& heights);

    bool operator==(const DissimilarityMap&) const = default;

  private:
    int n_ = 0;
    QVector values_;
};

/** D_{A,B}: 1 on pairs separated by A | [n]\A, 0 otherwise. */
DissimilarityMap split_pseudometric(int n, const std::vector<int>& part);
/** (min(|A|,|B|), max(|A|,|B|)). */
std::pair<int, int> split_type(int n, const std::vector<int>& part);

/**
 * All splits A|B with min(|A|,|B|) >= min_part, one representative part per
 * split (the side containing point 0), ordered by bitmask.
 */
std::vector<std::vector<int>> all_splits(int n, int min_part = 2);

/** T(i,j) = (j-i)(n-j+i) in 1-based labels. */
DissimilarityMap thrackle(int n);

bool is_pseudometric(const DissimilarityMap& d);
bool is_metric(const DissimilarityMap& d);

/** Taxa names (possibly empty) and the parsed map. */
struct ParsedMetric
{
    std::vector<std::string> taxa;
    DissimilarityMap map;
};

/**
 * Parses a distance matrix given as text.  Accepted layouts:
 *  - full symmetric matrix, whitespace separated, one row per line;
 *  - upper or lower triangle (with or without the zero diagonal);
 *  - PHYLIP: a first line with the taxon count, then rows led by a name;
 * an optional line of taxon names may precede the numbers.  `#` starts a
 * comment.  Decimal entries are converted exactly.
 */
ParsedMetric parse_metric(std::string_view text);
ParsedMetric read_metric_file(const std::string& path);

}  // namespace secfan
