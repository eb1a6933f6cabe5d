#ifndef QREAL_SNAKE_HPP
#define QREAL_SNAKE_HPP

#include "qreal/qcore.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qreal {

struct Cell {
    long x = 0;
    long y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Chain of unit cells starting at (0, 0); each later cell sits one step
/// up ('U') or right ('R') of its predecessor, so word().size() + 1 cells.
class SnakeGraph {
public:
    SnakeGraph() = default;
    /// Throws DomainError for letters other than U and R.
    explicit SnakeGraph(std::string word);

    /// Word U^{a1-1} R^{a2} U^{a3} ... U^{a_{2m-1}} R^{a_{2m}-1}.
    static SnakeGraph from_cf(const ContinuedFraction& cf);

    /// A graph with no cells (the word is then meaningless and empty).
    static SnakeGraph empty_graph();

    const std::string& word() const { return word_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool is_empty() const { return cells_.empty(); }
    bool contains(long x, long y) const { return lookup_.count({x, y}) != 0; }

    /// The graph left after deleting every cell in column x = 0,
    /// translated back to the origin.
    SnakeGraph without_first_column() const;

    /// Rows from top to bottom, "[]" per cell.
    std::string ascii() const;

private:
    std::string word_;
    std::vector<Cell> cells_;
    std::set<Cell> lookup_;
};

/// Monotone path on cell edges from (0, 0) to the top-right corner of the
/// last cell. Steps are 'N' or 'E'; area counts cells below the path.
struct LatticePath {
    std::string steps;
    long area = 0;
};

struct PathEnumeration {
    std::vector<LatticePath> paths;
    /// sum over paths of q^area
    IntPolynomial generating;
};

/// All paths whose first `up_prefix` steps are N, in lexicographic order
/// of their step strings (E before N). The empty graph has one empty path.
PathEnumeration enumerate_paths(const SnakeGraph& g, long up_prefix = 0);

/// Generating polynomial of the graph without its first column.
IntPolynomial truncated_denominator(const SnakeGraph& g);

/// sum of q^{|p_1| + ... + |p_k|} over k-tuples where p_i starts with
/// i - 1 up steps. Throws DomainError when some p_i has no valid path.
IntPolynomial enumerate_k_tuples(const SnakeGraph& g, long k);

/// The same sum by visiting every tuple, partitioned over the choice of
/// p_1 on the OpenMP team. Throws DomainError above `limit` tuples.
IntPolynomial tuple_histogram(const SnakeGraph& g, long k, std::size_t limit = 5'000'000);
IntPolynomial tuple_histogram_serial(const SnakeGraph& g, long k, std::size_t limit = 5'000'000);

/// Every tuple as indices into the per-position path lists, in
/// lexicographic order. Throws DomainError above `limit` tuples.
struct TupleListing {
    std::vector<std::vector<LatticePath>> choices; // choices[i] : paths for p_{i+1}
    std::vector<std::vector<std::size_t>> tuples;
};
TupleListing list_k_tuples(const SnakeGraph& g, long k, std::size_t limit = 100'000);

/// Numerator identity for binom(alpha, k) with 1 < alpha rational and
/// 0 <= k < alpha.
struct SnakeTheoremCheck {
    IntPolynomial numerator;     // R(q), paths of G_alpha
    IntPolynomial denominator;   // S(q), paths of G_alpha minus its first column
    IntPolynomial tuple_sum;     // enumerate_k_tuples(G_alpha, k)
    QRationalFunction predicted; // q^{-C(k,2)} tuple_sum / (S^k [k]_q!)
    QRationalFunction direct;    // q_binomial(alpha, k)
    /// q^{-C(k,2)} tuple_sum equals the unreduced product of the numerators
    /// of [alpha - i]_q, i < k, and each of those has denominator S.
    bool unreduced_numerator_matches = false;
    bool holds() const { return unreduced_numerator_matches && predicted == direct; }
};
SnakeTheoremCheck check_snake_theorem(const BigRational& alpha, long k);

} // namespace qreal

#endif
