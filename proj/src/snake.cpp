#include "qreal/snake.hpp"

#include "qreal/errors.hpp"
#include "qreal/parallel.hpp"
#include "qreal/qbinomial.hpp"

#include <algorithm>
#include <mutex>

namespace qreal {

SnakeGraph::SnakeGraph(std::string word) : word_(std::move(word))
{
    Cell c{0, 0};
    cells_.push_back(c);
    for (char step : word_) {
        if (step == 'U') {
            ++c.y;
        } else if (step == 'R') {
            ++c.x;
        } else {
            throw DomainError(std::string("snake word letters must be U or R, got '") + step + "'");
        }
        cells_.push_back(c);
    }
    lookup_.insert(cells_.begin(), cells_.end());
}

SnakeGraph SnakeGraph::from_cf(const ContinuedFraction& cf)
{
    std::string word;
    const auto& a = cf.terms();
    const std::size_t last = a.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) {
        long count = a[i];
        if (i == 0 || i == last) {
            --count;
        }
        word.append(static_cast<std::size_t>(count), i % 2 == 0 ? 'U' : 'R');
    }
    return SnakeGraph(std::move(word));
}

SnakeGraph SnakeGraph::empty_graph() { return {}; }

SnakeGraph SnakeGraph::without_first_column() const
{
    std::size_t first = 0;
    while (first < cells_.size() && cells_[first].x == 0) {
        ++first;
    }
    if (first == cells_.size()) {
        return empty_graph();
    }
    // The cell after the column is reached by an R step, so the remaining
    // word starts just past that step.
    return SnakeGraph(word_.substr(first));
}

std::string SnakeGraph::ascii() const
{
    if (cells_.empty()) {
        return "(empty)\n";
    }
    const long w = cells_.back().x + 1;
    const long h = cells_.back().y + 1;
    std::string out;
    for (long y = h - 1; y >= 0; --y) {
        std::string row;
        for (long x = 0; x < w; ++x) {
            row += contains(x, y) ? "[]" : "  ";
        }
        row.erase(row.find_last_not_of(' ') + 1);
        out += row + '\n';
    }
    return out;
}

namespace {

struct Walker {
    const SnakeGraph& g;
    long end_x = 0;
    long end_y = 0;
    long up_prefix = 0;
    std::vector<long> heights;
    std::string steps;
    std::vector<LatticePath> out;

    bool can_north(long px, long py) const { return py < end_y && (g.contains(px, py) || g.contains(px - 1, py)); }
    bool can_east(long px, long py) const { return px < end_x && (g.contains(px, py) || g.contains(px, py - 1)); }

    long area() const
    {
        long a = 0;
        for (const Cell& c : g.cells()) {
            if (c.y < heights[static_cast<std::size_t>(c.x)]) {
                ++a;
            }
        }
        return a;
    }

    void walk(long px, long py)
    {
        if (px == end_x && py == end_y) {
            out.push_back({steps, area()});
            return;
        }
        const bool forced_up = static_cast<long>(steps.size()) < up_prefix;
        if (!forced_up && can_east(px, py)) {
            heights[static_cast<std::size_t>(px)] = py;
            steps.push_back('E');
            walk(px + 1, py);
            steps.pop_back();
        }
        if (can_north(px, py)) {
            steps.push_back('N');
            walk(px, py + 1);
            steps.pop_back();
        }
    }
};

IntPolynomial histogram_polynomial(const std::vector<unsigned long long>& counts)
{
    std::vector<BigInt> c(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        mpz_set_ui(c[i].get_mpz_t(), counts[i]);
    }
    return IntPolynomial(std::move(c));
}

std::vector<std::vector<LatticePath>> constrained_choices(const SnakeGraph& g, long k)
{
    if (k < 0) {
        throw DomainError("tuple length k must be nonnegative");
    }
    std::vector<std::vector<LatticePath>> choices;
    for (long i = 0; i < k; ++i) {
        auto e = enumerate_paths(g, i);
        if (e.paths.empty()) {
            throw DomainError("no lattice path begins with " + std::to_string(i) + " up steps; k = " +
                              std::to_string(k) + " is too large for this graph");
        }
        choices.push_back(std::move(e.paths));
    }
    return choices;
}

std::size_t tuple_count(const std::vector<std::vector<LatticePath>>& choices, std::size_t limit)
{
    std::size_t total = 1;
    for (const auto& c : choices) {
        if (total > limit / c.size()) {
            throw DomainError("tuple enumeration exceeds the limit of " + std::to_string(limit) + " tuples");
        }
        total *= c.size();
    }
    return total;
}

// Adds every tuple whose leading indices are fixed by `start` positions.
void accumulate(const std::vector<std::vector<LatticePath>>& choices, std::size_t start, long base_area,
                std::vector<unsigned long long>& hist)
{
    const std::size_t k = choices.size();
    if (start == k) {
        ++hist[static_cast<std::size_t>(base_area)];
        return;
    }
    std::vector<std::size_t> idx(k - start, 0);
    for (;;) {
        long a = base_area;
        for (std::size_t j = 0; j < idx.size(); ++j) {
            a += choices[start + j][idx[j]].area;
        }
        ++hist[static_cast<std::size_t>(a)];
        std::size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < choices[start + pos].size()) {
                break;
            }
            idx[pos] = 0;
            if (pos == 0) {
                return;
            }
        }
    }
}

std::size_t histogram_size(const SnakeGraph& g, long k) { return static_cast<std::size_t>(k) * g.size() + 1; }

} // namespace

PathEnumeration enumerate_paths(const SnakeGraph& g, long up_prefix)
{
    PathEnumeration result;
    if (g.is_empty()) {
        result.paths.push_back({"", 0});
        result.generating = IntPolynomial::constant(1);
        return result;
    }
    Walker w{g, g.cells().back().x + 1, g.cells().back().y + 1, up_prefix, {}, {}, {}};
    w.heights.assign(static_cast<std::size_t>(w.end_x), 0);
    w.walk(0, 0);
    std::sort(w.out.begin(), w.out.end(), [](const LatticePath& a, const LatticePath& b) { return a.steps < b.steps; });
    std::vector<unsigned long long> hist(g.size() + 1, 0);
    for (const auto& p : w.out) {
        ++hist[static_cast<std::size_t>(p.area)];
    }
    result.paths = std::move(w.out);
    result.generating = histogram_polynomial(hist);
    return result;
}

IntPolynomial truncated_denominator(const SnakeGraph& g) { return enumerate_paths(g.without_first_column()).generating; }

IntPolynomial enumerate_k_tuples(const SnakeGraph& g, long k)
{
    if (k < 0) {
        throw DomainError("tuple length k must be nonnegative");
    }
    IntPolynomial total = IntPolynomial::constant(1);
    for (long i = 0; i < k; ++i) {
        const IntPolynomial r = enumerate_paths(g, i).generating;
        if (r.is_zero()) {
            throw DomainError("no lattice path begins with " + std::to_string(i) + " up steps; k = " +
                              std::to_string(k) + " is too large for this graph");
        }
        total = total * r;
    }
    return total;
}

IntPolynomial tuple_histogram_serial(const SnakeGraph& g, long k, std::size_t limit)
{
    const auto choices = constrained_choices(g, k);
    tuple_count(choices, limit);
    std::vector<unsigned long long> hist(histogram_size(g, k), 0);
    accumulate(choices, 0, 0, hist);
    return histogram_polynomial(hist);
}

IntPolynomial tuple_histogram(const SnakeGraph& g, long k, std::size_t limit)
{
    const auto choices = constrained_choices(g, k);
    tuple_count(choices, limit);
    if (k == 0) {
        return IntPolynomial::constant(1);
    }
    std::vector<unsigned long long> hist(histogram_size(g, k), 0);
    std::mutex merge;
    parallel_for(static_cast<long>(choices[0].size()), [&](long first) {
        std::vector<unsigned long long> local(hist.size(), 0);
        accumulate(choices, 1, choices[0][static_cast<std::size_t>(first)].area, local);
        const std::lock_guard<std::mutex> lock(merge);
        for (std::size_t i = 0; i < local.size(); ++i) {
            hist[i] += local[i];
        }
    });
    return histogram_polynomial(hist);
}

TupleListing list_k_tuples(const SnakeGraph& g, long k, std::size_t limit)
{
    TupleListing out;
    out.choices = constrained_choices(g, k);
    const std::size_t total = tuple_count(out.choices, limit);
    out.tuples.reserve(total);
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    for (std::size_t t = 0; t < total; ++t) {
        out.tuples.push_back(idx);
        for (std::size_t pos = idx.size(); pos-- > 0;) {
            if (++idx[pos] < out.choices[pos].size()) {
                break;
            }
            idx[pos] = 0;
        }
    }
    return out;
}

SnakeTheoremCheck check_snake_theorem(const BigRational& alpha, long k)
{
    if (alpha <= 1) {
        throw DomainError("the snake-graph numerator identity needs alpha > 1");
    }
    if (k < 0 || BigRational(k) >= alpha) {
        throw DomainError("the snake-graph numerator identity needs 0 <= k < alpha");
    }
    const SnakeGraph g = SnakeGraph::from_cf(cf_expand(alpha));
    SnakeTheoremCheck c;
    c.numerator = enumerate_paths(g).generating;
    c.denominator = truncated_denominator(g);
    c.tuple_sum = enumerate_k_tuples(g, k);
    const long shift = k * (k - 1) / 2;
    c.predicted = QRationalFunction::normalize(-shift, c.tuple_sum,
                                               c.denominator.pow(static_cast<unsigned>(k)) * q_factorial(k));
    c.direct = q_binomial(alpha, k);

    IntPolynomial product = IntPolynomial::constant(1);
    bool same_denominators = true;
    for (long i = 0; i < k; ++i) {
        const QRationalFunction f = q_rational(alpha - i);
        same_denominators = same_denominators && f.exponent() == 0 && f.den() == c.denominator;
        product = product * f.num();
    }
    c.unreduced_numerator_matches = same_denominators && product.shifted(shift) == c.tuple_sum;
    return c;
}

} // namespace qreal
