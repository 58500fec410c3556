#include "treetau/degree_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace treetau {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw std::invalid_argument("degree sequence must be nonempty");
    long sum = 0;
    for (int dj : degrees_) {
        if (dj < 1) throw std::invalid_argument("all degrees must be >= 1");
        sum += dj;
        d_max_ = std::max(d_max_, dj);
    }
    if (sum % 2 != 0) throw std::invalid_argument("degree sum must be even");
    m_ = sum / 2;

    const long n = static_cast<long>(degrees_.size());
    stats_.d_bar = Rational(sum, n);
    stats_.d_max = d_max_;
    stats_.m = m_;
    Rational rsum = 0;
    double logsum = 0.0;
    for (int dj : degrees_) {
        Rational diff = Rational(dj) - stats_.d_bar;
        rsum += diff * diff;
        logsum += std::log(static_cast<double>(dj));
    }
    stats_.r_variance = rsum / n;
    stats_.d_hat_log = logsum / static_cast<double>(n);
}

TreeDegreeSequence::TreeDegreeSequence(std::vector<int> x) : x_(std::move(x)) {
    long sum = 0;
    for (int xj : x_) {
        if (xj < 1) throw std::invalid_argument("tree degrees must be >= 1");
        sum += xj;
    }
    if (sum != 2 * static_cast<long>(x_.size()) - 2)
        throw std::invalid_argument("tree degrees must sum to 2n-2");
}

bool is_suitable(const TreeDegreeSequence& x, const DegreeSequence& d) {
    if (x.n() != d.n()) return false;
    for (int j = 0; j < d.n(); ++j)
        if (x.degree(j) > d.degree(j)) return false;
    return true;
}

bool is_graphical(const DegreeSequence& d) {
    std::vector<long> s(d.degrees().begin(), d.degrees().end());
    std::sort(s.begin(), s.end(), std::greater<>());
    const long n = static_cast<long>(s.size());
    if (s[0] > n - 1) return false;
    std::vector<long> prefix(n + 1, 0);
    for (long i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + s[i];
    for (long k = 1; k <= n; ++k) {
        long rhs = k * (k - 1);
        for (long i = k; i < n; ++i) rhs += std::min(s[i], k);
        if (prefix[k] > rhs) return false;
    }
    return true;
}

bool size_condition_holds(const DegreeSequence& d) {
    // d_max^4 <= (d_bar - 2) n, i.e. d_max^4 <= sum(d) - 2n in integers.
    BigInt lhs = BigInt(d.max_degree());
    lhs = lhs * lhs * lhs * lhs;
    return lhs <= BigInt(d.degree_sum()) - 2 * d.n();
}

double eta(const DegreeSequence& d) {
    const Rational excess = d.stats().d_bar - 2;  // d_bar - 2
    if (excess <= 0) throw std::domain_error("eta requires mean degree > 2");
    const double dm = d.max_degree();
    const double e = to_double(excess);
    const double n = d.n();
    const double b1 = dm * dm * dm * dm / (e * e * n);
    const double b2 = dm * dm * dm * std::log(n) / (e * n);
    const double b3 = dm * e;
    return std::min({b1, b2, b3});
}

namespace {

void enumerate_suitable_rec(const DegreeSequence& d, std::vector<int>& x, int pos, long remaining,
                            const std::function<void(const TreeDegreeSequence&)>& visit) {
    const int n = d.n();
    if (pos == n) {
        visit(TreeDegreeSequence(x));
        return;
    }
    const int tail = n - pos - 1;  // positions after this one, each contributes >= 1
    long tail_cap = 0;
    for (int j = pos + 1; j < n; ++j) tail_cap += d.degree(j);
    for (int v = 1; v <= std::min<long>(d.degree(pos), remaining - tail); ++v) {
        if (remaining - v > tail_cap) continue;
        x[pos] = v;
        enumerate_suitable_rec(d, x, pos + 1, remaining - v, visit);
    }
    x[pos] = 0;
}

}  // namespace

void enumerate_suitable(const DegreeSequence& d,
                        const std::function<void(const TreeDegreeSequence&)>& visit, int max_n) {
    if (d.n() > max_n) throw std::length_error("enumeration cap exceeded");
    if (d.n() == 1) return;  // no tree degree sequence sums to 0
    std::vector<int> x(d.n(), 0);
    enumerate_suitable_rec(d, x, 0, 2L * d.n() - 2, visit);
}

std::vector<TreeDegreeSequence> enumerate_suitable(const DegreeSequence& d, int max_n) {
    std::vector<TreeDegreeSequence> out;
    enumerate_suitable(d, [&](const TreeDegreeSequence& x) { out.push_back(x); }, max_n);
    return out;
}

TreeDegreeSequence sample_suitable_x(const DegreeSequence& d, RandomSource& rng) {
    const int n = d.n();
    const long population = d.degree_sum() - n;  // (d_bar - 1) n
    const long draws = n - 2;
    if (population < draws) throw std::domain_error("sample_suitable_x requires (d_bar-1)n >= n-2");
    // Contiguous blocks ordered by vertex index: vertex j owns d_j - 1 items.
    std::vector<long> block_end(n);
    long acc = 0;
    for (int j = 0; j < n; ++j) {
        acc += d.degree(j) - 1;
        block_end[j] = acc;
    }
    std::vector<int> x(n, 1);
    // Floyd's algorithm for a uniform (n-2)-subset of {0..population-1}.
    std::vector<char> taken(population, 0);
    for (long i = population - draws; i < population; ++i) {
        std::uniform_int_distribution<long> dist(0, i);
        long t = dist(rng);
        if (taken[t]) t = i;
        taken[t] = 1;
        int j = static_cast<int>(std::upper_bound(block_end.begin(), block_end.end(), t) -
                                 block_end.begin());
        ++x[j];
    }
    return TreeDegreeSequence(std::move(x));
}

Rational joint_factorial_moment(const DegreeSequence& d, int i, int j, int s, int t) {
    if (i == j) throw std::invalid_argument("indices must differ");
    if (s < 0 || t < 0) throw std::invalid_argument("orders must be nonnegative");
    const long n = d.n();
    BigInt num = falling_factorial(d.degree(i) - 1, s) * falling_factorial(d.degree(j) - 1, t) *
                 falling_factorial(n - 2, s + t);
    BigInt den = falling_factorial(d.degree_sum() - n, s + t);
    return Rational(num, den);
}

}  // namespace treetau
