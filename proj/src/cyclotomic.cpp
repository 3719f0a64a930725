#include "spectile/cyclotomic.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace spectile {

namespace {

constexpr std::int64_t kCoeffLimit = std::numeric_limits<std::int64_t>::max() / 2;

std::int64_t checked(__int128 v, const char* what) {
    if (v > kCoeffLimit || v < -kCoeffLimit)
        throw std::overflow_error(std::string(what) + ": coefficient overflow");
    return static_cast<std::int64_t>(v);
}

void trim(std::vector<std::int64_t>& c) {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

// Exact division q = a / b for monic-leading b known to divide a.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> a,
                                       const std::vector<std::int64_t>& b) {
    trim(a);
    if (a.empty())
        return {};
    if (a.size() < b.size() || b.empty() || b.back() != 1)
        throw std::logic_error("exact_divide: bad divisor");
    std::vector<std::int64_t> q(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i >= b.size(); --i) {
        std::int64_t c = a[i - 1];
        if (c == 0)
            continue;
        std::size_t shift = i - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = checked(static_cast<__int128>(a[shift + j]) -
                                       static_cast<__int128>(c) * b[j],
                                   "exact_divide");
    }
    for (std::int64_t r : a)
        if (r != 0)
            throw std::logic_error("exact_divide: division not exact");
    trim(q);
    return q;
}

} // namespace

IntPolynomial make_poly(std::vector<std::int64_t> coeffs) {
    trim(coeffs);
    return IntPolynomial{std::move(coeffs)};
}

IntPolynomial cyclotomic_poly(std::int64_t N) {
    if (N < 1)
        throw std::invalid_argument("cyclotomic_poly: N must be >= 1");

    static std::mutex cache_mutex;
    static std::unordered_map<std::int64_t, IntPolynomial> cache;
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(N);
        if (it != cache.end())
            return it->second;
    }

    IntPolynomial result;
    if (N == 1) {
        result = make_poly({-1, 1});
    } else {
        // x^N - 1 divided by the product of Phi_d over proper divisors d | N.
        std::vector<std::int64_t> numerator(static_cast<std::size_t>(N) + 1, 0);
        numerator[0] = -1;
        numerator[static_cast<std::size_t>(N)] = 1;
        std::vector<std::int64_t> divisor{1};
        for (std::int64_t d = 1; d < N; ++d) {
            if (N % d != 0)
                continue;
            const IntPolynomial phi_d = cyclotomic_poly(d);
            std::vector<std::int64_t> prod(divisor.size() + phi_d.coeffs.size() - 1, 0);
            for (std::size_t i = 0; i < divisor.size(); ++i)
                for (std::size_t j = 0; j < phi_d.coeffs.size(); ++j)
                    prod[i + j] = checked(static_cast<__int128>(prod[i + j]) +
                                              static_cast<__int128>(divisor[i]) * phi_d.coeffs[j],
                                          "cyclotomic_poly");
            divisor = std::move(prod);
        }
        result = make_poly(exact_divide(std::move(numerator), divisor));
    }

    std::scoped_lock lock(cache_mutex);
    cache.emplace(N, result);
    return result;
}

CyclotomicSum CyclotomicSum::zeros(std::int64_t M) {
    if (M < 1)
        throw std::invalid_argument("CyclotomicSum: order must be >= 1");
    return CyclotomicSum{M, std::vector<std::int64_t>(static_cast<std::size_t>(M), 0)};
}

bool root_sum_is_zero(const CyclotomicSum& s) {
    if (s.counts.size() != static_cast<std::size_t>(s.order))
        throw std::invalid_argument("root_sum_is_zero: counts length != order");
    const IntPolynomial phi = cyclotomic_poly(s.order);
    // Remainder of sum counts[k] x^k modulo the monic Phi_M.
    std::vector<std::int64_t> r = s.counts;
    trim(r);
    const std::size_t dphi = phi.coeffs.size() - 1;
    for (std::size_t i = r.size(); i-- > dphi;) {
        std::int64_t c = r[i];
        if (c == 0)
            continue;
        std::size_t shift = i - dphi;
        for (std::size_t j = 0; j < phi.coeffs.size(); ++j)
            r[shift + j] = checked(static_cast<__int128>(r[shift + j]) -
                                       static_cast<__int128>(c) * phi.coeffs[j],
                                   "root_sum_is_zero");
    }
    for (std::int64_t c : r)
        if (c != 0)
            return false;
    return true;
}

std::complex<double> root_sum_value(const CyclotomicSum& s) {
    std::complex<double> v = 0;
    for (std::size_t k = 0; k < s.counts.size(); ++k) {
        if (s.counts[k] == 0)
            continue;
        double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(s.order);
        v += static_cast<double>(s.counts[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return v;
}

CyclotomicSum indicator_transform(const GroupSpec& g, const PointSet& S,
                                  const GroupElement& lambda) {
    if (S.empty())
        throw std::invalid_argument("indicator_transform: S is empty");
    if (!(S.group() == g))
        throw std::invalid_argument("indicator_transform: S not a subset of the given group");
    const std::int64_t M = g.exponent;
    CyclotomicSum sum = CyclotomicSum::zeros(M);
    for (const auto& a : S.points()) {
        Frac f = pairing(g, lambda, a);
        sum.counts[static_cast<std::size_t>(f.num * (M / f.den))] += 1;
    }
    return sum;
}

PointSet zero_set(const GroupSpec& g, const PointSet& S) {
    if (S.empty())
        throw std::invalid_argument("zero_set: S is empty");
    if (!g.within_cap())
        throw std::invalid_argument("zero_set: group order exceeds enumeration cap");
    std::vector<std::int64_t> hits;
    for (std::int64_t i = 1; i < g.order; ++i) {
        GroupElement lambda = element_at(g, i);
        if (root_sum_is_zero(indicator_transform(g, S, lambda)))
            hits.push_back(i);
    }
    return PointSet::from_indices(g, hits);
}

} // namespace spectile
