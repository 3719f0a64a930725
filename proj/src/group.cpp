#include "spectile/group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spectile {

namespace {

// Largest order we are willing to represent in an int64 group.
constexpr std::int64_t kOrderLimit = std::int64_t(1) << 62;

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

Frac reduced_frac(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::invalid_argument("reduced_frac: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0)
        return Frac{0, 1};
    return Frac{num / g, den / g};
}

GroupSpec make_group(const std::vector<std::int64_t>& moduli, std::int64_t enumeration_cap) {
    if (moduli.empty())
        throw std::invalid_argument("make_group: moduli list is empty");
    if (enumeration_cap < 1)
        throw std::invalid_argument("make_group: enumeration cap must be positive");

    GroupSpec g;
    g.moduli = moduli;
    g.enumeration_cap = enumeration_cap;
    __int128 order = 1;
    std::int64_t exponent = 1;
    for (std::int64_t n : moduli) {
        if (n < 1)
            throw std::invalid_argument("make_group: modulus must be >= 1");
        order *= n;
        if (order > kOrderLimit)
            throw std::invalid_argument("make_group: group order too large to represent");
        exponent = std::lcm(exponent, n);
    }
    g.order = static_cast<std::int64_t>(order);
    g.exponent = exponent;
    return g;
}

bool element_valid(const GroupSpec& g, const GroupElement& x) {
    if (x.size() != g.moduli.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0 || x[i] >= g.moduli[i])
            return false;
    return true;
}

GroupElement elem_combine(const GroupSpec& g, const GroupElement& a,
                          const GroupElement& b, CombineOp op) {
    if (a.size() != g.dim() || b.size() != g.dim())
        throw std::invalid_argument("elem_combine: dimension mismatch");
    GroupElement out(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        std::int64_t v = op == CombineOp::Add ? a[i] + b[i] : a[i] - b[i];
        out[i] = mod_reduce(v, g.moduli[i]);
    }
    return out;
}

GroupElement elem_neg(const GroupSpec& g, const GroupElement& a) {
    return elem_combine(g, zero_element(g), a, CombineOp::Sub);
}

GroupElement zero_element(const GroupSpec& g) {
    return GroupElement(g.dim(), 0);
}

std::int64_t index_of(const GroupSpec& g, const GroupElement& x) {
    if (!element_valid(g, x))
        throw std::invalid_argument("index_of: element not valid in group");
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < g.dim(); ++i)
        idx = idx * g.moduli[i] + x[i];
    return idx;
}

GroupElement element_at(const GroupSpec& g, std::int64_t index) {
    if (index < 0 || index >= g.order)
        throw std::out_of_range("element_at: index outside [0, order)");
    GroupElement x(g.dim());
    for (std::size_t i = g.dim(); i-- > 0;) {
        x[i] = index % g.moduli[i];
        index /= g.moduli[i];
    }
    return x;
}

Frac pairing(const GroupSpec& g, const GroupElement& lambda, const GroupElement& a) {
    if (lambda.size() != g.dim() || a.size() != g.dim())
        throw std::invalid_argument("pairing: dimension mismatch");
    const std::int64_t M = g.exponent;
    __int128 acc = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        std::int64_t n = g.moduli[i];
        __int128 term = static_cast<__int128>(mod_reduce(lambda[i], n)) * mod_reduce(a[i], n) % n;
        acc = (acc + term * (M / n)) % M;
    }
    return reduced_frac(static_cast<std::int64_t>(acc), M);
}

std::string format_element(const GroupElement& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            os << ',';
        os << x[i];
    }
    os << ')';
    return os.str();
}

} // namespace spectile
