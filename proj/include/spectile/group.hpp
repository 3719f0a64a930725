#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spectile {

/// Reduced fraction p/q, kept in [0,1) by the operations that produce it.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Frac&, const Frac&) = default;
};

/// Reduce p/q to lowest terms with q > 0. q must be non-zero.
Frac reduced_frac(std::int64_t num, std::int64_t den);

/// A finite abelian group Z_{n1} x ... x Z_{nd} given by its moduli vector.
///
/// `order` and `exponent` are derived on construction. Groups whose order
/// exceeds `enumeration_cap` can still be built and used for arithmetic;
/// only the enumeration operations (element_at / zero-set scans / tiling
/// covers) refuse to run on them.
struct GroupSpec {
    std::vector<std::int64_t> moduli;
    std::int64_t order = 1;    // product of moduli
    std::int64_t exponent = 1; // lcm of moduli
    std::int64_t enumeration_cap = kDefaultEnumerationCap;

    static constexpr std::int64_t kDefaultEnumerationCap = std::int64_t(1) << 24;

    std::size_t dim() const { return moduli.size(); }
    bool within_cap() const { return order <= enumeration_cap; }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.moduli == b.moduli;
    }
};

/// Element of a GroupSpec: coordinate i lives in [0, moduli[i]).
/// Characters of the group use the same representation; the pairing below
/// is what distinguishes the two roles.
using GroupElement = std::vector<std::int64_t>;

enum class CombineOp { Add, Sub };

/// Build a validated group. Throws std::invalid_argument on an empty moduli
/// list or a modulus < 1. An order beyond the enumeration cap is allowed
/// here (the flag is queryable via within_cap()); an order too large to
/// represent at all is rejected.
GroupSpec make_group(const std::vector<std::int64_t>& moduli,
                     std::int64_t enumeration_cap = GroupSpec::kDefaultEnumerationCap);

/// Is `x` a valid element of `g` (right length, coordinates reduced)?
bool element_valid(const GroupSpec& g, const GroupElement& x);

/// Coordinate-wise (a +- b) mod n_i. Throws on dimension mismatch.
GroupElement elem_combine(const GroupSpec& g, const GroupElement& a,
                          const GroupElement& b, CombineOp op);

GroupElement elem_neg(const GroupSpec& g, const GroupElement& a);

GroupElement zero_element(const GroupSpec& g);

/// Mixed-radix index of an element, coordinate 0 most significant.
/// Bijection between elements and [0, order); round-trips exactly.
std::int64_t index_of(const GroupSpec& g, const GroupElement& x);

/// Inverse of index_of. Throws std::out_of_range for indices outside [0, order).
GroupElement element_at(const GroupSpec& g, std::int64_t index);

/// Character pairing <lambda, a> = sum_i lambda_i a_i / n_i mod 1, as a
/// reduced fraction p/q with q dividing exponent(g). The character value
/// is exp(2*pi*i * pairing). For Z_N^d this equals (lambda . a mod N)/N.
Frac pairing(const GroupSpec& g, const GroupElement& lambda, const GroupElement& a);

std::string format_element(const GroupElement& x);

} // namespace spectile
