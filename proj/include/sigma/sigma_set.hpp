#pragma once

#include "sigma/atom.hpp"
#include "sigma/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace sigma {

/// A finite signed set: naturals, antinaturals and zero-naturals over indices
/// 1..64, at most one element per (index, kind). Inverse pairs are excluded —
/// a collection containing both n and n* is a proper class, not a set, and
/// constructing one throws ProperClassError. Duplicate atoms in the input
/// collapse to one element.
///
/// Representation: one 64-bit mask per kind; bit (i-1) stands for index i.
/// Every operator below is a constant-time mask formula.
class SigmaSet {
public:
    /// The empty set.
    SigmaSet() = default;

    SigmaSet(std::initializer_list<Atom> atoms);
    explicit SigmaSet(std::span<const Atom> atoms);

    /// Builds directly from masks. Throws ProperClassError if the natural and
    /// antinatural masks overlap. Zero-naturals are distinct atoms from the
    /// equally indexed natural/antinatural, so the zero mask may overlap both.
    static SigmaSet from_masks(std::uint64_t naturals, std::uint64_t antinaturals,
                               std::uint64_t zero_naturals);

    bool contains(Atom a) const;
    bool empty() const { return (nat_ | anti_ | zero_) == 0; }
    std::size_t size() const;

    /// Elements in canonical order: index ascending, zero < natural < anti.
    std::vector<Atom> atoms() const;

    std::uint64_t natural_bits() const { return nat_; }
    std::uint64_t antinatural_bits() const { return anti_; }
    std::uint64_t zero_natural_bits() const { return zero_; }

    friend bool operator==(const SigmaSet&, const SigmaSet&) = default;

private:
    std::uint64_t nat_ = 0;
    std::uint64_t anti_ = 0;
    std::uint64_t zero_ = 0;
};

/// Strict lexicographic order on the canonical atom sequences.
bool lex_less(const SigmaSet& a, const SigmaSet& b);

/// Order by cardinality first, then lexicographically. This is the canonical
/// enumeration order for space members.
bool size_lex_less(const SigmaSet& a, const SigmaSet& b);

/// The σ-antiset A⁻ = {anti(x) : x ∈ A}. Defined only when every element has
/// an antielement, i.e. A holds no zero-naturals; absent otherwise.
/// Whenever defined, fuse(A, *anti_set(A)).result is empty.
std::optional<SigmaSet> anti_set(const SigmaSet& a);

/// Entire means the antiset exists: no zero-naturals.
bool is_entire(const SigmaSet& a);

bool is_subset(const SigmaSet& inner, const SigmaSet& outer);

/// Plain union. Throws ProperClassError when the union would contain an
/// inverse pair (n in one operand, n* in the other).
SigmaSet set_union(const SigmaSet& a, const SigmaSet& b);

/// ★-intersection A ∩̂ B: the elements of A whose inverses occur in B.
/// These are exactly the elements annihilated when A and B fuse.
SigmaSet star_intersection(const SigmaSet& a, const SigmaSet& b);

/// ★-difference A ⋇ B: A minus the elements annihilated by B,
/// i.e. A ⋇ B = A \ (A ∩̂ B).
SigmaSet star_difference(const SigmaSet& a, const SigmaSet& b);

/// Result of a fusion together with the number of annihilated pairs.
struct FusionOutcome {
    SigmaSet result;
    int annihilation_count = 0;
};

/// Fusion A ⊕ B = (A ⋇ B) ∪ (B ⋇ A): inverse pairs across the operands
/// annihilate, everything else unites. Commutative and idempotent but not
/// associative. annihilation_count = |A ∩̂ B| = |B ∩̂ A|.
FusionOutcome fuse(const SigmaSet& a, const SigmaSet& b);

} // namespace sigma

template <>
struct std::hash<sigma::SigmaSet> {
    std::size_t operator()(const sigma::SigmaSet& s) const noexcept {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        };
        std::uint64_t h = mix(s.natural_bits());
        h = mix(h ^ s.antinatural_bits());
        h = mix(h ^ s.zero_natural_bits());
        return static_cast<std::size_t>(h);
    }
};
