#include "sigma/sigma_set.hpp"

#include <algorithm>
#include <bit>

namespace sigma {

std::string to_string(Atom a) {
    std::string s = std::to_string(a.index());
    switch (a.kind()) {
    case AtomKind::natural:
        break;
    case AtomKind::antinatural:
        s += '*';
        break;
    case AtomKind::zero_natural:
        s += "_0";
        break;
    }
    return s;
}

namespace {

std::uint64_t bit_of(int index) { return std::uint64_t{1} << (index - 1); }

void check_no_inverse_pair(std::uint64_t nat, std::uint64_t anti) {
    std::uint64_t clash = nat & anti;
    if (clash != 0) {
        int index = std::countr_zero(clash) + 1;
        throw ProperClassError("collection holds both " + std::to_string(index) + " and " +
                               std::to_string(index) + "*; with an inverse pair it is a "
                               "proper sigma-class, not a sigma-set");
    }
}

} // namespace

SigmaSet::SigmaSet(std::initializer_list<Atom> atoms)
    : SigmaSet(std::span<const Atom>(atoms.begin(), atoms.size())) {}

SigmaSet::SigmaSet(std::span<const Atom> atoms) {
    for (Atom a : atoms) {
        switch (a.kind()) {
        case AtomKind::natural:
            nat_ |= bit_of(a.index());
            break;
        case AtomKind::antinatural:
            anti_ |= bit_of(a.index());
            break;
        case AtomKind::zero_natural:
            zero_ |= bit_of(a.index());
            break;
        }
    }
    check_no_inverse_pair(nat_, anti_);
}

SigmaSet SigmaSet::from_masks(std::uint64_t naturals, std::uint64_t antinaturals,
                              std::uint64_t zero_naturals) {
    check_no_inverse_pair(naturals, antinaturals);
    SigmaSet s;
    s.nat_ = naturals;
    s.anti_ = antinaturals;
    s.zero_ = zero_naturals;
    return s;
}

bool SigmaSet::contains(Atom a) const {
    std::uint64_t bit = bit_of(a.index());
    switch (a.kind()) {
    case AtomKind::natural:
        return (nat_ & bit) != 0;
    case AtomKind::antinatural:
        return (anti_ & bit) != 0;
    case AtomKind::zero_natural:
        return (zero_ & bit) != 0;
    }
    return false;
}

std::size_t SigmaSet::size() const {
    return static_cast<std::size_t>(std::popcount(nat_) + std::popcount(anti_) +
                                    std::popcount(zero_));
}

std::vector<Atom> SigmaSet::atoms() const {
    std::vector<Atom> out;
    out.reserve(size());
    for (int i = 1; i <= Atom::max_index; ++i) {
        std::uint64_t bit = bit_of(i);
        if (zero_ & bit) out.push_back(Atom::zero_natural(i));
        if (nat_ & bit) out.push_back(Atom::natural(i));
        if (anti_ & bit) out.push_back(Atom::antinatural(i));
    }
    return out;
}

bool lex_less(const SigmaSet& a, const SigmaSet& b) {
    std::vector<Atom> av = a.atoms();
    std::vector<Atom> bv = b.atoms();
    return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

bool size_lex_less(const SigmaSet& a, const SigmaSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

std::optional<SigmaSet> anti_set(const SigmaSet& a) {
    if (a.zero_natural_bits() != 0) return std::nullopt;
    // Swapping the masks cannot create an inverse pair.
    return SigmaSet::from_masks(a.antinatural_bits(), a.natural_bits(), 0);
}

bool is_entire(const SigmaSet& a) { return a.zero_natural_bits() == 0; }

bool is_subset(const SigmaSet& inner, const SigmaSet& outer) {
    return (inner.natural_bits() & ~outer.natural_bits()) == 0 &&
           (inner.antinatural_bits() & ~outer.antinatural_bits()) == 0 &&
           (inner.zero_natural_bits() & ~outer.zero_natural_bits()) == 0;
}

SigmaSet set_union(const SigmaSet& a, const SigmaSet& b) {
    return SigmaSet::from_masks(a.natural_bits() | b.natural_bits(),
                                a.antinatural_bits() | b.antinatural_bits(),
                                a.zero_natural_bits() | b.zero_natural_bits());
}

SigmaSet star_intersection(const SigmaSet& a, const SigmaSet& b) {
    // Elements of A annihilated by B: naturals of A opposing antinaturals of
    // B and vice versa. Zero-naturals never annihilate.
    return SigmaSet::from_masks(a.natural_bits() & b.antinatural_bits(),
                                a.antinatural_bits() & b.natural_bits(), 0);
}

SigmaSet star_difference(const SigmaSet& a, const SigmaSet& b) {
    return SigmaSet::from_masks(a.natural_bits() & ~b.antinatural_bits(),
                                a.antinatural_bits() & ~b.natural_bits(),
                                a.zero_natural_bits());
}

FusionOutcome fuse(const SigmaSet& a, const SigmaSet& b) {
    SigmaSet survivors_a = star_difference(a, b);
    SigmaSet survivors_b = star_difference(b, a);
    // The union of the survivor sets is inverse-free: any opposing pair
    // across the operands annihilated on both sides.
    FusionOutcome out;
    out.result = set_union(survivors_a, survivors_b);
    out.annihilation_count =
        std::popcount(a.natural_bits() & b.antinatural_bits()) +
        std::popcount(a.antinatural_bits() & b.natural_bits());
    return out;
}

} // namespace sigma
