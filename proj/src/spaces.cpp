#include "sigma/spaces.hpp"

#include "sigma/errors.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace sigma {

namespace {

constexpr std::size_t power_set_guard = 20;
constexpr std::uint64_t grid_cell_guard = std::uint64_t{1} << 22;

std::uint64_t pow3(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

// First n indices as a mask: {1..n} occupies the low n bits.
std::uint64_t low_bits(int n) { return (n == 0) ? 0 : (~std::uint64_t{0} >> (64 - n)); }

} // namespace

bool GeneratedSpace::contains(const SigmaSet& s) const {
    auto [lo, hi] = std::equal_range(members.begin(), members.end(), s, size_lex_less);
    return lo != hi;
}

std::vector<SigmaSet> power_set(const SigmaSet& a) {
    std::vector<Atom> atoms = a.atoms();
    if (atoms.size() > power_set_guard) {
        throw SizeLimitError("power set of " + std::to_string(atoms.size()) +
                             " atoms exceeds the guard of " +
                             std::to_string(power_set_guard));
    }
    std::vector<SigmaSet> subsets;
    subsets.reserve(std::size_t{1} << atoms.size());
    for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << atoms.size()); ++counter) {
        std::uint64_t nat = 0, anti = 0, zero = 0;
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            if (!(counter & (std::uint64_t{1} << k))) continue;
            std::uint64_t bit = std::uint64_t{1} << (atoms[k].index() - 1);
            switch (atoms[k].kind()) {
            case AtomKind::natural: nat |= bit; break;
            case AtomKind::antinatural: anti |= bit; break;
            case AtomKind::zero_natural: zero |= bit; break;
            }
        }
        subsets.push_back(SigmaSet::from_masks(nat, anti, zero));
    }
    return subsets;
}

GeneratedSpace generated_space(const SigmaSet& a, const SigmaSet& b) {
    std::vector<SigmaSet> left = power_set(a);
    std::vector<SigmaSet> right = power_set(b);
    std::uint64_t cells = static_cast<std::uint64_t>(left.size()) * right.size();
    if (cells > grid_cell_guard) {
        throw SizeLimitError("generated space grid of " + std::to_string(cells) +
                             " cells exceeds the guard of " +
                             std::to_string(grid_cell_guard));
    }
    std::unordered_set<SigmaSet> seen;
    seen.reserve(cells);
    for (const SigmaSet& x : left) {
        for (const SigmaSet& y : right) {
            seen.insert(fuse(x, y).result);
        }
    }
    GeneratedSpace space;
    space.left_base = a;
    space.right_base = b;
    space.members.assign(seen.begin(), seen.end());
    std::sort(space.members.begin(), space.members.end(), size_lex_less);
    return space;
}

GeneratedSpace integer_space(const SigmaSet& a) {
    std::optional<SigmaSet> anti = anti_set(a);
    if (!anti) {
        throw NotEntireError("integer space needs an entire base; " +
                             std::to_string(std::popcount(a.zero_natural_bits())) +
                             " zero-natural atom(s) have no antielement");
    }
    return generated_space(a, *anti);
}

GeneratedSpace meta_space(const SigmaSet& zero_part, const SigmaSet& entire_part) {
    if (zero_part.natural_bits() != 0 || zero_part.antinatural_bits() != 0) {
        throw DomainError("meta-space zero part must contain only zero-natural atoms");
    }
    std::optional<SigmaSet> anti = anti_set(entire_part);
    if (!anti) {
        throw DomainError("meta-space entire part must have an antiset "
                          "(no zero-natural atoms)");
    }
    return generated_space(fuse(zero_part, entire_part).result,
                           fuse(zero_part, *anti).result);
}

bool is_integer_space_member(const SigmaSet& x, const SigmaSet& universe) {
    if (!is_entire(universe)) {
        throw NotEntireError("integer space membership needs an entire universe");
    }
    std::uint64_t universe_indices = universe.natural_bits() | universe.antinatural_bits();
    std::uint64_t x_indices = x.natural_bits() | x.antinatural_bits();
    return x.zero_natural_bits() == 0 && (x_indices & ~universe_indices) == 0;
}

CardinalityReport check_cardinality_conjecture(int max_n) {
    if (max_n < 0 || max_n > 8) {
        throw SizeLimitError("cardinality conjecture guard is 0 <= max_n <= 8, got " +
                             std::to_string(max_n));
    }
    CardinalityReport report;
    for (int n = 0; n <= max_n; ++n) {
        SigmaSet base = SigmaSet::from_masks(low_bits(n), 0, 0);
        ConjectureCase instance;
        instance.params = {{"n", static_cast<std::uint64_t>(n)}};
        instance.observed = integer_space(base).cardinality();
        instance.predicted = pow3(n);
        instance.match = instance.observed == instance.predicted;
        report.all_match = report.all_match && instance.match;
        report.cases.push_back(std::move(instance));
    }
    return report;
}

CardinalityReport check_meta_conjecture(int max_a, int max_b) {
    if (max_a < 0 || max_b < 0 || max_a + max_b > 10) {
        throw SizeLimitError("meta conjecture guard is max_a + max_b <= 10, got " +
                             std::to_string(max_a) + " + " + std::to_string(max_b));
    }
    CardinalityReport report;
    for (int a = 0; a <= max_a; ++a) {
        for (int b = 0; b <= max_b; ++b) {
            SigmaSet zeros = SigmaSet::from_masks(0, 0, low_bits(a));
            SigmaSet entire = SigmaSet::from_masks(low_bits(b), 0, 0);
            ConjectureCase instance;
            instance.params = {{"a", static_cast<std::uint64_t>(a)},
                               {"b", static_cast<std::uint64_t>(b)}};
            instance.observed = meta_space(zeros, entire).cardinality();
            instance.predicted = (std::uint64_t{1} << a) * pow3(b);
            instance.match = instance.observed == instance.predicted;
            report.all_match = report.all_match && instance.match;
            report.cases.push_back(std::move(instance));
        }
    }
    return report;
}

} // namespace sigma
