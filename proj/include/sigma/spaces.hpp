#pragma once

#include "sigma/sigma_set.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sigma {

/// A generated space ⟨2^A, 2^B⟩: every fusion x ⊕ y with x ⊆ A, y ⊆ B,
/// deduplicated. Members are sorted by size, then lexicographically on
/// canonical atoms — the canonical enumeration order used everywhere.
struct GeneratedSpace {
    SigmaSet left_base;
    SigmaSet right_base;
    std::vector<SigmaSet> members;

    std::size_t cardinality() const { return members.size(); }
    bool contains(const SigmaSet& s) const;
};

/// One checked instance of a cardinality conjecture: named parameters
/// (e.g. n=3, or a=1 b=2), the enumerated cardinality, and the prediction.
struct ConjectureCase {
    std::vector<std::pair<std::string, std::uint64_t>> params;
    std::uint64_t observed = 0;
    std::uint64_t predicted = 0;
    bool match = false;
};

struct CardinalityReport {
    std::vector<ConjectureCase> cases;
    bool all_match = true;
};

/// All 2^|A| subsets in binary-counter order over the canonical atom
/// sequence: bit k of the counter selects the k-th smallest atom, so ∅ comes
/// first and A itself last. Guard: |A| ≤ 20, else SizeLimitError.
std::vector<SigmaSet> power_set(const SigmaSet& a);

/// ⟨2^A, 2^B⟩ = {x ⊕ y : x ∈ 2^A, y ∈ 2^B}. Guards: each base within the
/// power_set guard and |2^A|·|2^B| ≤ 2^22 grid cells, else SizeLimitError.
GeneratedSpace generated_space(const SigmaSet& a, const SigmaSet& b);

/// The integer space 3^A = ⟨2^A, 2^{A⁻}⟩. Throws NotEntireError when A has
/// no antiset.
GeneratedSpace integer_space(const SigmaSet& a);

/// The meta-space ⟨2^{A⊕B}, 2^{A⊕B⁻}⟩ for a zero-natural part A and an
/// entire part B. Throws DomainError unless A is all zero-naturals and B is
/// entire.
GeneratedSpace meta_space(const SigmaSet& zero_part, const SigmaSet& entire_part);

/// Membership in 3^A without enumerating the space: X ∈ 3^A iff X has no
/// zero-naturals and every index X uses is an index of the entire set A
/// (each index may carry either orientation — one side comes from 2^A, the
/// other from 2^{A⁻}). Throws NotEntireError when A is not entire.
bool is_integer_space_member(const SigmaSet& x, const SigmaSet& universe);

/// Checks |3^{{1..n}}| = 3^n for n = 0..max_n by enumeration.
/// Guard: max_n ≤ 8.
CardinalityReport check_cardinality_conjecture(int max_n);

/// Checks |meta_space({1₀..a₀}, {1..b})| = 2^a·3^b over the rectangle
/// a = 0..max_a, b = 0..max_b. Guard: max_a + max_b ≤ 10.
CardinalityReport check_meta_conjecture(int max_a, int max_b);

} // namespace sigma
