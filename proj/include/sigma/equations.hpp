#pragma once

#include "sigma/sigma_set.hpp"
#include "sigma/spaces.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sigma {

/// A σ-set equation X ⊕ M = N over the integer space 3^A. Construction
/// validates that the universe A is entire (NotEntireError) and that M and N
/// are members of 3^A (DomainError).
class Equation {
public:
    Equation(SigmaSet universe, SigmaSet m, SigmaSet n);

    const SigmaSet& universe() const { return universe_; }
    const SigmaSet& m() const { return m_; }
    const SigmaSet& n() const { return n_; }

private:
    SigmaSet universe_;
    SigmaSet m_;
    SigmaSet n_;
};

/// The closed-form solution pair: S1 = N ⊕ R⁻ and S2 = R⁻ with R = M ⊕ N⁻.
struct ClosedForm {
    SigmaSet s1;
    SigmaSet s2;
};

/// Solutions of one equation. `solutions` is deduplicated and ordered by
/// size then lexicographically; every entry satisfies S ⊕ M = N (re-verified
/// on construction).
struct SolutionSet {
    bool fusionable = false;
    std::optional<ClosedForm> closed_form;
    std::vector<SigmaSet> solutions;
};

/// The equation X ⊕ M = N is fusionable iff M ∩̂ N = ∅.
bool is_fusionable(const SigmaSet& m, const SigmaSet& n);

/// Computes S1 = N ⊕ R⁻ and S2 = R⁻ where R = M ⊕ N⁻, re-verifies both
/// against the equation, and returns absent if either fails verification.
/// Throws NotFusionableError when the equation is not fusionable.
std::optional<ClosedForm> solve_closed_form(const Equation& eq);

/// Enumerates every X ∈ 3^A and keeps those with X ⊕ M = N; attaches the
/// closed form when the equation is fusionable. Guard: |A| ≤ 8, else
/// SizeLimitError.
SolutionSet solve_exhaustive(const Equation& eq);

/// Evaluates the concrete cancellation law (X ⊕ M) ⊕ M⁻ = X. Throws
/// NotEntireError when M has no antiset.
bool verify_cancellation(const SigmaSet& x, const SigmaSet& m);

/// Confusion matrix between plain element disjointness X ∩ M = ∅ and the
/// cancellation law, over all ordered member pairs (X, M) of a space. Pairs
/// whose M is not entire have no M⁻ and are skipped (counted).
struct CancellationReport {
    std::uint64_t pairs_scanned = 0;  // pairs with entire M
    std::uint64_t skipped_non_entire = 0;
    std::uint64_t disjoint_and_cancel = 0;
    std::uint64_t disjoint_not_cancel = 0;  // counterexamples to disjoint ⇒ cancel
    std::uint64_t overlap_and_cancel = 0;
    std::uint64_t overlap_not_cancel = 0;
    bool implication_holds = false;  // disjoint_not_cancel == 0
};

/// Scans all ordered pairs (X, M) in the space. Guard: cardinality ≤ 3^5,
/// else SizeLimitError.
CancellationReport characterize_cancellation(const GeneratedSpace& space);

} // namespace sigma
