#include "sigma/equations.hpp"

#include "sigma/errors.hpp"
#include "sigma/textio.hpp"

namespace sigma {

namespace {

constexpr std::size_t solve_universe_guard = 8;
constexpr std::size_t cancellation_member_guard = 243;  // 3^5

} // namespace

Equation::Equation(SigmaSet universe, SigmaSet m, SigmaSet n)
    : universe_(universe), m_(m), n_(n) {
    if (!is_entire(universe_)) {
        throw NotEntireError("equation universe must be entire");
    }
    if (!is_integer_space_member(m_, universe_)) {
        throw DomainError("M = " + format_set(m_) + " is not a member of the integer "
                          "space over " + format_set(universe_));
    }
    if (!is_integer_space_member(n_, universe_)) {
        throw DomainError("N = " + format_set(n_) + " is not a member of the integer "
                          "space over " + format_set(universe_));
    }
}

bool is_fusionable(const SigmaSet& m, const SigmaSet& n) {
    return star_intersection(m, n).empty();
}

std::optional<ClosedForm> solve_closed_form(const Equation& eq) {
    if (!is_fusionable(eq.m(), eq.n())) {
        throw NotFusionableError("equation is not fusionable: M ^ N = " +
                                 format_set(star_intersection(eq.m(), eq.n())));
    }
    // Members of an integer space are entire, so every antiset below exists.
    SigmaSet r = fuse(eq.m(), *anti_set(eq.n())).result;
    ClosedForm closed;
    closed.s2 = *anti_set(r);
    closed.s1 = fuse(eq.n(), closed.s2).result;
    if (fuse(closed.s1, eq.m()).result != eq.n() ||
        fuse(closed.s2, eq.m()).result != eq.n()) {
        return std::nullopt;
    }
    return closed;
}

SolutionSet solve_exhaustive(const Equation& eq) {
    if (eq.universe().size() > solve_universe_guard) {
        throw SizeLimitError("exhaustive solving is capped at a universe of " +
                             std::to_string(solve_universe_guard) + " atoms, got " +
                             std::to_string(eq.universe().size()));
    }
    SolutionSet out;
    out.fusionable = is_fusionable(eq.m(), eq.n());
    if (out.fusionable) out.closed_form = solve_closed_form(eq);
    // Space members are already deduplicated and size-lex ordered.
    for (const SigmaSet& x : integer_space(eq.universe()).members) {
        if (fuse(x, eq.m()).result == eq.n()) out.solutions.push_back(x);
    }
    return out;
}

bool verify_cancellation(const SigmaSet& x, const SigmaSet& m) {
    std::optional<SigmaSet> anti = anti_set(m);
    if (!anti) {
        throw NotEntireError("cancellation needs an entire M; " + format_set(m) +
                             " has no antiset");
    }
    return fuse(fuse(x, m).result, *anti).result == x;
}

CancellationReport characterize_cancellation(const GeneratedSpace& space) {
    if (space.members.size() > cancellation_member_guard) {
        throw SizeLimitError("cancellation scan is capped at " +
                             std::to_string(cancellation_member_guard) +
                             " members, got " + std::to_string(space.members.size()));
    }
    CancellationReport report;
    for (const SigmaSet& x : space.members) {
        for (const SigmaSet& m : space.members) {
            if (!is_entire(m)) {
                ++report.skipped_non_entire;
                continue;
            }
            ++report.pairs_scanned;
            bool disjoint = (x.natural_bits() & m.natural_bits()) == 0 &&
                            (x.antinatural_bits() & m.antinatural_bits()) == 0 &&
                            (x.zero_natural_bits() & m.zero_natural_bits()) == 0;
            bool cancels = verify_cancellation(x, m);
            if (disjoint && cancels) ++report.disjoint_and_cancel;
            if (disjoint && !cancels) ++report.disjoint_not_cancel;
            if (!disjoint && cancels) ++report.overlap_and_cancel;
            if (!disjoint && !cancels) ++report.overlap_not_cancel;
        }
    }
    report.implication_holds = report.disjoint_not_cancel == 0;
    return report;
}

} // namespace sigma
