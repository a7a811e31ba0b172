// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Each criterion re-derives its expected values from first principles or from
// the frozen reference data, independent of the unit suite.

#include "sigma/algebra.hpp"
#include "sigma/cli.hpp"
#include "sigma/equations.hpp"
#include "sigma/errors.hpp"
#include "sigma/sigma_set.hpp"
#include "sigma/spaces.hpp"
#include "sigma/textio.hpp"

#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sigma;

namespace {

int checks_failed = 0;

#define EXPECT(cond)                                                          \
    do {                                                                      \
        if (!(cond)) {                                                        \
            ++checks_failed;                                                  \
            std::cerr << "  check failed: " #cond " (line " << __LINE__       \
                      << ")\n";                                               \
        }                                                                     \
    } while (0)

Atom nat(int i) { return Atom::natural(i); }
Atom anti(int i) { return Atom::antinatural(i); }
Atom zero(int i) { return Atom::zero_natural(i); }

SigmaSet naturals_upto(int n) {
    return SigmaSet::from_masks(
        n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)), 0, 0);
}

SigmaSet zeros_upto(int n) {
    return SigmaSet::from_masks(
        0, 0, n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return {};
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

bool criterion(int number, const std::string& name, double budget_ms,
               const std::function<void()>& body) {
    checks_failed = 0;
    std::string aborted;
    auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        aborted = e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    bool ok = aborted.empty() && checks_failed == 0 && ms < budget_ms;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name
         << " (" << ms << " ms, budget " << budget_ms << " ms)";
    if (!aborted.empty()) line << " [exception: " << aborted << "]";
    if (checks_failed > 0) line << " [" << checks_failed << " checks failed]";
    if (aborted.empty() && checks_failed == 0 && ms >= budget_ms) {
        line << " [over budget]";
    }
    std::cout << line.str() << "\n";
    return ok;
}

void criterion_operator_goldens() {
    SigmaSet a{nat(1), nat(2), anti(3), nat(4)};
    SigmaSet b{nat(2), nat(3), anti(4)};
    EXPECT(star_intersection(a, b) == (SigmaSet{anti(3), nat(4)}));
    EXPECT(star_intersection(b, a) == (SigmaSet{nat(3), anti(4)}));
    EXPECT(star_difference(a, b) == (SigmaSet{nat(1), nat(2)}));
    EXPECT(star_difference(b, a) == (SigmaSet{nat(2)}));
    FusionOutcome fused = fuse(a, b);
    EXPECT(fused.result == (SigmaSet{nat(1), nat(2)}));
    EXPECT(fused.annihilation_count == 2);
    EXPECT(fuse(b, a).result == fused.result);
}

void criterion_table_reproduction() {
    auto render = [](const std::string& set_text) {
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run({"table", "--set", set_text}, out, err);
        EXPECT(code == 0);
        EXPECT(err.str().empty());
        return out.str();
    };
    std::string three = render("{1,2,3}");
    std::string golden3 = read_file(std::string(SIGMA_GOLDEN_DIR) +
                                    "/table_n3.txt");
    EXPECT(!golden3.empty());
    EXPECT(three == golden3);
    // All eight diagonal decorations, first to last.
    for (int i = 0; i < 8; ++i) {
        int j = ((i >> 0) & 1) + ((i >> 1) & 1) + ((i >> 2) & 1);
        std::string mark = "{}^" + std::to_string(i) + "_" + std::to_string(j);
        EXPECT(three.find(mark) != std::string::npos);
    }

    std::string two = render("{1,2}");
    std::string golden2 = read_file(std::string(SIGMA_GOLDEN_DIR) +
                                    "/table_n2.txt");
    EXPECT(!golden2.empty());
    EXPECT(two == golden2);

    // 16 cells: 4 data rows with 4 " | " separators each hold 5 columns.
    int rows = 0;
    std::istringstream lines(two);
    for (std::string line; std::getline(lines, line);) ++rows;
    EXPECT(rows == 6);  // header + rule + 4 data rows
}

void criterion_cardinality() {
    CardinalityReport report = check_cardinality_conjecture(7);
    const std::uint64_t expected[] = {1, 3, 9, 27, 81, 243, 729, 2187};
    EXPECT(report.all_match);
    EXPECT(report.cases.size() == 8);
    for (std::size_t n = 0; n < report.cases.size(); ++n) {
        EXPECT(report.cases[n].observed == expected[n]);
        EXPECT(report.cases[n].predicted == expected[n]);
        EXPECT(report.cases[n].match);
    }
}

void criterion_meta() {
    for (int a = 0; a + 0 <= 8; ++a) {
        for (int b = 0; a + b <= 8; ++b) {
            GeneratedSpace space = meta_space(zeros_upto(a), naturals_upto(b));
            std::uint64_t predicted = std::uint64_t{1} << a;
            for (int i = 0; i < b; ++i) predicted *= 3;
            EXPECT(space.cardinality() == predicted);
        }
    }
    EXPECT(meta_space(zeros_upto(2), naturals_upto(2)).cardinality() == 36);
    EXPECT(meta_space(zeros_upto(1), naturals_upto(2)).cardinality() == 18);
    EXPECT(meta_space(zeros_upto(0), naturals_upto(2)).cardinality() == 9);
}

void criterion_loop() {
    for (int n = 1; n <= 4; ++n) {
        GeneratedSpace space = integer_space(naturals_upto(n));
        LoopReport report = verify_loop_axioms(space);
        EXPECT(report.closure_holds);
        EXPECT(report.identity.has_value());
        EXPECT(report.identity_unique);
        EXPECT(report.identity.value_or(SigmaSet{nat(64)}) == SigmaSet{});
        EXPECT(report.inverses_unique);
        EXPECT(report.inverses_match_anti_set);
        EXPECT(report.commutative);
        EXPECT(!report.associative);
        EXPECT(!report.associativity_sampled);
        EXPECT(report.nonassociative_witnesses.size() == 1);
        if (!report.nonassociative_witnesses.empty()) {
            const auto& w = report.nonassociative_witnesses.front();
            SigmaSet left = fuse(fuse(w[0], w[1]).result, w[2]).result;
            SigmaSet right = fuse(w[0], fuse(w[1], w[2]).result).result;
            EXPECT(left != right);
        }
    }
}

void criterion_equations() {
    Equation small(SigmaSet{nat(1), nat(2)}, SigmaSet{nat(1), anti(2)},
                   SigmaSet{nat(1)});
    SolutionSet all = solve_exhaustive(small);
    EXPECT(all.fusionable);
    std::vector<SigmaSet> expected{SigmaSet{nat(2)}, SigmaSet{nat(1), nat(2)}};
    EXPECT(all.solutions == expected);

    Equation blocked(SigmaSet{nat(1), nat(2)}, SigmaSet{anti(1)},
                     SigmaSet{nat(1)});
    SolutionSet none = solve_exhaustive(blocked);
    EXPECT(!none.fusionable);
    EXPECT(none.solutions.empty());

    Equation six(naturals_upto(6),
                 SigmaSet{nat(1), nat(2), anti(3), anti(4), nat(5), anti(6)},
                 SigmaSet{nat(1), nat(2)});
    auto closed = solve_closed_form(six);
    EXPECT(closed.has_value());
    if (closed) {
        EXPECT(closed->s1 ==
               (SigmaSet{nat(1), nat(2), nat(3), nat(4), anti(5), nat(6)}));
        EXPECT(closed->s2 == (SigmaSet{nat(3), nat(4), anti(5), nat(6)}));
        EXPECT(fuse(closed->s1, six.m()).result == six.n());
        EXPECT(fuse(closed->s2, six.m()).result == six.n());
    }
}

void criterion_property_suites() {
    // Per-set identities over 3^A, |A| <= 4.
    GeneratedSpace space4 = integer_space(naturals_upto(4));
    for (const SigmaSet& x : space4.members) {
        EXPECT(star_intersection(x, x) == SigmaSet{});
        EXPECT(star_intersection(x, SigmaSet{}) == SigmaSet{});
        EXPECT(star_intersection(SigmaSet{}, x) == SigmaSet{});
        EXPECT(star_difference(x, x) == x);
        EXPECT(star_difference(x, SigmaSet{}) == x);
        EXPECT(star_difference(SigmaSet{}, x) == SigmaSet{});
        EXPECT(fuse(x, x).result == x);
        EXPECT(fuse(x, SigmaSet{}).result == x);
        EXPECT(fuse(SigmaSet{}, x).result == x);
        auto inverse = anti_set(x);
        EXPECT(inverse.has_value());
        if (inverse) {
            EXPECT(anti_set(*inverse) == x);
            FusionOutcome cancel = fuse(x, *inverse);
            EXPECT(cancel.result == SigmaSet{});
            EXPECT(cancel.annihilation_count == static_cast<int>(x.size()));
        }
    }

    // Fusion extends union on classical subsets, |X| <= 6.
    for (std::uint64_t x = 0; x < 64; ++x) {
        for (std::uint64_t y = 0; y < 64; ++y) {
            SigmaSet a = SigmaSet::from_masks(x, 0, 0);
            SigmaSet b = SigmaSet::from_masks(y, 0, 0);
            EXPECT(fuse(a, b).result == SigmaSet::from_masks(x | y, 0, 0));
        }
    }

    // Commutativity and count symmetry over all pairs in 3^A, |A| <= 4.
    for (const SigmaSet& a : space4.members) {
        for (const SigmaSet& b : space4.members) {
            FusionOutcome left = fuse(a, b);
            FusionOutcome right = fuse(b, a);
            EXPECT(left.result == right.result);
            EXPECT(left.annihilation_count == right.annihilation_count);
        }
    }

    // The oracle agrees pair-wise over 3^A, |A| <= 3.
    GeneratedSpace space3 = integer_space(naturals_upto(3));
    for (const SigmaSet& a : space3.members) {
        for (const SigmaSet& b : space3.members) {
            oracle::OSet oa = oracle::from_sigma(a);
            oracle::OSet ob = oracle::from_sigma(b);
            EXPECT(fuse(a, b).result == oracle::to_sigma(oracle::fuse(oa, ob)));
            EXPECT(fuse(a, b).annihilation_count ==
                   oracle::annihilations(oa, ob));
        }
    }

    // Cancellation: disjointness implies recovery, no counterexamples.
    CancellationReport cancellation = characterize_cancellation(space4);
    EXPECT(cancellation.implication_holds);
    EXPECT(cancellation.disjoint_not_cancel == 0);
    EXPECT(cancellation.pairs_scanned == 6561);

    // Non-fusionable pairs have empty exhaustive solution sets, |A| <= 3.
    SigmaSet universe3 = naturals_upto(3);
    for (const SigmaSet& m : space3.members) {
        for (const SigmaSet& n : space3.members) {
            if (is_fusionable(m, n)) continue;
            SolutionSet result = solve_exhaustive(Equation(universe3, m, n));
            EXPECT(result.solutions.empty());
        }
    }

    // X + M = M is solved exactly by the classical subsets of M, |A| <= 3.
    for (const SigmaSet& m : space3.members) {
        SolutionSet result = solve_exhaustive(Equation(universe3, m, m));
        std::vector<SigmaSet> subsets = power_set(m);
        std::sort(subsets.begin(), subsets.end(), size_lex_less);
        EXPECT(result.solutions == subsets);
    }
}

void criterion_round_trip() {
    for (const SigmaSet& member : integer_space(naturals_upto(4)).members) {
        EXPECT(parse_set(format_set(member)) == member);
    }
    for (const SigmaSet& member :
         meta_space(SigmaSet{zero(1), zero(3)}, SigmaSet{nat(2), nat(4)})
             .members) {
        EXPECT(parse_set(format_set(member)) == member);
    }

    // Twenty flat expressions against their explicit left-nested spellings.
    static const char* const golden[][2] = {
        {"{1} + {2} + {3}", "(({1} + {2}) + {3})"},
        {"{1} ^ {2} ^ {3}", "(({1} ^ {2}) ^ {3})"},
        {"{1} \\ {2} \\ {3}", "(({1} \\ {2}) \\ {3})"},
        {"{1} | {2} | {3}", "(({1} | {2}) | {3})"},
        {"{1} + {2} ^ {3}", "(({1} + {2}) ^ {3})"},
        {"{1} ^ {2} + {3}", "(({1} ^ {2}) + {3})"},
        {"{1} + {2} \\ {3}", "(({1} + {2}) \\ {3})"},
        {"{1} \\ {2} + {3}", "(({1} \\ {2}) + {3})"},
        {"{1} | {2} + {3}", "(({1} | {2}) + {3})"},
        {"{1} + {2} | {3}", "(({1} + {2}) | {3})"},
        {"{1,2} + {2*} + {1*}", "(({1,2} + {2*}) + {1*})"},
        {"{1*} ^ {1} ^ {1}", "(({1*} ^ {1}) ^ {1})"},
        {"{1,2,3*,4} + {2,3,4*} \\ {1}", "(({1,2,3*,4} + {2,3,4*}) \\ {1})"},
        {"~{1} + {2} + {3}", "((~{1} + {2}) + {3})"},
        {"{1} + ~{2} + {3}", "(({1} + ~{2}) + {3})"},
        {"{1,2} \\ {2*} ^ {1*}", "(({1,2} \\ {2*}) ^ {1*})"},
        {"{1} + {2} + {3} + {4}", "((({1} + {2}) + {3}) + {4})"},
        {"{1*,2*} + {1,2} + {1}", "(({1*,2*} + {1,2}) + {1})"},
        {"{4} | {1} + {2*}", "(({4} | {1}) + {2*})"},
        {"{1,2} ^ {2*} \\ {3} | {4}", "((({1,2} ^ {2*}) \\ {3}) | {4})"},
    };
    static_assert(sizeof(golden) / sizeof(golden[0]) == 20);
    for (const auto& pair : golden) {
        auto flat = parse_expr(pair[0]);
        auto nested = parse_expr(pair[1]);
        EXPECT(expr_equal(*flat, *nested));
        EXPECT(eval_expr(*flat) == eval_expr(*nested));
    }
}

} // namespace

int main() {
    bool ok = true;
    ok &= criterion(1, "operator worked examples", 1.0,
                    criterion_operator_goldens);
    ok &= criterion(2, "fusion table reproduction", 100.0,
                    criterion_table_reproduction);
    ok &= criterion(3, "cardinality conjecture n <= 7", 30000.0,
                    criterion_cardinality);
    ok &= criterion(4, "meta-space conjecture |A|+|B| <= 8", 60000.0,
                    criterion_meta);
    ok &= criterion(5, "loop axioms with non-associativity witness", 60000.0,
                    criterion_loop);
    ok &= criterion(6, "equation worked examples", 1000.0,
                    criterion_equations);
    ok &= criterion(7, "exhaustive property suites", 300000.0,
                    criterion_property_suites);
    ok &= criterion(8, "round-trip and left-associativity goldens", 60000.0,
                    criterion_round_trip);
    return ok ? 0 : 1;
}
