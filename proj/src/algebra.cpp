#include "sigma/algebra.hpp"

#include "sigma/errors.hpp"

#include <random>
#include <unordered_set>

namespace sigma {

namespace {

constexpr std::size_t table_axis_guard = 1024;
constexpr std::size_t loop_member_guard = 6561;   // 3^8
constexpr std::size_t triple_member_guard = 729;  // 3^6
constexpr std::uint64_t full_triple_budget = 1'000'000;
constexpr std::uint64_t sample_seed = 0x5167a5e7u;

} // namespace

FusionTable fusion_table(const std::vector<SigmaSet>& rows,
                         const std::vector<SigmaSet>& cols) {
    if (rows.size() > table_axis_guard || cols.size() > table_axis_guard) {
        throw SizeLimitError("fusion table axes are capped at " +
                             std::to_string(table_axis_guard) + " labels, got " +
                             std::to_string(rows.size()) + "x" +
                             std::to_string(cols.size()));
    }
    FusionTable table;
    table.row_labels = rows;
    table.column_labels = cols;
    table.cells.reserve(rows.size());
    int position = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<FusionOutcome> row;
        row.reserve(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            FusionOutcome cell = fuse(rows[r], cols[c]);
            if (cell.result.empty()) {
                table.empty_cell_decorations.push_back(
                    {r, c, position++, cell.annihilation_count});
            }
            row.push_back(std::move(cell));
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

LoopReport verify_loop_axioms(const GeneratedSpace& space, std::size_t witness_limit) {
    const std::vector<SigmaSet>& members = space.members;
    if (members.size() > loop_member_guard) {
        throw SizeLimitError("loop verification is capped at " +
                             std::to_string(loop_member_guard) + " members, got " +
                             std::to_string(members.size()));
    }
    if (witness_limit == 0) witness_limit = 1;
    const std::size_t m = members.size();
    LoopReport report;

    std::unordered_set<SigmaSet> member_set(members.begin(), members.end());

    // Closure and commutativity over all ordered pairs.
    report.closure_holds = true;
    report.commutative = true;
    for (std::size_t i = 0; i < m && (report.closure_holds || report.commutative); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            FusionOutcome out = fuse(members[i], members[j]);
            if (report.closure_holds && member_set.count(out.result) == 0) {
                report.closure_holds = false;
            }
            if (report.commutative && j < i &&
                out.result != fuse(members[j], members[i]).result) {
                report.commutative = false;
            }
            if (!report.closure_holds && !report.commutative) break;
        }
    }

    // Identity: every E with E ⊕ X = X for all X.
    std::size_t identity_count = 0;
    for (const SigmaSet& e : members) {
        bool acts_as_identity = true;
        for (const SigmaSet& x : members) {
            if (fuse(e, x).result != x) {
                acts_as_identity = false;
                break;
            }
        }
        if (acts_as_identity) {
            if (identity_count == 0) report.identity = e;
            ++identity_count;
        }
    }
    report.identity_unique = identity_count == 1;

    // Inverses relative to the (first) identity: exactly one Y per X with
    // X ⊕ Y = E, and that Y is the anti-set.
    if (report.identity) {
        report.inverses_unique = true;
        report.inverses_match_anti_set = true;
        for (const SigmaSet& x : members) {
            std::size_t inverse_count = 0;
            const SigmaSet* inverse = nullptr;
            for (const SigmaSet& y : members) {
                if (fuse(x, y).result == *report.identity) {
                    ++inverse_count;
                    inverse = &y;
                }
            }
            if (inverse_count != 1) {
                report.inverses_unique = false;
                report.inverses_match_anti_set = false;
                break;
            }
            std::optional<SigmaSet> anti = anti_set(x);
            if (!anti || *inverse != *anti) report.inverses_match_anti_set = false;
        }
    }

    // Associativity: full scan when the triple count fits the budget,
    // fixed-seed sampling otherwise. Scan order is Z, then Y, then X.
    report.associative = true;
    auto check_triple = [&](const SigmaSet& x, const SigmaSet& y, const SigmaSet& z) {
        ++report.triples_checked;
        SigmaSet left = fuse(fuse(x, y).result, z).result;
        SigmaSet right = fuse(x, fuse(y, z).result).result;
        if (left != right) {
            report.associative = false;
            if (report.nonassociative_witnesses.size() < witness_limit) {
                report.nonassociative_witnesses.push_back({x, y, z});
            }
        }
        return report.nonassociative_witnesses.size() >= witness_limit &&
               !report.associative;
    };
    std::uint64_t total_triples =
        static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m) *
        static_cast<std::uint64_t>(m);
    if (total_triples <= full_triple_budget) {
        bool done = false;
        for (std::size_t zi = 0; zi < m && !done; ++zi)
            for (std::size_t yi = 0; yi < m && !done; ++yi)
                for (std::size_t xi = 0; xi < m && !done; ++xi)
                    done = check_triple(members[xi], members[yi], members[zi]);
    } else {
        report.associativity_sampled = true;
        std::mt19937_64 rng(sample_seed);
        // rng() % m keeps the sample sequence independent of the standard
        // library's distribution implementation.
        for (std::uint64_t t = 0; t < full_triple_budget; ++t) {
            const SigmaSet& x = members[rng() % m];
            const SigmaSet& y = members[rng() % m];
            const SigmaSet& z = members[rng() % m];
            if (check_triple(x, y, z)) break;
        }
    }
    return report;
}

std::vector<std::array<SigmaSet, 3>>
find_nonassociative_triples(const GeneratedSpace& space, std::size_t limit) {
    const std::vector<SigmaSet>& members = space.members;
    if (members.size() > triple_member_guard) {
        throw SizeLimitError("triple scan is capped at " +
                             std::to_string(triple_member_guard) + " members, got " +
                             std::to_string(members.size()));
    }
    std::vector<std::array<SigmaSet, 3>> witnesses;
    if (limit == 0) return witnesses;
    for (const SigmaSet& z : members) {
        for (const SigmaSet& y : members) {
            for (const SigmaSet& x : members) {
                if (fuse(fuse(x, y).result, z).result !=
                    fuse(x, fuse(y, z).result).result) {
                    witnesses.push_back({x, y, z});
                    if (witnesses.size() == limit) return witnesses;
                }
            }
        }
    }
    return witnesses;
}

} // namespace sigma
