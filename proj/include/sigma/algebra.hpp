#pragma once

#include "sigma/sigma_set.hpp"
#include "sigma/spaces.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sigma {

/// A fusion Cayley table. Every ∅-valued cell carries a decoration (i, j):
/// i is a presentation ordinal assigned in row-major scan order starting at
/// 0, j the cell's annihilation count — the ∅^i_j bookkeeping.
struct FusionTable {
    struct Decoration {
        std::size_t row = 0;
        std::size_t col = 0;
        int position = 0;      // the superscript i
        int annihilation = 0;  // the subscript j = |row ∩̂ col|
    };

    std::vector<SigmaSet> row_labels;
    std::vector<SigmaSet> column_labels;
    std::vector<std::vector<FusionOutcome>> cells;  // cells[r][c] = fuse(row r, col c)
    std::vector<Decoration> empty_cell_decorations; // row-major scan order
};

/// Outcome of checking the loop conditions on a space under ⊕: closure,
/// unique identity, unique inverses, commutativity — plus an associativity
/// scan that is expected to fail and collects witnesses.
struct LoopReport {
    bool closure_holds = false;
    std::optional<SigmaSet> identity;  // present iff some identity exists
    bool identity_unique = false;
    bool inverses_unique = false;             // every member has exactly one inverse
    bool inverses_match_anti_set = false;     // and that inverse is its anti-set
    bool commutative = false;
    bool associative = false;
    bool associativity_sampled = false;  // triples sampled rather than scanned in full
    std::uint64_t triples_checked = 0;
    std::vector<std::array<SigmaSet, 3>> nonassociative_witnesses;
};

/// Full grid of fuse outcomes with ∅-cell decorations.
/// Guard: at most 1024 rows and 1024 columns, else SizeLimitError.
FusionTable fusion_table(const std::vector<SigmaSet>& rows,
                         const std::vector<SigmaSet>& cols);

/// Exhaustively checks the four loop conditions over the space's members and
/// scans triples for associativity failures, collecting up to witness_limit
/// witnesses. The triple scan runs in full when |members|³ ≤ 10^6 and
/// otherwise samples 10^6 fixed-seed triples (reported via
/// associativity_sampled). Guard: cardinality ≤ 3^8, else SizeLimitError.
LoopReport verify_loop_axioms(const GeneratedSpace& space,
                              std::size_t witness_limit = 1);

/// Up to `limit` triples (X, Y, Z) with (X⊕Y)⊕Z ≠ X⊕(Y⊕Z), scanned in a
/// fixed deterministic order (Z, then Y, then X over the member order).
/// Guard: cardinality ≤ 3^6, else SizeLimitError.
std::vector<std::array<SigmaSet, 3>>
find_nonassociative_triples(const GeneratedSpace& space, std::size_t limit);

} // namespace sigma
