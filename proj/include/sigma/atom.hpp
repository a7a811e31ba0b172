#pragma once

#include "sigma/errors.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace sigma {

/// Kind of a ground element. The enum order is also the tie-break between
/// atoms of equal index: zero-natural < natural < antinatural.
enum class AtomKind : std::uint8_t {
    zero_natural = 0,
    natural      = 1,
    antinatural  = 2,
};

/// A signed ground element: a 1-based index plus a kind. A natural n and the
/// antinatural n* of the same index annihilate each other under fusion;
/// zero-naturals have no annihilating partner. Indices are capped at 64 per
/// kind so that sets have a fixed-width bit-mask representation.
class Atom {
public:
    static constexpr int max_index = 64;

    Atom(int index, AtomKind kind) : index_(0), kind_(kind) {
        if (index < 1) {
            throw DomainError("atom index must be >= 1, got " + std::to_string(index));
        }
        if (index > max_index) {
            throw SizeLimitError("atom index " + std::to_string(index) +
                                 " exceeds the supported maximum of " +
                                 std::to_string(max_index));
        }
        index_ = static_cast<std::uint8_t>(index);
    }

    static Atom natural(int index) { return Atom(index, AtomKind::natural); }
    static Atom antinatural(int index) { return Atom(index, AtomKind::antinatural); }
    static Atom zero_natural(int index) { return Atom(index, AtomKind::zero_natural); }

    int index() const { return index_; }
    AtomKind kind() const { return kind_; }

    // Canonical order: index ascending, kind as tie-break.
    friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
    friend bool operator==(const Atom&, const Atom&) = default;

private:
    std::uint8_t index_;
    AtomKind kind_;
};

/// The annihilating partner: n <-> n*. Zero-naturals have none.
inline std::optional<Atom> anti_atom(Atom a) {
    switch (a.kind()) {
    case AtomKind::natural:
        return Atom(a.index(), AtomKind::antinatural);
    case AtomKind::antinatural:
        return Atom(a.index(), AtomKind::natural);
    case AtomKind::zero_natural:
        return std::nullopt;
    }
    return std::nullopt;
}

/// Renders "7", "7*" or "7_0".
std::string to_string(Atom a);

} // namespace sigma
