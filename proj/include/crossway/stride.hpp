#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace crossway {

enum class Stride : std::uint8_t { S, T, R, I, D, E };

inline constexpr Stride kAllStride[] = {Stride::S, Stride::T, Stride::R,
                                        Stride::I, Stride::D, Stride::E};

char stride_letter(Stride s);
std::optional<Stride> stride_from_letter(char c);

/// Small value set of STRIDE categories.
class StrideSet {
public:
    constexpr StrideSet() = default;
    constexpr StrideSet(std::initializer_list<Stride> letters) {
        for (Stride s : letters) insert(s);
    }

    constexpr void insert(Stride s) { bits_ |= bit(s); }
    constexpr bool contains(Stride s) const { return (bits_ & bit(s)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint8_t bits() const { return bits_; }
    int size() const;

    constexpr bool subset_of(StrideSet other) const { return (bits_ & ~other.bits_) == 0; }

    friend constexpr StrideSet operator&(StrideSet a, StrideSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr StrideSet operator|(StrideSet a, StrideSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr bool operator==(StrideSet a, StrideSet b) = default;

    /// "S/T" style, in STRIDE order. Empty set renders as "-".
    std::string to_string(char sep = '/') const;

    /// Parses "S,T" / "ST" / "S/T". Returns nullopt on any unknown letter or empty input.
    static std::optional<StrideSet> parse(std::string_view text);

private:
    static constexpr std::uint8_t bit(Stride s) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s)); }
    static constexpr StrideSet from_bits(unsigned b) {
        StrideSet out;
        out.bits_ = static_cast<std::uint8_t>(b);
        return out;
    }
    std::uint8_t bits_ = 0;
};

}  // namespace crossway
