#include "crossway/stride.hpp"

#include <bit>

namespace crossway {

char stride_letter(Stride s) {
    static constexpr char letters[] = {'S', 'T', 'R', 'I', 'D', 'E'};
    return letters[static_cast<unsigned>(s)];
}

std::optional<Stride> stride_from_letter(char c) {
    switch (c) {
        case 'S': return Stride::S;
        case 'T': return Stride::T;
        case 'R': return Stride::R;
        case 'I': return Stride::I;
        case 'D': return Stride::D;
        case 'E': return Stride::E;
        default: return std::nullopt;
    }
}

int StrideSet::size() const { return std::popcount(static_cast<unsigned>(bits_)); }

std::string StrideSet::to_string(char sep) const {
    if (empty()) return "-";
    std::string out;
    for (Stride s : kAllStride) {
        if (!contains(s)) continue;
        if (!out.empty() && sep != '\0') out.push_back(sep);
        out.push_back(stride_letter(s));
    }
    return out;
}

std::optional<StrideSet> StrideSet::parse(std::string_view text) {
    StrideSet out;
    for (char c : text) {
        if (c == ',' || c == '/') continue;
        auto s = stride_from_letter(c);
        if (!s) return std::nullopt;
        out.insert(*s);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace crossway
