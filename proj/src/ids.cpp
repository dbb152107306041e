#include "crossway/ids.hpp"

#include <algorithm>
#include <cctype>

namespace crossway {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

int plain_natural_compare(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (is_digit(a[i]) && is_digit(b[j])) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && is_digit(a[ie])) ++ie;
            while (je < b.size() && is_digit(b[je])) ++je;
            // strip leading zeros, then longer run is larger
            std::size_t iz = i, jz = j;
            while (iz + 1 < ie && a[iz] == '0') ++iz;
            while (jz + 1 < je && b[jz] == '0') ++jz;
            std::string_view na = a.substr(iz, ie - iz);
            std::string_view nb = b.substr(jz, je - jz);
            if (na.size() != nb.size()) return na.size() < nb.size() ? -1 : 1;
            if (int c = na.compare(nb); c != 0) return c < 0 ? -1 : 1;
            // equal value: fewer leading zeros first keeps the order total
            if ((ie - i) != (je - j)) return (ie - i) < (je - j) ? -1 : 1;
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
        ++i;
        ++j;
    }
    if (i == a.size() && j == b.size()) return 0;
    return i == a.size() ? -1 : 1;
}

}  // namespace

int roman_value(std::string_view s) {
    if (s.empty() || s.size() > 9) return 0;
    auto digit = [](char c) {
        switch (c) {
            case 'i': return 1;
            case 'v': return 5;
            case 'x': return 10;
            case 'l': return 50;
            case 'c': return 100;
            default: return 0;
        }
    };
    int total = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        int v = digit(s[k]);
        if (v == 0) return 0;
        int next = k + 1 < s.size() ? digit(s[k + 1]) : 0;
        total += (next > v) ? -v : v;
    }
    if (total <= 0 || total >= 400) return 0;
    // Reject non-canonical spellings such as "iiii" or "vx".
    static const char* const ones[] = {"", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
    static const char* const tens[] = {"", "x", "xx", "xxx", "xl", "l", "lx", "lxx", "lxxx", "xc"};
    static const char* const hundreds[] = {"", "c", "cc", "ccc"};
    std::string canonical = std::string(hundreds[total / 100]) + tens[(total / 10) % 10] + ones[total % 10];
    return canonical == s ? total : 0;
}

int natural_compare(std::string_view a, std::string_view b) {
    const int ra = roman_value(a);
    const int rb = roman_value(b);
    if (ra && rb) return ra == rb ? 0 : (ra < rb ? -1 : 1);
    if (ra) return -1;
    if (rb) return 1;
    return plain_natural_compare(a, b);
}

bool natural_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const std::string& x, const std::string& y) {
                                            return natural_compare(x, y) < 0;
                                        });
}

bool is_element_id(std::string_view s) {
    std::size_t k = 0;
    while (k < s.size() && is_alpha(s[k])) ++k;
    if (k == 0 || k == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(k), s.end(), is_digit);
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(is_alpha(s[0]) || is_digit(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return is_alpha(c) || is_digit(c) || c == '_' || c == '.' || c == '-';
    });
}

bool is_tag(std::string_view s) {
    if (s.empty() || !(is_lower(s[0]) || is_digit(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return is_lower(c) || is_digit(c) || c == '_' || c == '.' || c == '-';
    });
}

}  // namespace crossway
