#include "braidinv/scalar.hpp"

namespace braidinv {

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        // U+2212 (minus sign) is "\xe2\x88\x92" in UTF-8
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 3;
        } else {
            s += text[i];
            ++i;
        }
    }
    if (s.empty()) throw std::domain_error("Scalar::parse: empty string");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw std::domain_error("Scalar::parse: bad character in '" + text + "'");
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0 || s.back() == '/')
        throw std::domain_error("Scalar::parse: malformed rational '" + text + "'");
    if (v.get_den() == 0) throw std::domain_error("Scalar::parse: zero denominator");
    v.canonicalize();
    return Scalar(std::move(v));
}

}  // namespace braidinv
