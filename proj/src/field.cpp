#include "hyperbetti/field.hpp"

#include "hyperbetti/errors.hpp"

namespace hyperbetti {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::gf(std::uint32_t p) {
    if (p > 0x7fffffffu || !is_prime(p))
        throw input_error("field modulus must be a prime below 2^31, got " +
                          std::to_string(p));
    FieldSpec f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::rationals() {
    FieldSpec f;
    f.kind = Kind::rational;
    f.p = 0;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    unsigned long v = 0;
    size_t pos = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (...) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || v > 0x7fffffffu)
        throw input_error("cannot parse field '" + text + "': expected q or a prime");
    return gf(static_cast<std::uint32_t>(v));
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
}

} // namespace hyperbetti
