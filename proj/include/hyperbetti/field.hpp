#pragma once

#include <cstdint>
#include <string>

namespace hyperbetti {

// Coefficient field for homology: GF(p) for a prime p, or the rationals.
struct FieldSpec {
    enum class Kind { prime, rational };

    Kind kind = Kind::prime;
    std::uint32_t p = 2;

    static FieldSpec gf(std::uint32_t p);  // validates primality
    static FieldSpec rationals();

    // "2", "3", "q", "Q" (input error otherwise).
    static FieldSpec parse(const std::string& text);

    bool is_rational() const { return kind == Kind::rational; }
    std::string name() const;  // "GF(2)", "Q"

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (is_rational() || p == o.p);
    }
};

bool is_prime(std::uint32_t n);

} // namespace hyperbetti
