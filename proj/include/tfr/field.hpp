#pragma once

#include "tfr/numbers.hpp"

namespace tfr {

// Coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    Int p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(const Int& p);

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

bool is_prime(const Int& n);

// Inverse of a mod p, p prime, a not divisible by p.
Int mod_inverse(const Int& a, const Int& p);

}  // namespace tfr
