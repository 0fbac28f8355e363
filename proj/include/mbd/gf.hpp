#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mbd/common.hpp"

namespace mbd {

/// Arithmetic tables for GF(q), q = p^m <= 256.
///
/// Elements are the integers [0, q).  The element a_0 + a_1*x + ... encodes
/// as a_0 + a_1*p + a_2*p^2 + ...  Extension fields are built modulo the
/// canonical irreducible polynomial for (p, m): the monic irreducible
/// polynomial of degree m with the smallest encoding, so a given q always
/// yields the same field representation.
class GaloisField {
public:
    GaloisField() : GaloisField(make(2)) {}

    static GaloisField make(int q);

    int q() const { return t_->q; }
    int characteristic() const { return t_->p; }
    int degree() const { return t_->m; }
    // Encoding of the modulus polynomial (0 when m == 1).
    int modulus() const { return t_->modulus; }

    uint8_t add(uint8_t a, uint8_t b) const { return t_->add[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t mul(uint8_t a, uint8_t b) const { return t_->mul[idx(a, b)]; }
    uint8_t neg(uint8_t a) const { return t_->neg[check(a)]; }
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    bool operator==(const GaloisField& other) const { return t_->q == other.t_->q; }

private:
    struct Tables {
        int q = 0, p = 0, m = 0, modulus = 0;
        std::vector<uint8_t> add, mul, neg;
        std::vector<int16_t> inv;  // -1 for 0
    };

    explicit GaloisField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

    size_t idx(uint8_t a, uint8_t b) const { return size_t(check(a)) * t_->q + check(b); }
    uint8_t check(uint8_t a) const {
        if (a >= t_->q) throw PreconditionError("field element out of range");
        return a;
    }

    std::shared_ptr<const Tables> t_;
};

}  // namespace mbd
