#include "mbd/gf.hpp"

#include <map>
#include <mutex>

namespace mbd {
namespace {

// Polynomials over GF(p) are stored as coefficient vectors, constant term
// first.  The integer encoding is the base-p value of the coefficients.

std::vector<int> decode_poly(int enc, int p) {
    std::vector<int> c;
    while (enc > 0) {
        c.push_back(enc % p);
        enc /= p;
    }
    return c;
}

int poly_degree(const std::vector<int>& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a modulo the monic polynomial b.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        int factor = a[da];  // b is monic
        for (int i = 0; i <= db; ++i) {
            int j = da - db + i;
            a[j] = ((a[j] - factor * b[i]) % p + p) % p;
        }
    }
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

bool divides(const std::vector<int>& d, const std::vector<int>& a, int p) {
    return poly_degree(poly_mod(a, d, p)) < 0;
}

// Smallest-encoding monic irreducible polynomial of degree m over GF(p).
std::vector<int> canonical_irreducible(int p, int m) {
    int pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    for (int low = 0; low < pm; ++low) {
        std::vector<int> cand = decode_poly(low, p);
        cand.resize(m + 1, 0);
        cand[m] = 1;
        if (cand[0] == 0) continue;  // divisible by x
        bool irreducible = true;
        // Trial division by every monic polynomial of degree 1..m/2.
        for (int d = 1; irreducible && 2 * d <= m; ++d) {
            int pd = 1;
            for (int i = 0; i < d; ++i) pd *= p;
            for (int dl = 0; dl < pd; ++dl) {
                std::vector<int> div = decode_poly(dl, p);
                div.resize(d + 1, 0);
                div[d] = 1;
                if (divides(div, cand, p)) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return cand;
    }
    throw PreconditionError("no irreducible polynomial found");
}

int encode_poly(const std::vector<int>& a, int p) {
    int enc = 0;
    for (int i = int(a.size()) - 1; i >= 0; --i) enc = enc * p + a[i];
    return enc;
}

void check_axioms(const GaloisField& f) {
    int q = f.q();
    for (int a = 0; a < q; ++a) {
        if (f.add(a, 0) != a || f.mul(a, 1) != a) throw PreconditionError("field identity axiom failed");
        if (f.add(a, f.neg(a)) != 0) throw PreconditionError("additive inverse axiom failed");
        if (a != 0 && f.mul(a, f.inv(a)) != 1) throw PreconditionError("multiplicative inverse axiom failed");
        for (int b = 0; b < q; ++b) {
            if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a))
                throw PreconditionError("commutativity axiom failed");
            for (int c = 0; c < q; ++c) {
                if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)))
                    throw PreconditionError("additive associativity failed");
                if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)))
                    throw PreconditionError("multiplicative associativity failed");
                if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
                    throw PreconditionError("distributivity failed");
            }
        }
    }
}

}  // namespace

GaloisField GaloisField::make(int q) {
    if (q < 2 || q > 256) throw InputError("field order must be in [2, 256], got " + std::to_string(q));
    int p = 0;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int m = 0, pm = 1;
    while (pm < q) {
        pm *= p;
        ++m;
    }
    if (pm != q) throw InputError(std::to_string(q) + " is not a prime power");

    auto t = std::make_shared<Tables>();
    t->q = q;
    t->p = p;
    t->m = m;
    t->add.assign(size_t(q) * q, 0);
    t->mul.assign(size_t(q) * q, 0);
    t->neg.assign(q, 0);
    t->inv.assign(q, -1);

    std::vector<int> modulus;
    if (m >= 2) {
        modulus = canonical_irreducible(p, m);
        t->modulus = encode_poly(modulus, p);
    }

    for (int a = 0; a < q; ++a) {
        std::vector<int> pa = decode_poly(a, p);
        for (int b = 0; b < q; ++b) {
            std::vector<int> pb = decode_poly(b, p);
            std::vector<int> sum(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < sum.size(); ++i) {
                int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
                sum[i] = x % p;
            }
            t->add[size_t(a) * q + b] = uint8_t(encode_poly(sum, p));
            std::vector<int> prod = poly_mul(pa, pb, p);
            if (m >= 2) prod = poly_mod(prod, modulus, p);
            t->mul[size_t(a) * q + b] = uint8_t(encode_poly(prod, p));
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (t->add[size_t(a) * q + b] == 0) t->neg[a] = uint8_t(b);
            if (a != 0 && t->mul[size_t(a) * q + b] == 1) t->inv[a] = int16_t(b);
        }
    }

    GaloisField f{std::shared_ptr<const Tables>(t)};
    if (q <= 16) check_axioms(f);
    return f;
}

uint8_t GaloisField::inv(uint8_t a) const {
    check(a);
    if (a == 0) throw PreconditionError("division by zero in GF(" + std::to_string(t_->q) + ")");
    return uint8_t(t_->inv[a]);
}

}  // namespace mbd
