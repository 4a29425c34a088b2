#include "msr/field.hpp"

#include <algorithm>

namespace msr {

namespace {

// Polynomial helpers over GF(p), coefficients low-to-high, trailing zeros trimmed.

std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_trim(std::move(r));
}

// Remainder of a by monic divisor d.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& d, int p) {
    a = poly_trim(std::move(a));
    const int dd = static_cast<int>(d.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dd) {
        const int shift = static_cast<int>(a.size()) - 1 - dd;
        const int lead = a.back();
        for (int i = 0; i <= dd; ++i) {
            int& c = a[static_cast<std::size_t>(i + shift)];
            c = ((c - lead * d[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

}  // namespace

bool Field::is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool Field::is_irreducible(int p, const std::vector<int>& poly) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1 || poly.back() != 1) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; d <= deg / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> divisor(static_cast<std::size_t>(d) + 1, 0);
            long long x = code;
            for (int i = 0; i < d; ++i) {
                divisor[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
                x /= p;
            }
            divisor[static_cast<std::size_t>(d)] = 1;
            if (poly_mod(poly, divisor, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> Field::default_modulus(int p, int m) {
    // Smallest non-leading coefficient vector in base-p counter order.
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        std::vector<int> poly(static_cast<std::size_t>(m) + 1, 0);
        long long x = code;
        for (int i = 0; i < m; ++i) {
            poly[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
            x /= p;
        }
        poly[static_cast<std::size_t>(m)] = 1;
        if (is_irreducible(p, poly)) return poly;
    }
    throw ReduciblePolynomialError("no irreducible polynomial found");  // unreachable for valid p, m
}

FieldPtr Field::make(int p, int m, std::vector<int> modulus) {
    if (!is_prime(p)) throw NotPrimeError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw InvalidParametersError("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 256) throw OrderTooLargeError("field order exceeds 256");
    }
    if (m == 1) {
        modulus = {0, 1};
    } else if (modulus.empty()) {
        modulus = default_modulus(p, m);
    } else {
        for (int& c : modulus) c = ((c % p) + p) % p;
        if (static_cast<int>(modulus.size()) != m + 1 || modulus.back() != 1)
            throw ReduciblePolynomialError("modulus must be monic of degree m");
        if (!is_irreducible(p, modulus))
            throw ReduciblePolynomialError("modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    return FieldPtr(new Field(p, m, std::move(modulus)));
}

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < m; ++i) q_ *= p;
    build_tables();
}

std::vector<int> Field::decode(std::uint8_t v) const {
    std::vector<int> digits(static_cast<std::size_t>(m_));
    int x = v;
    for (int i = 0; i < m_; ++i) {
        digits[static_cast<std::size_t>(i)] = x % p_;
        x /= p_;
    }
    return digits;
}

std::uint8_t Field::encode(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) > m_)
        throw InvalidParametersError("too many digits for field degree");
    long long v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        int d = ((digits[i] % p_) + p_) % p_;
        v = v * p_ + d;
    }
    return static_cast<std::uint8_t>(v);
}

std::uint8_t Field::from_int(long long v) const {
    if (v >= 0 && v < q_) return static_cast<std::uint8_t>(v);
    // Out-of-range values reduce through the prime subfield, which is the
    // only sound reading for literals like -1 in printed matrices.
    long long r = ((v % p_) + p_) % p_;
    return static_cast<std::uint8_t>(r);
}

std::uint8_t Field::pow(std::uint8_t a, unsigned long long e) const {
    std::uint8_t result = 1;
    std::uint8_t base = a;
    while (e > 0) {
        if (e & 1ULL) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

void Field::build_tables() {
    const std::size_t q = static_cast<std::size_t>(q_);
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    // Element digits, cached once.
    std::vector<std::vector<int>> digits(q);
    for (std::size_t v = 0; v < q; ++v) digits[v] = decode(static_cast<std::uint8_t>(v));

    auto encode_poly = [&](const std::vector<int>& poly) {
        long long v = 0;
        for (std::size_t i = std::min<std::size_t>(poly.size(), static_cast<std::size_t>(m_)); i-- > 0;)
            v = v * p_ + poly[i];
        return static_cast<std::uint8_t>(v);
    };

    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            std::vector<int> s(static_cast<std::size_t>(m_));
            for (int i = 0; i < m_; ++i)
                s[static_cast<std::size_t>(i)] =
                    (digits[a][static_cast<std::size_t>(i)] + digits[b][static_cast<std::size_t>(i)]) % p_;
            add_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] = encode_poly(s);

            const auto prod = poly_mod(poly_mul(poly_trim(digits[a]), poly_trim(digits[b]), p_), modulus_, p_);
            mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] = encode_poly(prod);
        }
    }
    for (std::size_t a = 0; a < q; ++a) {
        std::vector<int> n(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i)
            n[static_cast<std::size_t>(i)] = (p_ - digits[a][static_cast<std::size_t>(i)]) % p_;
        neg_[a] = encode_poly(n);
    }
    for (std::size_t a = 1; a < q; ++a) {
        for (std::size_t b = 1; b < q; ++b) {
            if (mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }
        }
    }
}

}  // namespace msr
