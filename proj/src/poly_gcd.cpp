// Univariate gcd over Z[q] by the dense modular algorithm: gcds modulo
// word-sized primes, Chinese remaindering of the images, and a trial
// division over Z to certify the candidate.

#include "qreal/int_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qreal {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
using ModPoly = std::vector<u64>;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    while (e > 0) {
        if (e & 1U) {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

BigInt from_u64(u64 v)
{
    static_assert(sizeof(unsigned long) == sizeof(u64));
    BigInt z;
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
    return z;
}

bool is_prime(u64 n)
{
    if (n < 2) {
        return false;
    }
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// Primes just below 2^62, generated once.
const std::vector<u64>& prime_table()
{
    static const std::vector<u64> table = [] {
        std::vector<u64> primes;
        u64 candidate = (1ULL << 62) - 1;
        while (primes.size() < 256) {
            if (is_prime(candidate)) {
                primes.push_back(candidate);
            }
            candidate -= 2;
        }
        return primes;
    }();
    return table;
}

void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

ModPoly reduce(const IntPolynomial& a, u64 p)
{
    ModPoly r(a.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), p);
    }
    trim(r);
    return r;
}

// a mod b in place; b nonempty.
void rem_in_place(ModPoly& a, const ModPoly& b, u64 p)
{
    const std::size_t db = b.size() - 1;
    const u64 inv_lead = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const u64 factor = mul_mod(a.back(), inv_lead, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j <= db; ++j) {
            const u64 t = mul_mod(factor, b[j], p);
            u64& slot = a[shift + j];
            slot = slot >= t ? slot - t : slot + p - t;
        }
        trim(a);
    }
}

ModPoly monic_gcd(ModPoly a, ModPoly b, u64 p)
{
    while (!b.empty()) {
        rem_in_place(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv_lead = inv_mod(a.back(), p);
        for (auto& c : a) {
            c = mul_mod(c, inv_lead, p);
        }
    }
    return a;
}

} // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero()) {
        return normalized(b);
    }
    if (b.is_zero()) {
        return normalized(a);
    }
    const IntPolynomial pa = a.primitive_part();
    const IntPolynomial pb = b.primitive_part();
    if (pa.degree() == 0 || pb.degree() == 0) {
        return IntPolynomial::constant(1);
    }
    if (pa == pb) {
        return pa;
    }

    BigInt lead_gcd;
    mpz_gcd(lead_gcd.get_mpz_t(), pa.leading().get_mpz_t(), pb.leading().get_mpz_t());

    long best_degree = std::min(pa.degree(), pb.degree()) + 1;
    std::vector<BigInt> image; // CRT accumulation, symmetric residues
    BigInt modulus = 1;
    IntPolynomial previous;

    for (u64 p : prime_table()) {
        if (mpz_fdiv_ui(pa.leading().get_mpz_t(), p) == 0 || mpz_fdiv_ui(pb.leading().get_mpz_t(), p) == 0) {
            continue;
        }
        ModPoly g = monic_gcd(reduce(pa, p), reduce(pb, p), p);
        const long deg = static_cast<long>(g.size()) - 1;
        if (deg == 0) {
            return IntPolynomial::constant(1);
        }
        if (deg > best_degree) {
            continue; // unlucky prime
        }
        const u64 scale = mpz_fdiv_ui(lead_gcd.get_mpz_t(), p);
        for (auto& c : g) {
            c = mul_mod(c, scale, p);
        }
        if (deg < best_degree) {
            best_degree = deg;
            image.assign(g.size(), BigInt(0));
            for (std::size_t i = 0; i < g.size(); ++i) {
                image[i] = from_u64(g[i]);
            }
            modulus = from_u64(p);
            previous = IntPolynomial{};
        } else {
            const u64 m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
            const u64 m_inv = inv_mod(m_mod_p, p);
            for (std::size_t i = 0; i < g.size(); ++i) {
                const u64 current = mpz_fdiv_ui(image[i].get_mpz_t(), p);
                const u64 diff = g[i] >= current ? g[i] - current : g[i] + p - current;
                const u64 t = mul_mod(diff, m_inv, p);
                image[i] += modulus * from_u64(t);
            }
            modulus *= from_u64(p);
        }
        // Symmetric representatives.
        BigInt half = modulus / 2;
        std::vector<BigInt> sym = image;
        for (auto& c : sym) {
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
            if (c > half) {
                c -= modulus;
            }
        }
        image = sym;
        IntPolynomial candidate = IntPolynomial(sym).primitive_part();
        if (candidate == previous) {
            if (IntPolynomial::exact_divide(pa, candidate) && IntPolynomial::exact_divide(pb, candidate)) {
                return candidate;
            }
        }
        previous = std::move(candidate);
    }
    throw std::runtime_error("poly_gcd: prime table exhausted");
}

} // namespace qreal
