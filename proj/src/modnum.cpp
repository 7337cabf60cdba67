#include "cglab/modnum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cglab {

NonUnitError::NonUnitError(u64 value, u64 modulus, u64 g)
    : Error("residue " + std::to_string(value) + " is not a unit mod " + std::to_string(modulus) +
            " (gcd " + std::to_string(g) + ")"),
      value_(value),
      modulus_(modulus),
      gcd_(g)
{
}

NonUnitDenominator::NonUnitDenominator(i64 j, i64 k, u64 modulus)
    : Error("denominator at (" + std::to_string(j) + ", " + std::to_string(k) + ") is not a unit mod " +
            std::to_string(modulus)),
      j_(j),
      k_(k)
{
}

namespace {

std::string describe_cells(const std::vector<std::pair<std::size_t, std::size_t>>& cells)
{
    std::ostringstream os;
    os << "checkerboard support violated at";
    std::size_t shown = 0;
    for (const auto& [i, j] : cells) {
        if (shown++ == 8) {
            os << " ... (" << cells.size() << " cells)";
            break;
        }
        os << " (" << i << "," << j << ")";
    }
    return os.str();
}

}  // namespace

SupportViolation::SupportViolation(std::vector<std::pair<std::size_t, std::size_t>> cells)
    : Error(describe_cells(cells)), cells_(std::move(cells))
{
}

const char* to_string(ModKind kind)
{
    switch (kind) {
    case ModKind::prime: return "prime";
    case ModKind::prime_power: return "prime-power";
    case ModKind::odd_composite: return "odd-composite";
    }
    return "?";
}

u64 gcd(u64 a, u64 b) noexcept
{
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) noexcept
{
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) noexcept
{
    u64 r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Integer k-th root, floor.
u64 iroot(u64 m, unsigned k)
{
    auto r = static_cast<u64>(std::pow(static_cast<long double>(m), 1.0L / k));
    auto pow_le = [&](u64 base) {
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= base;
            if (acc > m) return false;
        }
        return true;
    };
    while (r > 0 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

}  // namespace

bool is_prime(u64 n) noexcept
{
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<u64> primes_in(u64 lo, u64 hi)
{
    std::vector<u64> out;
    if (hi < 2 || lo > hi) return out;
    std::vector<bool> composite(hi + 1, false);
    for (u64 i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (u64 i = std::max<u64>(lo, 2); i <= hi; ++i) {
        if (!composite[i]) out.push_back(i);
    }
    return out;
}

u64 checked_pow(u64 p, unsigned k)
{
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= p;
        if (acc > static_cast<u128>(std::numeric_limits<i64>::max())) {
            throw InvalidModulus("modulus " + std::to_string(p) + "^" + std::to_string(k) + " does not fit in 63 bits");
        }
    }
    return static_cast<u64>(acc);
}

ModCtx::ModCtx(u64 m, ModKind kind, u64 base, unsigned exponent)
    : m_(m), kind_(kind), base_(base), exponent_(exponent), small_(m < (1ULL << 32))
{
}

ModCtx ModCtx::prime(u64 p)
{
    if (p % 2 == 0 || !cglab::is_prime(p)) {
        throw InvalidModulus("expected an odd prime modulus, got " + std::to_string(p));
    }
    return {p, ModKind::prime, p, 1};
}

ModCtx ModCtx::prime_power(u64 p, unsigned k)
{
    if (k < 1 || k > 5) throw InvalidModulus("prime-power exponent must lie in 1..5, got " + std::to_string(k));
    if (p % 2 == 0 || !cglab::is_prime(p)) {
        throw InvalidModulus("expected an odd prime base, got " + std::to_string(p));
    }
    if (k == 1) return prime(p);
    return {checked_pow(p, k), ModKind::prime_power, p, k};
}

ModCtx ModCtx::odd_composite(u64 n)
{
    if (n < 9 || n % 2 == 0 || cglab::is_prime(n)) {
        throw InvalidModulus("expected an odd composite modulus, got " + std::to_string(n));
    }
    if (n > static_cast<u64>(std::numeric_limits<i64>::max())) throw InvalidModulus("modulus exceeds 63 bits");
    return {n, ModKind::odd_composite, 0, 0};
}

ModCtx ModCtx::classify(u64 m)
{
    if (m < 3 || m % 2 == 0) throw InvalidModulus("modulus must be odd and >= 3, got " + std::to_string(m));
    if (cglab::is_prime(m)) return prime(m);
    for (unsigned k = 2; k <= 5; ++k) {
        u64 r = iroot(m, k);
        if (r >= 3 && checked_pow(r, k) == m && cglab::is_prime(r)) return prime_power(r, k);
    }
    return odd_composite(m);
}

u64 ModCtx::reduce(i64 x) const noexcept
{
    if (x >= 0) return static_cast<u64>(x) % m_;
    // -(x+1) avoids overflow at INT64_MIN
    u64 r = (static_cast<u64>(-(x + 1)) % m_);
    return m_ - 1 - r;
}

u64 ModCtx::reduce(const BigInt& x) const
{
    BigInt r;
    BigInt m(static_cast<unsigned long>(m_));
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return static_cast<u64>(r.get_ui());
}

u64 ModCtx::pow(u64 a, u64 e) const noexcept
{
    u64 r = 1 % m_;
    a %= m_;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 ModCtx::inv(u64 a) const
{
    a %= m_;
    // extended Euclid on signed 128-bit to keep the Bezout coefficients exact
    __int128 old_r = a, r = m_;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw NonUnitError(a, m_, static_cast<u64>(old_r));
    __int128 res = old_s % static_cast<__int128>(m_);
    if (res < 0) res += m_;
    return static_cast<u64>(res);
}

bool ModCtx::is_unit(u64 a) const noexcept { return gcd(a % m_, m_) == 1; }

i64 ModCtx::signed_rep(u64 a) const noexcept
{
    a %= m_;
    return a > m_ / 2 ? -static_cast<i64>(m_ - a) : static_cast<i64>(a);
}

std::string ModCtx::describe() const
{
    std::string out = std::to_string(m_) + " (" + to_string(kind_);
    if (kind_ == ModKind::prime_power) out += " " + std::to_string(base_) + "^" + std::to_string(exponent_);
    return out + ")";
}

void Residue::check_same(const Residue& o) const
{
    if (!(ctx_ == o.ctx_)) {
        throw InvalidModulus("mixed moduli " + std::to_string(ctx_.modulus()) + " and " +
                             std::to_string(o.ctx_.modulus()));
    }
}

Residue Residue::operator+(const Residue& o) const
{
    check_same(o);
    return {ctx_.add(v_, o.v_), ctx_};
}

Residue Residue::operator-(const Residue& o) const
{
    check_same(o);
    return {ctx_.sub(v_, o.v_), ctx_};
}

Residue Residue::operator*(const Residue& o) const
{
    check_same(o);
    return {ctx_.mul(v_, o.v_), ctx_};
}

Residue inv(const Residue& a) { return {a.ctx().inv(a.value()), a.ctx()}; }

Residue pow_mod(const Residue& a, u64 e) { return {a.ctx().pow(a.value(), e), a.ctx()}; }

namespace {

void require_odd_prime(u64 p)
{
    if (p % 2 == 0 || !is_prime(p)) {
        throw InvalidModulus("Legendre symbol needs an odd prime, got " + std::to_string(p));
    }
}

int euler_criterion(u64 a, u64 p)
{
    if (a == 0) return 0;
    u64 r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

}  // namespace

int legendre(i64 a, u64 p)
{
    require_odd_prime(p);
    i64 r = a % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    return euler_criterion(static_cast<u64>(r), p);
}

int legendre(const BigInt& a, u64 p)
{
    require_odd_prime(p);
    BigInt r;
    BigInt m(static_cast<unsigned long>(p));
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return euler_criterion(r.get_ui(), p);
}

int jacobi(i64 a, u64 n)
{
    if (n == 0 || n % 2 == 0) throw InvalidModulus("Jacobi symbol needs an odd positive n, got " + std::to_string(n));
    i64 r = a % static_cast<i64>(n);
    if (r < 0) r += static_cast<i64>(n);
    u64 x = static_cast<u64>(r);
    u64 m = n;
    int t = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            u64 m8 = m % 8;
            if (m8 == 3 || m8 == 5) t = -t;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3) t = -t;
        x %= m;
    }
    return m == 1 ? t : 0;
}

Residue double_factorial_mod(u64 n, const ModCtx& ctx)
{
    u64 acc = 1 % ctx.modulus();
    for (u64 k = n; k >= 2; k -= 2) acc = ctx.mul(acc, ctx.reduce_u(k));
    return {acc, ctx};
}

Residue harmonic2_mod(u64 p)
{
    auto ctx = ModCtx::prime(p);
    u64 acc = 0;
    for (u64 i = 1; i < p; ++i) {
        u64 x = ctx.inv(i);
        acc = ctx.add(acc, ctx.mul(x, x));
    }
    return {acc, ctx};
}

Valuation padic_valuation(const BigInt& x, u64 p, unsigned cap)
{
    if (p % 2 == 0 || !is_prime(p)) throw InvalidModulus("valuation needs an odd prime, got " + std::to_string(p));
    BigInt modulus;
    BigInt base(static_cast<unsigned long>(p));
    mpz_pow_ui(modulus.get_mpz_t(), base.get_mpz_t(), cap);
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());

    Valuation out;
    if (r == 0) {
        out.status = Valuation::Status::inconclusive;
        out.v = cap;
        return out;
    }
    unsigned v = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
        ++v;
    }
    out.status = Valuation::Status::exact;
    out.v = v;
    out.unit_mod_p = mpz_fdiv_ui(r.get_mpz_t(), p);
    return out;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace cglab
