#include "hyplac/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hyplac {

unsigned totient(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> units_mod(unsigned n) {
    if (n <= 1) return {1};
    std::vector<unsigned> units;
    for (unsigned h = 1; h < n; ++h)
        if (std::gcd(h, n) == 1) units.push_back(h);
    return units;
}

namespace {

std::vector<unsigned> divisors_ascending(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

Poly<Integer> x_pow_minus_one(unsigned n) {
    std::vector<Integer> c(n + 1, Integer(0));
    c[0] = -1;
    c[n] = 1;
    return Poly<Integer>(std::move(c));
}

}  // namespace

const Poly<Integer>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) fail(ErrorCode::InvalidInput, "cyclotomic polynomial needs N >= 1");
    static std::mutex mutex;
    static std::map<unsigned, Poly<Integer>> memo;
    std::lock_guard<std::mutex> lock(mutex);
    // Fill all divisors of n in ascending order; each Phi_d only needs the
    // Phi_e with e | d, e < d, which appear earlier in the walk.
    for (unsigned d : divisors_ascending(n)) {
        if (memo.count(d)) continue;
        Poly<Integer> p = x_pow_minus_one(d);
        for (unsigned e : divisors_ascending(d))
            if (e < d) p = Poly<Integer>::div_exact_monic(p, memo.at(e));
        memo.emplace(d, std::move(p));
    }
    return memo.at(n);
}

CyclotomicField::CyclotomicField(unsigned n) : order_(n) {
    if (n == 0) fail(ErrorCode::InvalidInput, "cyclotomic order must be positive");
    if (n > kMaxOrder)
        fail(ErrorCode::InvalidInput,
             "cyclotomic order " + std::to_string(n) + " exceeds the supported maximum " +
                 std::to_string(kMaxOrder));
    minimal_ = cyclotomic_polynomial(n);
    degree_ = static_cast<unsigned>(minimal_.degree());

    unsigned row_count = std::max(n, 2 * degree_ - 1);
    rows_.reserve(row_count);
    for (unsigned k = 0; k < row_count; ++k) {
        if (k < degree_) {
            std::vector<Integer> row(degree_, Integer(0));
            row[k] = 1;
            rows_.push_back(std::move(row));
            continue;
        }
        // x^k = x * x^{k-1}, then fold the top coefficient through
        // x^phi = -(Phi_0 + ... + Phi_{phi-1} x^{phi-1}).
        const std::vector<Integer>& prev = rows_[k - 1];
        std::vector<Integer> row(degree_, Integer(0));
        for (unsigned j = 0; j + 1 < degree_; ++j) row[j + 1] = prev[j];
        const Integer& top = prev[degree_ - 1];
        if (!hyplac::is_zero(top)) {
            for (unsigned j = 0; j < degree_; ++j) row[j] -= top * minimal_.coeff(j);
        }
        rows_.push_back(std::move(row));
    }
}

const CyclotomicField& CyclotomicField::of_order(unsigned n) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot.reset(new CyclotomicField(n));
    return *slot;
}

Cyclotomic Cyclotomic::zero(unsigned order) {
    const CyclotomicField& f = CyclotomicField::of_order(order);
    return Cyclotomic(&f, std::vector<Rational>(f.degree(), Rational(0)));
}

Cyclotomic Cyclotomic::one(unsigned order) {
    Cyclotomic c = zero(order);
    c.coeff_[0] = Rational(1);
    return c;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        if (!coeff_[i].is_zero()) return false;
    return true;
}

Cyclotomic Cyclotomic::promoted(unsigned m) const {
    unsigned n = order();
    if (m == n) return *this;
    if (m % n != 0) fail(ErrorCode::InvalidInput, "cyclotomic promotion needs N | M");
    const CyclotomicField& target = CyclotomicField::of_order(m);
    unsigned stride = m / n;
    std::vector<Rational> out(target.degree(), Rational(0));
    for (unsigned t = 0; t < coeff_.size(); ++t) {
        if (coeff_[t].is_zero()) continue;
        const std::vector<Integer>& row = target.power_row(t * stride);
        for (unsigned j = 0; j < target.degree(); ++j) {
            if (!hyplac::is_zero(row[j])) out[j] += coeff_[t] * Rational(row[j]);
        }
    }
    return Cyclotomic(&target, std::move(out));
}

namespace {
unsigned lcm_order(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm(static_cast<unsigned long>(a), static_cast<unsigned long>(b)));
}
}  // namespace

Cyclotomic Cyclotomic::reduce(const CyclotomicField& field, std::vector<Rational> conv) {
    unsigned phi = field.degree();
    std::vector<Rational> out(phi, Rational(0));
    for (std::size_t k = conv.size(); k-- > 0;) {
        if (conv[k].is_zero()) continue;
        if (k < phi) {
            out[k] += conv[k];
            continue;
        }
        const std::vector<Integer>& row = field.power_row(static_cast<unsigned>(k));
        for (unsigned j = 0; j < phi; ++j)
            if (!hyplac::is_zero(row[j])) out[j] += conv[k] * Rational(row[j]);
    }
    return Cyclotomic(&field, std::move(out));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = lcm_order(a.order(), b.order());
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) x.coeff_[i] += y.coeff_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = lcm_order(a.order(), b.order());
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    for (std::size_t i = 0; i < x.coeff_.size(); ++i) x.coeff_[i] -= y.coeff_[i];
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& c : x.coeff_) c = -c;
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = lcm_order(a.order(), b.order());
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    unsigned phi = static_cast<unsigned>(x.coeff_.size());
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (x.coeff_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (y.coeff_[j].is_zero()) continue;
            conv[i + j] += x.coeff_[i] * y.coeff_[j];
        }
    }
    return Cyclotomic::reduce(CyclotomicField::of_order(m), std::move(conv));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = lcm_order(a.order(), b.order());
    Cyclotomic x = a.promoted(m), y = b.promoted(m);
    return x.coeff_ == y.coeff_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero cyclotomic element");
    if (is_rational()) {
        Cyclotomic out = *this;
        out.coeff_[0] = Rational(1) / coeff_[0];
        return out;
    }
    // Extended Euclid against Phi_N in Q[x]: u*a + v*Phi = 1 => a^{-1} = u.
    Poly<Rational> a(coeff_);
    std::vector<Rational> phi_coeffs;
    for (const Integer& c : field_->minimal_polynomial().coefficients()) phi_coeffs.emplace_back(c);
    Poly<Rational> phi(std::move(phi_coeffs));
    auto [g, u, v] = poly_extended_gcd(a, phi);
    (void)v;
    if (g.degree() != 0) fail(ErrorCode::DivisionByZero, "element not invertible (gcd with Phi_N non-constant)");
    std::vector<Rational> out(field_->degree(), Rational(0));
    for (unsigned i = 0; i < field_->degree(); ++i) out[i] = u.coeff(i);
    return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::galois(unsigned h) const {
    unsigned n = order();
    h %= n;
    if (std::gcd(h, n) != 1)
        fail(ErrorCode::NotAUnit, "galois substitution needs gcd(h, N) = 1, got h=" + std::to_string(h) +
                                      ", N=" + std::to_string(n));
    std::vector<Rational> out(field_->degree(), Rational(0));
    for (unsigned t = 0; t < coeff_.size(); ++t) {
        if (coeff_[t].is_zero()) continue;
        const std::vector<Integer>& row =
            field_->power_row(static_cast<unsigned>((static_cast<unsigned long>(t) * h) % n));
        for (unsigned j = 0; j < field_->degree(); ++j)
            if (!hyplac::is_zero(row[j])) out[j] += coeff_[t] * Rational(row[j]);
    }
    return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclotomic base = *this;
    Cyclotomic acc = Cyclotomic::one(order());
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << coeff_[i].str();
        if (i >= 1) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " @" << order();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

Cyclotomic root_of_unity(long k, unsigned n) {
    if (n == 0) fail(ErrorCode::InvalidInput, "root of unity needs N >= 1");
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    const CyclotomicField& f = CyclotomicField::of_order(n);
    const std::vector<Integer>& row = f.power_row(static_cast<unsigned>(r));
    std::vector<Rational> out(f.degree(), Rational(0));
    for (unsigned j = 0; j < f.degree(); ++j) out[j] = Rational(row[j]);
    return Cyclotomic(&f, std::move(out));
}

Cyclotomic unit_circle_point(const Rational& q, unsigned order) {
    Rational r = q.frac();
    Integer den = r.denominator();
    if (!den.fits_uint_p()) fail(ErrorCode::InvalidInput, "denominator too large for cyclotomic embedding");
    unsigned n = static_cast<unsigned>(den.get_ui());
    unsigned target = order == 0 ? n : order;
    if (target % n != 0) fail(ErrorCode::InvalidInput, "requested order incompatible with exponent denominator");
    Integer num = r.numerator() * Integer(target / n);
    if (!num.fits_slong_p()) fail(ErrorCode::InvalidInput, "numerator too large for cyclotomic embedding");
    return root_of_unity(num.get_si(), target);
}

}  // namespace hyplac
