#include "precise.hpp"

#include <mpfr.h>

namespace dpsi::precise {

namespace {

// Minimal RAII holder; arithmetic goes through the mpfr_* calls directly.
class Real {
public:
    Real() { mpfr_init2(v_, kPrecisionBits); mpfr_set_ui(v_, 0, MPFR_RNDN); }
    explicit Real(unsigned long x) : Real() { mpfr_set_ui(v_, x, MPFR_RNDN); }
    explicit Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

void from_string(Real& r, const char* s) { mpfr_set_str(r.get(), s, 10, MPFR_RNDN); }

void log_of(Real& out, std::uint64_t x) {
    mpfr_set_ui(out.get(), x, MPFR_RNDN);
    mpfr_log(out.get(), out.get(), MPFR_RNDN);
}

// theta(p_n) at working precision.
void theta(Real& out, std::size_t n, const PrimeTable& table) {
    Real term;
    mpfr_set_ui(out.get(), 0, MPFR_RNDN);
    for (std::size_t k = 1; k <= n; ++k) {
        log_of(term, table.nth_prime(k));
        mpfr_add(out.get(), out.get(), term.get(), MPFR_RNDN);
    }
}

// log(1 - p^-t)
void log1m_inverse_power(Real& out, std::uint64_t p, int t) {
    mpfr_set_ui(out.get(), p, MPFR_RNDN);
    mpfr_pow_si(out.get(), out.get(), -t, MPFR_RNDN);
    mpfr_neg(out.get(), out.get(), MPFR_RNDN);
    mpfr_log1p(out.get(), out.get(), MPFR_RNDN);
}

void exp_gamma(Real& out) {
    mpfr_const_euler(out.get(), MPFR_RNDN);
    mpfr_exp(out.get(), out.get(), MPFR_RNDN);
}

void zeta(Real& out, int t) { mpfr_zeta_ui(out.get(), static_cast<unsigned long>(t), MPFR_RNDN); }

}  // namespace

double criterion_margin(int t, std::size_t n, const PrimeTable& table) {
    const auto p = table.nth_prime(n);
    Real th, lp, f, lhs, rhs, c;
    theta(th, n, table);
    mpfr_log(th.get(), th.get(), MPFR_RNDN);  // log log N_n
    log_of(lp, p);
    from_string(c, "1.1253");
    mpfr_mul(f.get(), lp.get(), th.get(), MPFR_RNDN);
    mpfr_div(f.get(), c.get(), f.get(), MPFR_RNDN);
    mpfr_add_ui(f.get(), f.get(), 1, MPFR_RNDN);
    mpfr_set_ui(lhs.get(), 2, MPFR_RNDN);
    mpfr_div_ui(lhs.get(), lhs.get(), p, MPFR_RNDN);
    mpfr_exp(lhs.get(), lhs.get(), MPFR_RNDN);
    mpfr_mul(lhs.get(), lhs.get(), f.get(), MPFR_RNDN);
    zeta(rhs, t);
    mpfr_sub(rhs.get(), rhs.get(), lhs.get(), MPFR_RNDN);
    return rhs.to_double();
}

double robmod_margin(std::size_t n, const PrimeTable& table) {
    const auto p = table.nth_prime(n);
    Real th, lp, rhs, c;
    theta(th, n, table);
    log_of(lp, p);
    from_string(c, "0.1253");
    mpfr_log(rhs.get(), th.get(), MPFR_RNDN);
    mpfr_div(c.get(), c.get(), lp.get(), MPFR_RNDN);
    mpfr_add(rhs.get(), rhs.get(), c.get(), MPFR_RNDN);
    mpfr_sub(rhs.get(), rhs.get(), lp.get(), MPFR_RNDN);
    return rhs.to_double();
}

double rs_margin(std::uint64_t x, const PrimeTable& table) {
    Real sum, term, lx, rhs, eg;
    for (const std::uint64_t p : table.primes()) {
        if (p > x) break;
        mpfr_set_ui(term.get(), p, MPFR_RNDN);
        mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
        mpfr_neg(term.get(), term.get(), MPFR_RNDN);
        mpfr_log1p(term.get(), term.get(), MPFR_RNDN);
        mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    mpfr_exp(sum.get(), sum.get(), MPFR_RNDN);
    log_of(lx, x);
    mpfr_ui_div(rhs.get(), 1, lx.get(), MPFR_RNDN);
    mpfr_add(rhs.get(), rhs.get(), lx.get(), MPFR_RNDN);
    exp_gamma(eg);
    mpfr_mul(rhs.get(), rhs.get(), eg.get(), MPFR_RNDN);
    mpfr_sub(rhs.get(), rhs.get(), sum.get(), MPFR_RNDN);
    return rhs.to_double();
}

double us_margin(int t, std::size_t n, const PrimeTable& table) {
    Real logtail, term, rhs;
    zeta(logtail, t);
    mpfr_log(logtail.get(), logtail.get(), MPFR_RNDN);
    for (std::size_t k = 1; k <= n; ++k) {
        log1m_inverse_power(term, table.nth_prime(k), t);
        mpfr_add(logtail.get(), logtail.get(), term.get(), MPFR_RNDN);
    }
    mpfr_exp(logtail.get(), logtail.get(), MPFR_RNDN);
    mpfr_set_ui(rhs.get(), 2, MPFR_RNDN);
    mpfr_div_ui(rhs.get(), rhs.get(), table.nth_prime(n), MPFR_RNDN);
    mpfr_exp(rhs.get(), rhs.get(), MPFR_RNDN);
    mpfr_sub(rhs.get(), rhs.get(), logtail.get(), MPFR_RNDN);
    return rhs.to_double();
}

double fonda_margin(int t, std::size_t n, const PrimeTable& table) {
    const auto p = table.nth_prime(n);
    Real ratio, a, b, th, lp, bound, c, z;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto q = table.nth_prime(k);
        log1m_inverse_power(a, q, t);
        log1m_inverse_power(b, q, 1);
        mpfr_sub(a.get(), a.get(), b.get(), MPFR_RNDN);
        mpfr_add(ratio.get(), ratio.get(), a.get(), MPFR_RNDN);
    }
    mpfr_exp(ratio.get(), ratio.get(), MPFR_RNDN);

    theta(th, n, table);
    mpfr_log(th.get(), th.get(), MPFR_RNDN);
    log_of(lp, p);
    from_string(c, "1.1253");
    mpfr_div(c.get(), c.get(), lp.get(), MPFR_RNDN);
    mpfr_add(bound.get(), th.get(), c.get(), MPFR_RNDN);
    mpfr_const_euler(a.get(), MPFR_RNDN);
    mpfr_set_ui(b.get(), 2, MPFR_RNDN);
    mpfr_div_ui(b.get(), b.get(), p, MPFR_RNDN);
    mpfr_add(a.get(), a.get(), b.get(), MPFR_RNDN);
    mpfr_exp(a.get(), a.get(), MPFR_RNDN);
    mpfr_mul(bound.get(), bound.get(), a.get(), MPFR_RNDN);
    zeta(z, t);
    mpfr_div(bound.get(), bound.get(), z.get(), MPFR_RNDN);
    mpfr_sub(bound.get(), bound.get(), ratio.get(), MPFR_RNDN);
    return bound.to_double();
}

double robin_margin(std::uint64_t n, const mpz_class& sigma) {
    Real thr, s;
    log_of(thr, n);
    mpfr_log(thr.get(), thr.get(), MPFR_RNDN);
    mpfr_mul_ui(thr.get(), thr.get(), n, MPFR_RNDN);
    exp_gamma(s);
    mpfr_mul(thr.get(), thr.get(), s.get(), MPFR_RNDN);
    mpfr_set_z(s.get(), sigma.get_mpz_t(), MPFR_RNDN);
    mpfr_sub(thr.get(), thr.get(), s.get(), MPFR_RNDN);
    return thr.to_double();
}

}  // namespace dpsi::precise
