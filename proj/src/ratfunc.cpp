#include "hamcheck/ratfunc.hpp"

#include "hamcheck/errors.hpp"

namespace hamcheck {

RationalFunction RationalFunction::constant(std::size_t nvars, const Rational& c) {
    RationalFunction rf(nvars);
    rf.num_ = Polynomial::constant(nvars, c);
    return rf;
}

RationalFunction RationalFunction::variable(std::size_t nvars, int var) {
    RationalFunction rf(nvars);
    rf.num_ = Polynomial::variable(nvars, var);
    return rf;
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
    RationalFunction rf(p.nvars());
    rf.num_ = std::move(p);
    return rf;
}

RationalFunction RationalFunction::quotient(Polynomial p, Polynomial q) {
    if (q.is_zero()) throw ZeroDenominator();
    return reduced(std::move(p), std::move(q));
}

RationalFunction RationalFunction::reduced(Polynomial p, Polynomial q) {
    const std::size_t nv = p.nvars();
    if (p.is_zero()) {
        RationalFunction rf(nv);
        return rf;
    }
    if (!q.is_constant()) {
        Polynomial g = poly_gcd(p, q);
        if (!g.is_one()) {
            p = p.divide_exact(g);
            q = q.divide_exact(g);
        }
    }
    Rational u = q.unit_part();
    RationalFunction rf(nv);
    rf.num_ = p / u;
    rf.den_ = q / u;
    return rf;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction rf(nvars());
    rf.num_ = -num_;
    rf.den_ = den_;
    return rf;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return reduced(num_ + o.num_, den_);
    // Henrici: split off gcd(b, d) before cross-multiplying.
    Polynomial g = poly_gcd(den_, o.den_);
    if (g.is_one())
        return reduced(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Polynomial b1 = den_.divide_exact(g);
    Polynomial d1 = o.den_.divide_exact(g);
    return reduced(num_ * d1 + o.num_ * b1, b1 * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction(nvars());
    // Cross-cancellation keeps intermediate products reduced.
    Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
    Polynomial g1 = poly_gcd(a, d);
    if (!g1.is_one()) {
        a = a.divide_exact(g1);
        d = d.divide_exact(g1);
    }
    Polynomial g2 = poly_gcd(c, b);
    if (!g2.is_one()) {
        c = c.divide_exact(g2);
        b = b.divide_exact(g2);
    }
    Polynomial q = b * d;
    Rational u = q.unit_part();
    RationalFunction rf(nvars());
    rf.num_ = (a * c) / u;
    rf.den_ = q / u;
    return rf;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw ZeroDenominator();
    RationalFunction inv(o.nvars());
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    Rational u = inv.den_.unit_part();
    inv.num_ = inv.num_ / u;
    inv.den_ = inv.den_ / u;
    return *this * inv;
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return constant(nvars(), 1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw ZeroDenominator();
    RationalFunction rf(nvars());
    rf.num_ = num_.pow(static_cast<unsigned>(k));
    rf.den_ = den_.pow(static_cast<unsigned>(k));
    if (invert) {
        std::swap(rf.num_, rf.den_);
        Rational u = rf.den_.unit_part();
        rf.num_ = rf.num_ / u;
        rf.den_ = rf.den_ / u;
    }
    return rf;  // powers of a reduced fraction stay reduced
}

RationalFunction RationalFunction::derivative(int var) const {
    if (!num_.depends_on(var) && !den_.depends_on(var))
        return RationalFunction(nvars());
    if (den_.is_one()) return from_polynomial(num_.derivative(var));
    // (n/d)' = (n'*(d/g) - n*(d'/g)) / (d*(d/g))  with  g = gcd(d, d').
    Polynomial dprime = den_.derivative(var);
    Polynomial g = poly_gcd(den_, dprime);
    Polynomial d_red = den_.divide_exact(g);
    Polynomial top = num_.derivative(var) * d_red - num_ * dprime.divide_exact(g);
    return reduced(std::move(top), den_ * d_red);
}

std::optional<Rational> RationalFunction::evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) return std::nullopt;
    return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::widen(std::size_t new_nvars) const {
    RationalFunction rf(new_nvars);
    rf.num_ = num_.widen(new_nvars);
    rf.den_ = den_.widen(new_nvars);
    return rf;
}

std::string RationalFunction::str(const std::function<std::string(int)>& var_name) const {
    if (den_.is_one()) return num_.str(var_name);
    return "(" + num_.str(var_name) + ")/(" + den_.str(var_name) + ")";
}

}  // namespace hamcheck
