#ifndef HAMCHECK_RATFUNC_HPP
#define HAMCHECK_RATFUNC_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "hamcheck/polynomial.hpp"

namespace hamcheck {

// Reduced rational function: the canonical form of an Expression.
// Invariants: gcd(num, den) is a unit; den is unit-normal (coprime integer
// coefficients, positive leading coefficient under grlex); zero is 0/1.
// Two expressions equal as rational functions have identical num/den pairs.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(std::size_t nvars)
        : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}
    static RationalFunction constant(std::size_t nvars, const Rational& c);
    static RationalFunction variable(std::size_t nvars, int var);
    static RationalFunction from_polynomial(Polynomial p);
    // Reduces p/q; throws ZeroDenominator if q is the zero polynomial.
    static RationalFunction quotient(Polynomial p, Polynomial q);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    std::size_t nvars() const { return den_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const { return num_.constant_value(); }
    bool depends_on(int var) const {
        return num_.depends_on(var) || den_.depends_on(var);
    }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction pow(long e) const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative(int var) const;

    // Exact evaluation; nullopt at a pole of the *reduced* form.
    std::optional<Rational> evaluate(std::span<const Rational> point) const;

    RationalFunction widen(std::size_t new_nvars) const;

    std::string str(const std::function<std::string(int)>& var_name) const;

private:
    static RationalFunction reduced(Polynomial p, Polynomial q);
    Polynomial num_{0};
    Polynomial den_ = Polynomial::constant(0, 1);
};

}  // namespace hamcheck

#endif
