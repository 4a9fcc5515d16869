#ifndef HAMCHECK_POLYNOMIAL_HPP
#define HAMCHECK_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hamcheck/rational.hpp"

namespace hamcheck {

// Exponent vector; one slot per context variable.
using Monomial = std::vector<unsigned>;

// Graded-lexicographic order: total degree first, ties broken
// lexicographically with earlier-declared variables ranked higher.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) < 0;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// The term map never stores zero coefficients.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, int var, unsigned exp = 1);
    static Polynomial from_terms(std::size_t nvars, TermMap terms);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;
    bool is_one() const { return is_constant() && constant_value() == 1; }

    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;
    unsigned degree_in(int var) const;
    bool depends_on(int var) const;

    // Leading term under grlex (max element of the map).
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator/(const Rational& c) const;
    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned e) const;
    Polynomial derivative(int var) const;
    Rational evaluate(std::span<const Rational> point) const;

    // Map each term through a ring homomorphism given by images of the
    // variables; Value must support ring operations (used for lifting into
    // other contexts and for substitution).
    template <typename Value, typename VarImage, typename ConstImage>
    Value map_terms(const VarImage& var_image, const ConstImage& const_image) const;

    // Componentwise minimum of all exponent vectors (the monomial content);
    // zero polynomial yields all-zero.
    Monomial monomial_content() const;
    Polynomial shift_down(const Monomial& m) const;  // divide by monomial m
    Polynomial shift_up(const Monomial& m) const;    // multiply by monomial m

    // Rational c such that (*this)/c has coprime integer coefficients and
    // positive leading coefficient; zero polynomial gives 1.
    Rational unit_part() const;
    Polynomial unit_normal() const { return *this / unit_part(); }

    // Exact division; throws Error if the division leaves a remainder.
    Polynomial divide_exact(const Polynomial& divisor) const;

    // Extends the exponent vectors with trailing zero slots.
    Polynomial widen(std::size_t new_nvars) const;

    std::string str(const std::function<std::string(int)>& var_name) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::size_t nvars_;
    TermMap terms_;
    friend Polynomial poly_gcd(const Polynomial&, const Polynomial&);
};

// GCD, unit-normalized (coprime integer coefficients, positive leading
// coefficient).  Multivariate via recursion on a main variable with a
// subresultant polynomial remainder sequence.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

template <typename Value, typename VarImage, typename ConstImage>
Value Polynomial::map_terms(const VarImage& var_image,
                            const ConstImage& const_image) const {
    Value acc = const_image(Rational(0));
    for (const auto& [mon, coef] : terms_) {
        Value term = const_image(coef);
        for (std::size_t v = 0; v < mon.size(); ++v) {
            for (unsigned e = 0; e < mon[v]; ++e)
                term = term * var_image(static_cast<int>(v));
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace hamcheck

#endif
