#include "hamcheck/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hamcheck/errors.hpp"

namespace hamcheck {

int grlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0u), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, int var, unsigned exp) {
    if (var < 0 || static_cast<std::size_t>(var) >= nvars)
        throw Error("variable index out of range");
    Polynomial p(nvars);
    if (exp == 0) return constant(nvars, 1);
    Monomial m(nvars, 0u);
    m[static_cast<std::size_t>(var)] = exp;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, TermMap terms) {
    Polynomial p(nvars);
    for (auto& [m, c] : terms) {
        if (m.size() != nvars) throw Error("monomial width mismatch");
        if (c != 0) p.terms_.emplace(m, c);
    }
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned t = 0;
        for (unsigned e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

unsigned Polynomial::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(var)]);
    return d;
}

bool Polynomial::depends_on(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[static_cast<std::size_t>(var)] > 0) return true;
    return false;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    Polynomial out(nvars_);
    if (terms_.empty() || o.terms_.empty()) return out;
    Monomial m(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::operator/(const Rational& c) const {
    if (c == 0) throw ZeroDenominator();
    return *this * (Rational(1) / c);
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial out(nvars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Monomial d = m;
        d[v] -= 1;
        out.add_term(d, c * Rational(m[v]));
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw Error("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] > 0) t *= rational_pow(point[i], static_cast<long>(m[i]));
        }
        acc += t;
    }
    return acc;
}

Monomial Polynomial::monomial_content() const {
    Monomial out(nvars_, 0u);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            out = m;
            first = false;
        } else {
            for (std::size_t i = 0; i < nvars_; ++i) out[i] = std::min(out[i], m[i]);
        }
        if (std::all_of(out.begin(), out.end(), [](unsigned e) { return e == 0; })) break;
    }
    return out;
}

Polynomial Polynomial::shift_down(const Monomial& m) const {
    Polynomial out(nvars_);
    for (const auto& [mon, c] : terms_) {
        Monomial d(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (mon[i] < m[i]) throw Error("monomial does not divide polynomial");
            d[i] = mon[i] - m[i];
        }
        out.terms_.emplace(std::move(d), c);
    }
    return out;
}

Polynomial Polynomial::shift_up(const Monomial& m) const {
    Polynomial out(nvars_);
    for (const auto& [mon, c] : terms_) {
        Monomial d(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) d[i] = mon[i] + m[i];
        out.terms_.emplace(std::move(d), c);
    }
    return out;
}

Rational Polynomial::unit_part() const {
    if (terms_.empty()) return Rational(1);
    Integer num_gcd(0);
    Integer den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational u(num_gcd, den_lcm);
    u.canonicalize();
    if (leading_coefficient() < 0) u = -u;
    return u;
}

Polynomial Polynomial::widen(std::size_t new_nvars) const {
    if (new_nvars < nvars_) throw Error("cannot narrow a polynomial");
    Polynomial out(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial w(new_nvars, 0u);
        std::copy(m.begin(), m.end(), w.begin());
        out.terms_.emplace(std::move(w), c);
    }
    return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (nvars_ != divisor.nvars_) throw Error("polynomial arity mismatch");
    if (divisor.is_zero()) throw ZeroDenominator();
    if (divisor.is_constant()) return *this / divisor.constant_value();
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    const Monomial& dlead = divisor.leading_monomial();
    const Rational& dcoef = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& rlead = rem.leading_monomial();
        Monomial q(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rlead[i] < dlead[i]) throw Error("inexact polynomial division");
            q[i] = rlead[i] - dlead[i];
        }
        Rational qc = rem.leading_coefficient() / dcoef;
        Polynomial qterm(nvars_);
        qterm.terms_.emplace(std::move(q), qc);
        quot = quot + qterm;
        rem = rem - qterm * divisor;
    }
    return quot;
}

std::string Polynomial::str(const std::function<std::string(int)>& var_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const Monomial& m = it->first;
        bool has_vars = std::any_of(m.begin(), m.end(), [](unsigned e) { return e > 0; });
        if (!has_vars) {
            os << to_string(c);
            continue;
        }
        bool need_star = false;
        if (c != 1) {
            os << to_string(c);
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << var_name(static_cast<int>(i));
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

// Univariate view of a polynomial in a chosen main variable: exponent of the
// main variable -> coefficient polynomial (main-variable-free).
using UniPoly = std::map<unsigned, Polynomial>;

UniPoly to_univariate(const Polynomial& p, int main) {
    UniPoly out;
    const auto v = static_cast<std::size_t>(main);
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        unsigned e = rest[v];
        rest[v] = 0;
        auto [it, inserted] = out.emplace(e, Polynomial(p.nvars()));
        Polynomial term = Polynomial::from_terms(p.nvars(), {{rest, c}});
        it->second = it->second + term;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

Polynomial from_univariate(const UniPoly& u, int main, std::size_t nvars) {
    Polynomial out(nvars);
    for (const auto& [e, coef] : u) {
        out = out + coef * Polynomial::variable(nvars, main, e);
    }
    return out;
}

unsigned uni_degree(const UniPoly& u) { return u.empty() ? 0u : u.rbegin()->first; }

const Polynomial& uni_lead(const UniPoly& u) { return u.rbegin()->second; }

UniPoly uni_scale(const UniPoly& u, const Polynomial& s) {
    UniPoly out;
    for (const auto& [e, c] : u) {
        Polynomial p = c * s;
        if (!p.is_zero()) out.emplace(e, std::move(p));
    }
    return out;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly out = a;
    for (const auto& [e, c] : b) {
        auto it = out.find(e);
        if (it == out.end()) {
            out.emplace(e, -c);
        } else {
            it->second = it->second - c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

UniPoly uni_shift(const UniPoly& u, unsigned k) {
    UniPoly out;
    for (const auto& [e, c] : u) out.emplace(e + k, c);
    return out;
}

UniPoly uni_divide_coeffs(const UniPoly& u, const Polynomial& d) {
    UniPoly out;
    for (const auto& [e, c] : u) out.emplace(e, c.divide_exact(d));
    return out;
}

// Pseudo-remainder of a by b in the main variable:
// lc(b)^(deg a - deg b + 1) * a = q*b + prem(a,b).
UniPoly uni_prem(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    const unsigned db = uni_degree(b);
    const Polynomial& lb = uni_lead(b);
    long e = static_cast<long>(uni_degree(a)) - static_cast<long>(db) + 1;
    while (!r.empty() && uni_degree(r) >= db) {
        UniPoly s = uni_shift(uni_scale(b, uni_lead(r)), uni_degree(r) - db);
        r = uni_sub(uni_scale(r, lb), s);
        --e;
    }
    for (; e > 0; --e) r = uni_scale(r, lb);
    return r;
}

Polynomial gcd_of_coefficients(const UniPoly& u) {
    Polynomial g;
    bool first = true;
    for (const auto& [e, c] : u) {
        if (first) {
            g = c;
            first = false;
        } else {
            g = poly_gcd(g, c);
        }
        if (g.is_constant()) break;
    }
    return g.unit_normal();
}

// Subresultant polynomial remainder sequence on primitive parts.
Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b, int main) {
    const std::size_t nv = a.nvars();
    UniPoly ua = to_univariate(a, main);
    UniPoly ub = to_univariate(b, main);
    Polynomial cont_a = gcd_of_coefficients(ua);
    Polynomial cont_b = gcd_of_coefficients(ub);
    Polynomial gamma = poly_gcd(cont_a, cont_b);
    UniPoly g1 = uni_divide_coeffs(ua, cont_a);
    UniPoly g2 = uni_divide_coeffs(ub, cont_b);
    if (uni_degree(g1) < uni_degree(g2)) std::swap(g1, g2);
    Polynomial g = Polynomial::constant(nv, 1);
    Polynomial h = Polynomial::constant(nv, 1);
    while (true) {
        unsigned delta = uni_degree(g1) - uni_degree(g2);
        UniPoly r = uni_prem(g1, g2);
        if (r.empty()) {
            Polynomial pp = from_univariate(
                uni_divide_coeffs(g2, gcd_of_coefficients(g2)), main, nv);
            return (gamma * pp).unit_normal();
        }
        if (uni_degree(r) == 0) return gamma.unit_normal();
        g1 = std::move(g2);
        Polynomial divisor = g * h.pow(delta);
        g2 = uni_divide_coeffs(r, divisor);
        g = uni_lead(g1);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = g.pow(delta).divide_exact(h.pow(delta - 1));
        }
    }
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw Error("polynomial arity mismatch");
    const std::size_t nv = a.nvars();
    if (a.is_zero()) return b.unit_normal();
    if (b.is_zero()) return a.unit_normal();

    Monomial ma = a.monomial_content();
    Monomial mb = b.monomial_content();
    Monomial mg(nv);
    for (std::size_t i = 0; i < nv; ++i) mg[i] = std::min(ma[i], mb[i]);
    Polynomial pa = a.shift_down(ma);
    Polynomial pb = b.shift_down(mb);
    Polynomial mono = Polynomial::from_terms(nv, {{mg, Rational(1)}});

    if (pa.is_constant() || pb.is_constant()) return mono;
    if (pa.unit_normal() == pb.unit_normal()) return mono * pa.unit_normal();

    // Main variable: present in both, minimizing the smaller degree.
    int main = -1;
    unsigned best = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        unsigned da = pa.degree_in(static_cast<int>(v));
        unsigned db = pb.degree_in(static_cast<int>(v));
        if (da == 0 || db == 0) continue;
        unsigned score = std::min(da, db);
        if (main < 0 || score < best) {
            main = static_cast<int>(v);
            best = score;
        }
    }
    if (main < 0) return mono;  // no shared variable
    return mono * gcd_recursive(pa, pb, main);
}

}  // namespace hamcheck
