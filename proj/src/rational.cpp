#include "hamcheck/rational.hpp"

#include <cstddef>

namespace hamcheck {

Rational rational_from_string(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0) throw InputError("bad numeric literal '" + text + "'");
        q.canonicalize();
        return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_digits = text.size() - dot - 1;
    if (digits.empty() || frac_digits == 0)
        throw InputError("bad numeric literal '" + text + "'");
    Integer num;
    if (num.set_str(digits, 10) != 0)
        throw InputError("bad numeric literal '" + text + "'");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10u, static_cast<unsigned long>(frac_digits));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace hamcheck
