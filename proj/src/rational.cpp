#include "hcs/rational.hpp"

#include <cctype>

#include "hcs/errors.hpp"

namespace hcs {

Rat pow2_inv(unsigned n) {
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), n);
    return Rat(1) / Rat(den);
}

Rat pow3_inv(unsigned n) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 3, n);
    return Rat(1) / Rat(den);
}

std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw ParseError("malformed rational: '" + s + "'");
        std::size_t start = part[0] == '-' ? 1 : 0;  // mpz rejects a '+' prefix
        if (start == part.size()) throw ParseError("malformed rational: '" + s + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("malformed rational: '" + s + "'");
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    check_int(num);
    if (slash == std::string::npos) return Rat(mpz_class(num));
    std::string den = s.substr(slash + 1);
    check_int(den);
    mpz_class d(den);
    if (d <= 0) throw ParseError("denominator must be positive: '" + s + "'");
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rat_to_fixed6(const Rat& q) {
    const bool neg = q < 0;
    Rat a = rat_abs(q);
    // scaled = a * 10^6 = n + rem/den with 0 <= rem < den
    mpz_class num = a.get_num() * 1000000;
    mpz_class den = a.get_den();
    mpz_class n, rem;
    mpz_fdiv_qr(n.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // round half to even on the exact remainder
    mpz_class twice = rem * 2;
    if (twice > den || (twice == den && mpz_odd_p(n.get_mpz_t()))) n += 1;
    mpz_class whole = n / 1000000;
    mpz_class frac = n % 1000000;
    std::string fs = frac.get_str();
    fs.insert(0, 6 - fs.size(), '0');
    std::string out = whole.get_str() + "." + fs;
    if (neg && (whole != 0 || frac != 0)) out.insert(0, 1, '-');
    return out;
}

}  // namespace hcs
