#include "fdzeta/real.hpp"

#include <cstdlib>

namespace fdz {

std::string Real::to_decimal(long digits) const {
    if (digits < 1) throw DomainError("digits must be positive");
    if (!is_finite()) return mpfr_nan_p(x_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    if (is_zero()) return "0";

    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), x_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    // value = 0.mant * 10^e10
    std::string out;
    if (e10 > 0 && e10 <= digits) {
        out = mant.substr(0, static_cast<size_t>(e10));
        std::string frac = mant.substr(static_cast<size_t>(e10));
        if (!frac.empty()) out += "." + frac;
    } else if (e10 <= 0 && e10 > -5) {
        out = "0." + std::string(static_cast<size_t>(-e10), '0') + mant;
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        long sci = static_cast<long>(e10) - 1;
        out += "e" + std::string(sci >= 0 ? "+" : "-") + std::to_string(sci >= 0 ? sci : -sci);
    }
    return neg ? "-" + out : out;
}

}  // namespace fdz
