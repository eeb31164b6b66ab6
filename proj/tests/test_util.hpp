#pragma once

#include "fdzeta/real.hpp"

namespace testutil {

inline fdz::Real R(const char* s, mpfr_prec_t prec = 320) {
    return fdz::Real::from_string(s, prec);
}

inline bool close(const fdz::Real& a, const fdz::Real& b, const char* tol) {
    return fdz::abs(a - b) < R(tol);
}

inline bool close(const fdz::Complex& a, const fdz::Complex& b, const char* tol) {
    return (a - b).abs() < R(tol);
}

inline bool close(const fdz::Complex& a, const fdz::Real& b, const char* tol) {
    return close(a, fdz::Complex(b), tol);
}

}  // namespace testutil
