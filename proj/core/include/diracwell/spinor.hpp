#pragma once

#include <cmath>
#include <complex>

namespace diracwell {

using Complex = std::complex<double>;

// Two-component spinor value (upper, lower) at a point.
struct Spinor {
    Complex upper{0.0, 0.0};
    Complex lower{0.0, 0.0};

    Spinor& operator+=(const Spinor& o) {
        upper += o.upper;
        lower += o.lower;
        return *this;
    }
    Spinor& operator-=(const Spinor& o) {
        upper -= o.upper;
        lower -= o.lower;
        return *this;
    }
    Spinor& operator*=(Complex c) {
        upper *= c;
        lower *= c;
        return *this;
    }

    friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
    friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
    friend Spinor operator*(Complex c, Spinor s) { return s *= c; }
    friend Spinor operator*(Spinor s, Complex c) { return s *= c; }

    // Euclidean norm sqrt(|upper|^2 + |lower|^2).
    double norm() const { return std::hypot(std::abs(upper), std::abs(lower)); }
};

// Largest component magnitude; the natural scale for relative comparisons.
inline double max_abs(const Spinor& s) {
    return std::max(std::abs(s.upper), std::abs(s.lower));
}

}  // namespace diracwell
