#pragma once

#include "tauforge/rational.hpp"

#include <vector>

namespace tauforge {

// Univariate formal power series over Rational, truncated at a stated
// order N: coefficients of x^0..x^N are exact, nothing is claimed above.
// Operations on operands of different orders truncate to the minimum.
// Values are immutable once built up; all operations return new series.
class Series1 {
public:
    explicit Series1(int order) : coeff_(order + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }

    static Series1 constant(int order, const Rational& c) {
        Series1 s(order);
        s.coeff_[0] = c;
        return s;
    }

    static Series1 identity(int order) {  // the series x
        Series1 s(order);
        if (order >= 1) s.coeff_[1] = 1;
        return s;
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Rational& operator[](int m) const { return coeff_.at(m); }

    void set(int m, const Rational& c) { coeff_.at(m) = c; }

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (c != 0) return false;
        return true;
    }

    Series1 truncated(int order) const {
        Series1 r(std::min(order, this->order()));
        for (int m = 0; m <= r.order(); ++m) r.coeff_[m] = coeff_[m];
        return r;
    }

private:
    std::vector<Rational> coeff_;
};

Series1 operator+(const Series1& a, const Series1& b);
Series1 operator-(const Series1& a, const Series1& b);
Series1 operator*(const Rational& c, const Series1& a);

Series1 series_mul(const Series1& a, const Series1& b);

// x d/dx: multiplies the coefficient of x^m by m.
Series1 series_nabla(const Series1& a);

// exp(a) for a with zero constant term, via the derivative recurrence.
Series1 series_exp(const Series1& a);

// a(b(x)) for b with zero constant term.
Series1 series_compose(const Series1& a, const Series1& b);

// 1/a for a with nonzero constant term.
Series1 series_inverse(const Series1& a);

// For a polynomial p (a series whose order bounds its degree), the exact
// expansion of p(1+u) as a polynomial in u.  Used to re-center polynomials
// in y at y = 1 before composing with series that vanish at 0.
Series1 poly_recenter_at_one(const Series1& p);

}  // namespace tauforge
