#include "tauforge/series.hpp"

#include <algorithm>

namespace tauforge {

Series1 operator+(const Series1& a, const Series1& b) {
    Series1 r(std::min(a.order(), b.order()));
    for (int m = 0; m <= r.order(); ++m) r.set(m, a[m] + b[m]);
    return r;
}

Series1 operator-(const Series1& a, const Series1& b) {
    Series1 r(std::min(a.order(), b.order()));
    for (int m = 0; m <= r.order(); ++m) r.set(m, a[m] - b[m]);
    return r;
}

Series1 operator*(const Rational& c, const Series1& a) {
    Series1 r(a.order());
    for (int m = 0; m <= r.order(); ++m) r.set(m, c * a[m]);
    return r;
}

Series1 series_mul(const Series1& a, const Series1& b) {
    Series1 r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (b[j] == 0) continue;
            r.set(i + j, r[i + j] + a[i] * b[j]);
        }
    }
    return r;
}

Series1 series_nabla(const Series1& a) {
    Series1 r(a.order());
    for (int m = 1; m <= r.order(); ++m) r.set(m, Rational(m) * a[m]);
    return r;
}

Series1 series_exp(const Series1& a) {
    if (a[0] != 0) throw std::domain_error("series_exp needs zero constant term");
    const int n = a.order();
    // E' = a'E termwise: m E_m = sum_{k=1..m} k a_k E_{m-k}.
    Series1 e(n);
    e.set(0, 1);
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int k = 1; k <= m; ++k) s += Rational(k) * a[k] * e[m - k];
        e.set(m, s / m);
    }
    return e;
}

Series1 series_compose(const Series1& a, const Series1& b) {
    if (b[0] != 0) throw std::domain_error("series_compose needs b(0) = 0");
    const int n = std::min(a.order(), b.order());
    // Horner from the top coefficient down.
    Series1 r = Series1::constant(n, a[a.order()]);
    for (int k = a.order() - 1; k >= 0; --k) {
        r = series_mul(r, b.truncated(n));
        r.set(0, r[0] + a[k]);
    }
    return r;
}

Series1 series_inverse(const Series1& a) {
    if (a[0] == 0) throw std::domain_error("series_inverse needs a unit");
    const int n = a.order();
    Series1 r(n);
    r.set(0, Rational(1) / a[0]);
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int k = 1; k <= m; ++k) s += a[k] * r[m - k];
        r.set(m, -s / a[0]);
    }
    return r;
}

Series1 poly_recenter_at_one(const Series1& p) {
    const int n = p.order();
    Series1 r(n);
    // p(1+u) = sum_j p_j (1+u)^j; collect via binomials.
    for (int j = 0; j <= n; ++j) {
        if (p[j] == 0) continue;
        for (int k = 0; k <= j; ++k) r.set(k, r[k] + p[j] * binomial(j, k));
    }
    return r;
}

}  // namespace tauforge
