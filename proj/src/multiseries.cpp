#include "tauforge/multiseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tauforge {

int total_degree(const MultiSeries::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

MultiSeries MultiSeries::lift(const Series1& s, int var, int n_vars, int max_degree) {
    MultiSeries r(n_vars, max_degree);
    if (var < 0 || var >= n_vars) throw std::invalid_argument("lift: bad variable");
    for (int m = 0; m <= s.order(); ++m) {
        if (s[m] == 0) continue;
        Exponents e(n_vars, 0);
        e[var] = m;
        r.add_term(e, s[m]);
    }
    return r;
}

void MultiSeries::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n_vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0 || total_degree(e) > max_degree_) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiSeries MultiSeries::truncated(int max_degree) const {
    MultiSeries r(n_vars_, std::min(max_degree, max_degree_));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

namespace {

void require_same_vars(const MultiSeries& a, const MultiSeries& b) {
    if (a.n_vars() != b.n_vars())
        throw std::invalid_argument("variable-count mismatch");
}

}  // namespace

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    require_same_vars(a, b);
    MultiSeries r(a.n_vars(), std::min(a.max_degree(), b.max_degree()));
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
    require_same_vars(a, b);
    MultiSeries r(a.n_vars(), std::min(a.max_degree(), b.max_degree()));
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

MultiSeries operator*(const Rational& c, const MultiSeries& a) {
    MultiSeries r(a.n_vars(), a.max_degree());
    for (const auto& [e, q] : a.terms()) r.add_term(e, c * q);
    return r;
}

MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b) {
    require_same_vars(a, b);
    MultiSeries r(a.n_vars(), std::min(a.max_degree(), b.max_degree()));
    MultiSeries::Exponents e(a.n_vars());
    for (const auto& [ea, ca] : a.terms()) {
        const int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) > r.max_degree()) continue;
            for (int v = 0; v < a.n_vars(); ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiSeries series_nabla(const MultiSeries& a, int var) {
    MultiSeries r(a.n_vars(), a.max_degree());
    for (const auto& [e, c] : a.terms())
        if (e[var] > 0) r.add_term(e, Rational(e[var]) * c);
    return r;
}

MultiSeries partial_derivative(const MultiSeries& a, int var) {
    MultiSeries r(a.n_vars(), a.max_degree());
    for (const auto& [e, c] : a.terms()) {
        if (e[var] == 0) continue;
        auto e2 = e;
        --e2[var];
        r.add_term(e2, Rational(e[var]) * c);
    }
    return r;
}

MultiSeries series_exp(const MultiSeries& a) {
    MultiSeries::Exponents zero(a.n_vars(), 0);
    if (a.coeff(zero) != 0)
        throw std::domain_error("series_exp needs zero constant term");
    // a^k vanishes below total degree k, so the sum is finite.
    MultiSeries r = MultiSeries::constant(a.n_vars(), a.max_degree(), 1);
    MultiSeries pw = MultiSeries::constant(a.n_vars(), a.max_degree(), 1);
    Rational kfact = 1;
    for (int k = 1; k <= a.max_degree(); ++k) {
        pw = series_mul(pw, a);
        if (pw.is_zero()) break;
        kfact *= k;
        r = r + (Rational(1) / kfact) * pw;
    }
    return r;
}

MultiSeries unit_inverse(const MultiSeries& a) {
    MultiSeries::Exponents zero(a.n_vars(), 0);
    Rational c0 = a.coeff(zero);
    if (c0 == 0) throw std::domain_error("unit_inverse needs a unit");
    // a = c0 (1 - e) with e of positive order: 1/a = (1/c0) sum e^k.
    MultiSeries e = (Rational(-1) / c0) * a;
    e.add_term(zero, 1);
    MultiSeries r = MultiSeries::constant(a.n_vars(), a.max_degree(), 1);
    MultiSeries pw = MultiSeries::constant(a.n_vars(), a.max_degree(), 1);
    for (int k = 1; k <= a.max_degree(); ++k) {
        pw = series_mul(pw, e);
        if (pw.is_zero()) break;
        r = r + pw;
    }
    return (Rational(1) / c0) * r;
}

MultiSeries substitute_var(const MultiSeries& a, int src, int dst) {
    if (src == dst) return a;
    MultiSeries r(a.n_vars(), a.max_degree());
    for (const auto& [e, c] : a.terms()) {
        auto e2 = e;
        e2[dst] += e2[src];
        e2[src] = 0;
        r.add_term(e2, c);
    }
    return r;
}

MultiSeries shift_var(const MultiSeries& a, int var, int amount) {
    MultiSeries r(a.n_vars(), a.max_degree());
    for (const auto& [e, c] : a.terms()) {
        auto e2 = e;
        e2[var] += amount;
        r.add_term(e2, c);
    }
    return r;
}

MultiSeries remap_vars(const MultiSeries& a, int new_n, const std::vector<int>& var_map) {
    if (static_cast<int>(var_map.size()) != a.n_vars())
        throw std::invalid_argument("remap_vars: map size mismatch");
    MultiSeries r(new_n, a.max_degree());
    MultiSeries::Exponents e2(new_n);
    for (const auto& [e, c] : a.terms()) {
        std::fill(e2.begin(), e2.end(), 0);
        for (int v = 0; v < a.n_vars(); ++v) {
            if (e[v] == 0) continue;
            if (var_map[v] < 0 || var_map[v] >= new_n)
                throw std::invalid_argument("remap_vars: bad target variable");
            e2[var_map[v]] += e[v];
        }
        r.add_term(e2, c);
    }
    return r;
}

MultiSeries divide_by_var_difference(const MultiSeries& a, int i, int j) {
    if (i == j) throw std::invalid_argument("divide_by_var_difference: i == j");
    if (!substitute_var(a, i, j).is_zero())
        throw std::domain_error("series not divisible by variable difference");

    // Synthetic division in x_i: with a = sum_k x_i^k a_k, the quotient
    // satisfies q_{k-1} = a_k + x_j q_k from the top power down.
    int kmax = 0;
    for (const auto& [e, c] : a.terms()) kmax = std::max(kmax, e[i]);
    if (kmax == 0) return MultiSeries(a.n_vars(), std::max(a.max_degree() - 1, 0));

    std::vector<MultiSeries> slices(kmax + 1, MultiSeries(a.n_vars(), a.max_degree()));
    for (const auto& [e, c] : a.terms()) {
        auto e2 = e;
        int k = e2[i];
        e2[i] = 0;
        slices[k].add_term(e2, c);
    }
    MultiSeries q(a.n_vars(), std::max(a.max_degree() - 1, 0));
    MultiSeries carry = slices[kmax];  // q_{kmax-1}
    for (int k = kmax - 1; k >= 0; --k) {
        for (const auto& [e, c] : carry.terms()) {
            auto e2 = e;
            e2[i] += k;
            q.add_term(e2, c);
        }
        if (k == 0) break;
        // next carry: q_{k-1} = a_k + x_j q_k
        MultiSeries shifted(a.n_vars(), a.max_degree());
        for (const auto& [e, c] : carry.terms()) {
            auto e2 = e;
            ++e2[j];
            shifted.add_term(e2, c);
        }
        carry = slices[k] + shifted;
    }
    return q;
}

std::optional<std::tuple<MultiSeries::Exponents, Rational, Rational>>
first_difference(const MultiSeries& a, const MultiSeries& b, int window) {
    std::map<MultiSeries::Exponents, std::pair<Rational, Rational>> joint;
    for (const auto& [e, c] : a.terms())
        if (total_degree(e) <= window) joint[e].first = c;
    for (const auto& [e, c] : b.terms())
        if (total_degree(e) <= window) joint[e].second = c;
    for (const auto& [e, cs] : joint)
        if (cs.first != cs.second) return std::make_tuple(e, cs.first, cs.second);
    return std::nullopt;
}

std::string exponents_to_string(const MultiSeries::Exponents& e) {
    std::ostringstream os;
    os << "[";
    for (size_t v = 0; v < e.size(); ++v) os << (v ? "," : "") << e[v];
    os << "]";
    return os.str();
}

}  // namespace tauforge
