#pragma once

#include "tauforge/rational.hpp"
#include "tauforge/series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tauforge {

// Sparse multivariate power series over Rational, truncated at a stated
// total degree.  No zero coefficients are stored; every stored exponent
// vector has length n_vars and total degree <= max_degree.
class MultiSeries {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    MultiSeries(int n_vars, int max_degree) : n_vars_(n_vars), max_degree_(max_degree) {
        if (n_vars < 0 || max_degree < 0)
            throw std::invalid_argument("bad MultiSeries shape");
    }

    static MultiSeries constant(int n_vars, int max_degree, const Rational& c) {
        MultiSeries s(n_vars, max_degree);
        s.add_term(Exponents(n_vars, 0), c);
        return s;
    }

    // Embed a univariate series as a series in variable `var`.
    static MultiSeries lift(const Series1& s, int var, int n_vars, int max_degree);

    int n_vars() const { return n_vars_; }
    int max_degree() const { return max_degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Accumulates c into the monomial; silently drops terms beyond the
    // truncation degree and erases coefficients that cancel to zero.
    void add_term(const Exponents& e, const Rational& c);

    MultiSeries truncated(int max_degree) const;

private:
    int n_vars_;
    int max_degree_;
    TermMap terms_;
};

int total_degree(const MultiSeries::Exponents& e);

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const Rational& c, const MultiSeries& a);

// Product truncated to the minimum of the two total-degree bounds.
MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b);

// x_var d/dx_var.
MultiSeries series_nabla(const MultiSeries& a, int var);

// Plain partial derivative d/dx_var.
MultiSeries partial_derivative(const MultiSeries& a, int var);

// exp(a) for a with zero constant term.
MultiSeries series_exp(const MultiSeries& a);

// 1/a for a with nonzero constant term.
MultiSeries unit_inverse(const MultiSeries& a);

// Substitute x_src := x_dst (exponents merge; total degree is preserved).
MultiSeries substitute_var(const MultiSeries& a, int src, int dst);

// Multiply by x_var^amount (terms pushed past the truncation are dropped).
MultiSeries shift_var(const MultiSeries& a, int var, int amount);

// Re-index variables: result has new_n variables and exponent vectors
// e'[var_map[i]] = e[i].  var_map entries must be distinct.
MultiSeries remap_vars(const MultiSeries& a, int new_n, const std::vector<int>& var_map);

// Exact division by (x_i - x_j).  The dividend must vanish under
// x_i := x_j up to its truncation degree; otherwise a domain_error is
// thrown.  The quotient is exact to total degree max_degree - 1.
MultiSeries divide_by_var_difference(const MultiSeries& a, int i, int j);

// First (lexicographically smallest) exponent vector of total degree
// <= window where the two series differ, with both coefficients.
std::optional<std::tuple<MultiSeries::Exponents, Rational, Rational>>
first_difference(const MultiSeries& a, const MultiSeries& b, int window);

std::string exponents_to_string(const MultiSeries::Exponents& e);

}  // namespace tauforge
