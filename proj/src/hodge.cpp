#include "tauforge/intersection.hpp"

#include "tauforge/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace tauforge {

namespace {

Integer odf(int k) { return odd_double_factorial(k + 1); }  // (2k+1)!!

Integer int_pow(int base, int exp) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return pw;
}

// Monomial symmetric polynomial m_b evaluated at the parts of mu: sum
// over distinct rearrangements c of b of prod mu_i^{c_i}.
Rational monomial_sym(const std::vector<int>& b_sorted, const Partition& mu) {
    std::vector<int> c = b_sorted;
    std::sort(c.begin(), c.end());
    Rational total = 0;
    do {
        Integer prod = 1;
        for (size_t i = 0; i < c.size(); ++i) prod *= int_pow(mu.parts()[i], c[i]);
        total += prod;
    } while (std::next_permutation(c.begin(), c.end()));
    return total;
}

// H * |Aut(mu)| * prod mu_i! / (r! * prod mu_i^{mu_i}): the value the
// Hodge-integral sum must equal for the partition mu.
Rational elsv_normalized_side(HurwitzTable& hurwitz, int genus, const Partition& mu) {
    const int r = branch_count(genus, mu);
    Rational v = hurwitz.value(genus, mu) * mu.aut_order();
    v /= Rational(factorial(r));
    for (int part : mu.parts())
        v *= Rational(factorial(part)) / Rational(int_pow(part, part));
    return v;
}

// Evaluation partitions of length n ordered by size, pairwise-distinct
// parts first (they keep the symmetrized system nondegenerate), then all
// remaining partitions as a fallback.
std::vector<Partition> evaluation_partitions(int n, int parts_max, size_t count) {
    std::vector<Partition> out;
    const int hi = parts_max > 0 ? parts_max : n + 24;
    std::vector<int> parts;
    std::function<void(int, int, bool)> rec = [&](int remaining, int max_part,
                                                  bool distinct) {
        if (out.size() >= count) return;
        if (static_cast<int>(parts.size()) == n) {
            if (remaining == 0) out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, distinct ? p - 1 : p, distinct);
            parts.pop_back();
            if (out.size() >= count) return;
        }
    };

    int distinct_cap = 0;
    for (int v = hi; v > hi - n; --v) distinct_cap += v;
    for (int total = n * (n + 1) / 2; total <= distinct_cap && out.size() < count; ++total)
        rec(total, hi, true);

    const int repeat_cap = parts_max > 0 ? n * parts_max : 3 * distinct_cap;
    for (int total = n; out.size() < count && total <= repeat_cap; ++total) {
        for (const auto& p : partitions_of_length(total, n)) {
            if (parts_max > 0 && p.parts()[0] > parts_max) continue;
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            if (out.size() >= count) break;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> sorted_index_vectors(int sum, int n) {
    std::vector<std::vector<int>> keys;
    if (sum < 0 || n < 1) return keys;
    for (const auto& p : partitions_of(sum)) {
        if (p.length() > n) continue;
        std::vector<int> b(n - p.length(), 0);
        b.insert(b.end(), p.parts().rbegin(), p.parts().rend());
        keys.push_back(std::move(b));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

Rational HodgeTable::value(const std::vector<int>& b_sorted, int k) const {
    const int n = static_cast<int>(b_sorted.size());
    if (n != n_points) throw std::domain_error("hodge table point count mismatch");
    if (k < 0 || k > genus) return 0;
    int sum = 0;
    for (int idx : b_sorted) {
        if (idx < 0) return 0;
        sum += idx;
    }
    if (sum + k != 3 * genus - 3 + n) return 0;
    auto it = entries.find({b_sorted, k});
    if (it == entries.end()) throw std::domain_error("missing keys");
    return it->second;
}

HodgeTable hodge_solve(HurwitzTable& hurwitz, int genus, int n, int parts_max) {
    if (genus < 0 || n < 1 || 2 * genus - 2 + n <= 0)
        throw std::domain_error("unstable (g,n)");
    const int dim = 3 * genus - 3 + n;

    std::vector<std::pair<std::vector<int>, int>> unknowns;
    for (int k = 0; k <= genus; ++k) {
        if (dim - k < 0) break;
        for (const auto& b : sorted_index_vectors(dim - k, n)) unknowns.emplace_back(b, k);
    }

    const size_t budget = 4 * unknowns.size() + 10;
    std::vector<Partition> candidates = evaluation_partitions(n, parts_max, budget);

    size_t rows = std::min(candidates.size(), unknowns.size() + 2);
    while (true) {
        if (rows < unknowns.size()) throw std::domain_error("insufficient partitions");
        Matrix a(rows, Vector(unknowns.size()));
        Vector rhs(rows);
        for (size_t r = 0; r < rows; ++r) {
            const Partition& mu = candidates[r];
            for (size_t u = 0; u < unknowns.size(); ++u) {
                Rational coeff = monomial_sym(unknowns[u].first, mu);
                if (unknowns[u].second % 2 == 1) coeff = -coeff;
                a[r][u] = coeff;
            }
            rhs[r] = elsv_normalized_side(hurwitz, genus, mu);
        }
        try {
            Vector x = exact_linear_solve(a, rhs);
            HodgeTable table;
            table.genus = genus;
            table.n_points = n;
            table.evaluation_points.assign(candidates.begin(), candidates.begin() + rows);
            for (size_t u = 0; u < unknowns.size(); ++u)
                table.entries[unknowns[u]] = x[u];
            return table;
        } catch (const std::domain_error& e) {
            if (std::string(e.what()) != "singular system") throw;
            if (rows >= candidates.size()) throw std::domain_error("insufficient partitions");
            rows = std::min(candidates.size(), rows + 2);
        }
    }
}

Rational elsv_eval(int genus, const Partition& mu, const HodgeTable& table) {
    if (mu.length() != table.n_points || genus != table.genus)
        throw std::domain_error("hodge table shape mismatch");
    const int r = branch_count(genus, mu);
    const int dim = 3 * genus - 3 + mu.length();

    Rational integral = 0;
    for (int k = 0; k <= genus; ++k) {
        if (dim - k < 0) break;
        for (const auto& b : sorted_index_vectors(dim - k, mu.length())) {
            Rational term = table.value(b, k) * monomial_sym(b, mu);
            integral += (k % 2 == 1) ? -term : term;
        }
    }

    Rational v = integral * factorial(r) / Rational(mu.aut_order());
    for (int part : mu.parts())
        v *= Rational(int_pow(part, part)) / Rational(factorial(part));
    return v;
}

void ElsvTauTable::add(const HodgeTable& table) {
    for (const auto& [key, value] : table.entries)
        if (key.second == 0) values_[{table.genus, key.first}] = value;
}

Rational ElsvTauTable::tau(int genus, std::vector<int> b) const {
    if (genus < 0) return 0;
    for (int idx : b)
        if (idx < 0) return 0;
    const int n = static_cast<int>(b.size());
    if (2 * genus - 2 + n <= 0) return 0;
    std::sort(b.begin(), b.end());
    if (std::accumulate(b.begin(), b.end(), 0) != 3 * genus - 3 + n) return 0;
    auto it = values_.find({genus, b});
    if (it == values_.end()) throw std::domain_error("missing table entries");
    return it->second;
}

CheckResult dvv_check(int genus, std::vector<int> b, const ElsvTauTable& taus) {
    std::sort(b.begin(), b.end());
    const int n = static_cast<int>(b.size());
    const int pivot = b.back();
    std::vector<int> rest(b.begin(), b.end() - 1);

    Integer rest_norm = 1;
    for (int idx : rest) rest_norm *= odf(idx);
    const Rational lhs = Rational(odf(pivot) * rest_norm) * taus.tau(genus, b);

    Rational rhs = 0;
    size_t live_terms = 0;
    const Rational half(1, 2);

    for (int l = 0; l < n - 1; ++l) {
        const int merged = pivot + rest[l] - 1;
        if (merged < 0) continue;
        ++live_terms;
        std::vector<int> nb;
        Integer norm = odf(merged);
        for (int k = 0; k < n - 1; ++k) {
            if (k == l) continue;
            nb.push_back(rest[k]);
            norm *= odf(rest[k]);
        }
        nb.push_back(merged);
        rhs += Rational(Integer(2 * rest[l] + 1) * norm) * taus.tau(genus, std::move(nb));
    }

    if (genus >= 1) {
        for (int a = 0; a <= pivot - 2; ++a) {
            const int c = pivot - 2 - a;
            ++live_terms;
            std::vector<int> nb = rest;
            nb.push_back(a);
            nb.push_back(c);
            rhs += half * Rational(odf(a) * odf(c) * rest_norm) *
                   taus.tau(genus - 1, std::move(nb));
        }
    }

    const int m = n - 1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> xs, ys;
        for (int t = 0; t < m; ++t)
            (mask >> t & 1u ? xs : ys).push_back(rest[t]);
        for (int a = 0; a <= pivot - 2; ++a) {
            const int c = pivot - 2 - a;
            for (int g1 = 0; g1 <= genus; ++g1) {
                ++live_terms;
                std::vector<int> left = xs;
                left.push_back(a);
                std::vector<int> right = ys;
                right.push_back(c);
                rhs += half * Rational(odf(a) * odf(c) * rest_norm) *
                       taus.tau(g1, std::move(left)) * taus.tau(genus - g1, std::move(right));
            }
        }
    }

    std::ostringstream name;
    name << "dvv g=" << genus << " b=(";
    for (int i = 0; i < n; ++i) name << (i ? "," : "") << b[i];
    name << ")";

    CheckResult res;
    if (live_terms == 0 && lhs != 0) {
        res.name = name.str() + " (not determined by recursion)";
        res.pass = true;
        res.flagged = true;
        return res;
    }
    res.name = name.str();
    res.pass = (lhs == rhs);
    if (!res.pass)
        res.counterexample =
            "lhs=" + rational_to_string(lhs) + " rhs=" + rational_to_string(rhs);
    return res;
}

}  // namespace tauforge
