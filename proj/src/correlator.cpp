#include "tauforge/intersection.hpp"

#include <algorithm>
#include <numeric>

namespace tauforge {

namespace {

// (2k+1)!!
Integer odf(int k) { return odd_double_factorial(k + 1); }

}  // namespace

Rational CorrelatorTable::tau(int genus, std::vector<int> b) {
    if (genus < 0) return 0;
    for (int idx : b)
        if (idx < 0) return 0;
    const int n = static_cast<int>(b.size());
    if (2 * genus - 2 + n <= 0) return 0;
    std::sort(b.begin(), b.end());
    const int dim = 3 * genus - 3 + n;
    if (std::accumulate(b.begin(), b.end(), 0) != dim) return 0;
    return cached_or_compute({genus, std::move(b)});
}

Rational CorrelatorTable::cached_or_compute(CorrelatorKey key) {
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Rational v = compute(key);
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), v);
    return v;
}

Rational CorrelatorTable::compute(const CorrelatorKey& key) {
    const int g = key.genus;
    const auto& b = key.indices;
    const int n = static_cast<int>(b.size());

    if (g == 0 && n == 3) return 1;                    // <tau_0^3>_0
    if (g == 1 && n == 1 && b[0] == 1) return Rational(1, 24);  // <tau_1>_1

    const int pivot = b.back();  // largest index; every term below shrinks 2g-2+n
    std::vector<int> rest(b.begin(), b.end() - 1);
    const Rational norm(1, odf(pivot));

    Rational sum = 0;

    for (int l = 0; l < n - 1; ++l) {
        const int merged = pivot + rest[l] - 1;
        if (merged < 0) continue;
        std::vector<int> nb;
        nb.reserve(n - 1);
        for (int k = 0; k < n - 1; ++k)
            if (k != l) nb.push_back(rest[k]);
        nb.push_back(merged);
        sum += Rational(2 * rest[l] + 1) * odf(merged) / (odf(pivot) * odf(rest[l])) *
               tau(g, std::move(nb));
    }

    const Rational half(1, 2);
    for (int a = 0; a <= pivot - 2; ++a) {
        const int c = pivot - 2 - a;
        std::vector<int> nb = rest;
        nb.push_back(a);
        nb.push_back(c);
        sum += half * odf(a) * odf(c) * norm * tau(g - 1, std::move(nb));
    }

    const int m = n - 1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> xs, ys;
        for (int t = 0; t < m; ++t)
            (mask >> t & 1u ? xs : ys).push_back(rest[t]);
        for (int a = 0; a <= pivot - 2; ++a) {
            const int c = pivot - 2 - a;
            for (int g1 = 0; g1 <= g; ++g1) {
                std::vector<int> left = xs;
                left.push_back(a);
                Rational t1 = tau(g1, std::move(left));
                if (t1 == 0) continue;
                std::vector<int> right = ys;
                right.push_back(c);
                sum += half * odf(a) * odf(c) * norm * t1 * tau(g - g1, std::move(right));
            }
        }
    }
    return sum;
}

size_t CorrelatorTable::size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void CorrelatorTable::clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
}

std::map<CorrelatorKey, Rational> CorrelatorTable::snapshot() const {
    std::shared_lock lock(mutex_);
    return memo_;
}

std::vector<std::vector<int>> gate_valid_keys(int genus, int n) {
    if (genus < 0 || n < 1 || 2 * genus - 2 + n <= 0) return {};
    return sorted_index_vectors(3 * genus - 3 + n, n);
}

}  // namespace tauforge
