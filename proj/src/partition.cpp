#include "tauforge/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tauforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.rbegin(), parts_.rend());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
    if (i < 1) throw std::invalid_argument("multiplicity index must be positive");
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Integer Partition::aut_order() const {
    Integer a = 1;
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        a *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return a;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

namespace {

// Distinct part values of mu, descending, with multiplicities.
std::vector<std::pair<int, int>> value_counts(const Partition& mu) {
    std::vector<std::pair<int, int>> vc;
    for (int p : mu.parts()) {
        if (!vc.empty() && vc.back().first == p)
            ++vc.back().second;
        else
            vc.emplace_back(p, 1);
    }
    return vc;
}

std::vector<int> remove_one(const std::vector<int>& parts, int value) {
    std::vector<int> r;
    bool removed = false;
    for (int p : parts) {
        if (!removed && p == value) {
            removed = true;
            continue;
        }
        r.push_back(p);
    }
    return r;
}

}  // namespace

std::vector<WeightedTarget> join_targets(const Partition& mu) {
    std::vector<WeightedTarget> out;
    auto vc = value_counts(mu);
    for (size_t i = 0; i < vc.size(); ++i) {
        for (size_t j = i; j < vc.size(); ++j) {
            const int a = vc[i].first, b = vc[j].first;
            if (i == j && vc[i].second < 2) continue;
            std::vector<int> rest = remove_one(remove_one(mu.parts(), a), b);
            rest.push_back(a + b);
            Partition nu(std::move(rest));
            Integer coeff = Integer(a + b) * nu.multiplicity(a + b);
            if (a == b) coeff /= 2;
            out.push_back({std::move(nu), std::move(coeff)});
        }
    }
    return out;
}

std::vector<WeightedTarget> cut_targets(const Partition& mu) {
    std::vector<WeightedTarget> out;
    for (const auto& vc : value_counts(mu)) {
        const int v = vc.first;
        for (int p = 1; 2 * p <= v; ++p) {
            const int q = v - p;
            std::vector<int> rest = remove_one(mu.parts(), v);
            rest.push_back(p);
            rest.push_back(q);
            Partition nu(std::move(rest));
            Integer coeff;
            if (p == q)
                coeff = Integer(p) * q * nu.multiplicity(p) * (nu.multiplicity(p) - 1) / 2;
            else
                coeff = Integer(p) * q * nu.multiplicity(p) * nu.multiplicity(q);
            out.push_back({std::move(nu), std::move(coeff)});
        }
    }
    return out;
}

std::vector<SplitTarget> split_targets(const Partition& mu) {
    std::vector<SplitTarget> out;
    for (const auto& vc : value_counts(mu)) {
        const int v = vc.first;
        if (v < 2) continue;
        auto rest_counts = value_counts(Partition(remove_one(mu.parts(), v)));
        for (int p = 1; p <= v - 1; ++p) {
            const int q = v - p;
            // Distribute the non-cut parts over the pair: one entry per
            // distinct sub-multiset.
            std::vector<int> pick(rest_counts.size(), 0);
            std::function<void(size_t)> rec = [&](size_t idx) {
                if (idx == rest_counts.size()) {
                    std::vector<int> first{p}, second{q};
                    for (size_t t = 0; t < rest_counts.size(); ++t) {
                        for (int c = 0; c < pick[t]; ++c) first.push_back(rest_counts[t].first);
                        for (int c = pick[t]; c < rest_counts[t].second; ++c)
                            second.push_back(rest_counts[t].first);
                    }
                    Partition nu1(std::move(first)), nu2(std::move(second));
                    Integer coeff =
                        Integer(p) * q * nu1.multiplicity(p) * nu2.multiplicity(q);
                    out.push_back({std::move(nu1), std::move(nu2), std::move(coeff)});
                    return;
                }
                for (pick[idx] = 0; pick[idx] <= rest_counts[idx].second; ++pick[idx])
                    rec(idx + 1);
            };
            rec(0);
        }
    }
    return out;
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

std::vector<Partition> partitions_of_length(int d, int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(d))
        if (p.length() == n) out.push_back(std::move(p));
    return out;
}

}  // namespace tauforge
