#include "tauforge/oracle.hpp"

#include "tauforge/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <numeric>
#include <vector>

namespace tauforge {

namespace {

using Perm = std::vector<int>;  // images: p[x] is where x goes

Perm perm_from_cycle_type(const Partition& mu) {
    Perm p(mu.size());
    int base = 0;
    for (int part : mu.parts()) {
        for (int i = 0; i < part; ++i) p[base + i] = base + (i + 1) % part;
        base += part;
    }
    return p;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<int>(x);
    return q;
}

Partition cycle_type(const Perm& p) {
    std::vector<int> parts;
    std::vector<bool> seen(p.size(), false);
    for (size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (size_t y = x; !seen[y]; y = p[y]) {
            seen[y] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

// z_mu = prod_i i^{m_i} m_i!, so the conjugacy class has d!/z_mu elements.
Integer class_size(const Partition& mu) {
    Integer z = 1;
    for (int v = 1; v <= mu.size(); ++v) {
        const int m = mu.multiplicity(v);
        if (m == 0) continue;
        Integer vp;
        mpz_ui_pow_ui(vp.get_mpz_t(), static_cast<unsigned long>(v),
                      static_cast<unsigned long>(m));
        z *= vp * factorial(m);
    }
    return factorial(mu.size()) / z;
}

std::vector<std::pair<int, int>> transpositions(int d) {
    std::vector<std::pair<int, int>> ts;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) ts.emplace_back(a, b);
    return ts;
}

// Orbit partitions of {0..d-1} as restricted growth strings.
std::vector<int> canonical_rgs(const std::vector<int>& blocks) {
    std::vector<int> rgs(blocks.size());
    std::map<int, int> relabel;
    int next = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        auto [it, inserted] = relabel.emplace(blocks[i], next);
        if (inserted) ++next;
        rgs[i] = it->second;
    }
    return rgs;
}

std::vector<int> orbit_rgs(const Perm& p) {
    std::vector<int> blocks(p.size(), -1);
    int label = 0;
    for (size_t x = 0; x < p.size(); ++x) {
        if (blocks[x] != -1) continue;
        for (size_t y = x; blocks[y] == -1; y = p[y]) blocks[y] = label;
        ++label;
    }
    return canonical_rgs(blocks);
}

std::vector<int> join_blocks(const std::vector<int>& rgs, int a, int b) {
    if (rgs[a] == rgs[b]) return rgs;
    auto merged = rgs;
    const int from = std::max(rgs[a], rgs[b]);
    const int to = std::min(rgs[a], rgs[b]);
    for (auto& v : merged)
        if (v == from) v = to;
    return canonical_rgs(merged);
}

// Counts of r-tuples of transpositions multiplying to a fixed element of
// each cycle type, for all tuple lengths 0..rmax.  psi[k][class index].
struct ClassDp {
    std::vector<Partition> classes;
    std::vector<std::vector<Integer>> psi;

    ClassDp(int d, int rmax) {
        classes = partitions_of(d);
        std::map<Partition, int> index;
        for (size_t i = 0; i < classes.size(); ++i) index[classes[i]] = static_cast<int>(i);

        // transition[c][c'] = #{transpositions tau : tau * rep_c in class c'}
        std::vector<std::vector<Integer>> transition(
            classes.size(), std::vector<Integer>(classes.size(), 0));
        auto taus = transpositions(d);
        for (size_t c = 0; c < classes.size(); ++c) {
            Perm rep = perm_from_cycle_type(classes[c]);
            for (auto [a, b] : taus) {
                Perm prod = rep;
                std::swap(prod[a], prod[b]);  // multiply by the transposition
                ++transition[c][index[cycle_type(prod)]];
            }
        }

        std::vector<int> one(d, 1);
        const int id_class = index[Partition(one)];
        psi.assign(rmax + 1, std::vector<Integer>(classes.size(), 0));
        psi[0][id_class] = 1;
        for (int k = 1; k <= rmax; ++k)
            for (size_t c = 0; c < classes.size(); ++c)
                for (size_t c2 = 0; c2 < classes.size(); ++c2)
                    if (transition[c][c2] != 0)
                        psi[k][c] += transition[c][c2] * psi[k - 1][c2];
    }

    Integer count(const Partition& type, int k) const {
        for (size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == type) return psi[k][i];
        throw std::logic_error("unknown cycle type");
    }
};

}  // namespace

Rational hurwitz_oracle_direct(int genus, const Partition& mu) {
    const int d = mu.size();
    const int r = branch_count(genus, mu);

    std::vector<Perm> perms;
    {
        Perm p(d);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::map<Perm, int> perm_index;
    for (size_t i = 0; i < perms.size(); ++i) perm_index[perms[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> rgss;
    {
        std::vector<int> rgs(d, 0);
        std::function<void(int, int)> rec = [&](int i, int maxv) {
            if (i == d) {
                rgss.push_back(rgs);
                return;
            }
            for (int v = 0; v <= maxv + 1; ++v) {
                rgs[i] = v;
                rec(i + 1, std::max(maxv, v));
            }
        };
        rgs[0] = 0;
        rec(1, 0);
    }
    std::map<std::vector<int>, int> rgs_index;
    for (size_t i = 0; i < rgss.size(); ++i) rgs_index[rgss[i]] = static_cast<int>(i);

    const Perm sigma = perm_from_cycle_type(mu);
    const Perm target = inverse(sigma);
    auto taus = transpositions(d);

    // state: (running product tau_k...tau_1, join of orbits so far)
    std::map<std::pair<int, int>, Integer> state;
    {
        Perm id(d);
        std::iota(id.begin(), id.end(), 0);
        state[{perm_index[id], rgs_index[orbit_rgs(sigma)]}] = 1;
    }
    for (int step = 0; step < r; ++step) {
        std::map<std::pair<int, int>, Integer> next;
        for (const auto& [key, count] : state) {
            const Perm& prod = perms[key.first];
            const auto& rgs = rgss[key.second];
            for (auto [a, b] : taus) {
                Perm p2 = prod;
                std::swap(p2[a], p2[b]);
                next[{perm_index[p2], rgs_index[join_blocks(rgs, a, b)]}] += count;
            }
        }
        state = std::move(next);
    }

    const std::vector<int> transitive(d, 0);
    Integer total = 0;
    auto it = state.find({perm_index[target], rgs_index[transitive]});
    if (it != state.end()) total = it->second;
    return make_rational(total * class_size(mu), factorial(d));
}

Rational hurwitz_oracle_blockwise(int genus, const Partition& mu) {
    const int d = mu.size();
    const int r = branch_count(genus, mu);

    std::vector<ClassDp> dp;  // dp[s-1] handles blocks of size s
    dp.reserve(d);
    for (int s = 1; s <= d; ++s) dp.emplace_back(s, r);

    // W(profile): tuples confined to some fixed set partition with the
    // given block sizes; factors over blocks once types and slots are
    // distributed.
    auto blockwise_count = [&](const Partition& profile) {
        std::function<Integer(size_t, std::multiset<int>, int)> rec =
            [&](size_t bi, std::multiset<int> remaining, int slots) -> Integer {
            if (bi == profile.parts().size())
                return remaining.empty() && slots == 0 ? Integer(1) : Integer(0);
            const int bsize = profile.parts()[bi];
            Integer acc = 0;
            for (const auto& nu : partitions_of(bsize)) {
                std::multiset<int> rest = remaining;
                bool sub = true;
                for (int part : nu.parts()) {
                    auto it = rest.find(part);
                    if (it == rest.end()) {
                        sub = false;
                        break;
                    }
                    rest.erase(it);
                }
                if (!sub) continue;
                const Integer sigma_count = class_size(nu);
                for (int k = 0; k <= slots; ++k) {
                    const Integer tuples = dp[bsize - 1].count(nu, k);
                    if (tuples == 0) continue;
                    acc += sigma_count * tuples * binomial(slots, k) *
                           rec(bi + 1, rest, slots - k);
                }
            }
            return acc;
        };
        std::multiset<int> all(mu.parts().begin(), mu.parts().end());
        return rec(0, std::move(all), r);
    };

    Integer transitive_total = 0;
    for (const auto& profile : partitions_of(d)) {
        const int k = profile.length();
        Integer set_partitions = factorial(d);
        for (int part : profile.parts()) set_partitions /= factorial(part);
        set_partitions /= profile.aut_order();
        Integer sign_weight = factorial(k - 1);
        if (k % 2 == 0) sign_weight = -sign_weight;
        transitive_total += sign_weight * set_partitions * blockwise_count(profile);
    }
    return make_rational(transitive_total, factorial(d));
}

Rational hurwitz_oracle(int genus, const Partition& mu, int rmax_bound) {
    if (mu.empty()) throw std::domain_error("empty partition");
    const int d = mu.size();
    if (d > 6) throw std::domain_error("oracle out of range");
    const int r = branch_count(genus, mu);
    if (r > rmax_bound) throw std::domain_error("oracle out of range");
    return d <= 4 ? hurwitz_oracle_direct(genus, mu) : hurwitz_oracle_blockwise(genus, mu);
}

}  // namespace tauforge
