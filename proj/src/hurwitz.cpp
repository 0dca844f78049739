#include "tauforge/hurwitz.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tauforge {

int branch_count(int genus, const Partition& mu) {
    const int r = 2 * genus - 2 + mu.size() + mu.length();
    if (r < 0) throw std::domain_error("unstable key");
    return r;
}

Rational HurwitzTable::value(int genus, const Partition& mu) {
    if (genus < 0) throw std::domain_error("unstable key");
    if (mu.empty()) throw std::domain_error("empty partition");
    branch_count(genus, mu);
    return cached_or_compute(genus, mu);
}

Rational HurwitzTable::cached_or_compute(int genus, const Partition& mu) {
    HurwitzKey key{genus, mu};
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Rational h = compute(genus, mu);
    Rational count = factorial(mu.size()) * h;
    if (count.get_den() != 1 || count < 0)
        throw std::logic_error("cut-and-join produced a non-integral tuple count for " +
                               mu.to_string());
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), h);  // idempotent: identical value on re-entry
    return h;
}

Rational HurwitzTable::compute(int genus, const Partition& mu) {
    const int r = branch_count(genus, mu);
    if (r == 0) return 1;  // trivial degree-one cover: genus 0, mu = (1)

    Rational sum = 0;
    for (const auto& [nu, coeff] : join_targets(mu)) sum += coeff * value(genus, nu);
    if (genus >= 1)
        for (const auto& [nu, coeff] : cut_targets(mu))
            sum += coeff * value(genus - 1, nu);

    // Splitting sum over ordered pairs, halved; binomials with lower index
    // outside [0, r-1] contribute nothing.
    const Rational half(1, 2);
    for (const auto& s : split_targets(mu)) {
        for (int g1 = 0; g1 <= genus; ++g1) {
            const int r1 = 2 * g1 - 2 + s.first.size() + s.first.length();
            if (r1 < 0 || r1 > r - 1) continue;
            sum += half * binomial(r - 1, r1) * s.coeff * value(g1, s.first) *
                   value(genus - g1, s.second);
        }
    }
    return sum;
}

size_t HurwitzTable::size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void HurwitzTable::clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
    on_disk_.clear();
}

std::map<HurwitzKey, Rational> HurwitzTable::snapshot() const {
    std::shared_lock lock(mutex_);
    return memo_;
}

namespace {

nlohmann::json record_json(const HurwitzKey& key, const Rational& h) {
    nlohmann::json rec;
    rec["g"] = key.genus;
    rec["mu"] = key.mu.parts();
    rec["h"] = rational_to_string(h);
    return rec;
}

}  // namespace

void HurwitzTable::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cache file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty cache file: " + path);
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
        throw std::runtime_error("malformed cache header: " + path);
    }
    if (header.value("format", "") != "hurwitz-cache")
        throw std::runtime_error("not a hurwitz cache file: " + path);
    if (header.value("version", 0) != 1)
        throw std::runtime_error("cache version mismatch: " + path);

    std::unique_lock lock(mutex_);
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            throw std::runtime_error("malformed cache record at line " +
                                     std::to_string(lineno));
        }
        if (!rec.contains("g") || !rec.contains("mu") || !rec.contains("h"))
            throw std::runtime_error("incomplete cache record at line " +
                                     std::to_string(lineno));
        HurwitzKey key{rec["g"].get<int>(),
                       Partition(rec["mu"].get<std::vector<int>>())};
        Rational h = rational_from_string(rec["h"].get<std::string>());
        auto it = memo_.find(key);
        if (it != memo_.end() && it->second != h)
            throw std::runtime_error("cache value conflict at line " +
                                     std::to_string(lineno));
        memo_[key] = h;
        on_disk_.insert(key);
    }
}

void HurwitzTable::store_cache(const std::string& path) const {
    std::shared_lock lock(mutex_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    out << nlohmann::json({{"format", "hurwitz-cache"}, {"version", 1}}).dump() << "\n";
    for (const auto& [key, h] : memo_) out << record_json(key, h).dump() << "\n";
}

void HurwitzTable::append_new_to_cache(const std::string& path) const {
    std::ifstream probe(path);
    if (!probe.good()) {
        store_cache(path);
        return;
    }
    probe.close();
    std::shared_lock lock(mutex_);
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to cache file: " + path);
    for (const auto& [key, h] : memo_)
        if (!on_disk_.contains(key)) out << record_json(key, h).dump() << "\n";
}

MultiSeries phi_truncation(HurwitzTable& table, int genus, int n, int dmax) {
    if (dmax < 1) throw std::invalid_argument("phi_truncation needs dmax >= 1");
    const int n_vars = dmax + 1;  // variable 0 is z, variable i is p_i
    MultiSeries phi(n_vars, dmax + n);
    for (int d = 1; d <= dmax; ++d) {
        for (const auto& mu : partitions_of_length(d, n)) {
            const int r = branch_count(genus, mu);
            MultiSeries::Exponents e(n_vars, 0);
            e[0] = d;
            for (int part : mu.parts()) ++e[part];
            phi.add_term(e, table.value(genus, mu) / Rational(factorial(r)));
        }
    }
    return phi;
}

Report verify_cut_join_pde(HurwitzTable& table, int dmax, int rmax) {
    return verify_cut_join_pde(
        [&table](int g, const Partition& mu) { return table.value(g, mu); }, dmax, rmax);
}

Report verify_cut_join_pde(const std::function<Rational(int, const Partition&)>& hurwitz_of,
                           int dmax, int rmax) {
    Report rep;
    rep.suite = "cutjoin-pde";
    rep.param("dmax", std::to_string(dmax));
    rep.param("rmax", std::to_string(rmax));

    // Generating function in (lambda, p): variable 0 is lambda.
    const int n_vars = dmax + 1;
    const int cap = rmax + dmax;
    MultiSeries phi(n_vars, cap);
    for (int d = 1; d <= dmax; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int g = 0;; ++g) {
                const int r = 2 * g - 2 + d + mu.length();
                if (r > rmax) break;
                MultiSeries::Exponents e(n_vars, 0);
                e[0] = r;
                for (int part : mu.parts()) ++e[part];
                phi.add_term(e, hurwitz_of(g, mu) / Rational(factorial(r)));
            }
        }
    }

    MultiSeries lhs = partial_derivative(phi, 0);

    std::vector<MultiSeries> dphi;
    dphi.reserve(dmax + 1);
    dphi.emplace_back(n_vars, cap);  // unused slot 0
    for (int i = 1; i <= dmax; ++i) dphi.push_back(partial_derivative(phi, i));

    const Rational half(1, 2);
    MultiSeries rhs(n_vars, cap);
    for (int i = 1; i < dmax; ++i) {
        for (int j = 1; i + j <= dmax; ++j) {
            MultiSeries second = partial_derivative(dphi[i], j);
            MultiSeries product = series_mul(dphi[i], dphi[j]);
            rhs = rhs + (half * Rational(i * j)) *
                            shift_var(second + product, i + j, 1);
            MultiSeries transport = shift_var(shift_var(dphi[i + j], i, 1), j, 1);
            rhs = rhs + (half * Rational(i + j)) * transport;
        }
    }

    // Fully determined window: lambda exponent <= rmax-1, p-weight <= dmax.
    auto in_window = [&](const MultiSeries::Exponents& e) {
        if (e[0] > rmax - 1) return false;
        int weight = 0;
        for (int v = 1; v < n_vars; ++v) weight += v * e[v];
        return weight <= dmax;
    };
    std::map<MultiSeries::Exponents, std::pair<Rational, Rational>> joint;
    for (const auto& [e, c] : lhs.terms())
        if (in_window(e)) joint[e].first = c;
    for (const auto& [e, c] : rhs.terms())
        if (in_window(e)) joint[e].second = c;

    size_t checked = 0;
    std::string counterexample;
    for (const auto& [e, cs] : joint) {
        ++checked;
        if (cs.first != cs.second) {
            counterexample = "monomial (lambda,p)=" + exponents_to_string(e) +
                             " lhs=" + rational_to_string(cs.first) +
                             " rhs=" + rational_to_string(cs.second);
            break;
        }
    }
    rep.add("cut-and-join pde, " + std::to_string(checked) + " monomials",
            counterexample.empty(), counterexample);
    return rep;
}

}  // namespace tauforge
