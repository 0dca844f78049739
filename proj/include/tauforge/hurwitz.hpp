#pragma once

#include "tauforge/multiseries.hpp"
#include "tauforge/partition.hpp"
#include "tauforge/rational.hpp"
#include "tauforge/report.hpp"

#include <functional>
#include <map>
#include <set>
#include <shared_mutex>
#include <string>

namespace tauforge {

struct HurwitzKey {
    int genus = 0;
    Partition mu;
    auto operator<=>(const HurwitzKey&) const = default;
};

// Number of simple branch points: r = 2g - 2 + |mu| + l(mu).
// Throws domain_error("unstable key") when negative.
int branch_count(int genus, const Partition& mu);

// Memoized table of single Hurwitz numbers computed by the cut-and-join
// recursion.  Values are exact; d! * H is always a non-negative integer,
// which is asserted on every insert.  Lookups take a shared lock and
// inserts are serialized and idempotent, so concurrent readers are safe.
class HurwitzTable {
public:
    HurwitzTable() = default;

    // Cut-and-join recursion with memoization.  genus >= 0, mu nonempty,
    // branch count >= 0 (else domain_error("unstable key")).
    Rational value(int genus, const Partition& mu);

    size_t size() const;
    void clear();
    std::map<HurwitzKey, Rational> snapshot() const;

    // Disk cache, JSON lines: a header record {"format":"hurwitz-cache",
    // "version":1} followed by {"g":..,"mu":[..],"h":"num/den"} records.
    void load_cache(const std::string& path);
    void store_cache(const std::string& path) const;      // full rewrite
    void append_new_to_cache(const std::string& path) const;  // records not yet on disk

private:
    Rational compute(int genus, const Partition& mu);
    Rational cached_or_compute(int genus, const Partition& mu);

    mutable std::shared_mutex mutex_;
    std::map<HurwitzKey, Rational> memo_;
    std::set<HurwitzKey> on_disk_;
};

// Phi_{g,n} truncation: sum over partitions with l(mu) = n, |mu| <= dmax
// of H_{g,mu}/r! * p_mu z^{|mu|}, as a MultiSeries in (z, p_1..p_dmax)
// with variable 0 = z and variable i = p_i.
MultiSeries phi_truncation(HurwitzTable& table, int genus, int n, int dmax);

// Coefficientwise check of the cut-and-join PDE for the full generating
// function in (lambda, p).  The window of fully determined monomials is
// p-weight <= dmax and lambda-exponent <= rmax - 1.  The provider
// overload exists so tests can inject faults.
Report verify_cut_join_pde(HurwitzTable& table, int dmax, int rmax);
Report verify_cut_join_pde(const std::function<Rational(int, const Partition&)>& hurwitz_of,
                           int dmax, int rmax);

}  // namespace tauforge
