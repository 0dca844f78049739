#pragma once

#include "tauforge/hurwitz.hpp"
#include "tauforge/multiseries.hpp"
#include "tauforge/partition.hpp"
#include "tauforge/rational.hpp"
#include "tauforge/report.hpp"

#include <map>
#include <shared_mutex>
#include <vector>

namespace tauforge {

struct CorrelatorKey {
    int genus = 0;
    std::vector<int> indices;  // sorted ascending
    auto operator<=>(const CorrelatorKey&) const = default;
};

// Memoized psi-class correlators <tau_{b_1}...tau_{b_n}>_g computed by
// the DVV recursion with pivot = largest index.  The value is 0 unless
// sum b = 3g-3+n (dimension gate) and 2g-2+n > 0 (stability).  The two
// seeds the recursion cannot produce, <tau_0^3>_0 = 1 and
// <tau_1>_1 = 1/24, are built in; the test suite cross-validates them
// against ELSV inversion of oracle-verified Hurwitz numbers.
class CorrelatorTable {
public:
    Rational tau(int genus, std::vector<int> b);

    size_t size() const;
    void clear();
    std::map<CorrelatorKey, Rational> snapshot() const;

private:
    Rational compute(const CorrelatorKey& key);
    Rational cached_or_compute(CorrelatorKey key);

    mutable std::shared_mutex mutex_;
    std::map<CorrelatorKey, Rational> memo_;
};

// All sorted index vectors of length n with the given sum.
std::vector<std::vector<int>> sorted_index_vectors(int sum, int n);

// All sorted index vectors of length n passing the dimension gate for
// this genus (empty when 3g-3+n < 0 or the key is unstable).
std::vector<std::vector<int>> gate_valid_keys(int genus, int n);

// Table of linear Hodge integrals <tau_{b_1}...tau_{b_n} lambda_k>_g,
// keyed by (sorted b, k) with sum b + k = 3g-3+n.
struct HodgeTable {
    int genus = 0;
    int n_points = 0;
    std::map<std::pair<std::vector<int>, int>, Rational> entries;
    std::vector<Partition> evaluation_points;  // partitions the solve used

    // Structural zeros (wrong dimension, k out of range) are returned as
    // 0; in-range keys must be present or a domain_error is thrown.
    Rational value(const std::vector<int>& b_sorted, int k) const;
};

// Invert the ELSV formula: build one linear equation per evaluation
// partition (length n, pairwise-distinct small parts first) and solve
// exactly for all Hodge integrals of (genus, n).  parts_max == 0 means
// unbounded part values.  Throws domain_error("unstable (g,n)") when
// 2g-2+n <= 0 and domain_error("insufficient partitions") if the system
// never reaches full rank within the row budget.
HodgeTable hodge_solve(HurwitzTable& hurwitz, int genus, int n, int parts_max = 0);

// Forward ELSV evaluation: the Hurwitz number predicted by the table.
Rational elsv_eval(int genus, const Partition& mu, const HodgeTable& table);

// Correlators obtained from ELSV inversion only (k = 0 slices); the DVV
// identity is verified over these, keeping the two routes independent.
class ElsvTauTable {
public:
    void add(const HodgeTable& table);
    // 0 for gate-invalid or unstable keys; otherwise the stored value or
    // domain_error("missing table entries").
    Rational tau(int genus, std::vector<int> b) const;

private:
    std::map<CorrelatorKey, Rational> values_;
};

// Re-evaluate both sides of the DVV recursion for one key over an
// ELSV-only table.  Keys none of whose right-hand terms exist (negative
// indices everywhere) are reported as flagged vacuous passes.
CheckResult dvv_check(int genus, std::vector<int> b, const ElsvTauTable& taus);

struct GeneratingWindow {
    int k_max = 0;  // variables t_0..t_K
    int degree = 0;
};

// Coefficientwise check of the KdV-derived recursion
//   (2n+1)<<tau_n tau_0^2>> =
//     <<tau_{n-1} tau_0>><<tau_0^3>> + 2<<tau_{n-1} tau_0^2>><<tau_0^2>>
//     + 1/4 <<tau_{n-1} tau_0^4>>
// over the stated window; each check line records the left value and
// the three right-hand contributions.
Report verify_kdv(CorrelatorTable& corr, int n, const GeneratingWindow& window);

// Truncation of the genus-g correlator generating function in t_0..t_K.
MultiSeries witten_f(CorrelatorTable& corr, int genus, const GeneratingWindow& window);

}  // namespace tauforge
