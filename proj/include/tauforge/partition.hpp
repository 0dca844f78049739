#pragma once

#include "tauforge/rational.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace tauforge {

// Integer partition in canonical form: strictly positive parts, weakly
// decreasing.  The empty partition is allowed only where a caller
// explicitly permits it.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }     // |mu|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // m_i(mu): number of parts equal to i.
    int multiplicity(int i) const;

    // |Aut(mu)| = prod_i m_i(mu)!
    Integer aut_order() const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // "(3,2,1)", "()" for empty

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// A recursion target together with its weight.
struct WeightedTarget {
    Partition target;
    Integer coeff;
};

// An ordered pair of split factors together with its weight.  The same
// ordered pair may occur in several entries, one per way the cut part
// could have produced it; consumers sum all entries.
struct SplitTarget {
    Partition first;
    Partition second;
    Integer coeff;
};

// Partitions obtained by merging two parts a, b of mu into a+b, one
// entry per distinct result, weighted by (a+b)/(1+[a==b]) * m_{a+b}(nu).
std::vector<WeightedTarget> join_targets(const Partition& mu);

// Partitions obtained by cutting a part v of mu into p + (v-p), one
// entry per distinct result (unordered splits enumerated once, p <=
// v-p), weighted by p(v-p)/(1+[p==v-p]) * m_p(nu)(m_{v-p}(nu)-[p==v-p]).
std::vector<WeightedTarget> cut_targets(const Partition& mu);

// Ordered pairs (nu1, nu2) of nonempty partitions obtained by cutting a
// part v of mu into p + (v-p), placing p in nu1 and v-p in nu2, and
// distributing the remaining parts of mu over the pair in all ways.
// Weight per entry: p(v-p) * m_p(nu1) * m_{v-p}(nu2).
std::vector<SplitTarget> split_targets(const Partition& mu);

std::vector<Partition> partitions_of(int d);
std::vector<Partition> partitions_of_length(int d, int n);

}  // namespace tauforge
