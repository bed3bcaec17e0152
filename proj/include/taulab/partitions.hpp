#pragma once

#include <string>
#include <vector>

namespace taulab {

// Weakly decreasing nonnegative parts, trailing zeros stripped. Value type;
// equality is structural.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : p_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return p_; }
    int length() const { return (int)p_.size(); }
    int part(int i) const { return i < (int)p_.size() ? p_[i] : 0; } // 0-based, padded
    int weight() const;
    bool empty() const { return p_.empty(); }

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return p_ != o.p_; }
    bool operator<(const Partition& o) const { return p_ < o.p_; }

    // containment of Young diagrams
    bool contains(const Partition& mu) const;
    bool fits_in_box(int rows, int cols) const;

    std::string str() const;

private:
    std::vector<int> p_;
    void normalize();
};

Partition conjugate(const Partition& lam);

// Frobenius pairs in the fermion labelling: k_i = lam_i - i ( >= 0 ),
// j_i = -(lam'_i - i + 1) ( < 0 ), i running over the diagonal boxes.
struct HookCoordinates {
    std::vector<int> arms; // k_1 > k_2 > ... >= 0
    std::vector<int> legs; // j_1 < j_2 < ... < 0

    int count() const { return (int)arms.size(); }
    bool operator==(const HookCoordinates& o) const { return arms == o.arms && legs == o.legs; }
    bool operator<(const HookCoordinates& o) const {
        if (arms != o.arms) return arms < o.arms;
        return legs < o.legs;
    }
};

HookCoordinates hook_coordinates(const Partition& lam);
Partition partition_from_hooks(const HookCoordinates& hc);

// all partitions with at most `rows` parts, each at most `cols`
std::vector<Partition> partitions_in_box(int rows, int cols);

// all partitions mu with mu <= lam componentwise (sub-diagrams of lam)
std::vector<Partition> partitions_under(const Partition& lam);

// mu/lam is a horizontal strip of size r (Pieri condition)
bool is_horizontal_strip(const Partition& mu, const Partition& lam, int r);

// Weight vectors (t_1..t_n) of all semistandard fillings of lam/mu with
// entries in 1..n. `ascending` selects the usual column-strict order; the
// descending variant gives the same weight multiset.
std::vector<std::vector<int>> ssyt_weights(const Partition& lam, const Partition& mu, int n,
                                           bool ascending = true);

// phase-model occupation dictionary: occupations n_0..n_M with sum N
Partition occupation_to_partition(const std::vector<int>& occ);
std::vector<int> partition_to_occupation(const Partition& lam, int particles, int sites_m);

long binomial_long(int n, int k);

} // namespace taulab
