#include "taulab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace taulab {

void Partition::normalize() {
    for (size_t i = 1; i < p_.size(); ++i)
        if (p_[i] > p_[i - 1]) throw std::invalid_argument("Partition: parts not decreasing");
    if (!p_.empty() && p_.back() < 0) throw std::invalid_argument("Partition: negative part");
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
}

int Partition::weight() const { return std::accumulate(p_.begin(), p_.end(), 0); }

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.p_[i] > p_[i]) return false;
    return true;
}

bool Partition::fits_in_box(int rows, int cols) const {
    return length() <= rows && (p_.empty() || p_[0] <= cols);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) os << ",";
        os << p_[i];
    }
    os << ")";
    return os.str();
}

Partition conjugate(const Partition& lam) {
    if (lam.empty()) return Partition();
    std::vector<int> c(lam.parts()[0], 0);
    for (int x : lam.parts())
        for (int j = 0; j < x; ++j) ++c[j];
    return Partition(std::move(c));
}

HookCoordinates hook_coordinates(const Partition& lam) {
    HookCoordinates hc;
    Partition lc = conjugate(lam);
    int d = 0;
    while (d < lam.length() && lam.part(d) > d) ++d; // diagonal boxes
    for (int i = 1; i <= d; ++i) hc.arms.push_back(lam.part(i - 1) - i);
    for (int i = 1; i <= d; ++i) hc.legs.push_back(-(lc.part(i - 1) - i + 1));
    return hc;
}

Partition partition_from_hooks(const HookCoordinates& hc) {
    int d = hc.count();
    if ((int)hc.legs.size() != d) throw std::invalid_argument("hooks: arm/leg count mismatch");
    std::vector<int> parts;
    // rows 1..d come from the arms; the column lengths fix the rest
    for (int i = 1; i <= d; ++i) parts.push_back(hc.arms[i - 1] + i);
    // legs give conjugate part lengths: lam'_i = -j_i + i - 1
    std::vector<int> collen;
    for (int i = 1; i <= d; ++i) collen.push_back(-hc.legs[i - 1] + i - 1);
    // rows below the diagonal: row r (1-based, r > d) has lam_r = #{i <= d : collen_i >= r}
    int maxcol = collen.empty() ? 0 : collen[0];
    for (int r = d + 1; r <= maxcol; ++r) {
        int cnt = 0;
        for (int i = 0; i < d; ++i)
            if (collen[i] >= r) ++cnt;
        parts.push_back(cnt);
    }
    Partition out(parts);
    if (hook_coordinates(out) == hc) return out;
    throw std::invalid_argument("hooks: inconsistent coordinates");
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int depth, int maxpart) {
        out.emplace_back(std::vector<int>(cur.begin(), cur.end()));
        if (depth == rows) return;
        for (int v = maxpart; v >= 1; --v) {
            cur.push_back(v);
            rec(depth + 1, v);
            cur.pop_back();
        }
    };
    if (rows < 0 || cols < 0) throw std::invalid_argument("partitions_in_box: negative size");
    rec(0, cols);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> partitions_under(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int cap) {
        out.emplace_back(std::vector<int>(cur.begin(), cur.end()));
        if (row == lam.length()) return;
        int hi = std::min(cap, lam.part(row));
        for (int v = hi; v >= 1; --v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(0, lam.part(0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_horizontal_strip(const Partition& mu, const Partition& lam, int r) {
    // mu/lam horizontal strip with r boxes: lam_i <= mu_i and mu_{i+1} <= lam_i
    if (!mu.contains(lam)) return false;
    if (mu.weight() - lam.weight() != r) return false;
    for (int i = 0; i < mu.length(); ++i) {
        if (mu.part(i) < lam.part(i)) return false;
        if (i > 0 && mu.part(i) > lam.part(i - 1)) return false;
    }
    return true;
}

std::vector<std::vector<int>> ssyt_weights(const Partition& lam, const Partition& mu, int n,
                                           bool ascending) {
    if (!lam.contains(mu)) return {};
    int rows = lam.length();
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(lam.part(i), 0);
    std::vector<std::vector<int>> out;

    // fill cells row by row, left to right, skipping the mu sub-diagram
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            std::vector<int> w(n, 0);
            for (int i = 0; i < rows; ++i)
                for (int j = mu.part(i); j < lam.part(i); ++j) ++w[fill[i][j] - 1];
            out.push_back(std::move(w));
            return;
        }
        if (c >= lam.part(r)) {
            rec(r + 1, r + 1 < rows ? mu.part(r + 1) : 0);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (ascending) {
                // rows weakly increase, columns strictly increase
                if (c > mu.part(r) && fill[r][c - 1] > v) continue;
                if (r > 0 && c < lam.part(r - 1) && c >= mu.part(r - 1) && fill[r - 1][c] >= v) continue;
            } else {
                // rows weakly decrease, columns strictly decrease
                if (c > mu.part(r) && fill[r][c - 1] < v) continue;
                if (r > 0 && c < lam.part(r - 1) && c >= mu.part(r - 1) && fill[r - 1][c] <= v) continue;
            }
            fill[r][c] = v;
            rec(r, c + 1);
        }
        fill[r][c] = 0;
    };
    if (rows == 0) return {std::vector<int>(n, 0)};
    rec(0, mu.part(0));
    return out;
}

Partition occupation_to_partition(const std::vector<int>& occ) {
    std::vector<int> parts;
    for (int l = (int)occ.size() - 1; l >= 1; --l) {
        if (occ[l] < 0) throw std::invalid_argument("occupation: negative entry");
        for (int c = 0; c < occ[l]; ++c) parts.push_back(l);
    }
    if (!occ.empty() && occ[0] < 0) throw std::invalid_argument("occupation: negative entry");
    return Partition(std::move(parts));
}

std::vector<int> partition_to_occupation(const Partition& lam, int particles, int sites_m) {
    if (!lam.fits_in_box(particles, sites_m))
        throw std::invalid_argument("partition_to_occupation: does not fit the box");
    std::vector<int> occ(sites_m + 1, 0);
    for (int x : lam.parts()) ++occ[x];
    occ[0] = particles - lam.length(); // eq. (PHI): n_0 = N - l(lam)
    return occ;
}

long binomial_long(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace taulab
