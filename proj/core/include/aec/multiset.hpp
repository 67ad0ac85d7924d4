#pragma once

#include <map>

namespace aec {

/// Multiset of colors: a member may appear several times. Supports the join
/// operation, multiplicities and the cardinality ||S|| that the degree
/// counting arguments rely on.
class ColorMultiset {
public:
    ColorMultiset() = default;

    void add(int x, int times = 1) {
        if (times <= 0) return;
        mult_[x] += times;
    }

    int mult(int x) const {
        auto it = mult_.find(x);
        return it == mult_.end() ? 0 : it->second;
    }

    bool contains(int x) const { return mult(x) > 0; }

    /// ||S|| = sum of multiplicities.
    long long cardinality() const {
        long long c = 0;
        for (auto& [x, m] : mult_) c += m;
        return c;
    }

    /// Join: mult_{S1 + S2}(x) = mult_{S1}(x) + mult_{S2}(x).
    friend ColorMultiset join(const ColorMultiset& a, const ColorMultiset& b) {
        ColorMultiset out = a;
        for (auto& [x, m] : b.mult_) out.mult_[x] += m;
        return out;
    }

    const std::map<int, int>& entries() const { return mult_; }

private:
    std::map<int, int> mult_;
};

}  // namespace aec
