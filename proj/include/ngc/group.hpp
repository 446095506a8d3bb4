#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ngc {

/// Element of a finite abelian product of cyclic groups, one residue per factor.
using GroupElement = std::vector<int>;

/// A finite abelian group presented as an explicit product of cyclic factors.
/// Elements are addressed by their index in lexicographic enumeration
/// (identity first); addition and negation are table lookups.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<int> orders);

    int order() const { return n_; }
    const std::vector<int>& factor_orders() const { return orders_; }
    std::size_t num_factors() const { return orders_.size(); }

    const GroupElement& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    int index_of(const GroupElement& e) const;

    int add(int i, int j) const { return add_[static_cast<std::size_t>(i) * n_ + j]; }
    int neg(int i) const { return neg_[static_cast<std::size_t>(i)]; }
    int sub(int i, int j) const { return add(i, neg(j)); }
    int zero() const { return 0; }

    bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }

    std::string element_name(int i) const;

private:
    std::vector<int> orders_;
    int n_ = 1;
    std::vector<GroupElement> elems_;
    std::vector<int> add_;
    std::vector<int> neg_;
};

}  // namespace ngc
