#include "ngc/group.hpp"

#include <sstream>
#include <stdexcept>

namespace ngc {

GroupSpec::GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("GroupSpec: no factors");
    for (int o : orders_) {
        if (o < 1) throw std::invalid_argument("GroupSpec: factor order < 1");
        n_ *= o;
    }
    elems_.reserve(static_cast<std::size_t>(n_));
    GroupElement cur(orders_.size(), 0);
    for (int i = 0; i < n_; ++i) {
        elems_.push_back(cur);
        for (int k = static_cast<int>(orders_.size()) - 1; k >= 0; --k) {
            if (++cur[static_cast<std::size_t>(k)] < orders_[static_cast<std::size_t>(k)]) break;
            cur[static_cast<std::size_t>(k)] = 0;
        }
    }
    add_.resize(static_cast<std::size_t>(n_) * n_);
    neg_.resize(static_cast<std::size_t>(n_));
    GroupElement tmp(orders_.size());
    for (int i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < orders_.size(); ++k)
            tmp[k] = (orders_[k] - elems_[static_cast<std::size_t>(i)][k]) % orders_[k];
        neg_[static_cast<std::size_t>(i)] = index_of(tmp);
        for (int j = 0; j < n_; ++j) {
            for (std::size_t k = 0; k < orders_.size(); ++k)
                tmp[k] = (elems_[static_cast<std::size_t>(i)][k] +
                          elems_[static_cast<std::size_t>(j)][k]) % orders_[k];
            add_[static_cast<std::size_t>(i) * n_ + j] = index_of(tmp);
        }
    }
}

int GroupSpec::index_of(const GroupElement& e) const {
    if (e.size() != orders_.size()) throw std::invalid_argument("element/group factor mismatch");
    int idx = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        int c = e[k] % orders_[k];
        if (c < 0) c += orders_[k];
        idx = idx * orders_[k] + c;
    }
    return idx;
}

std::string GroupSpec::element_name(int i) const {
    const GroupElement& e = element(i);
    if (e.size() == 1) return std::to_string(e[0]);
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
    os << ")";
    return os.str();
}

}  // namespace ngc
