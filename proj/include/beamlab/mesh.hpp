#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace beamlab {

/// Partition of (0, l) into elements. Nodes are strictly increasing with
/// x_0 = 0 and x_M = l; immutable after construction.
class Mesh1D {
public:
    explicit Mesh1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.size() < 2)
            throw std::invalid_argument("Mesh1D: need at least two nodes");
        if (nodes_.front() != 0.0)
            throw std::invalid_argument("Mesh1D: first node must be 0");
        for (std::size_t i = 1; i < nodes_.size(); ++i)
            if (!(nodes_[i] > nodes_[i - 1]))
                throw std::invalid_argument("Mesh1D: nodes must be strictly increasing (node " +
                                            std::to_string(i) + ")");
        if (!(length() > 0.0))
            throw std::invalid_argument("Mesh1D: length must be positive");
    }

    static Mesh1D uniform(double length, std::size_t element_count) {
        if (element_count < 1)
            throw std::invalid_argument("Mesh1D::uniform: need at least one element");
        if (!(length > 0.0))
            throw std::invalid_argument("Mesh1D::uniform: length must be positive");
        std::vector<double> nodes(element_count + 1);
        for (std::size_t i = 0; i <= element_count; ++i)
            nodes[i] = length * static_cast<double>(i) / static_cast<double>(element_count);
        nodes.front() = 0.0;
        nodes.back() = length;
        return Mesh1D(std::move(nodes));
    }

    std::size_t element_count() const noexcept { return nodes_.size() - 1; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t dof_count() const noexcept { return 2 * nodes_.size(); }
    double length() const noexcept { return nodes_.back(); }
    double node(std::size_t i) const { return nodes_.at(i); }
    double element_size(std::size_t m) const { return nodes_.at(m + 1) - nodes_.at(m); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }

    /// Element containing x. Interior nodes belong to the element on their
    /// right unless prefer_left is set.
    std::size_t find_element(double x, bool prefer_left = false) const {
        const double tol = 1e-12 * length();
        if (x < -tol || x > length() + tol)
            throw std::out_of_range("Mesh1D: x = " + std::to_string(x) + " outside [0, " +
                                    std::to_string(length()) + "]");
        std::size_t m;
        if (prefer_left) {
            auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
            m = static_cast<std::size_t>(it - nodes_.begin());
            m = (m == 0) ? 0 : m - 1;
        } else {
            auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
            m = static_cast<std::size_t>(it - nodes_.begin());
            m = (m == 0) ? 0 : m - 1;
        }
        return std::min(m, element_count() - 1);
    }

private:
    std::vector<double> nodes_;
};

} // namespace beamlab
