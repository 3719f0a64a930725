#pragma once

#include <cstdint>
#include <vector>

#include "spectile/group.hpp"

namespace spectile {

/// An ordered, duplicate-free list of group elements. Doubles as an integer
/// matrix whose columns are the points (see column accessors in the
/// Hadamard module). Spectra are PointSets of characters.
class PointSet {
public:
    PointSet() = default;

    /// Validates membership and rejects duplicates.
    PointSet(GroupSpec group, std::vector<GroupElement> points);

    /// Points given by their mixed-radix indices.
    static PointSet from_indices(const GroupSpec& group, const std::vector<std::int64_t>& indices);

    /// Convenience for cyclic groups: Z_n points from plain integers.
    static PointSet from_residues(const GroupSpec& group, const std::vector<std::int64_t>& values);

    const GroupSpec& group() const { return group_; }
    const std::vector<GroupElement>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const GroupElement& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const GroupElement& x) const;

    /// Mixed-radix indices of the points, in point order.
    std::vector<std::int64_t> indices() const;

    /// Same point set with every point shifted by `delta`.
    PointSet translated(const GroupElement& delta) const;

    /// Set equality regardless of point order (same group required).
    bool same_set(const PointSet& other) const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.group_ == b.group_ && a.points_ == b.points_;
    }

private:
    GroupSpec group_;
    std::vector<GroupElement> points_;
    std::vector<std::int64_t> sorted_indices_; // for membership tests
};

/// All elements of the group in index order. Refuses groups beyond the
/// enumeration cap.
PointSet full_group_set(const GroupSpec& g);

/// The difference set {a - b : a, b in S}, in ascending index order.
PointSet difference_set(const PointSet& s);

/// Complement of S in its group, ascending index order. Cap-checked.
PointSet complement_set(const PointSet& s);

/// Union of two point sets over the same group, ascending index order.
PointSet union_sets(const PointSet& a, const PointSet& b);

} // namespace spectile
