#include "spectile/point_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectile {

namespace {

void require_enumerable(const GroupSpec& g, const char* what) {
    if (!g.within_cap())
        throw std::invalid_argument(std::string(what) + ": group order exceeds enumeration cap");
}

} // namespace

PointSet::PointSet(GroupSpec group, std::vector<GroupElement> points)
    : group_(std::move(group)), points_(std::move(points)) {
    sorted_indices_.reserve(points_.size());
    for (const auto& p : points_) {
        if (!element_valid(group_, p))
            throw std::invalid_argument("PointSet: point " + format_element(p) +
                                        " not valid in group");
        sorted_indices_.push_back(index_of(group_, p));
    }
    std::sort(sorted_indices_.begin(), sorted_indices_.end());
    if (std::adjacent_find(sorted_indices_.begin(), sorted_indices_.end()) != sorted_indices_.end())
        throw std::invalid_argument("PointSet: duplicate point");
}

PointSet PointSet::from_indices(const GroupSpec& group, const std::vector<std::int64_t>& indices) {
    std::vector<GroupElement> pts;
    pts.reserve(indices.size());
    for (std::int64_t i : indices)
        pts.push_back(element_at(group, i));
    return PointSet(group, std::move(pts));
}

PointSet PointSet::from_residues(const GroupSpec& group, const std::vector<std::int64_t>& values) {
    if (group.dim() != 1)
        throw std::invalid_argument("PointSet::from_residues: group is not cyclic");
    std::vector<GroupElement> pts;
    pts.reserve(values.size());
    for (std::int64_t v : values) {
        std::int64_t r = v % group.moduli[0];
        if (r < 0)
            r += group.moduli[0];
        pts.push_back(GroupElement{r});
    }
    return PointSet(group, std::move(pts));
}

bool PointSet::contains(const GroupElement& x) const {
    if (!element_valid(group_, x))
        return false;
    std::int64_t idx = index_of(group_, x);
    return std::binary_search(sorted_indices_.begin(), sorted_indices_.end(), idx);
}

std::vector<std::int64_t> PointSet::indices() const {
    std::vector<std::int64_t> out;
    out.reserve(points_.size());
    for (const auto& p : points_)
        out.push_back(index_of(group_, p));
    return out;
}

PointSet PointSet::translated(const GroupElement& delta) const {
    std::vector<GroupElement> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_)
        pts.push_back(elem_combine(group_, p, delta, CombineOp::Add));
    return PointSet(group_, std::move(pts));
}

bool PointSet::same_set(const PointSet& other) const {
    return group_ == other.group_ && sorted_indices_ == other.sorted_indices_;
}

PointSet full_group_set(const GroupSpec& g) {
    require_enumerable(g, "full_group_set");
    std::vector<GroupElement> pts;
    pts.reserve(static_cast<std::size_t>(g.order));
    for (std::int64_t i = 0; i < g.order; ++i)
        pts.push_back(element_at(g, i));
    return PointSet(g, std::move(pts));
}

PointSet difference_set(const PointSet& s) {
    const GroupSpec& g = s.group();
    std::vector<std::int64_t> idx;
    for (const auto& a : s.points())
        for (const auto& b : s.points())
            idx.push_back(index_of(g, elem_combine(g, a, b, CombineOp::Sub)));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return PointSet::from_indices(g, idx);
}

PointSet complement_set(const PointSet& s) {
    const GroupSpec& g = s.group();
    require_enumerable(g, "complement_set");
    std::vector<bool> in(static_cast<std::size_t>(g.order), false);
    for (std::int64_t i : s.indices())
        in[static_cast<std::size_t>(i)] = true;
    std::vector<std::int64_t> idx;
    for (std::int64_t i = 0; i < g.order; ++i)
        if (!in[static_cast<std::size_t>(i)])
            idx.push_back(i);
    return PointSet::from_indices(g, idx);
}

PointSet union_sets(const PointSet& a, const PointSet& b) {
    if (!(a.group() == b.group()))
        throw std::invalid_argument("union_sets: groups differ");
    std::vector<std::int64_t> idx = a.indices();
    for (std::int64_t i : b.indices())
        idx.push_back(i);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return PointSet::from_indices(a.group(), idx);
}

} // namespace spectile
