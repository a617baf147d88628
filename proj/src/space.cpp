#include "ultracoarse/space.hpp"

#include <algorithm>
#include <set>

namespace ultracoarse {

bool DistanceSet::contains(Dist v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

bool DistanceSet::subset_of(const DistanceSet& other) const {
    return std::includes(other.values.begin(), other.values.end(),
                         values.begin(), values.end());
}

DistanceSet make_distance_set(std::vector<Dist> values) {
    if (values.empty())
        throw std::invalid_argument("distance set: must contain 0");
    if (values.front() != 0)
        throw std::invalid_argument("distance set: first value must be 0");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1])
            throw std::invalid_argument("distance set: values must be strictly increasing");
    return DistanceSet{std::move(values)};
}

Dist FiniteUltrametricSpace::diameter() const {
    Dist d = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            d = std::max(d, dist[i][j]);
    return d;
}

std::optional<std::size_t> FiniteUltrametricSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == label) return i;
    return std::nullopt;
}

namespace {

void check_labels(const std::vector<std::string>& points) {
    if (points.empty())
        throw std::invalid_argument("space: must contain at least one point");
    std::set<std::string> seen;
    for (const auto& p : points)
        if (!seen.insert(p).second)
            throw std::invalid_argument("space: duplicate point label '" + p + "'");
}

template <typename T>
void check_shape(const std::vector<std::string>& points,
                 const std::vector<std::vector<T>>& dist) {
    const std::size_t n = points.size();
    if (dist.size() != n)
        throw std::invalid_argument("space: dist has " + std::to_string(dist.size()) +
                                    " rows for " + std::to_string(n) + " points");
    for (std::size_t i = 0; i < n; ++i)
        if (dist[i].size() != n)
            throw std::invalid_argument("space: dist row " + std::to_string(i) +
                                        " has length " + std::to_string(dist[i].size()));
}

}  // namespace

FiniteUltrametricSpace make_space(std::vector<std::string> points,
                                  std::vector<std::vector<Dist>> dist,
                                  std::optional<std::size_t> basepoint,
                                  std::optional<DistanceSet> dset) {
    check_labels(points);
    check_shape(points, dist);
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i][i] != 0)
            throw std::invalid_argument("space: nonzero diagonal at " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (dist[i][j] < 0)
                throw std::invalid_argument("space: negative entry at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            if (dist[i][j] != dist[j][i])
                throw std::invalid_argument("space: asymmetric at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            if (i != j && dist[i][j] == 0)
                throw std::invalid_argument("space: zero distance between distinct points " +
                                            points[i] + " and " + points[j]);
        }
    }
    if (basepoint && *basepoint >= n)
        throw std::invalid_argument("space: basepoint index out of range");
    if (dset) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!dset->contains(dist[i][j]))
                    throw std::invalid_argument("space: entry " + std::to_string(dist[i][j]) +
                                                " not in the declared distance set");
    }
    return FiniteUltrametricSpace{std::move(points), std::move(dist), basepoint, std::move(dset)};
}

FiniteMetricSpace make_metric_space(std::vector<std::string> points,
                                    std::vector<std::vector<double>> dist) {
    check_labels(points);
    check_shape(points, dist);
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i][i] != 0.0)
            throw std::invalid_argument("metric space: nonzero diagonal at " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (dist[i][j] < 0.0)
                throw std::invalid_argument("metric space: negative entry");
            if (dist[i][j] != dist[j][i])
                throw std::invalid_argument("metric space: asymmetric entry");
            if (i != j && dist[i][j] == 0.0)
                throw std::invalid_argument("metric space: zero distance between distinct points");
        }
    }
    constexpr double kSlack = 1e-9;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (dist[i][j] > dist[i][k] + dist[k][j] + kSlack)
                    throw std::invalid_argument("metric space: triangle inequality fails at (" +
                                                points[i] + "," + points[k] + "," + points[j] + ")");
    return FiniteMetricSpace{std::move(points), std::move(dist)};
}

FiniteMetricSpace to_metric(const FiniteUltrametricSpace& s) {
    std::vector<std::vector<double>> d(s.size(), std::vector<double>(s.size(), 0.0));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            d[i][j] = static_cast<double>(s.dist[i][j]);
    return FiniteMetricSpace{s.points, std::move(d)};
}

PointedSpace pointed(FiniteUltrametricSpace s) {
    const std::size_t base = s.basepoint.value_or(0);
    return pointed(std::move(s), base);
}

PointedSpace pointed(FiniteUltrametricSpace s, std::size_t base) {
    if (base >= s.size())
        throw std::invalid_argument("pointed: basepoint index out of range");
    s.basepoint = base;
    return PointedSpace{std::move(s), base};
}

void validate_partition(const Partition& p, std::size_t n) {
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    for (const auto& block : p.blocks) {
        if (block.empty())
            throw std::invalid_argument("partition: empty block");
        for (std::size_t idx : block) {
            if (idx >= n)
                throw std::invalid_argument("partition: index out of range");
            if (seen[idx])
                throw std::invalid_argument("partition: index " + std::to_string(idx) +
                                            " appears in two blocks");
            seen[idx] = true;
            ++covered;
        }
    }
    if (covered != n)
        throw std::invalid_argument("partition: blocks do not cover the space");
}

FiniteUltrametricSpace subspace(const FiniteUltrametricSpace& s,
                                const std::vector<std::size_t>& indices) {
    std::vector<std::string> pts;
    pts.reserve(indices.size());
    for (std::size_t idx : indices) pts.push_back(s.points[idx]);
    std::vector<std::vector<Dist>> d(indices.size(), std::vector<Dist>(indices.size(), 0));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b)
            d[a][b] = s.dist[indices[a]][indices[b]];
    return make_space(std::move(pts), std::move(d));
}

}  // namespace ultracoarse
