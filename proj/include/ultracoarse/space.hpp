#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ultracoarse {

using Dist = std::int64_t;

/// Refusal thrown by brute-force helpers whose input exceeds a size guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite set of admissible distance values. Strictly increasing, first entry 0.
struct DistanceSet {
    std::vector<Dist> values;

    std::size_t level_count() const { return values.size() - 1; }
    Dist max_value() const { return values.back(); }
    bool contains(Dist v) const;
    bool subset_of(const DistanceSet& other) const;
    bool operator==(const DistanceSet&) const = default;
};

/// Validates and normalizes a distance-value set; throws std::invalid_argument.
DistanceSet make_distance_set(std::vector<Dist> values);

/// Finite metric space with real-valued distances. Input side of ultrametrize.
struct FiniteMetricSpace {
    std::vector<std::string> points;
    std::vector<std::vector<double>> dist;

    std::size_t size() const { return points.size(); }
    double at(std::size_t i, std::size_t j) const { return dist[i][j]; }
};

/// Finite space with an integer distance matrix. Structural invariants
/// (square, symmetric, zero diagonal, positive off-diagonal, unique labels)
/// are enforced by make_space; the strong triangle inequality is checked
/// separately by validate_ultrametric so that defective matrices can still
/// be represented and reported on.
struct FiniteUltrametricSpace {
    std::vector<std::string> points;
    std::vector<std::vector<Dist>> dist;
    std::optional<std::size_t> basepoint;
    std::optional<DistanceSet> dset;  // declared distance-value set, if any

    std::size_t size() const { return points.size(); }
    Dist at(std::size_t i, std::size_t j) const { return dist[i][j]; }
    Dist diameter() const;
    std::optional<std::size_t> index_of(const std::string& label) const;
};

FiniteUltrametricSpace make_space(std::vector<std::string> points,
                                  std::vector<std::vector<Dist>> dist,
                                  std::optional<std::size_t> basepoint = {},
                                  std::optional<DistanceSet> dset = {});

FiniteMetricSpace make_metric_space(std::vector<std::string> points,
                                    std::vector<std::vector<double>> dist);

/// Reinterprets an integer-distance space as a plain metric space.
FiniteMetricSpace to_metric(const FiniteUltrametricSpace& s);

/// A space together with a distinguished point.
struct PointedSpace {
    FiniteUltrametricSpace space;
    std::size_t basepoint = 0;

    std::size_t size() const { return space.size(); }
    Dist at(std::size_t i, std::size_t j) const { return space.at(i, j); }
};

/// Points the space at `base` (or at its stored basepoint / index 0).
PointedSpace pointed(FiniteUltrametricSpace s);
PointedSpace pointed(FiniteUltrametricSpace s, std::size_t base);

/// Disjoint nonempty index blocks covering {0, ..., n-1}. Canonical form:
/// each block sorted ascending, blocks ordered by least element.
struct Partition {
    std::vector<std::vector<std::size_t>> blocks;

    std::size_t count() const { return blocks.size(); }
};

void validate_partition(const Partition& p, std::size_t n);

/// Restriction of a space to a subset of its points (order preserved).
FiniteUltrametricSpace subspace(const FiniteUltrametricSpace& s,
                                const std::vector<std::size_t>& indices);

}  // namespace ultracoarse
