#pragma once

#include "ordhyp/exact_linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ordhyp {

/// Primitive integer representative of a nonzero rational vector: a positive
/// multiple of v with coprime integer entries whose first nonzero entry is
/// positive. Throws Error{ZeroVector}.
std::vector<Integer> canonicalize(std::span<const Rational> v);
std::vector<Integer> canonicalize(std::vector<Integer> v);

namespace detail {

// Homogeneous vector held in canonical primitive form. Two values compare
// equal iff they represent the same projective object.
template <class Tag>
class Homogeneous {
public:
    Homogeneous() = default;
    explicit Homogeneous(std::span<const Rational> v)
        : coords_(canonicalize(v))
    {
    }
    explicit Homogeneous(std::vector<Integer> v)
        : coords_(canonicalize(std::move(v)))
    {
    }

    std::size_t size() const noexcept { return coords_.size(); }
    /// Projective dimension d of the ambient PG(d).
    std::size_t dim() const noexcept { return coords_.size() - 1; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const Homogeneous& a, const Homogeneous& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Integer> coords_;
};

struct PointTag;
struct HyperplaneTag;

} // namespace detail

using ProjectivePoint = detail::Homogeneous<detail::PointTag>;
using Hyperplane = detail::Homogeneous<detail::HyperplaneTag>;

ProjectivePoint make_point(std::initializer_list<long> coords);

/// Exact h . p == 0. Throws Error{DimensionMismatch}.
bool incident(const Hyperplane& h, const ProjectivePoint& p);

/// The hyperplane through d points of PG(d). Throws Error{Degenerate} when
/// the points have rank < d, Error{DimensionMismatch} on wrong arity.
Hyperplane spanning_hyperplane(std::span<const ProjectivePoint> points);

/// An ordered set of distinct points of PG(dim).
class Configuration {
public:
    Configuration() = default;
    /// Canonical forms are taken on entry; duplicates throw
    /// Error{DuplicatePoint} with the offending index pair as witness.
    Configuration(std::size_t dim, std::vector<ProjectivePoint> points, std::string label = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
    const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::string& label() const noexcept { return label_; }

    Configuration without(std::size_t index) const;
    Configuration permuted(std::span<const std::size_t> order) const;

    friend bool operator==(const Configuration& a, const Configuration& b)
    {
        return a.dim_ == b.dim_ && a.points_ == b.points_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<ProjectivePoint> points_;
    std::string label_;
};

struct GeneralPositionReport {
    bool full_span = false;
    bool general_position = false;
    /// A d-subset of rank < d when general_position is false.
    std::vector<std::size_t> witness;

    bool ok() const noexcept { return full_span && general_position; }
};

/// Checks rank(S) = d+1 and that every one of the C(n,d) d-subsets has rank d.
GeneralPositionReport validate_general_position(const Configuration& c);

/// Invertible (d+1) x (d+1) rational matrix acting on column vectors.
class ProjectiveMap {
public:
    /// Throws Error{SingularMap} when det(matrix) == 0.
    explicit ProjectiveMap(Matrix matrix);

    const Matrix& matrix() const noexcept { return matrix_; }
    std::size_t dim() const noexcept { return matrix_.rows() - 1; }

    ProjectivePoint operator()(const ProjectivePoint& p) const;

private:
    Matrix matrix_;
};

Configuration transform(const Configuration& c, const ProjectiveMap& m);

/// Projection of S from S[index] into PG(d-1). Let k be the first nonzero
/// coordinate of x = S[index]; each other y becomes y - (y_k / x_k) x with
/// coordinate k deleted. Point order is kept, minus the centre.
///
/// Hyperplanes of PG(d-1) through projected points correspond to hyperplanes
/// of PG(d) through x and the originals, so the ordinary hyperplanes of the
/// image are the ordinary hyperplanes of S through x.
///
/// Throws Error{UnsupportedDimension} for d < 3, Error{IndexOutOfRange}, and
/// Error{DuplicateProjection} when two points are collinear with x.
Configuration project_from_point(const Configuration& c, std::size_t index);

} // namespace ordhyp
