#pragma once

#include "discrim/errors.hpp"
#include "discrim/exactfield.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace discrim {

/// Field shared by every scalar of an arrangement: Q (radicand 0) or Q(sqrt(d)).
struct Field {
    long radicand = 0;
    bool is_rational() const noexcept { return radicand == 0; }
    bool admits(const Scalar& s) const noexcept { return s.is_rational() || s.radicand() == radicand; }
    friend bool operator==(const Field&, const Field&) = default;
};

/// The affine hyperplane {x : normal . x = offset}.
struct Hyperplane {
    Vector normal;
    Scalar offset;
    std::string label;
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/*
 * Ordered list of affine hyperplanes in k-space. The order is meaningful: it
 * fixes the coordinate system of the space of parallel translates, so index i
 * of a translate vector always refers to hyperplanes()[i].
 */
class Arrangement {
public:
    Arrangement() = default;
    Arrangement(std::size_t dimension, Field field, std::vector<Hyperplane> hyperplanes);

    /// Builds an arrangement with labels "1".."n" and zero offsets.
    static Arrangement from_normals(std::size_t dimension, const std::vector<Vector>& normals, Field field = {});

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return hyperplanes_.size(); }
    const Field& field() const noexcept { return field_; }
    const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
    std::vector<Vector> normals() const;
    Vector offsets() const;

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    std::size_t dimension_ = 0;
    Field field_;
    std::vector<Hyperplane> hyperplanes_;
};

struct GenericityReport {
    bool generic = true;
    /// Minimal violating index set (0-based) when not generic.
    std::vector<std::size_t> witness;
};

GenericityReport is_generic(const Arrangement& a);

/// Throws PreconditionError("not_generic") carrying the witness.
void require_generic(const Arrangement& a);

/// Hyperplane i becomes {x : normal_i . x = offset_i + shift_i}.
Arrangement translate(const Arrangement& a, std::span<const Scalar> shift);

/// Canonical homogeneous coefficient vector of a projective flat.
using ProjectiveFlat = Vector;

/// The trace of each hyperplane on the hyperplane at infinity: its normal up to scale.
std::vector<ProjectiveFlat> trace_at_infinity(const Arrangement& a);

}  // namespace discrim
