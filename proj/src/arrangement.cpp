#include "discrim/arrangement.hpp"

#include "discrim/combinatorics.hpp"

#include <set>

namespace discrim {

Arrangement::Arrangement(std::size_t dimension, Field field, std::vector<Hyperplane> hyperplanes)
    : dimension_(dimension), field_(field), hyperplanes_(std::move(hyperplanes)) {
    std::set<std::string> labels;
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        const Hyperplane& h = hyperplanes_[i];
        if (h.normal.size() != dimension_)
            throw PreconditionError("bad_dimension",
                                    "hyperplane " + h.label + " has a normal of length " +
                                        std::to_string(h.normal.size()) + ", expected " + std::to_string(dimension_),
                                    {i});
        if (is_zero(h.normal)) throw PreconditionError("zero_normal", "hyperplane " + h.label + " has a zero normal", {i});
        for (const Scalar& s : h.normal) {
            if (!field_.admits(s))
                throw PreconditionError("field_mismatch", "hyperplane " + h.label + " uses a scalar outside the field", {i});
        }
        if (!field_.admits(h.offset))
            throw PreconditionError("field_mismatch", "hyperplane " + h.label + " uses a scalar outside the field", {i});
        if (!labels.insert(h.label).second)
            throw PreconditionError("duplicate_label", "duplicate hyperplane label " + h.label, {i});
    }
}

Arrangement Arrangement::from_normals(std::size_t dimension, const std::vector<Vector>& normals, Field field) {
    std::vector<Hyperplane> hs;
    hs.reserve(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) hs.push_back({normals[i], Scalar{}, std::to_string(i + 1)});
    return Arrangement(dimension, field, std::move(hs));
}

std::vector<Vector> Arrangement::normals() const {
    std::vector<Vector> out;
    out.reserve(hyperplanes_.size());
    for (const Hyperplane& h : hyperplanes_) out.push_back(h.normal);
    return out;
}

Vector Arrangement::offsets() const {
    Vector out;
    out.reserve(hyperplanes_.size());
    for (const Hyperplane& h : hyperplanes_) out.push_back(h.offset);
    return out;
}

GenericityReport is_generic(const Arrangement& a) {
    GenericityReport report;
    const std::size_t k = a.dimension();
    const std::size_t n = a.size();
    // Scanning p upward returns a violating set none of whose proper subsets violates.
    for (std::size_t p = 1; p <= std::min(k, n) && report.generic; ++p) {
        for_each_k_subset(n, p, [&](const Subset& s) {
            std::vector<Vector> rows;
            for (std::size_t i : s) rows.push_back(a[i].normal);
            if (rank(Matrix::from_rows(rows, k)) != p) {
                report.generic = false;
                report.witness = s;
                return false;
            }
            return true;
        });
    }
    return report;
}

void require_generic(const Arrangement& a) {
    GenericityReport r = is_generic(a);
    if (r.generic) return;
    std::string names;
    for (std::size_t i : r.witness) names += (names.empty() ? "" : ",") + a[i].label;
    throw PreconditionError("not_generic", "arrangement is not generic: hyperplanes {" + names + "} are dependent",
                            r.witness);
}

Arrangement translate(const Arrangement& a, std::span<const Scalar> shift) {
    if (shift.size() != a.size()) throw std::invalid_argument("translate: shift length differs from arrangement size");
    std::vector<Hyperplane> hs = a.hyperplanes();
    for (std::size_t i = 0; i < hs.size(); ++i) hs[i].offset += shift[i];
    return Arrangement(a.dimension(), a.field(), std::move(hs));
}

std::vector<ProjectiveFlat> trace_at_infinity(const Arrangement& a) {
    std::vector<ProjectiveFlat> out;
    out.reserve(a.size());
    for (const Hyperplane& h : a.hyperplanes()) out.push_back(canonical_projective(h.normal));
    return out;
}

}  // namespace discrim
