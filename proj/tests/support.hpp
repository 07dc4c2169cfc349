#pragma once

#include "discrim/arrangement.hpp"
#include "discrim/completion.hpp"
#include "discrim/io.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace discrim;

inline std::string data_path(const std::string& name) { return std::string(DISCRIM_DATA_DIR) + "/" + name; }

inline Arrangement load(const std::string& name) { return load_arrangement(data_path(name)); }

inline Arrangement lines_from(const std::vector<std::vector<long>>& normals) {
    std::vector<Vector> ns;
    for (const auto& v : normals) ns.push_back({Scalar(v[0]), Scalar(v[1])});
    return Arrangement::from_normals(2, ns);
}

inline const std::vector<std::vector<long>> kExample31 = {{-2, 2}, {-3, 4}, {0, 6}, {2, 4}, {3, 2}, {-1, 2}};
inline const std::vector<std::vector<long>> kExample32 = {{-2, 2}, {-2, 4}, {0, 6}, {2, 4}, {2, 2}, {1, 0}};

/// Generic arrangement of n lines with integer normals in [-bound, bound].
inline Arrangement random_generic(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    while (true) {
        std::vector<Vector> ns;
        for (std::size_t i = 0; i < n; ++i) ns.push_back({Scalar(d(rng)), Scalar(d(rng))});
        Arrangement a = [&] {
            try {
                return Arrangement::from_normals(2, ns);
            } catch (const PreconditionError&) {
                return Arrangement();
            }
        }();
        if (a.size() == n && is_generic(a).generic) return a;
    }
}

/// 1-based families like {{1,2,3},...} to sorted 0-based subsets.
inline std::vector<Subset> zero_based(const std::vector<std::vector<std::size_t>>& fam) {
    std::vector<Subset> out;
    for (const auto& s : fam) {
        Subset z;
        for (std::size_t i : s) z.push_back(i - 1);
        out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ProjectiveFlat> pappus_p() { return planar_lines(load("pappus-p.json")); }
inline std::vector<ProjectiveFlat> pappus_pc() { return planar_lines(load("pappus-pc.json")); }

inline const Involution& sigma1() {
    static const Involution s = Involution::parse("(1 2)(3 5)(4 6)", 6);
    return s;
}
inline const Involution& sigma2() {
    static const Involution s = Involution::parse("(1 3)(2 4)(5 6)", 6);
    return s;
}
inline const Involution& sigma3() {
    static const Involution s = Involution::parse("(1 6)(2 5)(3 4)", 6);
    return s;
}

}  // namespace testing
