#pragma once

#include "discrim/lattice.hpp"
#include "discrim/planar.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace discrim {

/// Triples of [n] (sorted, 0-based) no two of which share a pair.
struct TripleSystem {
    std::size_t n = 0;
    std::vector<Subset> triples;

    friend bool operator==(const TripleSystem&, const TripleSystem&) = default;
    friend auto operator<=>(const TripleSystem&, const TripleSystem&) = default;
};

/// Throws PreconditionError("bad_triple_system") on malformed triples or a shared pair.
void validate(const TripleSystem& t);

struct EnumerationOptions {
    /// Keep only systems where every element lies in at most this many triples.
    std::optional<std::size_t> degree_cap;
    /// Keep one representative per isomorphism class (lexicographically least relabeling).
    bool canonical = false;
};

/// All systems with m triples on [n], in lexicographic order. Requires n <= 9.
std::vector<TripleSystem> enumerate_systems(std::size_t n, std::size_t m, const EnumerationOptions& options = {});

/// Lexicographically least image of the system under relabeling of [n].
TripleSystem canonical_form(const TripleSystem& t);

struct SystemEvaluation {
    std::size_t rank = 0;
    bool simple = false;
    bool non_very_generic = false;
    /// Multiplicity of closure(T); equals |T| exactly when T is closed.
    std::size_t multiplicity = 0;
    Flat flat;
};

SystemEvaluation evaluate_system(const Arrangement& a, const TripleSystem& t);
SystemEvaluation evaluate_system(const DiscriminantalArrangement& b, const SimplicityOracle& oracle,
                                 const TripleSystem& t);

struct OrchardWitness {
    TripleSystem system;
    Flat flat;
    Arrangement realized;
    IncidenceStats stats;
};

struct OrchardLevel {
    std::size_t m = 0;
    std::size_t found = 0;
};

struct OrchardResult {
    std::size_t m_max = 0;
    std::size_t rank = 0;
    /// Number of closed simple systems of size m_max (witnesses may be truncated).
    std::size_t witness_count = 0;
    std::vector<OrchardWitness> witnesses;
    /// Levels examined, from the combinatorial bound downwards.
    std::vector<OrchardLevel> levels;
};

/*
 * Largest m such that some simple flat of B(n,2,A) of rank <= n-3 contains
 * exactly the hyperplanes D_L of an m-triple system. Every witness is realized
 * by a translate whose census has m triple points and nothing higher.
 * witness_limit = 0 keeps all witnesses.
 */
OrchardResult orchard_max(const Arrangement& a, std::uint64_t seed = kDefaultSeed, std::size_t witness_limit = 0);

}  // namespace discrim
