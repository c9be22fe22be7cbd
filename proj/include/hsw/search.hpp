#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsw/graded.hpp"
#include "hsw/operators.hpp"
#include "hsw/representation.hpp"
#include "hsw/superalgebra.hpp"
#include "hsw/ybe.hpp"

namespace hsw {

/// Enumeration cap: 3^12 candidates unless HSW_MAX_UNIVERSE overrides it (at most 10^7).
std::uint64_t universe_cap();

struct SearchOptions {
    unsigned jobs = 1;
    std::uint64_t cap = universe_cap();
};

/// Throws UniverseTooLarge when `size` exceeds `cap`.
void require_within_cap(std::uint64_t size, std::uint64_t cap, const std::string& what);

/// Indices in [0, size) accepted by `pred`, in increasing order. Work is split into
/// contiguous ranges across `jobs` workers and merged in rank order.
std::vector<std::uint64_t> parallel_filter(std::uint64_t size, unsigned jobs,
                                           const std::function<bool(std::uint64_t)>& pred);

/// Mixed-radix decoding of a candidate index into `slots` digits in 0..p−1, last digit fastest.
std::vector<std::uint32_t> decode_digits(std::uint64_t index, std::size_t slots, std::uint32_t p);

/// Candidate count p^slots, or nullopt past 2^63.
std::optional<std::uint64_t> universe_size(std::uint32_t p, std::size_t slots);

/// How the twist of an enumerated algebra is chosen.
enum class TwistMode { identity, diagonal, full };

/// All even maps source → target over a prime field.
class EvenMapUniverse {
public:
    EvenMapUniverse(Field f, GradedSpace source, GradedSpace target);
    std::uint64_t size() const { return size_; }
    std::size_t slots() const { return slots_.size(); }
    EvenLinearMap at(std::uint64_t index) const;

private:
    Field field_;
    GradedSpace source_, target_;
    std::vector<std::pair<std::size_t, std::size_t>> slots_;
    std::uint64_t size_ = 1;
};

/// Even product tensors on a graded space with an enumerated twist.
class AlgebraUniverse {
public:
    /// With `supercommutative`, only c[i][j][·] for i ≤ j is free and the transpose is filled
    /// with the Koszul sign (odd squares vanish outside characteristic 2).
    AlgebraUniverse(Field f, GradedSpace space, TwistMode twist, bool supercommutative);
    std::uint64_t size() const { return size_; }
    std::size_t slots() const { return product_slots_.size() + twist_slots_.size(); }
    SuperAlgebra at(std::uint64_t index) const;

private:
    Field field_;
    GradedSpace space_;
    bool supercommutative_;
    std::vector<std::array<std::size_t, 3>> product_slots_;
    std::vector<std::pair<std::size_t, std::size_t>> twist_slots_;
    std::uint64_t size_ = 1;
};

/// Pairs of even product tensors (≺, ≻) with an enumerated twist.
class DendriformUniverse {
public:
    DendriformUniverse(Field f, GradedSpace space, TwistMode twist);
    std::uint64_t size() const { return size_; }
    DendriformAlgebra at(std::uint64_t index) const;

private:
    Field field_;
    GradedSpace space_;
    std::vector<std::array<std::size_t, 3>> product_slots_;
    std::vector<std::pair<std::size_t, std::size_t>> twist_slots_;
    std::uint64_t size_ = 1;
};

/// Action tensors π and module twists β over a fixed base algebra.
class RepresentationUniverse {
public:
    RepresentationUniverse(SuperAlgebra base, GradedSpace module, TwistMode twist);
    std::uint64_t size() const { return size_; }
    Representation at(std::uint64_t index) const;

private:
    SuperAlgebra base_;
    GradedSpace module_;
    std::vector<std::array<std::size_t, 3>> action_slots_;
    std::vector<std::pair<std::size_t, std::size_t>> twist_slots_;
    std::uint64_t size_ = 1;
};

/// Even super-skew tensors on an algebra: r[i][j] free for i < j of equal parity, odd diagonal
/// entries free, even diagonal entries free only in characteristic 2.
class SkewTensorUniverse {
public:
    explicit SkewTensorUniverse(SuperAlgebra algebra);
    std::uint64_t size() const { return size_; }
    TensorElement at(std::uint64_t index) const;

private:
    SuperAlgebra algebra_;
    std::vector<std::pair<std::size_t, std::size_t>> slots_;
    std::uint64_t size_ = 1;
};

struct OOperatorSearch {
    std::uint64_t universe = 0;
    std::vector<std::uint64_t> indices;
    std::vector<EvenLinearMap> maps;
    std::size_t count() const { return maps.size(); }
};

struct YbeSearch {
    std::uint64_t universe = 0;
    std::vector<std::uint64_t> indices;
    std::vector<TensorElement> solutions;
    std::size_t count() const { return solutions.size(); }
};

/// Every even T: V → J passing check_o_operator. Throws Error outside GF(p) and UniverseTooLarge.
OOperatorSearch find_o_operators(const Representation& rep, const SearchOptions& opts = {});

/// Every even super-skew α-stable tensor with vanishing residual.
YbeSearch find_ybe_solutions(const SuperAlgebra& a, const SearchOptions& opts = {});

struct NamedPredicate {
    std::string name;
    std::function<bool(std::uint64_t)> test;
};

struct SetDifference {
    std::string left, right;
    /// Candidates in exactly one of the two sets, with a printable description.
    std::vector<std::pair<std::uint64_t, std::string>> elements;
};

struct EquivalenceReport {
    std::string universe;
    std::uint64_t total = 0;
    /// Predicate name → accepted candidate indices, in predicate order.
    std::vector<std::pair<std::string, std::vector<std::uint64_t>>> sets;
    /// Sets reported for information only; not part of the equality claim.
    std::vector<std::pair<std::string, std::vector<std::uint64_t>>> side_sets;
    std::vector<SetDifference> differences;
    bool passed() const;
};

/// Evaluates every predicate independently on every candidate and compares each set
/// against the first. `side` predicates are tabulated but not compared.
EquivalenceReport equivalence_over(const std::string& universe, std::uint64_t total,
                                   const std::vector<NamedPredicate>& predicates,
                                   const std::function<std::string(std::uint64_t)>& describe,
                                   const SearchOptions& opts = {}, const std::vector<NamedPredicate>& side = {});

/// O-operator ⟺ graph subalgebra ⟺ Nijenhuis N_T ⟺ lift is a skew α-stable solution
/// ⟺ lift residual vanishes ⟺ T_r of the lift is an O-operator for the coadjoint module of J ⋉ V*.
EquivalenceReport o_operator_equivalence(const Representation& rep, const SearchOptions& opts = {});

/// {skew α-stable r : residual = 0} = {r : T_r is an O-operator for the coadjoint module}.
EquivalenceReport ybe_equivalence(const SuperAlgebra& a, const SearchOptions& opts = {});

/// check_representation ⟺ semidirect product is Hom-Jordan with multiplicative twist,
/// over all (π, β) on `module` for every multiplicative Hom-Jordan base in `bases`.
EquivalenceReport module_equivalence(const AlgebraUniverse& bases, const GradedSpace& module, TwistMode twist,
                                     const SearchOptions& opts = {});

/// Implication sweep: for each rule, every candidate in `premise` must also be in `conclusion`.
struct ImplicationRule {
    std::string name;
    std::vector<std::uint64_t> premise;
    std::vector<std::uint64_t> conclusion;
    /// premise \ conclusion, described.
    std::vector<std::pair<std::uint64_t, std::string>> violations;
};

struct Survey {
    std::string universe;
    std::uint64_t total = 0;
    std::vector<ImplicationRule> rules;
    /// Informational counts, not part of the verdict.
    std::vector<std::pair<std::string, std::uint64_t>> side_counts;
    bool passed() const;
};

/// Coadjoint modules of every regular multiplicative Hom-Jordan algebra in the super-commutative
/// universe on `space` (full twist) satisfy the module axioms.
Survey coadjoint_survey(Field f, const GradedSpace& space, const SearchOptions& opts = {});

/// Structure transport over the full product-tensor universe on `space`: dendriform → pre-Jordan,
/// pre-Jordan → Jordan, alternative → Jordan, left-multiplication equivalence, and agreement of the
/// two pre-Jordan forms on multiplicative instances. `dendriform_twist` selects the twist mode of
/// the dendriform universe, `twist` that of the algebra universe.
Survey transport_survey(Field f, const GradedSpace& space, TwistMode twist, TwistMode dendriform_twist,
                        const SearchOptions& opts = {});

/// Canonical text of an algebra, used for universe hashes.
std::string canonical_text(const SuperAlgebra& a);
std::string canonical_text(const Representation& rho);

/// 64-bit FNV-1a as 16 hex digits.
std::string spec_hash(const std::string& spec);

/// Frozen regression counts: lines `<hash> <predicate> <count>`.
class FixtureStore {
public:
    FixtureStore() = default;
    static FixtureStore load(const std::string& path);
    void save(const std::string& path) const;

    std::optional<std::uint64_t> get(const std::string& hash, const std::string& predicate) const;
    void set(const std::string& hash, const std::string& predicate, std::uint64_t count);

private:
    std::map<std::pair<std::string, std::string>, std::uint64_t> counts_;
};

} // namespace hsw
