#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "padic/forms.hpp"
#include "padic/matrix.hpp"
#include "padic/rotation.hpp"

namespace padic {

// Which compact rotation group: d=2 with one of the three binary labels, or
// d=3 (label Plus3).
struct GroupDescriptor {
    int d;
    KappaLabel kappa;
    std::int64_t p;

    std::string name() const;
    DiagonalForm form() const;
    friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
        return a.d == b.d && a.kappa == b.kappa && a.p == b.p;
    }
};

GroupDescriptor descriptor_2d(KappaLabel kappa, OddPrime p);
GroupDescriptor descriptor_3d(OddPrime p);

// Hard caps with explicit errors, never silent truncation.
struct Budgets {
    std::uint64_t max_table = 200000;
    std::uint64_t max_candidates = 200000000;

    // Environment overrides: PADICROT_MAX_TABLE, PADICROT_MAX_CANDIDATES.
    static Budgets from_env();
};

// Closed-form order: 2p^n (kappa in {p,up}), p^{n-1}(p+1) (kappa = -v),
// 2p^{3n-1}(p+1) (d=3).
Int order_formula(const GroupDescriptor& desc, int level);

// Fully enumerated finite quotient at one level. Elements sorted by
// canonical encoding, so iteration order and dumps are byte-stable.
class GroupTable {
public:
    GroupTable(GroupDescriptor desc, int level, std::vector<ResidueMatrix> elements);

    const GroupDescriptor& descriptor() const { return desc_; }
    int level() const { return level_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(elements_.size()); }
    const ResidueMatrix& at(std::uint32_t i) const { return elements_[i]; }

    std::optional<std::uint32_t> find(const ResidueMatrix& m) const;
    std::uint32_t index_of(const ResidueMatrix& m) const;  // NotAGroupElement
    std::uint32_t identity() const { return identity_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;  // ClosureViolation on a miss
    std::uint32_t inv(std::uint32_t a) const;

private:
    GroupDescriptor desc_;
    int level_;
    std::vector<ResidueMatrix> elements_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::uint32_t identity_;
};

// Parametrized enumeration of the d=2 quotient: all rot2 images over both
// branches, duplicate-free by construction; size checked against the closed
// form.
GroupTable enumerate_G2(KappaLabel kappa, OddPrime p, int level, const Budgets& budgets = {});

// d=3 quotient by composing every Cardano triple and deduplicating. The
// dedup multiplicity must be exactly 2 for every element (checked).
GroupTable enumerate_G3(OddPrime p, int level, const Budgets& budgets = {});

// enumerate_G3 plus, for every element, its (exactly two) Cardano triples.
struct CardanoScan {
    std::shared_ptr<const GroupTable> table;
    std::vector<std::vector<CardanoTriple>> triples;  // by table ordinal
};
CardanoScan cardano_scan(OddPrime p, int level, const Budgets& budgets = {});

// The independent oracle: exhaustive scan of all d x d matrices over
// Z/p^nZ for the defining conditions L^T A L == A, det L == 1. Parallel over
// a partition of the leading column's digit space; results merged and
// sorted. Budgeted by the full candidate count p^(n d^2).
GroupTable brute_force_Gtilde(const GroupDescriptor& desc, int level, const Budgets& budgets = {});

// Dispatch on descriptor.
GroupTable enumerate_table(const GroupDescriptor& desc, int level, const Budgets& budgets = {});

// Surjective projection between two levels of the same family, with fibers.
struct FiberMap {
    int from_level;
    int to_level;
    std::vector<std::uint32_t> image;                // from-ordinal -> to-ordinal
    std::vector<std::vector<std::uint32_t>> fibers;  // to-ordinal -> from-ordinals
};
FiberMap project_group(const GroupTable& from, const GroupTable& to);

// Lazily built, cached tower of tables plus fiber maps for one descriptor.
// Tables are immutable once built; the cache is internally locked.
class GroupFamily {
public:
    explicit GroupFamily(GroupDescriptor desc, Budgets budgets = {});

    const GroupDescriptor& descriptor() const { return desc_; }
    const Budgets& budgets() const { return budgets_; }
    Int order(int level) const { return order_formula(desc_, level); }

    const GroupTable& table(int level) const;
    const FiberMap& fibers(int coarse_level, int fine_level) const;
    std::uint32_t project_index(int from_level, std::uint32_t index, int to_level) const;

private:
    GroupDescriptor desc_;
    Budgets budgets_;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const GroupTable>> tables_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const FiberMap>> fiber_maps_;
};

}  // namespace padic
