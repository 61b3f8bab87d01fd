#pragma once

#include <functional>
#include <random>
#include <vector>

#include "padic/groups.hpp"

namespace padic {

enum class Side { Left, Right };

// A cylinder set pi_n^{-1}(E_n): level n plus a subset of the level-n table,
// kept as sorted ordinals. Immutable; the family must outlive the set.
class CylinderSet {
public:
    CylinderSet(const GroupFamily& family, int level, std::vector<std::uint32_t> members);

    static CylinderSet empty(const GroupFamily& family, int level);
    static CylinderSet full(const GroupFamily& family, int level);

    const GroupFamily& family() const { return *family_; }
    int level() const { return level_; }
    const std::vector<std::uint32_t>& members() const { return members_; }
    std::size_t member_count() const { return members_.size(); }

    // |E_n| / |G_n| as an exact rational.
    Rat measure() const;

    // Same underlying subset re-expressed at a finer level via fibers.
    CylinderSet refine(int target_level) const;

    // Complement at the set's own level (exact in the algebra).
    CylinderSet complement() const;

    CylinderSet unite(const CylinderSet& other) const;
    CylinderSet intersect(const CylinderSet& other) const;
    CylinderSet difference(const CylinderSet& other) const;

    // Left or right translation by (the reduction of) a group element.
    CylinderSet translate(const ResidueMatrix& r, Side side) const;

    // Minimal level at which the set is a union of fibers.
    int canonical_level() const;
    CylinderSet canonicalize() const;

    // Set equality of the underlying subsets (compares at a common level).
    bool same_set(const CylinderSet& other) const;

private:
    const GroupFamily* family_;
    int level_;
    std::vector<std::uint32_t> members_;
};

// The clopen ball B_{-n}(center): the singleton cylinder over the center's
// level-n reduction. NotAGroupElement if the reduction is not in the table.
CylinderSet ball(const GroupFamily& family, const ResidueMatrix& center, int radius_level);

// The non-increasing sequence mu_n(pi_n(E)) for a consistent level-indexed
// family of images, and its infimum over the computed range. image_at(n)
// returns the level-n image as table ordinals; consistency of consecutive
// images under projection is enforced (InconsistentFamily).
struct OuterMeasure {
    std::vector<Rat> sequence;
    Rat infimum;
};
OuterMeasure outer_measure(const GroupFamily& family,
                           const std::function<std::vector<std::uint32_t>(int)>& image_at,
                           int max_level);

// Uniform draw below k, by rejection; mt19937_64 output is standardized, so
// streams are reproducible across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k);

// Uniformly distributed element of the level-N quotient. Uses the table when
// it fits the budget, otherwise a uniform level-1 element refined by lifting
// with uniformly chosen free digits (fibers are equal-size cosets).
ResidueMatrix sample_haar(const GroupFamily& family, int level, std::mt19937_64& rng);

}  // namespace padic
