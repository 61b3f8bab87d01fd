#include "padic/haar.hpp"

#include <algorithm>
#include <limits>

#include "padic/hensel.hpp"

namespace padic {

namespace {

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v, std::uint32_t bound) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty() && v.back() >= bound)
        throw StructureError("cylinder member ordinal out of range");
    return v;
}

void require_same_family(const CylinderSet& a, const CylinderSet& b) {
    if (&a.family() != &b.family() ||
        !(a.family().descriptor() == b.family().descriptor()))
        throw StructureError("cylinder sets from different descriptors");
}

}  // namespace

CylinderSet::CylinderSet(const GroupFamily& family, int level, std::vector<std::uint32_t> members)
    : family_(&family), level_(level),
      members_(sorted_unique(std::move(members), family.table(level).size())) {}

CylinderSet CylinderSet::empty(const GroupFamily& family, int level) {
    return CylinderSet(family, level, {});
}

CylinderSet CylinderSet::full(const GroupFamily& family, int level) {
    std::vector<std::uint32_t> all(family.table(level).size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    return CylinderSet(family, level, std::move(all));
}

Rat CylinderSet::measure() const {
    return Rat(Int(members_.size()), Int(family_->table(level_).size()));
}

CylinderSet CylinderSet::refine(int target_level) const {
    if (target_level < level_) throw StructureError("refine target must be >= current level");
    if (target_level == level_) return *this;
    const FiberMap& map = family_->fibers(level_, target_level);
    std::vector<std::uint32_t> out;
    for (std::uint32_t m : members_) {
        const auto& fiber = map.fibers[m];
        out.insert(out.end(), fiber.begin(), fiber.end());
    }
    return CylinderSet(*family_, target_level, std::move(out));
}

CylinderSet CylinderSet::complement() const {
    std::uint32_t n = family_->table(level_).size();
    std::vector<std::uint32_t> out;
    out.reserve(n - members_.size());
    std::size_t pos = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (pos < members_.size() && members_[pos] == i) {
            ++pos;
        } else {
            out.push_back(i);
        }
    }
    return CylinderSet(*family_, level_, std::move(out));
}

CylinderSet CylinderSet::unite(const CylinderSet& other) const {
    require_same_family(*this, other);
    int l = std::max(level_, other.level_);
    CylinderSet a = refine(l), b = other.refine(l);
    std::vector<std::uint32_t> out;
    std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                   std::back_inserter(out));
    return CylinderSet(*family_, l, std::move(out));
}

CylinderSet CylinderSet::intersect(const CylinderSet& other) const {
    require_same_family(*this, other);
    int l = std::max(level_, other.level_);
    CylinderSet a = refine(l), b = other.refine(l);
    std::vector<std::uint32_t> out;
    std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                          b.members_.end(), std::back_inserter(out));
    return CylinderSet(*family_, l, std::move(out));
}

CylinderSet CylinderSet::difference(const CylinderSet& other) const {
    require_same_family(*this, other);
    int l = std::max(level_, other.level_);
    CylinderSet a = refine(l), b = other.refine(l);
    std::vector<std::uint32_t> out;
    std::set_difference(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                        std::back_inserter(out));
    return CylinderSet(*family_, l, std::move(out));
}

CylinderSet CylinderSet::translate(const ResidueMatrix& r, Side side) const {
    if (r.level() < level_)
        throw StructureError("translator must carry at least the set's level");
    const GroupTable& table = family_->table(level_);
    std::uint32_t t = table.index_of(r.project(level_));
    std::vector<std::uint32_t> out;
    out.reserve(members_.size());
    for (std::uint32_t m : members_)
        out.push_back(side == Side::Left ? table.mul(t, m) : table.mul(m, t));
    return CylinderSet(*family_, level_, std::move(out));
}

int CylinderSet::canonical_level() const {
    return canonicalize().level();
}

CylinderSet CylinderSet::canonicalize() const {
    CylinderSet current = *this;
    while (current.level_ > 1) {
        const FiberMap& map = family_->fibers(current.level_ - 1, current.level_);
        // project, then test whether the full preimage reproduces the set
        std::vector<std::uint32_t> projected;
        projected.reserve(current.members_.size());
        for (std::uint32_t m : current.members_) projected.push_back(map.image[m]);
        std::sort(projected.begin(), projected.end());
        projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
        std::size_t preimage_size = 0;
        for (std::uint32_t q : projected) preimage_size += map.fibers[q].size();
        if (preimage_size != current.members_.size()) break;
        current = CylinderSet(*family_, current.level_ - 1, std::move(projected));
    }
    return current;
}

bool CylinderSet::same_set(const CylinderSet& other) const {
    require_same_family(*this, other);
    int l = std::max(level_, other.level_);
    return refine(l).members() == other.refine(l).members();
}

CylinderSet ball(const GroupFamily& family, const ResidueMatrix& center, int radius_level) {
    if (center.level() < radius_level)
        throw StructureError("ball center must carry at least the radius level");
    const GroupTable& table = family.table(radius_level);
    std::uint32_t i = table.index_of(center.project(radius_level));
    return CylinderSet(family, radius_level, {i});
}

OuterMeasure outer_measure(const GroupFamily& family,
                           const std::function<std::vector<std::uint32_t>(int)>& image_at,
                           int max_level) {
    if (max_level < 1) throw StructureError("outer_measure needs max_level >= 1");
    OuterMeasure out;
    std::vector<std::uint32_t> prev;
    for (int n = 1; n <= max_level; ++n) {
        std::vector<std::uint32_t> img = sorted_unique(image_at(n), family.table(n).size());
        if (n > 1) {
            // the coarser image must be exactly the projection of the finer
            std::vector<std::uint32_t> projected;
            const FiberMap& map = family.fibers(n - 1, n);
            projected.reserve(img.size());
            for (std::uint32_t m : img) projected.push_back(map.image[m]);
            std::sort(projected.begin(), projected.end());
            projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
            if (projected != prev)
                throw InconsistentFamily("image at level " + std::to_string(n) +
                                         " does not project onto the level-" +
                                         std::to_string(n - 1) + " image");
        }
        out.sequence.push_back(Rat(Int(img.size()), Int(family.table(n).size())));
        prev = std::move(img);
    }
    out.infimum = out.sequence.back();
    for (const Rat& r : out.sequence) out.infimum = std::min(out.infimum, r);
    return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
    if (k == 0) throw StructureError("uniform_below(0)");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % k;
}

ResidueMatrix sample_haar(const GroupFamily& family, int level, std::mt19937_64& rng) {
    Int order = family.order(level);
    if (order <= family.budgets().max_table) {
        const GroupTable& table = family.table(level);
        return table.at(static_cast<std::uint32_t>(uniform_below(rng, table.size())));
    }
    // Uniform base element, then uniform free digits up the tower: fibers
    // are equal-size cosets, so the result is uniform at the target level.
    const GroupTable& base = family.table(1);
    ResidueMatrix start = base.at(static_cast<std::uint32_t>(uniform_below(rng, base.size())));
    LiftChooser chooser([&rng](std::int64_t p) {
        return static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(p)));
    });
    return lift_to_precision(start, family.descriptor().kappa, level, chooser);
}

}  // namespace padic
