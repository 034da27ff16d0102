#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gammal/element.hpp"

namespace gammal {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ClosureCaps {
    static constexpr std::size_t permutation = 200000;
    static constexpr std::size_t exact = 20000; // matrix and semilinear kinds
    static constexpr std::size_t table = 4096;  // full Cayley table above this is skipped
};

/// Fully enumerated finite group. Immutable after construction; the product
/// memo behaves as a pure memo, so concurrent queries are safe.
///
/// Element ordering is the breadth-first discovery order with the identity at
/// index 0 (deterministic for a fixed generator list). For groups up to the
/// table cap the full Cayley table is materialized: generator columns come
/// from the closure itself and every other column is composed from its
/// discovery decomposition g = w * s, so no extra ambient products are needed.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    static GroupPtr closure(const std::vector<GroupElement>& generators, std::size_t cap = 0,
                            std::size_t table_cap = ClosureCaps::table);

    /// Table-backed group (quotients, subgroup copies, direct products).
    /// table is row-major |G| x |G| with identity at index 0.
    static GroupPtr from_table(std::vector<std::uint32_t> table, std::size_t order,
                               std::vector<std::uint32_t> generator_indices, std::string tag);

    AmbientKind kind() const { return kind_; }
    std::size_t order() const { return elems_.size(); }
    const GroupElement& element(std::uint32_t i) const;
    const std::string& key_at(std::uint32_t i) const { return keys_[i]; }
    const std::vector<std::uint32_t>& generator_indices() const { return gens_; }
    std::optional<std::uint32_t> index_of_key(const std::string& key) const;
    const std::string& tag() const { return tag_; }

    /// 0 when the kind has no conductor (permutation, abstract).
    unsigned conductor() const { return conductor_; }
    /// Matrix/semilinear dimension, permutation degree, 0 for abstract.
    std::size_t dimension() const { return dimension_; }

    std::uint32_t product(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inverse(std::uint32_t a) const;
    std::uint32_t power(std::uint32_t a, long e) const;
    std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const; // g x g^-1
    std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const; // a b a^-1 b^-1
    std::uint32_t element_order_at(std::uint32_t a) const;
    std::uint64_t exponent() const; // lcm of element orders

    bool table_complete() const { return !table_.empty(); }

private:
    FiniteGroup() = default;

    void build_table(const std::vector<std::vector<std::uint32_t>>& gen_cols,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& discovery);
    void ensure_order_info(std::uint32_t a) const;

    AmbientKind kind_ = AmbientKind::abstract;
    unsigned conductor_ = 0;
    std::size_t dimension_ = 0;
    std::string tag_;
    std::vector<GroupElement> elems_;
    std::vector<std::string> keys_;
    std::unordered_map<std::string, std::uint32_t> key_index_;
    std::vector<std::uint32_t> gens_;
    std::vector<std::uint32_t> table_; // row-major, empty if above table cap

    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<std::uint64_t, std::uint32_t> product_memo_;
    mutable std::vector<std::uint32_t> order_; // 0 = not yet computed
    mutable std::vector<std::uint32_t> inverse_;
};

/// Subgroup as a sorted set of parent element indices. Construction checks
/// membership bounds, closure under the parent product, and Lagrange.
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<std::uint32_t> indices);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<std::uint32_t>& indices() const { return indices_; }
    std::size_t order() const { return indices_.size(); }
    bool contains(std::uint32_t i) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.indices_ == b.indices_;
    }
    friend bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }

private:
    GroupPtr parent_;
    std::vector<std::uint32_t> indices_;
};

/// Homomorphism given by its full index map; the constructor checks the
/// homomorphism law on every pair, so holding a GroupHom is itself a
/// certificate.
class GroupHom {
public:
    GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<std::uint32_t> map);

    const GroupPtr& domain() const { return domain_; }
    const GroupPtr& codomain() const { return codomain_; }
    const std::vector<std::uint32_t>& map() const { return map_; }
    std::uint32_t apply(std::uint32_t i) const { return map_[i]; }
    bool is_bijective() const;

private:
    GroupPtr domain_;
    GroupPtr codomain_;
    std::vector<std::uint32_t> map_;
};

// ---- operations ----

/// Least k <= cap with g^k = identity (ambient computation, no group needed).
std::uint64_t element_order(const GroupElement& g, std::uint64_t cap);

Subgroup whole_subgroup(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup subgroup_generated(GroupPtr g, const std::vector<std::uint32_t>& seed);
std::uint64_t subgroup_index(const Subgroup& h);
bool is_normal_subgroup(const Subgroup& h);
Subgroup centralizer(GroupPtr g, const std::vector<std::uint32_t>& subset);
Subgroup group_center(GroupPtr g);
Subgroup commutator_subgroup(GroupPtr g, const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(GroupPtr g);
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);
bool subgroup_is_abelian(const Subgroup& h);
bool group_is_abelian(const GroupPtr& g);

/// Quotient by a normal subgroup; elements are cosets with least-index
/// representatives, identity coset first. Returns the group and the natural
/// projection.
std::pair<GroupPtr, GroupHom> quotient_group(GroupPtr g, const Subgroup& n);

Subgroup hom_kernel(const GroupHom& f);
Subgroup hom_image_subgroup(const GroupHom& f, const Subgroup& a);
Subgroup hom_preimage_subgroup(const GroupHom& f, const Subgroup& b);

/// Extend images of the stored generator list to a verified homomorphism.
GroupHom hom_from_generators(GroupPtr domain, GroupPtr codomain,
                             const std::vector<std::uint32_t>& generator_images);

/// The complete subgroup lattice: cyclic subgroups, then pairwise joins to a
/// fixed point; sorted by order, then lexicographic index set.
std::vector<Subgroup> all_subgroups(GroupPtr g, std::size_t order_cap = 2000);

/// All bijective homomorphisms G -> G, sorted by index map.
std::vector<GroupHom> automorphism_group(GroupPtr g, std::size_t order_cap = 256);

/// Lexicographically first minimal generating set (empty for the trivial group).
std::vector<std::uint32_t> min_generating_set(GroupPtr g);
unsigned min_generators(GroupPtr g);

/// Copy a subgroup into its own table-backed group; second component maps
/// new indices back to parent indices.
std::pair<GroupPtr, std::vector<std::uint32_t>> subgroup_as_group(const Subgroup& h);

/// Small (not necessarily minimal) generating set found greedily; used to
/// keep lattice joins cheap.
std::vector<std::uint32_t> greedy_generating_set(const GroupPtr& g,
                                                 const std::vector<std::uint32_t>& elements);

} // namespace gammal
