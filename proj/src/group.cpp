#include "gammal/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gammal/kernels.hpp"

namespace gammal {

namespace {

std::size_t default_cap_for(AmbientKind kind) {
    return kind == AmbientKind::permutation ? ClosureCaps::permutation : ClosureCaps::exact;
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

GroupPtr FiniteGroup::closure(const std::vector<GroupElement>& generators, std::size_t cap,
                              std::size_t table_cap) {
    if (generators.empty())
        fail(errc::validation_error, "closure needs at least one generator");
    for (std::size_t i = 1; i < generators.size(); ++i)
        require_compatible(generators[0], generators[i]);
    if (element_kind(generators[0]) == AmbientKind::abstract)
        fail(errc::validation_error, "abstract elements cannot seed a closure");
    if (cap == 0) cap = default_cap_for(element_kind(generators[0]));

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = element_kind(generators[0]);
    g->tag_ = ambient_kind_name(g->kind_);
    if (const auto* p = std::get_if<Permutation>(&generators[0])) {
        g->dimension_ = p->degree();
    } else if (const auto* m = std::get_if<MatrixElement>(&generators[0])) {
        g->dimension_ = m->a.rows();
        g->conductor_ = m->a.conductor();
    } else if (const auto* s = std::get_if<SemilinearElement>(&generators[0])) {
        g->dimension_ = s->a.rows();
        g->conductor_ = s->a.conductor();
    }

    auto intern = [&](GroupElement e) -> std::pair<std::uint32_t, bool> {
        std::string k = element_key(e);
        auto it = g->key_index_.find(k);
        if (it != g->key_index_.end()) return {it->second, false};
        std::uint32_t idx = static_cast<std::uint32_t>(g->elems_.size());
        g->key_index_.emplace(std::move(k), idx);
        g->keys_.push_back(element_key(e));
        g->elems_.push_back(std::move(e));
        return {idx, true};
    };

    intern(element_identity_like(generators[0]));

    // breadth-first closure under right multiplication by the generators;
    // inverses come for free because every element has finite order
    std::vector<std::vector<std::uint32_t>> gen_cols(generators.size());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> discovery;
    discovery.emplace_back(0, 0); // identity, unused

    for (std::uint32_t x = 0; x < g->elems_.size(); ++x) {
        for (std::size_t s = 0; s < generators.size(); ++s) {
            GroupElement prod = element_mul(g->elems_[x], generators[s]);
            auto [idx, fresh] = intern(std::move(prod));
            if (fresh) {
                discovery.emplace_back(x, static_cast<std::uint32_t>(s));
                if (g->elems_.size() > cap)
                    fail(errc::cap_exceeded,
                         "closure exceeded cap " + std::to_string(cap) +
                             " elements; generators may generate an infinite group");
            }
            gen_cols[s].push_back(idx);
        }
    }

    g->gens_.reserve(generators.size());
    for (const auto& gen : generators)
        g->gens_.push_back(g->key_index_.at(element_key(gen)));

    if (g->elems_.size() <= table_cap) g->build_table(gen_cols, discovery);
    g->order_.assign(g->elems_.size(), 0);
    g->inverse_.assign(g->elems_.size(), 0);
    return g;
}

void FiniteGroup::build_table(const std::vector<std::vector<std::uint32_t>>& gen_cols,
                              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& discovery) {
    const std::size_t n = elems_.size();
    table_.assign(n * n, 0);
    // column 0: right multiplication by the identity
    for (std::size_t x = 0; x < n; ++x) table_[x * n] = static_cast<std::uint32_t>(x);
    // generator columns were produced by the closure itself
    for (std::size_t s = 0; s < gen_cols.size(); ++s) {
        std::uint32_t e = gens_[s];
        for (std::size_t x = 0; x < n; ++x) table_[x * n + e] = gen_cols[s][x];
    }
    // composite columns: g = w * s means col_g = col_s after col_w
    for (std::uint32_t gidx = 1; gidx < n; ++gidx) {
        auto [w, s] = discovery[gidx];
        std::uint32_t e = gens_[s];
        if (gidx == e) continue; // already seeded
        for (std::size_t x = 0; x < n; ++x)
            table_[x * n + gidx] = table_[static_cast<std::size_t>(table_[x * n + w]) * n + e];
    }
}

GroupPtr FiniteGroup::from_table(std::vector<std::uint32_t> table, std::size_t order,
                                 std::vector<std::uint32_t> generator_indices, std::string tag) {
    if (order == 0 || table.size() != order * order)
        fail(errc::validation_error, "Cayley table has wrong size");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = AmbientKind::abstract;
    g->tag_ = std::move(tag);
    g->table_ = std::move(table);
    for (std::uint32_t i = 0; i < order; ++i) {
        g->elems_.emplace_back(AbstractElement{i});
        g->keys_.push_back("A" + std::to_string(i));
        g->key_index_.emplace(g->keys_.back(), i);
    }
    // identity laws and the Latin square property
    std::vector<bool> seen(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (g->table_[i * order] != i || g->table_[i] != i)
            fail(errc::validation_error, "table index 0 is not an identity");
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t j = 0; j < order; ++j) {
            std::uint32_t v = g->table_[i * order + j];
            if (v >= order || seen[v]) fail(errc::validation_error, "table row is not a bijection");
            seen[v] = true;
        }
    }
    for (auto gi : generator_indices)
        if (gi >= order) fail(errc::index_out_of_range, "generator index outside the table");
    g->gens_ = std::move(generator_indices);
    g->order_.assign(order, 0);
    g->inverse_.assign(order, 0);
    // the stored generators must generate: center and hom extension rely on it
    std::vector<bool> member(order, false);
    std::vector<std::uint32_t> worklist{0};
    member[0] = true;
    for (std::size_t head = 0; head < worklist.size(); ++head)
        for (auto s : g->gens_) {
            std::uint32_t nxt = g->table_[worklist[head] * order + s];
            if (!member[nxt]) {
                member[nxt] = true;
                worklist.push_back(nxt);
            }
        }
    if (worklist.size() != order)
        fail(errc::not_generating, "stored generators do not generate the table group");
    return g;
}

const GroupElement& FiniteGroup::element(std::uint32_t i) const {
    if (i >= elems_.size()) fail(errc::index_out_of_range, "element index out of range");
    return elems_[i];
}

std::optional<std::uint32_t> FiniteGroup::index_of_key(const std::string& key) const {
    auto it = key_index_.find(key);
    if (it == key_index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t FiniteGroup::product(std::uint32_t a, std::uint32_t b) const {
    const std::size_t n = elems_.size();
    if (a >= n || b >= n) fail(errc::index_out_of_range, "product index out of range");
    if (!table_.empty()) return table_[a * n + b];
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = product_memo_.find(pair_key(a, b));
        if (it != product_memo_.end()) return it->second;
    }
    GroupElement prod = element_mul(elems_[a], elems_[b]);
    auto it = key_index_.find(element_key(prod));
    if (it == key_index_.end())
        fail(errc::certification_failure, "product escaped the enumerated group");
    std::lock_guard<std::mutex> lock(memo_mutex_);
    product_memo_.emplace(pair_key(a, b), it->second);
    return it->second;
}

void FiniteGroup::ensure_order_info(std::uint32_t a) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        if (order_[a] != 0) return;
    }
    if (a == 0) {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        order_[0] = 1;
        inverse_[0] = 0;
        return;
    }
    // walk a, a^2, ...; the last power before the identity is the inverse
    std::uint32_t ord = 1;
    std::uint32_t prev = 0;
    std::uint32_t cur = a;
    while (cur != 0) {
        prev = cur;
        cur = product(cur, a);
        ++ord;
        if (ord > elems_.size() + 1)
            fail(errc::certification_failure, "element order exceeds group order");
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    order_[a] = ord;
    inverse_[a] = prev;
}

std::uint32_t FiniteGroup::element_order_at(std::uint32_t a) const {
    if (a >= elems_.size()) fail(errc::index_out_of_range, "order index out of range");
    ensure_order_info(a);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return order_[a];
}

std::uint32_t FiniteGroup::inverse(std::uint32_t a) const {
    if (a >= elems_.size()) fail(errc::index_out_of_range, "inverse index out of range");
    ensure_order_info(a);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return inverse_[a];
}

std::uint32_t FiniteGroup::power(std::uint32_t a, long e) const {
    if (e < 0) return power(inverse(a), -e);
    std::uint32_t acc = 0;
    for (long i = 0; i < e; ++i) acc = product(acc, a);
    return acc;
}

std::uint32_t FiniteGroup::conjugate(std::uint32_t g, std::uint32_t x) const {
    return product(product(g, x), inverse(g));
}

std::uint32_t FiniteGroup::commutator(std::uint32_t a, std::uint32_t b) const {
    // [a,b] = a b a^-1 b^-1
    return product(product(a, b), product(inverse(a), inverse(b)));
}

std::uint64_t FiniteGroup::exponent() const {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < elems_.size(); ++i)
        e = std::lcm(e, static_cast<std::uint64_t>(element_order_at(i)));
    return e;
}

// ---- Subgroup ----

Subgroup::Subgroup(GroupPtr parent, std::vector<std::uint32_t> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (indices_.empty() || indices_[0] != 0)
        fail(errc::validation_error, "subgroup must contain the identity");
    const std::size_t n = parent_->order();
    std::vector<bool> member(n, false);
    for (auto i : indices_) {
        if (i >= n) fail(errc::index_out_of_range, "subgroup index outside the parent");
        member[i] = true;
    }
    for (auto a : indices_)
        for (auto b : indices_)
            if (!member[parent_->product(a, b)])
                fail(errc::validation_error, "index set is not closed under the product");
    certify(n % indices_.size() == 0, "Lagrange divisibility for a closed subset");
}

bool Subgroup::contains(std::uint32_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

// ---- GroupHom ----

GroupHom::GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<std::uint32_t> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    if (map_.size() != domain_->order())
        fail(errc::not_a_homomorphism, "index map does not cover the domain");
    for (auto v : map_)
        if (v >= codomain_->order())
            fail(errc::not_a_homomorphism, "index map leaves the codomain");
    if (map_[0] != 0) fail(errc::not_a_homomorphism, "identity does not map to identity");
    if (!kernels::hom_law_holds(*domain_, *codomain_, map_, kernels::default_mode()))
        fail(errc::not_a_homomorphism, "map violates f(xy) = f(x)f(y)");
}

bool GroupHom::is_bijective() const {
    if (domain_->order() != codomain_->order()) return false;
    std::vector<bool> seen(codomain_->order(), false);
    for (auto v : map_) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// ---- operations ----

std::uint64_t element_order(const GroupElement& g, std::uint64_t cap) {
    if (cap < 1) fail(errc::validation_error, "order cap must be >= 1");
    GroupElement acc = g;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (element_is_identity(acc)) return k;
        acc = element_mul(acc, g);
    }
    fail(errc::order_exceeds_cap, "element order exceeds cap " + std::to_string(cap));
}

Subgroup whole_subgroup(GroupPtr g) {
    std::vector<std::uint32_t> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(g), std::move(all));
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup(std::move(g), {0}); }

namespace {

// BFS inside the parent group: all words in the seed elements.
std::vector<std::uint32_t> closure_indices(const FiniteGroup& g,
                                           const std::vector<std::uint32_t>& seed) {
    std::vector<bool> member(g.order(), false);
    std::vector<std::uint32_t> worklist{0};
    member[0] = true;
    for (std::size_t head = 0; head < worklist.size(); ++head) {
        for (auto s : seed) {
            std::uint32_t nxt = g.product(worklist[head], s);
            if (!member[nxt]) {
                member[nxt] = true;
                worklist.push_back(nxt);
            }
        }
    }
    std::sort(worklist.begin(), worklist.end());
    return worklist;
}

} // namespace

Subgroup subgroup_generated(GroupPtr g, const std::vector<std::uint32_t>& seed) {
    for (auto s : seed)
        if (s >= g->order()) fail(errc::index_out_of_range, "seed index outside the group");
    auto idx = closure_indices(*g, seed);
    return Subgroup(std::move(g), std::move(idx));
}

std::uint64_t subgroup_index(const Subgroup& h) {
    return h.parent()->order() / h.order();
}

bool is_normal_subgroup(const Subgroup& h) {
    const auto& g = *h.parent();
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (auto n : h.indices())
            if (!h.contains(g.conjugate(x, n))) return false;
    return true;
}

Subgroup centralizer(GroupPtr g, const std::vector<std::uint32_t>& subset) {
    for (auto s : subset)
        if (s >= g->order()) fail(errc::index_out_of_range, "centralizer subset outside the group");
    auto idx = kernels::centralizer_scan(*g, subset, kernels::default_mode());
    return Subgroup(std::move(g), std::move(idx));
}

Subgroup group_center(GroupPtr g) {
    // commuting with every generator is commuting with everything
    std::vector<std::uint32_t> gens = g->generator_indices();
    return centralizer(std::move(g), gens);
}

Subgroup commutator_subgroup(GroupPtr g, const Subgroup& a, const Subgroup& b) {
    if (a.parent().get() != g.get() || b.parent().get() != g.get())
        fail(errc::validation_error, "commutator subgroup arguments live in another group");
    auto seeds = kernels::pair_commutators(*g, a.indices(), b.indices(), kernels::default_mode());
    return subgroup_generated(std::move(g), seeds);
}

Subgroup derived_subgroup(GroupPtr g) {
    Subgroup whole = whole_subgroup(g);
    return commutator_subgroup(std::move(g), whole, whole);
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
    if (a.parent().get() != b.parent().get())
        fail(errc::validation_error, "intersecting subgroups of different groups");
    std::vector<std::uint32_t> out;
    std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(),
                          b.indices().end(), std::back_inserter(out));
    return Subgroup(a.parent(), std::move(out));
}

bool subgroup_is_abelian(const Subgroup& h) {
    const auto& g = *h.parent();
    for (auto a : h.indices())
        for (auto b : h.indices()) {
            if (b >= a) break;
            if (g.product(a, b) != g.product(b, a)) return false;
        }
    return true;
}

bool group_is_abelian(const GroupPtr& g) {
    const auto& gens = g->generator_indices();
    for (auto a : gens)
        for (auto b : gens)
            if (g->product(a, b) != g->product(b, a)) return false;
    return true;
}

std::pair<GroupPtr, GroupHom> quotient_group(GroupPtr g, const Subgroup& n) {
    if (n.parent().get() != g.get())
        fail(errc::validation_error, "quotient by a subgroup of another group");
    if (!is_normal_subgroup(n)) fail(errc::not_normal, "quotient requires a normal subgroup");

    const std::size_t order = g->order();
    constexpr std::uint32_t unassigned = 0xffffffffu;
    std::vector<std::uint32_t> coset(order, unassigned);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t x = 0; x < order; ++x) {
        if (coset[x] != unassigned) continue;
        std::uint32_t id = static_cast<std::uint32_t>(reps.size());
        reps.push_back(x); // ascending scan makes x the least index in its coset
        for (auto e : n.indices()) coset[g->product(x, e)] = id;
    }

    const std::size_t k = reps.size();
    std::vector<std::uint32_t> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            table[i * k + j] = coset[g->product(reps[i], reps[j])];

    std::vector<std::uint32_t> gen_images;
    for (auto gi : g->generator_indices()) {
        std::uint32_t img = coset[gi];
        if (img != 0 &&
            std::find(gen_images.begin(), gen_images.end(), img) == gen_images.end())
            gen_images.push_back(img);
    }

    GroupPtr q = FiniteGroup::from_table(std::move(table), k, std::move(gen_images),
                                         g->tag() + "/N");
    GroupHom proj(g, q, std::move(coset));
    return {std::move(q), std::move(proj)};
}

Subgroup hom_kernel(const GroupHom& f) {
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < f.domain()->order(); ++i)
        if (f.apply(i) == 0) idx.push_back(i);
    return Subgroup(f.domain(), std::move(idx));
}

Subgroup hom_image_subgroup(const GroupHom& f, const Subgroup& a) {
    if (a.parent().get() != f.domain().get())
        fail(errc::validation_error, "image of a subgroup from another group");
    std::vector<std::uint32_t> idx;
    for (auto i : a.indices()) idx.push_back(f.apply(i));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return Subgroup(f.codomain(), std::move(idx));
}

Subgroup hom_preimage_subgroup(const GroupHom& f, const Subgroup& b) {
    if (b.parent().get() != f.codomain().get())
        fail(errc::validation_error, "preimage of a subgroup from another group");
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < f.domain()->order(); ++i)
        if (b.contains(f.apply(i))) idx.push_back(i);
    return Subgroup(f.domain(), std::move(idx));
}

GroupHom hom_from_generators(GroupPtr domain, GroupPtr codomain,
                             const std::vector<std::uint32_t>& generator_images) {
    const auto& gens = domain->generator_indices();
    if (generator_images.size() != gens.size())
        fail(errc::not_a_homomorphism, "one image per stored generator is required");
    for (auto v : generator_images)
        if (v >= codomain->order()) fail(errc::index_out_of_range, "generator image out of range");

    // rebuild discovery words for the stored generators, then push images through
    constexpr std::uint32_t unset = 0xffffffffu;
    std::vector<std::uint32_t> map(domain->order(), unset);
    std::vector<std::uint32_t> worklist{0};
    map[0] = 0;
    for (std::size_t head = 0; head < worklist.size(); ++head) {
        std::uint32_t x = worklist[head];
        for (std::size_t s = 0; s < gens.size(); ++s) {
            std::uint32_t nxt = domain->product(x, gens[s]);
            if (map[nxt] != unset) continue;
            map[nxt] = codomain->product(map[x], generator_images[s]);
            worklist.push_back(nxt);
        }
    }
    for (auto v : map)
        if (v == unset)
            fail(errc::not_generating, "stored generators do not generate the domain");
    return GroupHom(std::move(domain), std::move(codomain), std::move(map));
}

std::vector<std::uint32_t> greedy_generating_set(const GroupPtr& g,
                                                 const std::vector<std::uint32_t>& elements) {
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> have{0};
    std::vector<bool> member(g->order(), false);
    member[0] = true;
    for (auto e : elements) {
        if (member[e]) continue;
        gens.push_back(e);
        // grow the closure incrementally
        std::vector<std::uint32_t> worklist = have;
        for (std::size_t head = 0; head < worklist.size(); ++head) {
            for (auto s : gens) {
                std::uint32_t nxt = g->product(worklist[head], s);
                if (!member[nxt]) {
                    member[nxt] = true;
                    worklist.push_back(nxt);
                }
            }
        }
        have = std::move(worklist);
        if (have.size() == elements.size()) break;
    }
    return gens;
}

std::vector<Subgroup> all_subgroups(GroupPtr g, std::size_t order_cap) {
    if (g->order() > order_cap)
        fail(errc::order_cap_exceeded, "group order " + std::to_string(g->order()) +
                                           " exceeds the lattice cap " + std::to_string(order_cap));

    struct Node {
        std::vector<std::uint32_t> elems;
        std::vector<std::uint32_t> gens;
    };
    std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> seen; // elems -> gens
    std::vector<Node> frontier;

    auto add = [&](std::vector<std::uint32_t> elems, std::vector<std::uint32_t> gens) {
        auto it = seen.find(elems);
        if (it != seen.end()) return;
        seen.emplace(elems, gens);
        frontier.push_back(Node{std::move(elems), std::move(gens)});
    };

    for (std::uint32_t e = 0; e < g->order(); ++e) {
        std::vector<std::uint32_t> cyc{0};
        std::uint32_t cur = e;
        while (cur != 0) {
            cyc.push_back(cur);
            cur = g->product(cur, e);
        }
        std::sort(cyc.begin(), cyc.end());
        add(std::move(cyc), e == 0 ? std::vector<std::uint32_t>{} : std::vector<std::uint32_t>{e});
    }

    std::vector<Node> all;
    for (auto& [elems, gens] : seen) all.push_back(Node{elems, gens});

    while (!frontier.empty()) {
        std::vector<Node> fresh;
        for (const auto& b : frontier) {
            for (const auto& a : all) {
                if (a.elems == b.elems) continue;
                // quick skip: nothing new if one contains the other
                if (std::includes(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end()) ||
                    std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(), a.elems.end()))
                    continue;
                std::vector<std::uint32_t> join_gens = a.gens;
                for (auto x : b.gens)
                    if (std::find(join_gens.begin(), join_gens.end(), x) == join_gens.end())
                        join_gens.push_back(x);
                std::vector<std::uint32_t> elems = closure_indices(*g, join_gens);
                if (seen.count(elems)) continue;
                std::vector<std::uint32_t> small = greedy_generating_set(g, elems);
                seen.emplace(elems, small);
                fresh.push_back(Node{std::move(elems), std::move(small)});
            }
        }
        for (auto& n : fresh) all.push_back(n);
        frontier = std::move(fresh);
    }

    std::vector<std::vector<std::uint32_t>> sets;
    sets.reserve(seen.size());
    for (auto& [elems, gens] : seen) sets.push_back(elems);
    std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });

    std::vector<Subgroup> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.emplace_back(g, std::move(s));
    return out;
}

std::vector<std::uint32_t> min_generating_set(GroupPtr g) {
    const std::size_t n = g->order();
    if (n == 1) return {};

    // ascending k; prefix-closure pruning is sound because a redundant slot
    // would mean a smaller generating set exists, contradicting ascending k
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> found;

    std::function<bool(std::size_t, std::uint32_t, const std::vector<std::uint32_t>&)> search =
        [&](std::size_t slots_left, std::uint32_t start,
            const std::vector<std::uint32_t>& have) -> bool {
        if (slots_left == 0) {
            if (have.size() == n) {
                found = chosen;
                return true;
            }
            return false;
        }
        std::vector<bool> member(n, false);
        for (auto e : have) member[e] = true;
        for (std::uint32_t cand = start; cand < n; ++cand) {
            if (member[cand]) continue;
            chosen.push_back(cand);
            std::vector<std::uint32_t> grown = closure_indices(*g, chosen);
            if (search(slots_left - 1, cand + 1, grown)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t k = 1; k <= n; ++k) {
        chosen.clear();
        if (search(k, 1, {0})) return found;
    }
    fail(errc::certification_failure, "no generating set found");
}

unsigned min_generators(GroupPtr g) {
    return static_cast<unsigned>(min_generating_set(std::move(g)).size());
}

std::pair<GroupPtr, std::vector<std::uint32_t>> subgroup_as_group(const Subgroup& h) {
    const auto& g = *h.parent();
    const auto& idx = h.indices();
    const std::size_t k = idx.size();
    std::unordered_map<std::uint32_t, std::uint32_t> pos;
    pos.reserve(k);
    for (std::size_t i = 0; i < k; ++i) pos.emplace(idx[i], static_cast<std::uint32_t>(i));
    std::vector<std::uint32_t> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) table[i * k + j] = pos.at(g.product(idx[i], idx[j]));

    std::vector<std::uint32_t> parent_gens = greedy_generating_set(h.parent(), idx);
    std::vector<std::uint32_t> gens;
    gens.reserve(parent_gens.size());
    for (auto pg : parent_gens) gens.push_back(pos.at(pg));

    GroupPtr grp = FiniteGroup::from_table(std::move(table), k, std::move(gens),
                                           g.tag() + ".sub" + std::to_string(k));
    return {std::move(grp), idx};
}

std::vector<GroupHom> automorphism_group(GroupPtr g, std::size_t order_cap) {
    const std::size_t n = g->order();
    if (n > order_cap)
        fail(errc::order_cap_exceeded, "group order " + std::to_string(n) +
                                           " exceeds the automorphism cap " +
                                           std::to_string(order_cap));

    std::vector<std::uint32_t> gens = min_generating_set(g);
    if (gens.empty()) {
        return {GroupHom(g, g, {0})};
    }

    // discovery words w.r.t. the minimal generating set
    constexpr std::uint32_t unset = 0xffffffffu;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> word(n, {unset, unset});
    std::vector<std::uint32_t> bfs{0};
    word[0] = {0, unset};
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        std::uint32_t x = bfs[head];
        for (std::size_t s = 0; s < gens.size(); ++s) {
            std::uint32_t nxt = g->product(x, gens[s]);
            if (word[nxt].first != unset || nxt == 0) continue;
            word[nxt] = {x, static_cast<std::uint32_t>(s)};
            bfs.push_back(nxt);
        }
    }

    // candidate images share the generator's order
    std::vector<std::vector<std::uint32_t>> cands(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
        std::uint32_t ord = g->element_order_at(gens[s]);
        for (std::uint32_t e = 0; e < n; ++e)
            if (g->element_order_at(e) == ord) cands[s].push_back(e);
    }

    // enumerate assignment tuples lexicographically
    std::vector<std::vector<std::uint32_t>> tuples;
    std::vector<std::uint32_t> current(gens.size());
    std::function<void(std::size_t)> enumerate = [&](std::size_t slot) {
        if (slot == gens.size()) {
            tuples.push_back(current);
            return;
        }
        for (auto c : cands[slot]) {
            current[slot] = c;
            // pairwise product orders must match (cheap relation probe)
            bool ok = true;
            for (std::size_t s2 = 0; s2 < slot && ok; ++s2) {
                std::uint32_t expect = g->element_order_at(g->product(gens[s2], gens[slot]));
                std::uint32_t got = g->element_order_at(g->product(current[s2], c));
                ok = expect == got;
            }
            if (ok) enumerate(slot + 1);
        }
    };
    enumerate(0);

    auto try_tuple = [&](std::size_t t) -> bool {
        const auto& images = tuples[t];
        std::vector<std::uint32_t> map(n, unset);
        map[0] = 0;
        for (auto x : bfs) {
            if (x == 0) continue;
            auto [w, s] = word[x];
            map[x] = g->product(map[w], images[s]);
        }
        std::vector<bool> seen(n, false);
        for (auto v : map) {
            if (v == unset || seen[v]) return false;
            seen[v] = true;
        }
        return kernels::hom_law_holds(*g, *g, map, kernels::Mode::serial);
    };

    std::vector<char> flags =
        kernels::filter_scan(tuples.size(), try_tuple, kernels::default_mode());

    std::vector<GroupHom> out;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        if (!flags[t]) continue;
        const auto& images = tuples[t];
        std::vector<std::uint32_t> map(n, unset);
        map[0] = 0;
        for (auto x : bfs) {
            if (x == 0) continue;
            auto [w, s] = word[x];
            map[x] = g->product(map[w], images[s]);
        }
        out.emplace_back(g, g, std::move(map));
    }
    std::sort(out.begin(), out.end(),
              [](const GroupHom& a, const GroupHom& b) { return a.map() < b.map(); });
    return out;
}

} // namespace gammal
