#pragma once

// Finite preadditive categories ("rings with several objects"): hom groups
// are FinAb values, composition is biadditive, every object carries an
// identity.  One-object ringoids are ordinary finite rings.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cartmod/abelian.hpp"

namespace cartmod {

struct CheckResult {
    std::string id;
    bool pass = true;
    std::string witness;  // empty when pass
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

class Ringoid;
using RingoidPtr = std::shared_ptr<const Ringoid>;

class Ringoid {
public:
    // compose(a,b,c, g in hom(b,c), f in hom(a,b)) -> g*f in hom(a,c)
    using ComposeFn = std::function<Elem(std::size_t, std::size_t, std::size_t, const Elem&, const Elem&)>;

    Ringoid(std::vector<std::string> objects, std::vector<FinAb> homs, std::vector<Elem> identities, ComposeFn compose);

    std::size_t object_count() const { return objects_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::string& object_name(std::size_t a) const { return objects_[a]; }
    std::size_t object_index(const std::string& name) const;

    const FinAb& hom(std::size_t a, std::size_t b) const { return homs_[a * objects_.size() + b]; }
    const Elem& identity(std::size_t a) const { return identities_[a]; }

    Elem compose(std::size_t a, std::size_t b, std::size_t c, const Elem& g, const Elem& f) const;
    Int compose_idx(std::size_t a, std::size_t b, std::size_t c, Int gi, Int fi) const;

    // Total number of morphisms (sum of hom group orders).
    Int morphism_count() const;

    bool tables_cached() const { return !tables_.empty(); }

private:
    std::vector<std::string> objects_;
    std::vector<FinAb> homs_;
    std::vector<Elem> identities_;
    ComposeFn compose_;
    // Composition tables per (a,b,c), flattened gi*|hom(a,b)|+fi, built
    // eagerly at construction when the total size is desk-scale.
    std::vector<std::vector<uint32_t>> tables_;

    void maybe_build_tables();
};

// --- finite rings as one-object ringoids -----------------------------------

// Multiplication is stored bilinearly on the additive generators.
struct Ring {
    FinAb add;
    std::vector<std::vector<Elem>> gen_mul;  // gen_mul[i][j] = e_i * e_j
    Elem one;

    Elem mul(const Elem& x, const Elem& y) const;
};

Ring ring_zn(Int n);
Ring ring_product(const std::vector<Ring>& parts);
Ring ring_quotient(const Ring& r, const std::vector<Elem>& ideal_gens);
Ring ring_from_tables(const std::vector<std::vector<std::size_t>>& add, const std::vector<std::vector<std::size_t>>& mul);
// Upper-triangular size x size matrices over Z/p.
Ring ring_triangular(Int p, std::size_t size);

RingoidPtr ringoid_of_ring(const Ring& r, const std::string& object_name = "*");

// The ring sitting inside a one-object ringoid.
Ring ring_of_ringoid(const RingoidPtr& r);

// --- constructions ----------------------------------------------------------

RingoidPtr ringoid_opposite(const RingoidPtr& r);

// R (x) S with hom groups formed by AbTensor; keeps the per-hom tensor
// structures so pure morphisms f (x) g can be formed.
struct TensorRingoid {
    RingoidPtr ringoid;
    RingoidPtr left, right;
    std::vector<AbTensor> cells;  // indexed (pair a, pair b) over pair objects

    std::size_t pair_index(std::size_t ra, std::size_t sa) const;
    const AbTensor& cell(std::size_t pa, std::size_t pb) const;
    Elem pure_mor(std::size_t pa, std::size_t pb, const Elem& f, const Elem& g) const;
};

TensorRingoid ringoid_tensor(const RingoidPtr& r, const RingoidPtr& s);

// --- additive functors ------------------------------------------------------

class AddFunctor {
public:
    AddFunctor() = default;
    AddFunctor(RingoidPtr src, RingoidPtr dst, std::vector<std::size_t> obj_map, std::vector<AbHom> hom_maps);

    static AddFunctor identity(const RingoidPtr& r);

    const RingoidPtr& src() const { return src_; }
    const RingoidPtr& dst() const { return dst_; }

    std::size_t apply_obj(std::size_t a) const { return obj_map_[a]; }
    Elem apply(std::size_t a, std::size_t b, const Elem& f) const;
    const AbHom& hom_map(std::size_t a, std::size_t b) const;

    AddFunctor compose_after(const AddFunctor& first) const;  // this o first
    AddFunctor opposite() const;                              // same data, op(src) -> op(dst)

private:
    RingoidPtr src_, dst_;
    std::vector<std::size_t> obj_map_;
    std::vector<AbHom> hom_maps_;  // indexed a*n+b : hom(a,b) -> hom(Fa,Fb)
};

AddFunctor functor_of_ring_hom(const RingoidPtr& r, const RingoidPtr& s, const AbHom& additive_map);

// --- validation --------------------------------------------------------------

// Exhaustive axiom checks up to `budget` elementary operations; larger
// ringoids are checked on hom-group generators (which biadditivity makes
// sufficient), and the report says which mode ran.
ValidationReport validate_ringoid(const Ringoid& r, Int budget = 2'000'000);
ValidationReport validate_functor(const AddFunctor& f, Int budget = 2'000'000);

// Compare compose tables entry by entry (both must be desk-scale).
bool same_composition(const Ringoid& r1, const Ringoid& r2);

}  // namespace cartmod
