#pragma once

// Exact arithmetic for finite abelian groups in invariant-factor form and
// integer-matrix homomorphisms between them.  Every quotient construction in
// the library is routed through one Smith-normal-form kernel (present()).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartmod {

using Int = long long;
using Elem = std::vector<Int>;

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};
struct LimitExceeded : std::runtime_error {
    explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Group orders above this are rejected; keeps every search desk-scale.
Int order_limit();
void set_order_limit(Int limit);

// Dense integer matrix, row-major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMat mul(const IntMat& rhs) const;
    IntMat transposed() const;

    bool operator==(const IntMat& rhs) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// U * A * V = D with U, V unimodular; uinv, vinv their inverses.
struct SmithForm {
    IntMat d, u, uinv, v, vinv;
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith(IntMat a);

// Basis of { x : M x = 0 } as a sublattice of Z^cols.
std::vector<Elem> integer_kernel_basis(const IntMat& m);

// A finite abelian group Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, di >= 2.
// Elements are residue tuples; the empty factor list is the trivial group.
class FinAb {
public:
    FinAb() = default;
    static FinAb trivial() { return FinAb(); }
    static FinAb cyclic(Int n);
    // Requires a canonical divisibility chain; throws otherwise.
    static FinAb from_factors(std::vector<Int> factors);

    const std::vector<Int>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    Int order() const { return order_; }
    bool is_trivial() const { return factors_.empty(); }

    Elem zero() const { return Elem(factors_.size(), 0); }
    Elem reduced(Elem x) const;
    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem smul(Int c, const Elem& x) const;
    bool is_zero(const Elem& x) const;

    // Deterministic enumeration: mixed-radix index over the residue tuples.
    Int index_of(const Elem& x) const;
    Elem element_at(Int index) const;

    // Order of x as a group element.
    Int element_order(const Elem& x) const;
    Int exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    bool operator==(const FinAb& rhs) const { return factors_ == rhs.factors_; }

    std::string to_string() const;

private:
    std::vector<Int> factors_;
    std::vector<Int> strides_;
    Int order_ = 1;
};

// Homomorphism src -> dst given by an integer matrix: the image of the j-th
// source generator is sum_i mat(i,j) * (i-th target generator).
class AbHom {
public:
    AbHom() = default;
    AbHom(FinAb src, FinAb dst, IntMat mat);

    static AbHom zero(const FinAb& src, const FinAb& dst);
    static AbHom identity(const FinAb& g);

    const FinAb& src() const { return src_; }
    const FinAb& dst() const { return dst_; }
    const IntMat& mat() const { return mat_; }

    // d_j * mat(i,j) == 0 mod e_i for all entries.
    bool well_defined() const;

    Elem apply(const Elem& x) const;
    Int apply_index(Int idx) const;

    AbHom compose_after(const AbHom& first) const;  // this(first(x))
    AbHom add(const AbHom& rhs) const;
    AbHom neg() const;

    bool is_zero_map() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const;
    std::optional<AbHom> inverse() const;

    bool operator==(const AbHom& rhs) const;

private:
    FinAb src_, dst_;
    IntMat mat_;
};

// Canonical form of Z^ngens / <relations> with the quotient projection and a
// section (one fixed lift per canonical generator).  proj * sect = identity.
struct Presentation {
    FinAb group;
    IntMat proj;  // group.rank() x ngens
    IntMat sect;  // ngens x group.rank()

    Elem project(const Elem& x) const;
    Elem lift(const Elem& y) const;
};

// Throws InvalidInput if the presented group is infinite.
Presentation present(std::size_t ngens, const std::vector<Elem>& relations);

// Generators with cyclic orders plus extra relations; the quotient projection
// is well defined on the direct sum of the given cyclic groups.
Presentation normal_form(const std::vector<Int>& orders, const std::vector<Elem>& relations);

struct KernelPair {
    FinAb kernel;
    AbHom inclusion;  // kernel -> src
};
struct CokernelPair {
    FinAb cokernel;
    AbHom projection;   // dst -> cokernel
    Presentation pres;  // of the cokernel over dst's generators (for lifts)
};

KernelPair ab_kernel(const AbHom& h);
CokernelPair ab_cokernel(const AbHom& h);
Int image_order(const AbHom& h);

// Solve h(x) = y; returns one solution when it exists.
std::optional<Elem> solve(const AbHom& h, const Elem& y);

// Subgroup of `ambient` generated by `gens`, canonicalized, with inclusion
// and coordinate recovery for members.
struct Subgroup {
    FinAb group;
    AbHom inclusion;  // group -> ambient

    bool contains(const Elem& x) const;
    // Coordinates in `group` of an ambient member; nullopt when outside.
    std::optional<Elem> coords(const Elem& x) const;
};

Subgroup subgroup_from_generators(const FinAb& ambient, const std::vector<Elem>& gens);

// A (+) B with canonical form and the usual injections/projections.
struct DirectSum {
    FinAb group;
    std::vector<AbHom> inject;   // summand -> group
    std::vector<AbHom> project;  // group -> summand

    Elem assemble(const std::vector<Elem>& parts) const;
    std::vector<Elem> split(const Elem& x) const;
};

DirectSum direct_sum(const std::vector<FinAb>& parts);

// A (x)_Z B with the bilinear witness (x, y) -> class of x (x) y.
class AbTensor {
public:
    AbTensor() = default;
    AbTensor(const FinAb& a, const FinAb& b);

    const FinAb& group() const { return pres_.group; }
    const FinAb& lhs() const { return a_; }
    const FinAb& rhs() const { return b_; }

    Elem pure(const Elem& x, const Elem& y) const;

    // The map A (x) B -> A' (x) B' induced by f: A -> A', g: B -> B'.
    AbHom induced(const AbHom& f, const AbHom& g, const AbTensor& target) const;

private:
    FinAb a_, b_;
    // kept generator pairs (i, j) with gcd(d_i, e_j) > 1, and that gcd
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<Int> pair_orders_;
    Presentation pres_;

    Elem raw_coords(const Elem& x, const Elem& y) const;
};

FinAb ab_tensor(const FinAb& a, const FinAb& b);

// Hom(A, B) as a finite abelian group together with the element <-> matrix
// dictionary (deterministic enumeration through the group's index order).
class HomGroup {
public:
    HomGroup() = default;
    HomGroup(const FinAb& a, const FinAb& b);

    const FinAb& group() const { return pres_.group; }
    const FinAb& src_object() const { return a_; }
    const FinAb& dst_object() const { return b_; }

    AbHom hom_of(const Elem& t) const;
    Elem elem_of(const AbHom& h) const;

private:
    FinAb a_, b_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;  // (j source gen, i target gen)
    std::vector<Int> pair_orders_;
    Presentation pres_;
};

FinAb ab_hom(const FinAb& a, const FinAb& b);

Int gcd_ll(Int a, Int b);
Int lcm_checked(Int a, Int b);

}  // namespace cartmod
