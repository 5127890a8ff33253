#include "cartmod/abelian.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cartmod {

namespace {

std::atomic<Int> g_order_limit{1 << 16};

Int checked_mul(Int a, Int b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX / 4 || p < -(INT64_MAX / 4)) throw InternalError("integer overflow in exact arithmetic");
    return static_cast<Int>(p);
}

Int mod_floor(Int a, Int m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

Int order_limit() { return g_order_limit.load(); }
void set_order_limit(Int limit) { g_order_limit.store(limit); }

Int gcd_ll(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm_checked(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_ll(a, b), b);
}

// ---------------------------------------------------------------------------
// IntMat

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("matrix shape mismatch");
    IntMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Int a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += checked_mul(a, rhs.at(k, j));
        }
    return out;
}

IntMat IntMat::transposed() const {
    IntMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Smith normal form.  Row ops update u (same op) and uinv (inverse column
// op); column ops update v and vinv likewise, so u*a*v == d holds throughout.

namespace {

struct SmithWork {
    IntMat d, u, uinv, v, vinv;

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
        for (std::size_t r = 0; r < uinv.rows(); ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    }
    void row_axpy(std::size_t dst, std::size_t src, Int c) {  // row_dst += c*row_src
        for (std::size_t k = 0; k < d.cols(); ++k) d.at(dst, k) += checked_mul(c, d.at(src, k));
        for (std::size_t k = 0; k < u.cols(); ++k) u.at(dst, k) += checked_mul(c, u.at(src, k));
        for (std::size_t r = 0; r < uinv.rows(); ++r) uinv.at(r, src) -= checked_mul(c, uinv.at(r, dst));
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
        for (std::size_t r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
        for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    void col_axpy(std::size_t dst, std::size_t src, Int c) {  // col_dst += c*col_src
        for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, dst) += checked_mul(c, d.at(r, src));
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += checked_mul(c, v.at(r, src));
        for (std::size_t k = 0; k < vinv.cols(); ++k) vinv.at(src, k) -= checked_mul(c, vinv.at(dst, k));
    }
    void col_negate(std::size_t j) {
        for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, j) = -d.at(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, j) = -v.at(r, j);
        for (std::size_t c = 0; c < vinv.cols(); ++c) vinv.at(j, c) = -vinv.at(j, c);
    }
};

}  // namespace

SmithForm smith(IntMat a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithWork w{std::move(a), IntMat::identity(m), IntMat::identity(m), IntMat::identity(n), IntMat::identity(n)};
    IntMat& d = w.d;

    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        // pivot: minimal |entry| in the lower-right block
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                Int v = d.at(i, j) < 0 ? -d.at(i, j) : d.at(i, j);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != t) w.row_swap(t, pi);
        if (pj != t) w.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) w.row_axpy(i, t, -q);
                if (d.at(i, t) != 0) {  // remainder smaller than pivot; promote it
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) w.col_axpy(j, t, -q);
                if (d.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility: pivot must divide the rest of the block
                for (std::size_t i = t + 1; i < m && clean; ++i)
                    for (std::size_t j = t + 1; j < n && clean; ++j)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            w.row_axpy(t, i, 1);
                            clean = false;
                        }
            }
        }
        if (d.at(t, t) < 0) w.row_negate(t);
    }

    SmithForm out{std::move(w.d), std::move(w.u), std::move(w.uinv), std::move(w.v), std::move(w.vinv), 0};
    for (std::size_t i = 0; i < steps; ++i)
        if (out.d.at(i, i) != 0) ++out.rank;
    return out;
}

std::vector<Elem> integer_kernel_basis(const IntMat& m) {
    SmithForm s = smith(m);
    std::vector<Elem> basis;
    for (std::size_t j = s.rank; j < m.cols(); ++j) {
        Elem b(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) b[i] = s.v.at(i, j);
        basis.push_back(std::move(b));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// FinAb

FinAb FinAb::cyclic(Int n) {
    if (n < 1) throw InvalidInput("cyclic group order must be >= 1");
    FinAb g;
    if (n > 1) g.factors_ = {n};
    g.strides_.assign(g.factors_.size(), 1);
    g.order_ = n;
    if (n > order_limit()) throw LimitExceeded("group order exceeds limit");
    return g;
}

FinAb FinAb::from_factors(std::vector<Int> factors) {
    FinAb g;
    Int order = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw InvalidInput("invariant factors must be >= 2");
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw InvalidInput("invariant factors must form a divisibility chain");
        order = checked_mul(order, factors[i]);
        if (order > order_limit()) throw LimitExceeded("group order exceeds limit");
    }
    g.factors_ = std::move(factors);
    g.order_ = order;
    g.strides_.assign(g.factors_.size(), 1);
    for (std::size_t i = 1; i < g.factors_.size(); ++i) g.strides_[i] = g.strides_[i - 1] * g.factors_[i - 1];
    return g;
}

Elem FinAb::reduced(Elem x) const {
    if (x.size() != factors_.size()) throw InternalError("element rank mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], factors_[i]);
    return x;
}

Elem FinAb::add(const Elem& x, const Elem& y) const {
    Elem z(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) z[i] = mod_floor(x[i] + y[i], factors_[i]);
    return z;
}

Elem FinAb::sub(const Elem& x, const Elem& y) const {
    Elem z(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) z[i] = mod_floor(x[i] - y[i], factors_[i]);
    return z;
}

Elem FinAb::neg(const Elem& x) const {
    Elem z(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) z[i] = mod_floor(-x[i], factors_[i]);
    return z;
}

Elem FinAb::smul(Int c, const Elem& x) const {
    Elem z(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) z[i] = mod_floor(checked_mul(mod_floor(c, factors_[i]), x[i]), factors_[i]);
    return z;
}

bool FinAb::is_zero(const Elem& x) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (mod_floor(x[i], factors_[i]) != 0) return false;
    return true;
}

Int FinAb::index_of(const Elem& x) const {
    Int idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx += mod_floor(x[i], factors_[i]) * strides_[i];
    return idx;
}

Elem FinAb::element_at(Int index) const {
    Elem x(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        x[i] = index % factors_[i];
        index /= factors_[i];
    }
    return x;
}

Int FinAb::element_order(const Elem& x) const {
    Int ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int r = mod_floor(x[i], factors_[i]);
        Int o = factors_[i] / gcd_ll(r, factors_[i]);
        ord = lcm_checked(ord, o);
    }
    return ord;
}

std::string FinAb::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << "+";
        os << "Z/" << factors_[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// AbHom

AbHom::AbHom(FinAb src, FinAb dst, IntMat mat) : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat)) {
    if (mat_.rows() != dst_.rank() || mat_.cols() != src_.rank()) throw InternalError("hom matrix shape mismatch");
    for (std::size_t i = 0; i < mat_.rows(); ++i)
        for (std::size_t j = 0; j < mat_.cols(); ++j) mat_.at(i, j) = mod_floor(mat_.at(i, j), dst_.factors()[i]);
}

AbHom AbHom::zero(const FinAb& src, const FinAb& dst) { return AbHom(src, dst, IntMat(dst.rank(), src.rank())); }

AbHom AbHom::identity(const FinAb& g) { return AbHom(g, g, IntMat::identity(g.rank())); }

bool AbHom::well_defined() const {
    for (std::size_t i = 0; i < mat_.rows(); ++i)
        for (std::size_t j = 0; j < mat_.cols(); ++j)
            if (checked_mul(src_.factors()[j], mat_.at(i, j)) % dst_.factors()[i] != 0) return false;
    return true;
}

Elem AbHom::apply(const Elem& x) const {
    Elem y(dst_.rank(), 0);
    for (std::size_t i = 0; i < mat_.rows(); ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < mat_.cols(); ++j) acc += static_cast<__int128>(mat_.at(i, j)) * x[j];
        y[i] = static_cast<Int>(acc % dst_.factors()[i]);
        if (y[i] < 0) y[i] += dst_.factors()[i];
    }
    return y;
}

Int AbHom::apply_index(Int idx) const { return dst_.index_of(apply(src_.element_at(idx))); }

AbHom AbHom::compose_after(const AbHom& first) const {
    if (!(first.dst_ == src_)) throw InvalidInput("hom composition mismatch");
    return AbHom(first.src_, dst_, mat_.mul(first.mat_));
}

AbHom AbHom::add(const AbHom& rhs) const {
    if (!(src_ == rhs.src_) || !(dst_ == rhs.dst_)) throw InvalidInput("hom addition mismatch");
    IntMat m = mat_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) += rhs.mat_.at(i, j);
    return AbHom(src_, dst_, std::move(m));
}

AbHom AbHom::neg() const {
    IntMat m = mat_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
    return AbHom(src_, dst_, std::move(m));
}

bool AbHom::is_zero_map() const {
    for (std::size_t i = 0; i < mat_.rows(); ++i)
        for (std::size_t j = 0; j < mat_.cols(); ++j)
            if (mod_floor(mat_.at(i, j), dst_.factors()[i]) != 0) return false;
    return true;
}

bool AbHom::is_injective() const { return ab_kernel(*this).kernel.is_trivial(); }

bool AbHom::is_surjective() const { return image_order(*this) == dst_.order(); }

bool AbHom::is_bijective() const { return src_.order() == dst_.order() && is_injective(); }

std::optional<AbHom> AbHom::inverse() const {
    if (!is_bijective()) return std::nullopt;
    IntMat m(src_.rank(), dst_.rank());
    for (std::size_t j = 0; j < dst_.rank(); ++j) {
        Elem e = dst_.zero();
        e[j] = 1;
        auto x = solve(*this, e);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < src_.rank(); ++i) m.at(i, j) = (*x)[i];
    }
    return AbHom(dst_, src_, std::move(m));
}

bool AbHom::operator==(const AbHom& rhs) const {
    if (!(src_ == rhs.src_) || !(dst_ == rhs.dst_)) return false;
    for (std::size_t i = 0; i < mat_.rows(); ++i)
        for (std::size_t j = 0; j < mat_.cols(); ++j)
            if (mod_floor(mat_.at(i, j), dst_.factors()[i]) != mod_floor(rhs.mat_.at(i, j), dst_.factors()[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Presentations

Elem Presentation::project(const Elem& x) const {
    Elem y(group.rank(), 0);
    for (std::size_t i = 0; i < proj.rows(); ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < proj.cols(); ++j) acc += static_cast<__int128>(proj.at(i, j)) * x[j];
        Int m = group.factors()[i];
        y[i] = static_cast<Int>(acc % m);
        if (y[i] < 0) y[i] += m;
    }
    return y;
}

Elem Presentation::lift(const Elem& y) const {
    Elem x(sect.rows(), 0);
    for (std::size_t i = 0; i < sect.rows(); ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < sect.cols(); ++j) acc += static_cast<__int128>(sect.at(i, j)) * y[j];
        x[i] = static_cast<Int>(acc);
    }
    return x;
}

Presentation present(std::size_t ngens, const std::vector<Elem>& relations) {
    IntMat b(ngens, relations.size());  // columns are relations
    for (std::size_t c = 0; c < relations.size(); ++c) {
        if (relations[c].size() != ngens) throw InternalError("relation arity mismatch");
        for (std::size_t r = 0; r < ngens; ++r) b.at(r, c) = relations[c][r];
    }
    SmithForm s = smith(std::move(b));

    std::vector<Int> factors;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < ngens; ++i) {
        Int d = i < std::min(ngens, relations.size()) ? s.d.at(i, i) : 0;
        if (d == 0) throw InvalidInput("presented group is infinite (zero invariant factor)");
        if (d > 1) {
            factors.push_back(d);
            kept.push_back(i);
        }
    }
    Presentation p;
    p.group = FinAb::from_factors(std::move(factors));
    p.proj = IntMat(kept.size(), ngens);
    p.sect = IntMat(ngens, kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r)
        for (std::size_t j = 0; j < ngens; ++j) p.proj.at(r, j) = mod_floor(s.u.at(kept[r], j), p.group.factors()[r]);
    for (std::size_t i = 0; i < ngens; ++i)
        for (std::size_t c = 0; c < kept.size(); ++c) p.sect.at(i, c) = s.uinv.at(i, kept[c]);
    return p;
}

Presentation normal_form(const std::vector<Int>& orders, const std::vector<Elem>& relations) {
    std::vector<Elem> rels;
    rels.reserve(orders.size() + relations.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1) throw InvalidInput("generator orders must be >= 1");
        Elem r(orders.size(), 0);
        r[i] = orders[i];
        rels.push_back(std::move(r));
    }
    for (const Elem& r : relations) {
        Elem rr(r);
        for (std::size_t i = 0; i < rr.size(); ++i) rr[i] = mod_floor(rr[i], orders[i]);
        rels.push_back(std::move(rr));
    }
    return present(orders.size(), rels);
}

// ---------------------------------------------------------------------------
// Kernels, cokernels, images

KernelPair ab_kernel(const AbHom& h) {
    const FinAb& a = h.src();
    const FinAb& b = h.dst();
    const std::size_t k = a.rank(), l = b.rank();
    // x in ker  iff  exists y with  mat*x + diag(e)*y = 0
    IntMat m(l, k + l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = h.mat().at(i, j);
        m.at(i, k + i) = b.factors()[i];
    }
    std::vector<Elem> gens;
    for (const Elem& z : integer_kernel_basis(m)) {
        Elem x(z.begin(), z.begin() + k);
        gens.push_back(a.reduced(std::move(x)));
    }
    Subgroup s = subgroup_from_generators(a, gens);
    return KernelPair{s.group, s.inclusion};
}

CokernelPair ab_cokernel(const AbHom& h) {
    const FinAb& b = h.dst();
    std::vector<Elem> rels;
    for (std::size_t j = 0; j < h.src().rank(); ++j) {
        Elem r(b.rank());
        for (std::size_t i = 0; i < b.rank(); ++i) r[i] = h.mat().at(i, j);
        rels.push_back(std::move(r));
    }
    Presentation p = normal_form(b.factors(), rels);
    AbHom proj(b, p.group, p.proj);
    return CokernelPair{p.group, std::move(proj), std::move(p)};
}

Int image_order(const AbHom& h) { return h.src().order() / ab_kernel(h).kernel.order(); }

std::optional<Elem> solve(const AbHom& h, const Elem& y) {
    const FinAb& a = h.src();
    const FinAb& b = h.dst();
    const std::size_t k = a.rank(), l = b.rank();
    IntMat m(l, k + l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = h.mat().at(i, j);
        m.at(i, k + i) = b.factors()[i];
    }
    SmithForm s = smith(std::move(m));
    // D w = U y
    Elem uy(l, 0);
    for (std::size_t i = 0; i < l; ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < l; ++j) acc += static_cast<__int128>(s.u.at(i, j)) * y[j];
        uy[i] = static_cast<Int>(acc);
    }
    Elem w(k + l, 0);
    for (std::size_t i = 0; i < l; ++i) {
        Int d = i < std::min(l, k + l) ? s.d.at(i, i) : 0;
        if (d == 0) {
            if (uy[i] != 0) return std::nullopt;
        } else {
            if (uy[i] % d != 0) return std::nullopt;
            w[i] = uy[i] / d;
        }
    }
    Elem z(k + l, 0);
    for (std::size_t i = 0; i < k + l; ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < k + l; ++j) acc += static_cast<__int128>(s.v.at(i, j)) * w[j];
        z[i] = static_cast<Int>(acc);
    }
    Elem x(z.begin(), z.begin() + k);
    return a.reduced(std::move(x));
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(const Elem& x) const { return coords(x).has_value(); }

std::optional<Elem> Subgroup::coords(const Elem& x) const { return solve(inclusion, x); }

Subgroup subgroup_from_generators(const FinAb& ambient, const std::vector<Elem>& gens) {
    const std::size_t m = gens.size();
    const std::size_t k = ambient.rank();
    // K = Z^m / { c : G c == 0 in ambient }
    IntMat g(k, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < k; ++i) g.at(i, j) = gens[j][i];
    IntMat mm(k, m + k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j) mm.at(i, j) = g.at(i, j);
        mm.at(i, m + i) = ambient.factors()[i];
    }
    std::vector<Elem> rels;
    for (const Elem& z : integer_kernel_basis(mm)) rels.emplace_back(z.begin(), z.begin() + m);
    Presentation p = present(m, rels);
    // inclusion = G * sect, reduced in the ambient group
    IntMat incl = g.mul(p.sect);
    Subgroup s;
    s.group = p.group;
    s.inclusion = AbHom(p.group, ambient, std::move(incl));
    return s;
}

// ---------------------------------------------------------------------------
// Direct sums

Elem DirectSum::assemble(const std::vector<Elem>& parts) const {
    Elem x = group.zero();
    for (std::size_t i = 0; i < parts.size(); ++i) x = group.add(x, inject[i].apply(parts[i]));
    return x;
}

std::vector<Elem> DirectSum::split(const Elem& x) const {
    std::vector<Elem> parts;
    parts.reserve(project.size());
    for (const AbHom& p : project) parts.push_back(p.apply(x));
    return parts;
}

DirectSum direct_sum(const std::vector<FinAb>& parts) {
    std::vector<Int> orders;
    std::vector<std::pair<std::size_t, std::size_t>> slot;  // (part, generator within part)
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (std::size_t i = 0; i < parts[p].rank(); ++i) {
            orders.push_back(parts[p].factors()[i]);
            slot.emplace_back(p, i);
        }
    Presentation pres = normal_form(orders, {});
    DirectSum ds;
    ds.group = pres.group;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        IntMat inj(ds.group.rank(), parts[p].rank());
        IntMat prj(parts[p].rank(), ds.group.rank());
        for (std::size_t s = 0; s < slot.size(); ++s) {
            if (slot[s].first != p) continue;
            for (std::size_t r = 0; r < ds.group.rank(); ++r) {
                inj.at(r, slot[s].second) += pres.proj.at(r, s);
                prj.at(slot[s].second, r) += pres.sect.at(s, r);
            }
        }
        ds.inject.emplace_back(parts[p], ds.group, std::move(inj));
        ds.project.emplace_back(ds.group, parts[p], std::move(prj));
    }
    return ds;
}

// ---------------------------------------------------------------------------
// Tensor products

AbTensor::AbTensor(const FinAb& a, const FinAb& b) : a_(a), b_(b) {
    std::vector<Int> orders;
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) {
            Int g = gcd_ll(a.factors()[i], b.factors()[j]);
            if (g > 1) {
                pairs_.emplace_back(i, j);
                pair_orders_.push_back(g);
                orders.push_back(g);
            }
        }
    pres_ = normal_form(orders, {});
}

Elem AbTensor::raw_coords(const Elem& x, const Elem& y) const {
    Elem c(pairs_.size(), 0);
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
        Int g = pair_orders_[s];
        c[s] = mod_floor(checked_mul(mod_floor(x[pairs_[s].first], g), mod_floor(y[pairs_[s].second], g)), g);
    }
    return c;
}

Elem AbTensor::pure(const Elem& x, const Elem& y) const { return pres_.project(raw_coords(x, y)); }

AbHom AbTensor::induced(const AbHom& f, const AbHom& g, const AbTensor& target) const {
    // on the raw generator a_i (x) b_j the induced map is f(a_i) (x) g(b_j)
    IntMat raw(target.group().rank(), pairs_.size());
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
        Elem ea = a_.zero(), eb = b_.zero();
        ea[pairs_[s].first] = 1;
        eb[pairs_[s].second] = 1;
        Elem img = target.pure(f.apply(ea), g.apply(eb));
        for (std::size_t r = 0; r < img.size(); ++r) raw.at(r, s) = img[r];
    }
    return AbHom(group(), target.group(), raw.mul(pres_.sect));
}

FinAb ab_tensor(const FinAb& a, const FinAb& b) { return AbTensor(a, b).group(); }

// ---------------------------------------------------------------------------
// Hom groups

HomGroup::HomGroup(const FinAb& a, const FinAb& b) : a_(a), b_(b) {
    std::vector<Int> orders;
    for (std::size_t j = 0; j < a.rank(); ++j)
        for (std::size_t i = 0; i < b.rank(); ++i) {
            Int g = gcd_ll(a.factors()[j], b.factors()[i]);
            if (g > 1) {
                pairs_.emplace_back(j, i);
                pair_orders_.push_back(g);
                orders.push_back(g);
            }
        }
    pres_ = normal_form(orders, {});
}

AbHom HomGroup::hom_of(const Elem& t) const {
    Elem c = pres_.lift(t);
    IntMat m(b_.rank(), a_.rank());
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
        auto [j, i] = pairs_[s];
        Int g = pair_orders_[s];
        m.at(i, j) += checked_mul(mod_floor(c[s], g), b_.factors()[i] / g);
    }
    return AbHom(a_, b_, std::move(m));
}

Elem HomGroup::elem_of(const AbHom& h) const {
    if (!(h.src() == a_) || !(h.dst() == b_)) throw InvalidInput("hom group element of mismatched hom");
    Elem c(pairs_.size(), 0);
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
        auto [j, i] = pairs_[s];
        Int g = pair_orders_[s];
        Int step = b_.factors()[i] / g;
        Int entry = mod_floor(h.mat().at(i, j), b_.factors()[i]);
        if (entry % step != 0) throw InvalidInput("matrix is not a well-defined homomorphism");
        c[s] = (entry / step) % g;
    }
    return pres_.project(c);
}

FinAb ab_hom(const FinAb& a, const FinAb& b) { return HomGroup(a, b).group(); }

}  // namespace cartmod
