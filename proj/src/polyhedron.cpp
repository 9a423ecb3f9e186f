#include "clutterlab/polyhedron.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>
#include <utility>

#include "bitset.hpp"

namespace clutterlab {

namespace {

using detail::Bitset;

IntVector unit(std::size_t dim, std::size_t i)
{
    IntVector e(dim, Integer(0));
    e[i] = 1;
    return e;
}

IntVector combine(const Integer& s, const IntVector& x, const Integer& t, const IntVector& y)
{
    IntVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        r[i] = s * x[i] + t * y[i];
    return r;
}

// Canonical basis (reduced row echelon form, rows made primitive) of span(vectors).
struct EchelonBasis {
    std::vector<IntVector> rows;
    std::vector<std::size_t> pivots;
};

EchelonBasis canonical_basis(const std::vector<IntVector>& vectors, std::size_t dim)
{
    EchelonBasis out;
    if (vectors.empty())
        return out;
    RatMatrix a = to_rational(IntMatrix::from_rows(vectors, dim));
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < dim; ++j)
                std::swap(a(p, j), a(r, j));
        const Rational piv = a(r, c);
        for (std::size_t j = 0; j < dim; ++j)
            a(r, j) /= piv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0)
                continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < dim; ++j)
                a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = 0; i < r; ++i)
        out.rows.push_back(clear_denominators(a.row_vector(i)).vector);
    return out;
}

// Zeroes the pivot coordinates of v using the basis rows (keeps orientation).
IntVector reduce_modulo(IntVector v, const EchelonBasis& basis)
{
    for (std::size_t k = 0; k < basis.rows.size(); ++k) {
        const std::size_t p = basis.pivots[k];
        if (sgn(v[p]) == 0)
            continue;
        const Integer lead = basis.rows[k][p]; // positive
        const Integer coef = v[p];
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = v[j] * lead - coef * basis.rows[k][j];
    }
    return primitive(std::move(v));
}

RatVector reduce_modulo(RatVector v, const EchelonBasis& basis)
{
    for (std::size_t k = 0; k < basis.rows.size(); ++k) {
        const std::size_t p = basis.pivots[k];
        if (sgn(v[p]) == 0)
            continue;
        const Rational f = v[p] / Rational(basis.rows[k][p]);
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] -= f * Rational(basis.rows[k][j]);
    }
    return v;
}

} // namespace

// ---------------------------------------------------------------------------
// Double description

ConeGenerators cone_generators(const std::vector<IntVector>& rows, std::size_t dim, const DDOptions& opts)
{
    for (const auto& r : rows)
        if (r.size() != dim)
            throw UsageError("constraint of length " + std::to_string(r.size()) + " in dimension " +
                             std::to_string(dim));

    struct Ray {
        IntVector v;
        Bitset tight;
    };
    const std::size_t m = rows.size();
    std::vector<IntVector> lin;
    for (std::size_t i = 0; i < dim; ++i)
        lin.push_back(unit(dim, i));
    std::vector<Ray> rays;

    for (std::size_t k = 0; k < m; ++k) {
        const IntVector& a = rows[k];
        if (is_zero(std::span<const Integer>(a))) {
            for (auto& r : rays)
                r.tight.set(k);
            continue;
        }

        // Lineality step: some lineality direction is cut by the new halfspace.
        std::size_t pick = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (sgn(dot(a, lin[i])) != 0) {
                pick = i;
                break;
            }
        if (pick != lin.size()) {
            IntVector l0 = lin[pick];
            Integer c = dot(a, l0);
            if (c > 0) {
                for (auto& x : l0)
                    x = -x;
                c = -c;
            }
            std::vector<IntVector> next_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == pick)
                    continue;
                const Integer al = dot(a, lin[i]);
                next_lin.push_back(sgn(al) == 0 ? lin[i] : primitive(combine(c, lin[i], -al, l0)));
            }
            for (auto& r : rays) {
                const Integer ar = dot(a, r.v);
                if (sgn(ar) != 0)
                    r.v = primitive(combine(-c, r.v, ar, l0));
                r.tight.set(k);
            }
            Ray fresh{primitive(std::move(l0)), Bitset(m)};
            for (std::size_t j = 0; j < k; ++j)
                fresh.tight.set(j);
            rays.push_back(std::move(fresh));
            lin = std::move(next_lin);
            continue;
        }

        // Classical step on the pointed part.
        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(a, rays[i].v);
            if (sgn(s[i]) > 0) {
                pos.push_back(i);
            } else {
                if (sgn(s[i]) < 0)
                    neg.push_back(i);
                next.push_back(rays[i]);
                if (sgn(s[i]) == 0)
                    next.back().tight.set(k);
            }
        }
        const long need = static_cast<long>(dim) - static_cast<long>(lin.size()) - 2;
        for (auto p : pos) {
            for (auto n : neg) {
                Bitset z = rays[p].tight & rays[n].tight;
                if (need > 0 && static_cast<long>(z.count()) < need)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != n && z.subset_of(rays[r].tight))
                        adjacent = false;
                if (!adjacent)
                    continue;
                Ray fresh{primitive(combine(-s[n], rays[p].v, s[p], rays[n].v)), std::move(z)};
                fresh.tight.set(k);
                next.push_back(std::move(fresh));
                if (next.size() > opts.max_rays)
                    throw ResourceExceeded("double description: more than " + std::to_string(opts.max_rays) +
                                           " intermediate rays");
            }
        }
        rays = std::move(next);
    }

    ConeGenerators out;
    out.lineality = std::move(lin);
    for (auto& r : rays)
        out.rays.push_back(std::move(r.v));
    return out;
}

ConeFacets cone_facets(const std::vector<IntVector>& generators, std::size_t dim, const DDOptions& opts)
{
    std::vector<IntVector> rows;
    for (const auto& g : generators) {
        if (g.size() != dim)
            throw UsageError("generator of wrong length");
        if (!is_zero(std::span<const Integer>(g)))
            rows.push_back(g);
    }
    const auto polar = cone_generators(rows, dim, opts);
    const auto eq = canonical_basis(polar.lineality, dim);
    ConeFacets out;
    out.equations = eq.rows;
    std::set<IntVector> facets;
    for (const auto& y : polar.rays) {
        IntVector f(dim);
        for (std::size_t i = 0; i < dim; ++i)
            f[i] = -y[i];
        f = reduce_modulo(std::move(f), eq);
        if (!is_zero(std::span<const Integer>(f)))
            facets.insert(std::move(f));
    }
    out.facets.assign(facets.begin(), facets.end());
    return out;
}

// ---------------------------------------------------------------------------
// H <-> V

bool HRep::contains(std::span<const Rational> x) const
{
    if (x.size() != dim)
        throw UsageError("point dimension mismatch");
    for (const auto& e : equations)
        if (dot(e.normal, x) != Rational(e.rhs))
            return false;
    for (const auto& i : inequalities)
        if (dot(i.normal, x) > Rational(i.rhs))
            return false;
    return true;
}

VRep to_vrep(const HRep& h, const DDOptions& opts)
{
    const std::size_t n = h.dim;
    std::vector<IntVector> rows;
    IntVector t_nonneg(n + 1, Integer(0));
    t_nonneg[n] = -1;
    rows.push_back(t_nonneg);
    auto lift = [&](const Inequality& q, bool negate) {
        if (q.normal.size() != n)
            throw UsageError("inequality normal has wrong length");
        IntVector r(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = negate ? Integer(-q.normal[i]) : q.normal[i];
        r[n] = negate ? q.rhs : Integer(-q.rhs);
        return r;
    };
    for (const auto& q : h.equations) {
        rows.push_back(lift(q, false));
        rows.push_back(lift(q, true));
    }
    for (const auto& q : h.inequalities)
        rows.push_back(lift(q, false));

    const auto cg = cone_generators(rows, n + 1, opts);
    VRep v;
    v.dim = n;
    std::vector<RatVector> verts;
    std::vector<IntVector> rays;
    for (const auto& r : cg.rays) {
        if (sgn(r[n]) > 0) {
            RatVector x(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = Rational(r[i], r[n]);
                x[i].canonicalize();
            }
            verts.push_back(std::move(x));
        } else {
            rays.push_back(primitive(IntVector(r.begin(), r.begin() + static_cast<long>(n))));
        }
    }
    if (verts.empty())
        return v;

    std::vector<IntVector> lin;
    for (const auto& l : cg.lineality)
        lin.emplace_back(l.begin(), l.begin() + static_cast<long>(n));
    const auto lb = canonical_basis(lin, n);
    v.lineality = lb.rows;

    std::set<RatVector> vs;
    for (auto& x : verts)
        vs.insert(reduce_modulo(std::move(x), lb));
    v.vertices.assign(vs.begin(), vs.end());
    std::set<IntVector> rs;
    for (auto& r : rays) {
        auto rr = reduce_modulo(std::move(r), lb);
        if (!is_zero(std::span<const Integer>(rr)))
            rs.insert(std::move(rr));
    }
    v.rays.assign(rs.begin(), rs.end());
    return v;
}

HRep to_hrep(const VRep& v, const DDOptions& opts)
{
    const std::size_t n = v.dim;
    HRep h;
    h.dim = n;
    if (v.is_empty()) {
        h.inequalities.push_back({IntVector(n, Integer(0)), Integer(-1)});
        return h;
    }
    std::vector<IntVector> gens;
    std::vector<IntVector> vertex_gens;
    for (const auto& x : v.vertices) {
        if (x.size() != n)
            throw UsageError("vertex of wrong length");
        RatVector lifted(x);
        lifted.push_back(Rational(1));
        vertex_gens.push_back(clear_denominators(lifted).vector);
        gens.push_back(vertex_gens.back());
    }
    auto lift0 = [&](const IntVector& r, bool negate) {
        if (r.size() != n)
            throw UsageError("ray of wrong length");
        IntVector g(n + 1, Integer(0));
        for (std::size_t i = 0; i < n; ++i)
            g[i] = negate ? Integer(-r[i]) : r[i];
        return g;
    };
    for (const auto& r : v.rays)
        gens.push_back(lift0(r, false));
    for (const auto& l : v.lineality) {
        gens.push_back(lift0(l, false));
        gens.push_back(lift0(l, true));
    }

    const auto cf = cone_facets(gens, n + 1, opts);
    for (const auto& e : cf.equations) {
        Inequality q{IntVector(e.begin(), e.begin() + static_cast<long>(n)), -e[n]};
        if (is_zero(std::span<const Integer>(q.normal)))
            throw InternalError("inconsistent affine hull equation");
        h.equations.push_back(std::move(q));
    }
    for (const auto& f : cf.facets) {
        // ⟨f, (x,1)⟩ ≥ 0 on the cone; skip the face at infinity (no vertex on it).
        bool touches_vertex = std::any_of(vertex_gens.begin(), vertex_gens.end(),
                                          [&](const IntVector& g) { return sgn(dot(f, g)) == 0; });
        if (!touches_vertex)
            continue;
        Inequality q{IntVector(n), f[n]};
        for (std::size_t i = 0; i < n; ++i)
            q.normal[i] = -f[i];
        if (is_zero(std::span<const Integer>(q.normal)))
            continue;
        h.inequalities.push_back(std::move(q));
    }
    std::sort(h.inequalities.begin(), h.inequalities.end());
    return h;
}

std::vector<Face> minimal_faces(const HRep& h, const DDOptions& opts)
{
    const VRep v = to_vrep(h, opts);
    std::vector<Face> faces;
    for (const auto& x : v.vertices) {
        Face f;
        f.point = x;
        f.dimension = static_cast<int>(v.lineality.size());
        std::vector<IntVector> rows;
        IntVector rhs;
        for (const auto& e : h.equations) {
            rows.push_back(e.normal);
            rhs.push_back(e.rhs);
        }
        for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
            const auto& q = h.inequalities[i];
            if (dot(q.normal, x) == Rational(q.rhs)) {
                f.active.push_back(i);
                rows.push_back(q.normal);
                rhs.push_back(q.rhs);
            }
        }
        if (auto xi = to_integer(x)) {
            f.integral_point = std::move(*xi);
        } else if (rows.empty()) {
            f.integral_point = IntVector(h.dim, Integer(0));
        } else {
            f.integral_point = solve_integer(IntMatrix::from_rows(rows, h.dim), rhs);
        }
        faces.push_back(std::move(f));
    }
    return faces;
}

IntegralityReport is_integral(const HRep& h, const DDOptions& opts)
{
    const auto faces = minimal_faces(h, opts);
    if (faces.empty())
        throw UsageError("integrality of the empty polyhedron is undefined here");
    IntegralityReport rep;
    for (const auto& f : faces)
        if (!f.integral_point) {
            rep.integral = false;
            rep.fractional_vertex = f.point;
            break;
        }
    return rep;
}

int dimension(const VRep& v)
{
    if (v.is_empty())
        return -1;
    std::vector<RatVector> dirs;
    for (std::size_t i = 1; i < v.vertices.size(); ++i) {
        RatVector d(v.dim);
        for (std::size_t j = 0; j < v.dim; ++j)
            d[j] = v.vertices[i][j] - v.vertices[0][j];
        dirs.push_back(std::move(d));
    }
    for (const auto& r : v.rays)
        dirs.push_back(to_rational(r));
    for (const auto& l : v.lineality)
        dirs.push_back(to_rational(l));
    if (dirs.empty())
        return 0;
    return static_cast<int>(rank(RatMatrix::from_rows(dirs, v.dim)));
}

// ---------------------------------------------------------------------------
// Lattice points

namespace {

template <typename T>
T convert(const Integer& x)
{
    if constexpr (std::is_same_v<T, Integer>)
        return x;
    else
        return static_cast<T>(x.get_si());
}

// Depth-first scan of a box, pruned by exact partial bounds on every constraint.
template <typename T>
class BoxScan {
public:
    struct Constraint {
        std::vector<T> a;
        T rhs;
        bool equation;
        std::vector<T> suffix_min, suffix_max;
    };

    BoxScan(std::vector<T> lo, std::vector<T> hi, std::vector<Constraint> cons)
        : lo_(std::move(lo)), hi_(std::move(hi)), cons_(std::move(cons)), x_(lo_.size()), partial_(cons_.size(), T(0))
    {
        const std::size_t n = lo_.size();
        for (auto& c : cons_) {
            c.suffix_min.assign(n + 1, T(0));
            c.suffix_max.assign(n + 1, T(0));
            for (std::size_t j = n; j-- > 0;) {
                T u = c.a[j] * lo_[j], w = c.a[j] * hi_[j];
                c.suffix_min[j] = c.suffix_min[j + 1] + (u < w ? u : w);
                c.suffix_max[j] = c.suffix_max[j + 1] + (u < w ? w : u);
            }
        }
    }

    void run(const std::function<void(const std::vector<T>&)>& visit)
    {
        for (std::size_t j = 0; j < lo_.size(); ++j)
            if (hi_[j] < lo_[j])
                return;
        rec(0, visit);
    }

private:
    void rec(std::size_t k, const std::function<void(const std::vector<T>&)>& visit)
    {
        for (std::size_t c = 0; c < cons_.size(); ++c) {
            const auto& con = cons_[c];
            if (partial_[c] + con.suffix_min[k] > con.rhs)
                return;
            if (con.equation && partial_[c] + con.suffix_max[k] < con.rhs)
                return;
        }
        if (k == lo_.size()) {
            visit(x_);
            return;
        }
        for (T val = lo_[k]; val <= hi_[k]; ++val) {
            x_[k] = val;
            for (std::size_t c = 0; c < cons_.size(); ++c)
                partial_[c] += cons_[c].a[k] * val;
            rec(k + 1, visit);
            for (std::size_t c = 0; c < cons_.size(); ++c)
                partial_[c] -= cons_[c].a[k] * val;
        }
    }

    std::vector<T> lo_, hi_;
    std::vector<Constraint> cons_;
    std::vector<T> x_;
    std::vector<T> partial_;
};

struct ScanInput {
    IntVector lo, hi;
    std::vector<Inequality> ineq, eq;
};

ScanInput scan_input(const Polytope& p, unsigned b, bool interior)
{
    ScanInput in;
    const std::size_t n = p.ambient_dim();
    const auto& verts = p.vrep().vertices;
    in.lo.resize(n);
    in.hi.resize(n);
    const Rational bb(b);
    for (std::size_t j = 0; j < n; ++j) {
        Rational mn = verts[0][j] * bb, mx = mn;
        for (const auto& v : verts) {
            Rational x = v[j] * bb;
            mn = std::min(mn, x);
            mx = std::max(mx, x);
        }
        mpz_cdiv_q(in.lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_fdiv_q(in.hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    }
    for (const auto& q : p.hrep().inequalities)
        in.ineq.push_back({q.normal, q.rhs * b - (interior ? 1 : 0)});
    for (const auto& q : p.hrep().equations)
        in.eq.push_back({q.normal, q.rhs * b});
    return in;
}

bool fits_machine_words(const ScanInput& in)
{
    const Integer limit = Integer(1) << 60;
    Integer box = 1;
    for (std::size_t j = 0; j < in.lo.size(); ++j)
        box = std::max(box, Integer(std::max(abs(in.lo[j]), abs(in.hi[j]))));
    auto ok = [&](const Inequality& q) {
        Integer s = abs(q.rhs);
        for (const auto& a : q.normal)
            s += abs(a) * box;
        return s < limit;
    };
    return std::all_of(in.ineq.begin(), in.ineq.end(), ok) && std::all_of(in.eq.begin(), in.eq.end(), ok);
}

template <typename T>
void scan(const ScanInput& in, const std::function<void(const std::vector<T>&)>& visit)
{
    using C = typename BoxScan<T>::Constraint;
    std::vector<C> cons;
    auto add = [&](const Inequality& q, bool eq) {
        C c;
        for (const auto& a : q.normal)
            c.a.push_back(convert<T>(a));
        c.rhs = convert<T>(q.rhs);
        c.equation = eq;
        cons.push_back(std::move(c));
    };
    for (const auto& q : in.eq)
        add(q, true);
    for (const auto& q : in.ineq)
        add(q, false);
    std::vector<T> lo, hi;
    for (const auto& x : in.lo)
        lo.push_back(convert<T>(x));
    for (const auto& x : in.hi)
        hi.push_back(convert<T>(x));
    BoxScan<T>(std::move(lo), std::move(hi), std::move(cons)).run(visit);
}

std::vector<IntVector> collect(const ScanInput& in)
{
    std::vector<IntVector> out;
    if (fits_machine_words(in)) {
        scan<long long>(in, [&](const std::vector<long long>& x) {
            IntVector v;
            v.reserve(x.size());
            for (auto c : x)
                v.emplace_back(static_cast<long>(c));
            out.push_back(std::move(v));
        });
    } else {
        scan<Integer>(in, [&](const std::vector<Integer>& x) { out.push_back(x); });
    }
    return out; // the scan visits points in lexicographic order
}

std::uint64_t count(const ScanInput& in)
{
    std::uint64_t c = 0;
    if (fits_machine_words(in))
        scan<long long>(in, [&](const std::vector<long long>&) { ++c; });
    else
        scan<Integer>(in, [&](const std::vector<Integer>&) { ++c; });
    return c;
}

} // namespace

Polytope::Polytope(VRep v, const DDOptions& opts) : v_(std::move(v))
{
    if (v_.is_empty())
        throw UsageError("polytope must be nonempty");
    if (!v_.is_bounded())
        throw UsageError("polytope must be bounded");
    h_ = to_hrep(v_, opts);
    // Round trip so the stored vertex list is exactly the set of extreme points.
    v_ = to_vrep(h_, opts);
    dim_ = clutterlab::dimension(v_);
}

Polytope Polytope::from_points(const std::vector<IntVector>& points)
{
    if (points.empty())
        throw UsageError("polytope needs at least one point");
    VRep v;
    v.dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != v.dim)
            throw UsageError("points of mixed dimension");
        v.vertices.push_back(to_rational(p));
    }
    return Polytope(std::move(v));
}

std::vector<IntVector> Polytope::lattice_points(unsigned b) const { return collect(scan_input(*this, b, false)); }

std::uint64_t Polytope::count_lattice_points(unsigned b) const { return count(scan_input(*this, b, false)); }

std::vector<IntVector> Polytope::relative_interior_lattice_points(unsigned b) const
{
    return collect(scan_input(*this, b, true));
}

std::uint64_t Polytope::count_relative_interior_lattice_points(unsigned b) const
{
    return count(scan_input(*this, b, true));
}

std::vector<IntVector> lattice_points(const Polytope& p, unsigned b) { return p.lattice_points(b); }

std::vector<IntVector> relative_interior_lattice_points(const Polytope& p, unsigned b)
{
    return p.relative_interior_lattice_points(b);
}

} // namespace clutterlab
