#include "clutterlab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "clutterlab/lp.hpp"

namespace clutterlab {

namespace {

IntMatrix matrix_of_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    return IntMatrix::from_rows(rows, cols);
}

IntMatrix matrix_of_columns(const std::vector<IntVector>& columns, std::size_t rows)
{
    return IntMatrix::from_columns(columns, rows);
}

IntVector subtract(const IntVector& a, const IntVector& b)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

// Coordinates adapted to the cone: Λ = ℤᵈ ∩ span(C) with basis B, and the projection
// π: Λ → ℤ^(r−m) whose kernel is the lineality lattice.
class Reduction {
public:
    explicit Reduction(const ConeWithLattice& cone) : d_(cone.dim())
    {
        basis_ = integer_kernel(matrix_of_rows(cone.equations(), d_));
        r_ = basis_.size();
        bmat_ = matrix_of_columns(basis_, d_);
        std::vector<IntVector> fy;
        for (const auto& f : cone.facets()) {
            IntVector row(r_);
            for (std::size_t j = 0; j < r_; ++j)
                row[j] = dot(f, basis_[j]);
            fy.push_back(row);
        }
        const auto lin = integer_kernel(matrix_of_rows(fy, r_));
        m_ = lin.size();
        nrows_ = integer_kernel(matrix_of_rows(lin, r_));
        nmat_ = matrix_of_rows(nrows_, r_);
    }

    [[nodiscard]] std::size_t quotient_dim() const { return r_ - m_; }

    [[nodiscard]] IntVector coords(const IntVector& x) const
    {
        auto y = solve_integer(bmat_, x);
        if (!y)
            throw InternalError("vector " + to_string(x) + " is not in the lattice of the cone's span");
        return *y;
    }

    [[nodiscard]] IntVector project(const IntVector& x) const { return multiply(nmat_, coords(x)); }

    [[nodiscard]] IntVector lift(const IntVector& z) const
    {
        auto y = solve_integer(nmat_, z);
        if (!y)
            throw InternalError("projection is not surjective");
        return multiply(bmat_, *y);
    }

private:
    std::size_t d_;
    std::size_t r_ = 0;
    std::size_t m_ = 0;
    std::vector<IntVector> basis_;
    IntMatrix bmat_;
    std::vector<IntVector> nrows_;
    IntMatrix nmat_;
};

bool in_cone(const std::vector<IntVector>& facets, const IntVector& x)
{
    return std::all_of(facets.begin(), facets.end(), [&](const IntVector& f) { return sgn(dot(f, x)) >= 0; });
}

// Pulling triangulation of the cone spanned by rays[S] (all extreme), of dimension k.
void triangulate(const std::vector<IntVector>& rays, const std::vector<std::size_t>& S, std::size_t k,
                 std::size_t ambient, std::vector<std::vector<std::size_t>>& out, StepBudget& budget)
{
    budget.charge(1, "triangulation");
    if (S.size() == k) {
        out.push_back(S);
        return;
    }
    const std::size_t apex = S.front();
    std::vector<IntVector> gens;
    for (auto s : S)
        gens.push_back(rays[s]);
    const auto cf = cone_facets(gens, ambient);
    for (const auto& f : cf.facets) {
        if (sgn(dot(f, rays[apex])) == 0)
            continue;
        std::vector<std::size_t> face;
        for (auto s : S)
            if (sgn(dot(f, rays[s])) == 0)
                face.push_back(s);
        std::vector<std::vector<std::size_t>> sub;
        triangulate(rays, face, k - 1, ambient, sub, budget);
        for (auto& simplex : sub) {
            simplex.insert(simplex.begin(), apex);
            out.push_back(std::move(simplex));
        }
    }
}

// Nonzero lattice points of the half-open parallelepiped spanned by the columns of m.
void parallelepiped_points(const IntMatrix& m, std::set<IntVector>& out, StepBudget& budget)
{
    const std::size_t k = m.rows();
    const Integer det = determinant(m);
    const Integer vol = abs(det);
    if (!vol.fits_slong_p() || vol > Integer(std::numeric_limits<int>::max()))
        throw ResourceExceeded("simplicial cone of determinant " + vol.get_str() + " is too large");
    const long n = vol.get_si();
    if (n == 1)
        return;
    budget.charge(static_cast<std::uint64_t>(n), "fundamental parallelepiped");

    // adj = det · m⁻¹; element t ∈ (ℤ/n)ᵏ corresponds to the point m·t/n
    const RatMatrix mr = to_rational(m);
    std::vector<std::vector<long>> gens;
    for (std::size_t j = 0; j < k; ++j) {
        RatVector e(k, 0);
        e[j] = 1;
        auto col = solve(mr, e);
        if (!col)
            throw InternalError("singular simplicial cone");
        std::vector<long> g(k);
        for (std::size_t i = 0; i < k; ++i) {
            Rational a = (*col)[i] * vol;
            Integer v = a.get_num() % n;
            if (v < 0)
                v += n;
            g[i] = v.get_si();
        }
        gens.push_back(g);
    }

    std::set<std::vector<long>> seen{std::vector<long>(k, 0)};
    std::vector<std::vector<long>> frontier{std::vector<long>(k, 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& t : frontier)
            for (const auto& g : gens) {
                std::vector<long> u(k);
                for (std::size_t i = 0; i < k; ++i)
                    u[i] = (t[i] + g[i]) % n;
                if (seen.insert(u).second)
                    next.push_back(std::move(u));
            }
        frontier = std::move(next);
    }
    for (const auto& t : seen) {
        if (std::all_of(t.begin(), t.end(), [](long x) { return x == 0; }))
            continue;
        IntVector x(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j)
                x[i] += m(i, j) * t[j];
            x[i] /= n;
        }
        out.insert(std::move(x));
    }
}

// Hilbert basis of a full-dimensional pointed cone in ℤᵏ.
std::vector<IntVector> full_hilbert_basis(const std::vector<IntVector>& gens, std::size_t k, StepBudget& budget)
{
    if (k == 0)
        return {};
    const auto cf = cone_facets(gens, k);
    if (!cf.equations.empty())
        throw InternalError("cone is not full-dimensional in its lattice");
    std::vector<IntVector> rows;
    for (const auto& f : cf.facets) {
        IntVector r(f);
        for (auto& x : r)
            x = -x;
        rows.push_back(std::move(r));
    }
    const auto rays = cone_generators(rows, k).rays;

    std::vector<std::size_t> all(rays.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    std::vector<std::vector<std::size_t>> simplices;
    triangulate(rays, all, k, k, simplices, budget);

    std::set<IntVector> candidates(rays.begin(), rays.end());
    for (const auto& s : simplices) {
        IntMatrix m(k, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i)
                m(i, j) = rays[s[j]][i];
        parallelepiped_points(m, candidates, budget);
    }

    IntVector grading(k, 0);
    for (const auto& f : cf.facets)
        for (std::size_t i = 0; i < k; ++i)
            grading[i] += f[i];
    std::vector<std::pair<Integer, IntVector>> by_degree;
    for (const auto& c : candidates)
        by_degree.emplace_back(dot(grading, c), c);
    std::sort(by_degree.begin(), by_degree.end());

    std::vector<IntVector> basis;
    for (const auto& [deg, x] : by_degree) {
        bool reducible = false;
        for (const auto& y : basis) {
            budget.charge(1, "Hilbert basis reduction");
            if (in_cone(cf.facets, subtract(x, y))) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

struct Quotient {
    Reduction red;
    std::vector<IntVector> projected;   // π(h) for every h
    std::vector<IntVector> hb;          // Hilbert basis of the projected cone
};

IntVector positive_relation(const std::vector<IntVector>& H, std::size_t dim)
{
    LinearProgram lp;
    lp.num_vars = H.size();
    for (std::size_t i = 0; i < dim; ++i) {
        RatVector row(H.size());
        for (std::size_t j = 0; j < H.size(); ++j)
            row[j] = H[j][i];
        lp.eq_rows.push_back(row);
        lp.eq_rhs.push_back(0);
    }
    for (std::size_t j = 0; j < H.size(); ++j) {
        RatVector row(H.size(), 0);
        row[j] = -1;
        lp.le_rows.push_back(row);
        lp.le_rhs.push_back(-1);
    }
    auto res = solve_lp(lp);
    if (res.status != LPResult::Status::optimal)
        throw InternalError("lineality generators admit no positive relation");
    Integer l = 1;
    for (const auto& x : res.x)
        l = lcm(l, Integer(x.get_den()));
    IntVector rel(H.size());
    for (std::size_t j = 0; j < H.size(); ++j)
        rel[j] = Rational(res.x[j] * l).get_num();
    return rel;
}

} // namespace

ConeWithLattice::ConeWithLattice(std::vector<IntVector> generators, std::size_t dim) :
    dim_(dim), gens_(std::move(generators))
{
    for (const auto& g : gens_)
        if (g.size() != dim_)
            throw UsageError("cone generator " + to_string(g) + " does not have length " + std::to_string(dim_));
    std::vector<IntVector> nonzero;
    for (const auto& g : gens_)
        if (!is_zero(g))
            nonzero.push_back(g);
    facets_ = cone_facets(nonzero, dim_);
    std::vector<IntVector> rows = facets_.equations;
    rows.insert(rows.end(), facets_.facets.begin(), facets_.facets.end());
    lineality_ = integer_kernel(IntMatrix::from_rows(rows, dim_));
}

bool ConeWithLattice::contains(std::span<const Integer> x) const
{
    for (const auto& e : facets_.equations)
        if (sgn(dot(e, x)) != 0)
            return false;
    for (const auto& f : facets_.facets)
        if (sgn(dot(f, x)) < 0)
            return false;
    return true;
}

bool ConeWithLattice::in_lineality(std::span<const Integer> x) const
{
    for (const auto& e : facets_.equations)
        if (sgn(dot(e, x)) != 0)
            return false;
    for (const auto& f : facets_.facets)
        if (sgn(dot(f, x)) != 0)
            return false;
    return true;
}

std::vector<IntVector> hilbert_basis(const ConeWithLattice& cone, StepBudget& budget)
{
    if (!cone.pointed())
        throw UsageError("hilbert_basis requires a pointed cone; use is_hilbert_basis for cones with lineality");
    Reduction red(cone);
    std::vector<IntVector> gens;
    for (const auto& g : cone.generators())
        if (!is_zero(g))
            gens.push_back(red.project(g));
    std::vector<IntVector> basis;
    for (const auto& z : full_hilbert_basis(gens, red.quotient_dim(), budget))
        basis.push_back(red.lift(z));
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::vector<IntVector> hilbert_basis(const ConeWithLattice& cone)
{
    StepBudget budget;
    return hilbert_basis(cone, budget);
}

Membership semigroup_member(const IntVector& a, const std::vector<IntVector>& H, StepBudget& budget)
{
    const std::size_t dim = a.size();
    ConeWithLattice cone(H, dim);
    Membership out;
    out.coefficients.assign(H.size(), 0);
    if (!cone.contains(a))
        return out;
    if (is_zero(a)) {
        out.member = true;
        return out;
    }

    if (cone.pointed()) {
        std::set<IntVector> failed;
        std::function<bool(const IntVector&)> search = [&](const IntVector& r) -> bool {
            if (is_zero(r))
                return true;
            if (failed.count(r))
                return false;
            for (std::size_t j = 0; j < H.size(); ++j) {
                if (is_zero(H[j]))
                    continue;
                budget.charge(1, "semigroup membership");
                IntVector next = subtract(r, H[j]);
                if (!cone.contains(next))
                    continue;
                if (search(next)) {
                    ++out.coefficients[j];
                    return true;
                }
            }
            failed.insert(r);
            return false;
        };
        out.member = search(a);
        if (!out.member)
            out.coefficients.assign(H.size(), 0);
        return out;
    }

    // With lineality: ℕH ∩ L = ℤ(H ∩ L), so search the pointed quotient and test the residual
    // against the lineality lattice.
    Reduction red(cone);
    std::vector<std::size_t> lin_idx, pointed_idx;
    for (std::size_t j = 0; j < H.size(); ++j)
        (cone.in_lineality(H[j]) ? lin_idx : pointed_idx).push_back(j);
    std::vector<IntVector> lin;
    for (auto j : lin_idx)
        lin.push_back(H[j]);
    const IntMatrix lmat = matrix_of_columns(lin, dim);
    std::vector<IntVector> proj;
    for (auto j : pointed_idx)
        proj.push_back(red.project(H[j]));
    const IntVector target = red.project(a);

    IntVector coeff(pointed_idx.size(), 0);
    std::optional<IntVector> lin_coeff;
    std::function<bool(const IntVector&, std::size_t)> search = [&](const IntVector& z, std::size_t from) -> bool {
        if (is_zero(z)) {
            IntVector residual = a;
            for (std::size_t i = 0; i < pointed_idx.size(); ++i)
                for (std::size_t c = 0; c < dim; ++c)
                    residual[c] -= coeff[i] * H[pointed_idx[i]][c];
            lin_coeff = solve_integer(lmat, residual);
            return lin_coeff.has_value();
        }
        for (std::size_t i = from; i < proj.size(); ++i) {
            budget.charge(1, "semigroup membership");
            IntVector next = subtract(z, proj[i]);
            // a fiber of π lies in the cone iff any of its points does
            if (!cone.contains(red.lift(next)))
                continue;
            ++coeff[i];
            if (search(next, i))
                return true;
            --coeff[i];
        }
        return false;
    };
    if (!search(target, 0))
        return out;

    IntVector t = *lin_coeff;
    const IntVector rel = positive_relation(lin, dim);
    Integer k = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
        if (t[j] < 0) {
            Integer need = (-t[j] + rel[j] - 1) / rel[j];
            k = std::max(k, need);
        }
    for (std::size_t j = 0; j < t.size(); ++j)
        t[j] += k * rel[j];
    out.member = true;
    for (std::size_t i = 0; i < pointed_idx.size(); ++i)
        out.coefficients[pointed_idx[i]] = coeff[i];
    for (std::size_t j = 0; j < lin_idx.size(); ++j)
        out.coefficients[lin_idx[j]] += t[j];
    return out;
}

Membership semigroup_member(const IntVector& a, const std::vector<IntVector>& H)
{
    StepBudget budget;
    return semigroup_member(a, H, budget);
}

HilbertBasisReport is_hilbert_basis(const std::vector<IntVector>& H, std::size_t dim, StepBudget& budget)
{
    if (H.empty())
        throw UsageError("is_hilbert_basis needs a nonempty set");
    ConeWithLattice cone(H, dim);
    HilbertBasisReport rep;

    // lineality lattice must be generated by the elements of H lying in it
    const auto& lb = cone.lineality();
    if (!lb.empty()) {
        std::vector<IntVector> lin;
        for (const auto& h : H)
            if (cone.in_lineality(h) && !is_zero(h))
                lin.push_back(h);
        const IntMatrix lmat = matrix_of_columns(lin, dim);
        for (const auto& b : lb)
            if (!solve_integer(lmat, b)) {
                rep.missing.push_back(b);
                break;
            }
    }

    Reduction red(cone);
    std::set<IntVector> projected;
    for (const auto& h : H) {
        if (cone.in_lineality(h))
            continue;
        projected.insert(red.project(h));
    }
    const auto hb = full_hilbert_basis({projected.begin(), projected.end()}, red.quotient_dim(), budget);
    for (const auto& z : hb) {
        IntVector x = red.lift(z);
        rep.basis.push_back(x);
        if (!projected.count(z))
            rep.missing.push_back(x);
    }
    std::sort(rep.basis.begin(), rep.basis.end());
    std::sort(rep.missing.begin(), rep.missing.end());
    rep.verdict = rep.missing.empty();
    return rep;
}

HilbertBasisReport is_hilbert_basis(const std::vector<IntVector>& H, std::size_t dim)
{
    StepBudget budget;
    return is_hilbert_basis(H, dim, budget);
}

} // namespace clutterlab
