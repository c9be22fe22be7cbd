#include "hsw/superalgebra.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace hsw {

ProductTensor::ProductTensor(Field f, std::size_t n) : field_(f), n_(n), c_(n * n * n, Scalar::zero(f)) {}

Vector ProductTensor::basis_product(std::size_t i, std::size_t j) const
{
    Vector v(c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_),
             c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j + 1) * n_));
    return v;
}

Vector ProductTensor::apply(const Vector& x, const Vector& y) const
{
    if (x.size() != n_ || y.size() != n_)
        throw DimensionMismatch("product of vectors of size " + std::to_string(x.size()) + " and "
                                + std::to_string(y.size()) + " in a " + std::to_string(n_)
                                + "-dimensional algebra");
    auto r = zero_vector(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero())
                continue;
            const Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k) {
                const auto& c = (*this)(i, j, k);
                if (!c.is_zero())
                    r[k] += w * c;
            }
        }
    }
    return r;
}

bool ProductTensor::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ProductTensor& ProductTensor::operator+=(const ProductTensor& o)
{
    if (n_ != o.n_)
        throw DimensionMismatch("product tensors of different dimension");
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

ProductTensor operator*(const Scalar& k, ProductTensor a)
{
    for (auto& s : a.c_)
        s *= k;
    return a;
}

SuperAlgebra::SuperAlgebra(GradedSpace space, ProductTensor product, EvenLinearMap twist, std::string label)
    : space_(std::move(space)), product_(std::move(product)), twist_(std::move(twist)), label_(std::move(label))
{
    const std::size_t n = space_.dim();
    if (product_.dim() != n)
        throw DimensionMismatch("product tensor dimension " + std::to_string(product_.dim())
                                + " does not match space dimension " + std::to_string(n));
    if (!(twist_.source() == space_) || !(twist_.target() == space_))
        throw DimensionMismatch("twist is not an endomorphism of the algebra's space");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (space_.parity(k) != space_.parity(i) + space_.parity(j) && !product_(i, j, k).is_zero())
                    throw ParityViolation("product " + space_.name(i) + "·" + space_.name(j) + " has a component along "
                                          + space_.name(k) + " of the wrong parity");
}

SuperAlgebra SuperAlgebra::zero(Field f, GradedSpace space, std::string label)
{
    const auto n = space.dim();
    auto twist = EvenLinearMap::identity(f, space);
    return SuperAlgebra(std::move(space), ProductTensor(f, n), std::move(twist), std::move(label));
}

Vector SuperAlgebra::mul(const Vector& x, const Vector& y) const
{
    return product_.apply(x, y);
}

Matrix SuperAlgebra::left_multiplication(std::size_t i) const
{
    const auto n = dim();
    Matrix m(field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            m(k, j) = product_(i, j, k);
    return m;
}

Matrix SuperAlgebra::left_multiplication(const Vector& x) const
{
    const auto n = dim();
    Matrix m(field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (!x.at(i).is_zero())
            m += x[i] * left_multiplication(i);
    return m;
}

DendriformAlgebra::DendriformAlgebra(GradedSpace space, ProductTensor left, ProductTensor right,
                                     EvenLinearMap twist, std::string label)
    : left_(space, std::move(left), twist, label + ".left"),
      right_(std::move(space), std::move(right), std::move(twist), label + ".right"),
      label_(std::move(label))
{
}

DendriformAlgebra DendriformAlgebra::zero(Field f, GradedSpace space, std::string label)
{
    const auto n = space.dim();
    auto twist = EvenLinearMap::identity(f, space);
    return DendriformAlgebra(std::move(space), ProductTensor(f, n), ProductTensor(f, n), std::move(twist),
                             std::move(label));
}

SuperAlgebra DendriformAlgebra::star() const
{
    return SuperAlgebra(space(), left_.product() + right_.product(), twist(), label_ + ".star");
}

namespace {

constexpr std::array<std::pair<AlgebraClass, std::string_view>, 6> kAlgebraClasses{{
    {AlgebraClass::supercommutative, "supercommutative"},
    {AlgebraClass::hom_jordan, "hom-jordan"},
    {AlgebraClass::hom_associative, "hom-associative"},
    {AlgebraClass::hom_alternative, "hom-alternative"},
    {AlgebraClass::hom_pre_jordan, "hom-pre-jordan"},
    {AlgebraClass::multiplicative_twist, "multiplicative-twist"},
}};

constexpr std::array<std::pair<DendriformClass, std::string_view>, 3> kDendriformClasses{{
    {DendriformClass::hom_dendriform, "hom-dendriform"},
    {DendriformClass::hom_pre_alternative, "hom-pre-alternative"},
    {DendriformClass::multiplicative_twist, "dendriform-multiplicative-twist"},
}};

// Basis-level evaluation context shared by the identity checkers: caches α^k(e_i).
struct Evaluator {
    const SuperAlgebra& a;
    std::size_t n;
    std::vector<Vector> basis;
    std::vector<Vector> alpha1;
    std::vector<Vector> alpha2;

    explicit Evaluator(const SuperAlgebra& alg) : a(alg), n(alg.dim())
    {
        for (std::size_t i = 0; i < n; ++i) {
            basis.push_back(a.basis(i));
            alpha1.push_back(a.twist().image(i));
            alpha2.push_back(a.apply_twist(alpha1.back()));
        }
    }

    Parity par(std::size_t i) const { return a.space().parity(i); }
    Vector mul(const Vector& x, const Vector& y) const { return a.mul(x, y); }
    Vector al(const Vector& x) const { return a.apply_twist(x); }
    Vector as(const Vector& x, const Vector& y, const Vector& z) const { return hom_associator(a, x, y, z); }
};

int sign(Parity p, Parity q)
{
    return koszul_sign(p, q);
}

void check_supercommutative(const Evaluator& ev, CheckReport& report)
{
    const auto* sp = &ev.a.space();
    for (std::size_t i = 0; i < ev.n && !report.done(); ++i)
        for (std::size_t j = i; j < ev.n && !report.done(); ++j) {
            const auto xy = ev.a.mul_basis(i, j);
            const auto yx = sign(ev.par(i), ev.par(j)) * Scalar::one(ev.a.field()) * ev.a.mul_basis(j, i);
            expect_equal(report, "supercommutativity", {i, j}, {sp, sp}, xy, yx, *sp);
        }
}

// Σ_{cyclic (x,y,u)} (−1)^{|u|(|x|+|z|)} as_α(x·y, α(z), α(u)) = 0 with z fixed.
void check_jordan_identity(const Evaluator& ev, CheckReport& report)
{
    const auto* sp = &ev.a.space();
    const auto f = ev.a.field();
    for (std::size_t x = 0; x < ev.n; ++x)
        for (std::size_t y = 0; y < ev.n; ++y)
            for (std::size_t z = 0; z < ev.n; ++z)
                for (std::size_t u = 0; u < ev.n; ++u) {
                    if (report.done())
                        return;
                    auto total = zero_vector(f, ev.n);
                    const std::array<std::array<std::size_t, 3>, 3> cyc{{{x, y, u}, {y, u, x}, {u, x, y}}};
                    for (const auto& [X, Y, U] : cyc) {
                        const int s = sign(ev.par(U), ev.par(X) + ev.par(z));
                        const auto term = ev.as(ev.a.mul_basis(X, Y), ev.alpha1[z], ev.alpha1[U]);
                        add_scaled(total, Scalar::from_int(f, s), term);
                    }
                    expect_equal(report, "cyclic-identity", {x, y, z, u}, {sp, sp, sp, sp}, total,
                                 zero_vector(f, ev.n), *sp);
                }
}

void check_associative(const Evaluator& ev, CheckReport& report)
{
    const auto* sp = &ev.a.space();
    for (std::size_t x = 0; x < ev.n; ++x)
        for (std::size_t y = 0; y < ev.n; ++y)
            for (std::size_t z = 0; z < ev.n; ++z) {
                if (report.done())
                    return;
                expect_equal(report, "hom-associativity", {x, y, z}, {sp, sp, sp},
                             ev.as(ev.basis[x], ev.basis[y], ev.basis[z]), zero_vector(ev.a.field(), ev.n), *sp);
            }
}

void check_alternative(const Evaluator& ev, CheckReport& report)
{
    const auto* sp = &ev.a.space();
    const auto f = ev.a.field();
    for (std::size_t x = 0; x < ev.n; ++x)
        for (std::size_t y = 0; y < ev.n; ++y)
            for (std::size_t z = 0; z < ev.n; ++z) {
                if (report.done())
                    return;
                const auto xyz = ev.as(ev.basis[x], ev.basis[y], ev.basis[z]);
                auto left = xyz;
                add_scaled(left, Scalar::from_int(f, sign(ev.par(x), ev.par(y))),
                           ev.as(ev.basis[y], ev.basis[x], ev.basis[z]));
                expect_equal(report, "left-alternativity", {x, y, z}, {sp, sp, sp}, left, zero_vector(f, ev.n), *sp);
                auto right = xyz;
                add_scaled(right, Scalar::from_int(f, sign(ev.par(y), ev.par(z))),
                           ev.as(ev.basis[x], ev.basis[z], ev.basis[y]));
                expect_equal(report, "right-alternativity", {x, y, z}, {sp, sp, sp}, right, zero_vector(f, ev.n),
                             *sp);
            }
}

// Defining identities of a Hom-pre-Jordan superalgebra (A, ∘, α), with · the
// associated super-symmetrized product.
void check_prejordan(const Evaluator& ev, CheckReport& report)
{
    const auto& a = ev.a;
    const auto jordan = plus_product(a);
    const auto* sp = &a.space();
    const auto f = a.field();
    auto dot = [&](const Vector& p, const Vector& q) { return jordan.mul(p, q); };
    auto circ = [&](const Vector& p, const Vector& q) { return a.mul(p, q); };
    auto S = [&](int s) { return Scalar::from_int(f, s); };
    const auto& e = ev.basis;
    const auto& a1 = ev.alpha1;
    const auto& a2 = ev.alpha2;

    for (std::size_t x = 0; x < ev.n; ++x)
        for (std::size_t y = 0; y < ev.n; ++y)
            for (std::size_t z = 0; z < ev.n; ++z)
                for (std::size_t u = 0; u < ev.n; ++u) {
                    if (report.done())
                        return;
                    const auto px = ev.par(x), py = ev.par(y), pz = ev.par(z);
                    const int sx = sign(px, py + pz);
                    const int sz = sign(pz, px + py);

                    auto rhs = circ(a2[x], circ(dot(e[y], e[z]), a1[u]));
                    add_scaled(rhs, S(sx), circ(a2[y], circ(dot(e[z], e[x]), a1[u])));
                    add_scaled(rhs, S(sz), circ(a2[z], circ(dot(e[x], e[y]), a1[u])));

                    auto lhs1 = circ(dot(a1[x], a1[y]), circ(a1[z], a1[u]));
                    add_scaled(lhs1, S(sx), circ(dot(a1[y], a1[z]), circ(a1[x], a1[u])));
                    add_scaled(lhs1, S(sz), circ(dot(a1[z], a1[x]), circ(a1[y], a1[u])));
                    expect_equal(report, "prejordan-1", {x, y, z, u}, {sp, sp, sp, sp}, lhs1, rhs, *sp);

                    auto lhs2 = circ(a2[x], circ(a1[y], circ(e[z], e[u])));
                    add_scaled(lhs2, S(sz * sign(px, py)), circ(a2[z], circ(a1[y], circ(e[x], e[u]))));
                    add_scaled(lhs2, S(sign(pz, py)), circ(dot(dot(e[x], e[z]), a1[y]), a2[u]));
                    expect_equal(report, "prejordan-2", {x, y, z, u}, {sp, sp, sp, sp}, lhs2, rhs, *sp);
                }
}

} // namespace

std::string_view class_name(AlgebraClass c)
{
    for (const auto& [k, name] : kAlgebraClasses)
        if (k == c)
            return name;
    return "?";
}

std::string_view class_name(DendriformClass c)
{
    for (const auto& [k, name] : kDendriformClasses)
        if (k == c)
            return name;
    return "?";
}

std::optional<AlgebraClass> parse_algebra_class(std::string_view name)
{
    for (const auto& [k, n] : kAlgebraClasses)
        if (n == name)
            return k;
    return std::nullopt;
}

std::optional<DendriformClass> parse_dendriform_class(std::string_view name)
{
    for (const auto& [k, n] : kDendriformClasses)
        if (n == name)
            return k;
    return std::nullopt;
}

Vector hom_associator(const SuperAlgebra& a, const Vector& x, const Vector& y, const Vector& z)
{
    return a.mul(a.mul(x, y), a.apply_twist(z)) - a.mul(a.apply_twist(x), a.mul(y, z));
}

CheckReport check_class(const SuperAlgebra& a, AlgebraClass cls, bool stop_at_first)
{
    CheckReport report(std::string(class_name(cls)));
    report.set_stop_at_first(stop_at_first);
    const Evaluator ev(a);
    switch (cls) {
    case AlgebraClass::supercommutative:
        check_supercommutative(ev, report);
        break;
    case AlgebraClass::hom_jordan:
        check_supercommutative(ev, report);
        check_jordan_identity(ev, report);
        break;
    case AlgebraClass::hom_associative:
        check_associative(ev, report);
        break;
    case AlgebraClass::hom_alternative:
        check_alternative(ev, report);
        break;
    case AlgebraClass::hom_pre_jordan:
        check_prejordan(ev, report);
        break;
    case AlgebraClass::multiplicative_twist:
        report.merge(check_morphism(a, a, a.twist(), stop_at_first));
        break;
    }
    return report;
}

CheckReport check_prejordan_expanded(const SuperAlgebra& a, bool stop_at_first)
{
    CheckReport report("hom-pre-jordan-expanded");
    report.set_stop_at_first(stop_at_first);
    const Evaluator ev(a);
    const auto* sp = &a.space();
    const auto f = a.field();
    auto circ = [&](const Vector& p, const Vector& q) { return a.mul(p, q); };
    const auto& e = ev.basis;
    const auto& a1 = ev.alpha1;
    const auto& a2 = ev.alpha2;

    // (x,y,z,u)^1 = [αx∘αy]∘[αz∘αu] − α²x∘[(y∘z)∘αu]
    auto d1 = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t u) {
        return circ(circ(a1[x], a1[y]), circ(a1[z], a1[u])) - circ(a2[x], circ(circ(e[y], e[z]), a1[u]));
    };
    // (x,y,z,u)^2 = [αx∘αy]∘[αz∘αu] − [αx∘(y∘z)]∘α²u
    auto d2 = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t u) {
        return circ(circ(a1[x], a1[y]), circ(a1[z], a1[u])) - circ(circ(a1[x], circ(e[y], e[z])), a2[u]);
    };

    for (std::size_t x = 0; x < ev.n; ++x)
        for (std::size_t y = 0; y < ev.n; ++y)
            for (std::size_t z = 0; z < ev.n; ++z)
                for (std::size_t u = 0; u < ev.n; ++u) {
                    if (report.done())
                        return report;
                    const auto px = ev.par(x), py = ev.par(y), pz = ev.par(z);
                    const int sxy = sign(px, py), sxz = sign(px, pz), syz = sign(py, pz);
                    auto S = [&](int s) { return Scalar::from_int(f, s); };

                    auto first = d1(x, y, z, u);
                    add_scaled(first, S(sign(px, py + pz)), d1(y, z, x, u));
                    add_scaled(first, S(sign(pz, px + py)), d1(z, x, y, u));
                    add_scaled(first, S(sxy), d1(y, x, z, u));
                    add_scaled(first, S(syz), d1(x, z, y, u));
                    add_scaled(first, S(sxy * sxz * syz), d1(z, y, x, u));
                    expect_equal(report, "expanded-1", {x, y, z, u}, {sp, sp, sp, sp}, first, zero_vector(f, ev.n),
                                 *sp);

                    auto second = hom_associator(a, a1[x], a1[y], circ(e[z], e[u]));
                    add_scaled(second, S(-syz), hom_associator(a, circ(e[x], e[z]), a1[y], a1[u]));
                    add_scaled(second, S(sign(px, py + pz)), d2(y, z, x, u));
                    add_scaled(second, S(sxy), d2(y, x, z, u));
                    add_scaled(second, S(sxy * sxz * syz), hom_associator(a, a1[z], a1[y], circ(e[x], e[u])));
                    add_scaled(second, S(-sxz * syz), hom_associator(a, circ(e[z], e[x]), a1[y], a1[u]));
                    expect_equal(report, "expanded-2", {x, y, z, u}, {sp, sp, sp, sp}, second,
                                 zero_vector(f, ev.n), *sp);
                }
    return report;
}

CheckReport check_dendriform_class(const DendriformAlgebra& d, DendriformClass cls, bool stop_at_first)
{
    CheckReport report(std::string(class_name(cls)));
    report.set_stop_at_first(stop_at_first);
    const auto n = d.dim();
    const auto f = d.field();
    const auto* sp = &d.space();
    const auto& L = d.left();
    const auto& R = d.right();
    const auto star = d.star();
    auto prec = [&](const Vector& p, const Vector& q) { return L.mul(p, q); };
    auto succ = [&](const Vector& p, const Vector& q) { return R.mul(p, q); };
    auto st = [&](const Vector& p, const Vector& q) { return star.mul(p, q); };
    auto al = [&](const Vector& p) { return L.apply_twist(p); };

    if (cls == DendriformClass::multiplicative_twist) {
        report.merge(check_morphism(L, L, d.twist(), stop_at_first), "left");
        report.merge(check_morphism(R, R, d.twist(), stop_at_first), "right");
        return report;
    }

    auto ass_l = [&](const Vector& x, const Vector& y, const Vector& z) {
        return succ(st(x, y), al(z)) - succ(al(x), succ(y, z));
    };
    auto ass_m = [&](const Vector& x, const Vector& y, const Vector& z) {
        return prec(succ(x, y), al(z)) - succ(al(x), prec(y, z));
    };
    auto ass_r = [&](const Vector& x, const Vector& y, const Vector& z) {
        return prec(prec(x, y), al(z)) - prec(al(x), st(y, z));
    };

    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(basis_vector(f, n, i));
    const auto zero = zero_vector(f, n);

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (report.done())
                    return report;
                const std::vector<std::size_t> idx{x, y, z};
                const std::vector<const GradedSpace*> sps{sp, sp, sp};
                if (cls == DendriformClass::hom_dendriform) {
                    expect_equal(report, "dendriform-right", idx, sps, succ(al(e[x]), succ(e[y], e[z])),
                                 succ(st(e[x], e[y]), al(e[z])), *sp);
                    expect_equal(report, "dendriform-left", idx, sps, prec(prec(e[x], e[y]), al(e[z])),
                                 prec(al(e[x]), st(e[y], e[z])), *sp);
                    expect_equal(report, "dendriform-middle", idx, sps, prec(succ(e[x], e[y]), al(e[z])),
                                 succ(al(e[x]), prec(e[y], e[z])), *sp);
                } else {
                    const auto px = sp->parity(x), py = sp->parity(y), pz = sp->parity(z);
                    auto S = [&](int s) { return Scalar::from_int(f, s); };
                    auto v1 = ass_m(e[x], e[y], e[z]);
                    add_scaled(v1, S(sign(px, py)), ass_r(e[y], e[x], e[z]));
                    expect_equal(report, "pre-alternative-1", idx, sps, v1, zero, *sp);
                    auto v2 = ass_m(e[x], e[y], e[z]);
                    add_scaled(v2, S(sign(pz, py)), ass_l(e[x], e[z], e[y]));
                    expect_equal(report, "pre-alternative-2", idx, sps, v2, zero, *sp);
                    auto v3 = ass_l(e[x], e[y], e[z]);
                    add_scaled(v3, S(sign(px, py)), ass_l(e[y], e[x], e[z]));
                    expect_equal(report, "pre-alternative-3", idx, sps, v3, zero, *sp);
                    auto v4 = ass_r(e[x], e[y], e[z]);
                    add_scaled(v4, S(sign(pz, py)), ass_r(e[x], e[z], e[y]));
                    expect_equal(report, "pre-alternative-4", idx, sps, v4, zero, *sp);
                }
            }
    return report;
}

CheckReport check_morphism(const SuperAlgebra& a, const SuperAlgebra& b, const EvenLinearMap& phi,
                           bool stop_at_first)
{
    if (!(phi.source() == a.space()) || !(phi.target() == b.space()))
        throw DimensionMismatch("morphism does not map the source algebra's space to the target's");
    CheckReport report("morphism");
    report.set_stop_at_first(stop_at_first);
    const auto* sp = &a.space();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (report.done())
                return report;
            expect_equal(report, "product-preservation", {i, j}, {sp, sp}, phi.apply(a.mul_basis(i, j)),
                         b.mul(phi.image(i), phi.image(j)), b.space());
        }
    return report;
}

SuperAlgebra yau_twist(const SuperAlgebra& a, const EvenLinearMap& phi, bool override_check)
{
    if (!override_check) {
        const auto report = check_morphism(a, a, phi, true);
        if (!report.passed()) {
            const auto& w = report.witnesses().front();
            throw NotAMorphism("twisting map is not an algebra morphism: at (" + w.tuple[0] + "," + w.tuple[1]
                               + ") φ(x·y) = " + w.lhs_text() + " but φ(x)·φ(y) = " + w.rhs_text());
        }
    }
    const auto n = a.dim();
    ProductTensor c(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = a.mul(phi.image(i), phi.image(j));
            for (std::size_t k = 0; k < n; ++k)
                c(i, j, k) = v[k];
        }
    return SuperAlgebra(a.space(), std::move(c), compose(phi, a.twist()), a.label() + ".twisted");
}

SuperAlgebra plus_product(const SuperAlgebra& a)
{
    const auto n = a.dim();
    const auto& sp = a.space();
    ProductTensor c(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int s = koszul_sign(sp.parity(i), sp.parity(j));
            for (std::size_t k = 0; k < n; ++k)
                c(i, j, k) = a.product()(i, j, k) + s * a.product()(j, i, k);
        }
    return SuperAlgebra(sp, std::move(c), a.twist(), a.label() + ".plus");
}

SuperAlgebra dendriform_to_prejordan(const DendriformAlgebra& d)
{
    const auto n = d.dim();
    const auto& sp = d.space();
    const auto& prec = d.left().product();
    const auto& succ = d.right().product();
    ProductTensor c(d.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int s = koszul_sign(sp.parity(i), sp.parity(j));
            for (std::size_t k = 0; k < n; ++k)
                c(i, j, k) = succ(i, j, k) + s * prec(j, i, k);
        }
    return SuperAlgebra(sp, std::move(c), d.twist(), d.label() + ".prejordan");
}

SuperAlgebra prejordan_to_jordan(const SuperAlgebra& p)
{
    auto j = plus_product(p);
    j.set_label(p.label() + ".jordan");
    return j;
}

} // namespace hsw
