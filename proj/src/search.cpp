#include "hsw/search.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

namespace hsw {

namespace {

constexpr std::uint64_t kDefaultCap = 531441; // 3^12
constexpr std::uint64_t kHardCap = 10000000;

void require_prime_field(Field f)
{
    if (f.is_rational())
        throw Error("enumeration requires a prime field gf<p>, not Q");
}

std::uint64_t size_for(Field f, std::size_t slots, const std::string& what)
{
    require_prime_field(f);
    const auto s = universe_size(f.characteristic(), slots);
    if (!s)
        throw UniverseTooLarge(what + ": " + std::to_string(slots) + " slots overflow the candidate counter");
    return *s;
}

std::vector<std::pair<std::size_t, std::size_t>> even_entries(const GradedSpace& rows, const GradedSpace& cols)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rows.dim(); ++i)
        for (std::size_t j = 0; j < cols.dim(); ++j)
            if (rows.parity(i) == cols.parity(j))
                out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> twist_entries(const GradedSpace& sp, TwistMode mode)
{
    if (mode == TwistMode::identity)
        return {};
    if (mode == TwistMode::diagonal) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < sp.dim(); ++i)
            out.emplace_back(i, i);
        return out;
    }
    return even_entries(sp, sp);
}

std::vector<std::array<std::size_t, 3>> product_entries(const GradedSpace& sp, bool supercommutative, Field f)
{
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = 0; j < sp.dim(); ++j) {
            if (supercommutative && j < i)
                continue;
            if (supercommutative && i == j && is_odd(sp.parity(i)) && f.characteristic() != 2)
                continue;
            for (std::size_t k = 0; k < sp.dim(); ++k)
                if (sp.parity(k) == sp.parity(i) + sp.parity(j))
                    out.push_back({i, j, k});
        }
    return out;
}

EvenLinearMap build_twist(Field f, const GradedSpace& sp, TwistMode mode,
                          const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                          const std::vector<std::uint32_t>& digits, std::size_t offset)
{
    if (mode == TwistMode::identity)
        return EvenLinearMap::identity(f, sp);
    Matrix m(f, sp.dim(), sp.dim());
    for (std::size_t s = 0; s < slots.size(); ++s)
        m(slots[s].first, slots[s].second) = Scalar::from_int(f, digits[offset + s]);
    return EvenLinearMap(sp, sp, std::move(m));
}

std::string matrix_text(const Matrix& m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? " " : "") + m(i, j).to_short_string();
    }
    return s + "]";
}

std::string product_text(const ProductTensor& c)
{
    std::string s;
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j)
            for (std::size_t k = 0; k < c.dim(); ++k)
                s += (s.empty() ? "" : " ") + c(i, j, k).to_short_string();
    return "(" + s + ")";
}

std::vector<std::uint64_t> sorted_difference(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    std::vector<std::uint64_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

std::uint64_t universe_cap()
{
    if (const char* env = std::getenv("HSW_MAX_UNIVERSE")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return std::min<std::uint64_t>(v, kHardCap);
    }
    return kDefaultCap;
}

void require_within_cap(std::uint64_t size, std::uint64_t cap, const std::string& what)
{
    if (size > std::min(cap, kHardCap))
        throw UniverseTooLarge(what + ": " + std::to_string(size) + " candidates exceed the cap of "
                               + std::to_string(std::min(cap, kHardCap)));
}

std::vector<std::uint64_t> parallel_filter(std::uint64_t size, unsigned jobs,
                                           const std::function<bool(std::uint64_t)>& pred)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || size < 2 * jobs) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 0; i < size; ++i)
            if (pred(i))
                out.push_back(i);
        return out;
    }
    std::vector<std::vector<std::uint64_t>> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (size + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            try {
                const auto lo = w * chunk;
                const auto hi = std::min(size, lo + chunk);
                for (auto i = lo; i < hi; ++i)
                    if (pred(i))
                        parts[w].push_back(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : workers)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<std::uint64_t> out;
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<std::uint32_t> decode_digits(std::uint64_t index, std::size_t slots, std::uint32_t p)
{
    std::vector<std::uint32_t> d(slots, 0);
    for (std::size_t s = slots; s-- > 0;) {
        d[s] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return d;
}

std::optional<std::uint64_t> universe_size(std::uint32_t p, std::size_t slots)
{
    std::uint64_t n = 1;
    for (std::size_t s = 0; s < slots; ++s) {
        if (n > (std::uint64_t{1} << 63) / p)
            return std::nullopt;
        n *= p;
    }
    return n;
}

EvenMapUniverse::EvenMapUniverse(Field f, GradedSpace source, GradedSpace target)
    : field_(f), source_(std::move(source)), target_(std::move(target)), slots_(even_entries(target_, source_))
{
    size_ = size_for(f, slots_.size(), "even maps");
}

EvenLinearMap EvenMapUniverse::at(std::uint64_t index) const
{
    const auto d = decode_digits(index, slots_.size(), field_.characteristic());
    Matrix m(field_, target_.dim(), source_.dim());
    for (std::size_t s = 0; s < slots_.size(); ++s)
        m(slots_[s].first, slots_[s].second) = Scalar::from_int(field_, d[s]);
    return EvenLinearMap(source_, target_, std::move(m));
}

AlgebraUniverse::AlgebraUniverse(Field f, GradedSpace space, TwistMode twist, bool supercommutative)
    : field_(f), space_(std::move(space)), supercommutative_(supercommutative),
      product_slots_(product_entries(space_, supercommutative, f)), twist_slots_(twist_entries(space_, twist))
{
    size_ = size_for(f, slots(), "algebras");
}

SuperAlgebra AlgebraUniverse::at(std::uint64_t index) const
{
    const auto d = decode_digits(index, slots(), field_.characteristic());
    ProductTensor c(field_, space_.dim());
    for (std::size_t s = 0; s < product_slots_.size(); ++s) {
        const auto [i, j, k] = product_slots_[s];
        const auto v = Scalar::from_int(field_, d[s]);
        c(i, j, k) = v;
        if (supercommutative_ && i != j)
            c(j, i, k) = koszul_sign(space_.parity(i), space_.parity(j)) * v;
    }
    auto twist = build_twist(field_, space_, twist_slots_.empty() ? TwistMode::identity : TwistMode::full,
                             twist_slots_, d, product_slots_.size());
    return SuperAlgebra(space_, std::move(c), std::move(twist), "A#" + std::to_string(index));
}

DendriformUniverse::DendriformUniverse(Field f, GradedSpace space, TwistMode twist)
    : field_(f), space_(std::move(space)), product_slots_(product_entries(space_, false, f)),
      twist_slots_(twist_entries(space_, twist))
{
    size_ = size_for(f, 2 * product_slots_.size() + twist_slots_.size(), "dendriform algebras");
}

DendriformAlgebra DendriformUniverse::at(std::uint64_t index) const
{
    const auto np = product_slots_.size();
    const auto d = decode_digits(index, 2 * np + twist_slots_.size(), field_.characteristic());
    ProductTensor left(field_, space_.dim()), right(field_, space_.dim());
    for (std::size_t s = 0; s < np; ++s) {
        const auto [i, j, k] = product_slots_[s];
        left(i, j, k) = Scalar::from_int(field_, d[s]);
        right(i, j, k) = Scalar::from_int(field_, d[np + s]);
    }
    auto twist = build_twist(field_, space_, twist_slots_.empty() ? TwistMode::identity : TwistMode::full,
                             twist_slots_, d, 2 * np);
    return DendriformAlgebra(space_, std::move(left), std::move(right), std::move(twist),
                             "D#" + std::to_string(index));
}

RepresentationUniverse::RepresentationUniverse(SuperAlgebra base, GradedSpace module, TwistMode twist)
    : base_(std::move(base)), module_(std::move(module)), twist_slots_(twist_entries(module_, twist))
{
    const auto& js = base_.space();
    for (std::size_t i = 0; i < js.dim(); ++i)
        for (std::size_t a = 0; a < module_.dim(); ++a)
            for (std::size_t b = 0; b < module_.dim(); ++b)
                if (module_.parity(a) == module_.parity(b) + js.parity(i))
                    action_slots_.push_back({i, a, b});
    size_ = size_for(base_.field(), action_slots_.size() + twist_slots_.size(), "representations");
}

Representation RepresentationUniverse::at(std::uint64_t index) const
{
    const auto f = base_.field();
    const auto d = decode_digits(index, action_slots_.size() + twist_slots_.size(), f.characteristic());
    std::vector<Matrix> action(base_.dim(), Matrix(f, module_.dim(), module_.dim()));
    for (std::size_t s = 0; s < action_slots_.size(); ++s) {
        const auto [i, a, b] = action_slots_[s];
        action[i](a, b) = Scalar::from_int(f, d[s]);
    }
    auto twist = build_twist(f, module_, twist_slots_.empty() ? TwistMode::identity : TwistMode::full, twist_slots_, d,
                             action_slots_.size());
    return Representation(base_, module_, std::move(action), std::move(twist), "rho#" + std::to_string(index));
}

SkewTensorUniverse::SkewTensorUniverse(SuperAlgebra algebra) : algebra_(std::move(algebra))
{
    const auto& sp = algebra_.space();
    const bool char2 = algebra_.field().characteristic() == 2;
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = i; j < sp.dim(); ++j) {
            if (sp.parity(i) != sp.parity(j))
                continue;
            if (i == j && !is_odd(sp.parity(i)) && !char2)
                continue;
            slots_.emplace_back(i, j);
        }
    size_ = size_for(algebra_.field(), slots_.size(), "skew tensors");
}

TensorElement SkewTensorUniverse::at(std::uint64_t index) const
{
    const auto f = algebra_.field();
    const auto& sp = algebra_.space();
    const auto d = decode_digits(index, slots_.size(), f.characteristic());
    Matrix r(f, sp.dim(), sp.dim());
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const auto [i, j] = slots_[s];
        const auto v = Scalar::from_int(f, d[s]);
        r(i, j) = v;
        // σ(r) = −r  ⇔  r[j][i] = −(−1)^{|i||j|} r[i][j]
        if (i != j)
            r(j, i) = -koszul_sign(sp.parity(i), sp.parity(j)) * v;
    }
    return TensorElement(algebra_, std::move(r));
}

OOperatorSearch find_o_operators(const Representation& rep, const SearchOptions& opts)
{
    const EvenMapUniverse u(rep.field(), rep.space(), rep.base().space());
    require_within_cap(u.size(), opts.cap, "o-operator search");
    OOperatorSearch out;
    out.universe = u.size();
    out.indices = parallel_filter(u.size(), opts.jobs, [&](std::uint64_t i) {
        return check_o_operator(OOperatorCandidate(u.at(i), rep), true).passed();
    });
    for (auto i : out.indices)
        out.maps.push_back(u.at(i));
    return out;
}

YbeSearch find_ybe_solutions(const SuperAlgebra& a, const SearchOptions& opts)
{
    invert_even_map(a.twist());
    const SkewTensorUniverse u(a);
    require_within_cap(u.size(), opts.cap, "ybe search");
    YbeSearch out;
    out.universe = u.size();
    out.indices = parallel_filter(u.size(), opts.jobs, [&](std::uint64_t i) {
        const auto t = u.at(i);
        return t.is_alpha_stable() && hjybe_residual(t).is_zero();
    });
    for (auto i : out.indices)
        out.solutions.push_back(u.at(i));
    return out;
}

bool EquivalenceReport::passed() const
{
    return std::all_of(differences.begin(), differences.end(),
                       [](const SetDifference& d) { return d.elements.empty(); });
}

EquivalenceReport equivalence_over(const std::string& universe, std::uint64_t total,
                                   const std::vector<NamedPredicate>& predicates,
                                   const std::function<std::string(std::uint64_t)>& describe,
                                   const SearchOptions& opts, const std::vector<NamedPredicate>& side)
{
    require_within_cap(total, opts.cap, universe);
    EquivalenceReport rep;
    rep.universe = universe;
    rep.total = total;
    for (const auto& p : predicates)
        rep.sets.emplace_back(p.name, parallel_filter(total, opts.jobs, p.test));
    for (const auto& p : side)
        rep.side_sets.emplace_back(p.name, parallel_filter(total, opts.jobs, p.test));
    for (std::size_t k = 1; k < rep.sets.size(); ++k) {
        SetDifference d;
        d.left = rep.sets[0].first;
        d.right = rep.sets[k].first;
        for (auto i : sorted_difference(rep.sets[0].second, rep.sets[k].second))
            d.elements.emplace_back(i, describe(i));
        rep.differences.push_back(std::move(d));
    }
    return rep;
}

EquivalenceReport o_operator_equivalence(const Representation& rep, const SearchOptions& opts)
{
    const EvenMapUniverse u(rep.field(), rep.space(), rep.base().space());
    require_within_cap(u.size(), opts.cap, "o-operator equivalence");
    auto cand = [&](std::uint64_t i) { return OOperatorCandidate(u.at(i), rep); };
    std::vector<NamedPredicate> preds{
        {"o-operator", [&](std::uint64_t i) { return check_o_operator(cand(i), true).passed(); }},
        {"graph-subalgebra", [&](std::uint64_t i) { return graph_is_subalgebra(cand(i), true).passed(); }},
        {"nijenhuis",
         [&](std::uint64_t i) {
             const auto c = cand(i);
             return nijenhuis_check(semidirect(c.rep), nijenhuis_of(c), true).passed();
         }},
        {"lift-solution",
         [&](std::uint64_t i) {
             const auto r = lift_o_operator(cand(i));
             return r.is_skew() && r.is_alpha_stable() && hjybe_residual(r).is_zero();
         }},
        {"lift-residual-zero", [&](std::uint64_t i) { return hjybe_residual(lift_o_operator(cand(i))).is_zero(); }},
        {"lift-coadjoint-o-operator",
         [&](std::uint64_t i) { return solution_cross_check(lift_o_operator(cand(i)), true).passed(); }},
    };
    return equivalence_over("o-operators " + rep.field().token() + " " + canonical_text(rep), u.size(), preds,
                            [&](std::uint64_t i) { return "T = " + matrix_text(u.at(i).matrix()); }, opts);
}

EquivalenceReport ybe_equivalence(const SuperAlgebra& a, const SearchOptions& opts)
{
    invert_even_map(a.twist());
    const SkewTensorUniverse u(a);
    require_within_cap(u.size(), opts.cap, "ybe equivalence");
    std::vector<NamedPredicate> preds{
        {"alpha-stable-solution",
         [&](std::uint64_t i) {
             const auto t = u.at(i);
             return t.is_alpha_stable() && hjybe_residual(t).is_zero();
         }},
        {"coadjoint-o-operator", [&](std::uint64_t i) { return solution_cross_check(u.at(i), true).passed(); }},
    };
    std::vector<NamedPredicate> side{
        {"residual-zero", [&](std::uint64_t i) { return hjybe_residual(u.at(i)).is_zero(); }},
        {"alpha-stable", [&](std::uint64_t i) { return u.at(i).is_alpha_stable(); }},
    };
    return equivalence_over("ybe " + a.field().token() + " " + canonical_text(a), u.size(), preds,
                            [&](std::uint64_t i) { return "r = " + matrix_text(u.at(i).coefficients()); }, opts,
                            side);
}

EquivalenceReport module_equivalence(const AlgebraUniverse& bases, const GradedSpace& module, TwistMode twist,
                                     const SearchOptions& opts)
{
    require_within_cap(bases.size(), opts.cap, "module equivalence bases");
    const auto base_idx = parallel_filter(bases.size(), opts.jobs, [&](std::uint64_t i) {
        const auto a = bases.at(i);
        return check_class(a, AlgebraClass::hom_jordan, true).passed()
               && check_class(a, AlgebraClass::multiplicative_twist, true).passed();
    });
    std::vector<RepresentationUniverse> reps;
    for (auto i : base_idx)
        reps.emplace_back(bases.at(i), module, twist);
    const std::uint64_t per = reps.empty() ? 0 : reps.front().size();
    const std::uint64_t total = per * reps.size();
    auto rho = [&](std::uint64_t i) { return reps[i / per].at(i % per); };
    std::vector<NamedPredicate> preds{
        {"representation", [&](std::uint64_t i) { return check_representation(rho(i), true).passed(); }},
        {"semidirect-hom-jordan-multiplicative",
         [&](std::uint64_t i) {
             const auto s = semidirect(rho(i));
             return check_class(s, AlgebraClass::hom_jordan, true).passed()
                    && check_class(s, AlgebraClass::multiplicative_twist, true).passed();
         }},
    };
    std::vector<NamedPredicate> side{
        {"semidirect-hom-jordan",
         [&](std::uint64_t i) { return check_class(semidirect(rho(i)), AlgebraClass::hom_jordan, true).passed(); }},
        {"literal-semidirect-hom-jordan",
         [&](std::uint64_t i) {
             return check_class(semidirect(rho(i), SemidirectSign::literal), AlgebraClass::hom_jordan, true).passed();
         }},
    };
    std::string spec = "modules " + std::to_string(bases.size()) + " bases, " + std::to_string(base_idx.size())
                       + " multiplicative hom-jordan, module " + module.signature();
    return equivalence_over(spec, total, preds,
                            [&](std::uint64_t i) {
                                const auto r = rho(i);
                                std::string s = "base " + product_text(r.base().product()) + " alpha "
                                                + matrix_text(r.base().twist().matrix()) + " pi";
                                for (const auto& m : r.action())
                                    s += " " + matrix_text(m);
                                return s + " beta " + matrix_text(r.twist().matrix());
                            },
                            opts, side);
}

bool Survey::passed() const
{
    return std::all_of(rules.begin(), rules.end(), [](const ImplicationRule& r) { return r.violations.empty(); });
}

namespace {

ImplicationRule implication(std::string name, std::vector<std::uint64_t> premise, std::vector<std::uint64_t> conclusion,
                            const std::function<std::string(std::uint64_t)>& describe)
{
    ImplicationRule r{std::move(name), std::move(premise), std::move(conclusion), {}};
    std::vector<std::uint64_t> missing;
    std::set_difference(r.premise.begin(), r.premise.end(), r.conclusion.begin(), r.conclusion.end(),
                        std::back_inserter(missing));
    for (auto i : missing)
        r.violations.emplace_back(i, describe(i));
    return r;
}

std::vector<std::uint64_t> intersect(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    std::vector<std::uint64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string algebra_description(const SuperAlgebra& a)
{
    return "product " + product_text(a.product()) + " alpha " + matrix_text(a.twist().matrix());
}

} // namespace

Survey coadjoint_survey(Field f, const GradedSpace& space, const SearchOptions& opts)
{
    const AlgebraUniverse u(f, space, TwistMode::full, true);
    require_within_cap(u.size(), opts.cap, "coadjoint survey");
    Survey s;
    s.universe = "coadjoint " + f.token() + " " + space.signature() + " supercommutative full-twist";
    s.total = u.size();
    auto regular_hj = [&](const SuperAlgebra& a) {
        return rank(a.twist().matrix()) == a.dim() && check_class(a, AlgebraClass::hom_jordan, true).passed();
    };
    auto mult = [&](const SuperAlgebra& a) { return check_class(a, AlgebraClass::multiplicative_twist, true).passed(); };
    const auto premise = parallel_filter(u.size(), opts.jobs, [&](std::uint64_t i) {
        const auto a = u.at(i);
        return regular_hj(a) && mult(a);
    });
    const auto regular_nonmult = parallel_filter(u.size(), opts.jobs, [&](std::uint64_t i) {
        const auto a = u.at(i);
        return regular_hj(a) && !mult(a);
    });
    auto coadjoint_ok = [&](std::uint64_t i) { return check_representation(coadjoint_rep(u.at(i)), true).passed(); };
    std::vector<std::uint64_t> conclusion;
    for (auto i : premise)
        if (coadjoint_ok(i))
            conclusion.push_back(i);
    std::uint64_t nonmult_ok = 0;
    for (auto i : regular_nonmult)
        nonmult_ok += coadjoint_ok(i) ? 1 : 0;
    s.rules.push_back(implication("regular-multiplicative-hom-jordan => coadjoint-representation", premise, conclusion,
                                  [&](std::uint64_t i) { return algebra_description(u.at(i)); }));
    s.side_counts.emplace_back("regular-nonmultiplicative-hom-jordan", regular_nonmult.size());
    s.side_counts.emplace_back("regular-nonmultiplicative-coadjoint-representation", nonmult_ok);
    return s;
}

Survey transport_survey(Field f, const GradedSpace& space, TwistMode twist, TwistMode dendriform_twist,
                        const SearchOptions& opts)
{
    const AlgebraUniverse u(f, space, twist, false);
    const DendriformUniverse d(f, space, dendriform_twist);
    require_within_cap(u.size(), opts.cap, "transport survey");
    require_within_cap(d.size(), opts.cap, "transport survey (dendriform)");
    Survey s;
    s.universe = "transport " + f.token() + " " + space.signature();
    s.total = u.size();
    auto describe = [&](std::uint64_t i) { return algebra_description(u.at(i)); };
    auto describe_d = [&](std::uint64_t i) {
        const auto x = d.at(i);
        return "left " + product_text(x.left().product()) + " right " + product_text(x.right().product()) + " alpha "
               + matrix_text(x.twist().matrix());
    };
    auto filter = [&](const std::function<bool(const SuperAlgebra&)>& p) {
        return parallel_filter(u.size(), opts.jobs, [&](std::uint64_t i) { return p(u.at(i)); });
    };
    auto is = [](AlgebraClass c) {
        return [c](const SuperAlgebra& a) { return check_class(a, c, true).passed(); };
    };

    const auto dend = parallel_filter(d.size(), opts.jobs, [&](std::uint64_t i) {
        return check_dendriform_class(d.at(i), DendriformClass::hom_dendriform, true).passed();
    });
    const auto dend_pre = parallel_filter(d.size(), opts.jobs, [&](std::uint64_t i) {
        return check_class(dendriform_to_prejordan(d.at(i)), AlgebraClass::hom_pre_jordan, true).passed();
    });
    const auto dend_prealt = parallel_filter(d.size(), opts.jobs, [&](std::uint64_t i) {
        return check_dendriform_class(d.at(i), DendriformClass::hom_pre_alternative, true).passed();
    });
    s.rules.push_back(implication("hom-dendriform => hom-pre-jordan (dendriform_to_prejordan)", dend,
                                  intersect(dend, dend_pre), describe_d));

    const auto pre = filter(is(AlgebraClass::hom_pre_jordan));
    const auto pre_j = filter([](const SuperAlgebra& a) {
        return check_class(prejordan_to_jordan(a), AlgebraClass::hom_jordan, true).passed();
    });
    s.rules.push_back(implication("hom-pre-jordan => hom-jordan (prejordan_to_jordan)", pre, intersect(pre, pre_j),
                                  describe));

    const auto alt = filter(is(AlgebraClass::hom_alternative));
    const auto alt_j = filter([](const SuperAlgebra& a) {
        return check_class(plus_product(a), AlgebraClass::hom_jordan, true).passed();
    });
    s.rules.push_back(implication("hom-alternative => hom-jordan (plus_product)", alt, intersect(alt, alt_j), describe));

    std::vector<std::uint64_t> all(u.size());
    for (std::uint64_t i = 0; i < u.size(); ++i)
        all[i] = i;
    const auto lme = filter([](const SuperAlgebra& a) { return left_mult_equivalence(a).passed(); });
    s.rules.push_back(implication("left-mult-equivalence", all, lme, describe));

    const auto mult = filter(is(AlgebraClass::multiplicative_twist));
    const auto forms_agree = filter([](const SuperAlgebra& a) {
        return check_class(a, AlgebraClass::hom_pre_jordan, true).passed()
               == check_prejordan_expanded(a, true).passed();
    });
    s.rules.push_back(implication("multiplicative => pre-jordan forms agree", mult, intersect(mult, forms_agree),
                                  describe));

    s.side_counts.emplace_back("dendriform-universe", d.size());
    s.side_counts.emplace_back("hom-dendriform", dend.size());
    s.side_counts.emplace_back("hom-dendriform-and-pre-alternative", intersect(dend, dend_prealt).size());
    s.side_counts.emplace_back("multiplicative", mult.size());
    s.side_counts.emplace_back("pre-jordan-forms-disagree-unrestricted", u.size() - forms_agree.size());
    const auto lme_plain = filter([](const SuperAlgebra& a) {
        const bool pre_plain = check_class(a, AlgebraClass::hom_pre_jordan, true).passed();
        return pre_plain
               == (check_class(prejordan_to_jordan(a), AlgebraClass::hom_jordan, true).passed()
                   && check_representation(left_mult_rep(a), true).passed());
    });
    s.side_counts.emplace_back("left-mult-agree-without-multiplicativity", lme_plain.size());
    return s;
}

std::string canonical_text(const SuperAlgebra& a)
{
    std::string s = "space";
    for (std::size_t i = 0; i < a.dim(); ++i)
        s += std::string(" ") + (is_odd(a.space().parity(i)) ? "1" : "0");
    return s + " product " + product_text(a.product()) + " twist " + matrix_text(a.twist().matrix());
}

std::string canonical_text(const Representation& rho)
{
    std::string s = canonical_text(rho.base()) + " module";
    for (std::size_t i = 0; i < rho.dim(); ++i)
        s += std::string(" ") + (is_odd(rho.space().parity(i)) ? "1" : "0");
    s += " action";
    for (const auto& m : rho.action())
        s += " " + matrix_text(m);
    return s + " beta " + matrix_text(rho.twist().matrix());
}

std::string spec_hash(const std::string& spec)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : spec) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

FixtureStore FixtureStore::load(const std::string& path)
{
    FixtureStore store;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        // Predicate names may contain spaces: hash first, count last.
        const auto first = line.find(' ');
        const auto last = line.rfind(' ');
        if (first == std::string::npos || last <= first)
            continue;
        try {
            std::size_t used = 0;
            const auto count = std::stoull(line.substr(last + 1), &used);
            if (used == line.size() - last - 1)
                store.counts_[{line.substr(0, first), line.substr(first + 1, last - first - 1)}] = count;
        } catch (const std::exception&) {
        }
    }
    return store;
}

void FixtureStore::save(const std::string& path) const
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write fixtures file " + path);
    for (const auto& [key, count] : counts_)
        out << key.first << ' ' << key.second << ' ' << count << '\n';
}

std::optional<std::uint64_t> FixtureStore::get(const std::string& hash, const std::string& predicate) const
{
    const auto it = counts_.find({hash, predicate});
    if (it == counts_.end())
        return std::nullopt;
    return it->second;
}

void FixtureStore::set(const std::string& hash, const std::string& predicate, std::uint64_t count)
{
    counts_[{hash, predicate}] = count;
}

} // namespace hsw
