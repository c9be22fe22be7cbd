// Acceptance run: one line per criterion, then a summary. Exit status 0 only if all pass.
// With --self-test, feeds the harness deliberately broken inputs and exits 0 only if it
// reports them as failures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hsw/builtin.hpp"
#include "hsw/cli.hpp"
#include "hsw/operators.hpp"
#include "hsw/representation.hpp"
#include "hsw/search.hpp"
#include "hsw/workbench.hpp"
#include "hsw/ybe.hpp"

using namespace hsw;

namespace {

std::string fixture(const std::string& name) { return std::string(HSW_FIXTURE_DIR) + "/" + name; }
const std::string counts_file = fixture("counts.txt");

struct Run {
    int code = -1;
    std::string out;
    std::string err;
    Report report;
};

Run run(const std::vector<std::string>& args)
{
    Run r;
    std::ostringstream out, err;
    r.code = run_cli(args, out, err, r.report);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string join(const std::vector<std::string>& args)
{
    std::string s;
    for (const auto& a : args)
        s += (s.empty() ? "" : " ") + a;
    return s;
}

Scalar q(long n, long d = 1) { return Scalar::from_int(Field::rationals(), n) / Scalar::from_int(Field::rationals(), d); }

/// Collects sub-check outcomes for one criterion; the first failure becomes the summary.
struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    std::string failure;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            failure = what;
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

/// Every CLI command issued by criteria 5 to 10, replayed by criterion 11.
std::vector<std::vector<std::string>> replay;

Run run_recorded(const std::vector<std::string>& args)
{
    replay.push_back(args);
    return run(args);
}

bool has_detail(const Report& r, const std::string& line)
{
    for (const auto& d : r.details)
        if (d == line)
            return true;
    return false;
}

bool check_passed(const Report& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name)
            return c.passed;
    return false;
}

const WitnessRecord* witness_for(const Report& r, const std::string& check)
{
    for (const auto& w : r.witnesses)
        if (w.check == check)
            return &w;
    return nullptr;
}

// ---- criteria -------------------------------------------------------------------------

Outcome criterion_1()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run({"check", "hom-jordan", "--file", fixture("k3.alg"), "--algebra", "K3_c1"});
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(r.code == exit_pass, "exit status " + std::to_string(r.code));
    o.expect(r.report.witnesses.empty(), "unexpected witnesses");
    o.expect(r.out.find("verdict: PASS") != std::string::npos, "no PASS verdict line");
    o.expect(s < 1.0, "took longer than 1 s");
    std::ostringstream n;
    n << "K3 hom-jordan with 0 witnesses in " << std::fixed << std::setprecision(3) << s << " s";
    o.note(n.str());
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    const auto wb = load_workbench(fixture("k3.alg"));
    const auto& a = wb.algebra("K3a");
    const auto& sp = a.space();
    o.expect(a == builtin::k3_listed_twisted(q(2)), "loaded table differs from the builtin listing");
    o.expect(format_combination(a.mul_basis(0, 0), sp) == "e", "e e");
    o.expect(format_combination(a.mul_basis(0, 1), sp) == "1/4 x", "e x");
    o.expect(format_combination(a.mul_basis(0, 2), sp) == "1/4 y", "e y");
    o.expect(format_combination(a.mul_basis(1, 2), sp) == "1/4 e", "x y");
    o.expect(format_combination(a.mul_basis(2, 1), sp) == "-1/4 e", "y x");
    o.expect(check_class(a, AlgebraClass::hom_jordan).passed(), "listed table is not Hom-Jordan");
    const auto mult = check_class(a, AlgebraClass::multiplicative_twist);
    o.expect(!mult.passed(), "listed twist unexpectedly multiplicative");
    o.note("listed twisted table at c = 2 reproduced; Hom-Jordan PASS, multiplicativity FAIL with "
           + std::to_string(mult.witnesses().size()) + " witnesses");
    return o;
}

Outcome criterion_3()
{
    Outcome o;
    const auto k3 = builtin::k3();
    for (const auto& c : {q(2), q(3), q(-1)}) {
        const auto phi = builtin::k3_morphism_twist(c);
        const auto tag = " at c = " + c.to_string();
        o.expect(check_morphism(k3, k3, phi).passed(), "corrected twist is not a morphism" + tag);
        const auto t = yau_twist(k3, phi);
        o.expect(check_class(t, AlgebraClass::hom_jordan).passed(), "twisted algebra not Hom-Jordan" + tag);
        o.expect(check_class(t, AlgebraClass::multiplicative_twist).passed(), "twisted algebra not multiplicative" + tag);
        o.expect(check_representation(coadjoint_rep(t)).passed(), "coadjoint module fails" + tag);
    }
    o.note("e -> e, x -> c x, y -> y/c is an automorphism for c in {2, 3, -1}; twists are multiplicative Hom-Jordan");
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    const auto r = run({"report", "discrepancies"});
    const auto& rep = r.report;
    o.expect(r.code == exit_fail, "audit exit status " + std::to_string(r.code));
    o.expect(!check_passed(rep, "listed-twist-morphism"), "listed twist reported as a morphism");
    const auto* m = witness_for(rep, "listed-twist-morphism");
    o.expect(m && m->tuple == std::vector<std::string>{"x", "y"} && m->lhs == "e" && m->rhs == "1/4 e",
             "morphism witness at (x,y) missing or wrong");
    o.expect(check_passed(rep, "morphism-twist-morphism"), "corrected twist not reported as a morphism");
    o.expect(check_passed(rep, "rb-table-reproduction"), "Rota-Baxter table not reproduced");
    o.expect(!check_passed(rep, "rota-baxter"), "Rota-Baxter identity reported as holding");
    const auto* rb = witness_for(rep, "rota-baxter");
    o.expect(rb && rb->tuple == std::vector<std::string>{"e", "e"} && rb->lhs == "4 e" && rb->rhs == "8 e",
             "Rota-Baxter witness at (e,e) missing or wrong");
    const auto json = run({"report", "discrepancies", "--report", "json"});
    o.expect(parse_json_report(json.out) == rep, "JSON report does not round trip");
    o.note("listed twist fails at (x,y): e vs 1/4 e; Rota-Baxter fails at (e,e): 4 e vs 8 e; table reproduced");
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    const auto r = run_recorded({"search", "equivalence", "--kind", "module", "--field", "gf2", "--dims", "1|1"});
    o.expect(r.code == exit_pass, "module equivalence exit status " + std::to_string(r.code));
    o.expect(r.report.witnesses.empty(), "set differences reported");
    o.expect(has_detail(r.report, "set representation: 491"), "representation count changed");
    o.note("GF(2) 1|1 diagonal twist: 491 modules, both sides agree");
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    const auto k3 = builtin::k3();
    o.expect(check_representation(dual_rep(adjoint_rep(k3))).passed(), "dual of the K3 adjoint module fails");
    o.expect(check_dual_pairing(adjoint_rep(k3)).passed(), "dual pairing fails on K3");
    std::string counts;
    for (const auto* dims : {"1|0", "0|1", "2|0", "1|1", "0|2"}) {
        const auto r = run_recorded({"search", "equivalence", "--kind", "coadjoint", "--field", "gf3", "--dims", dims});
        o.expect(r.code == exit_pass, std::string("coadjoint survey fails on ") + dims);
        for (const auto& d : r.report.details)
            if (d.rfind("regular-multiplicative-hom-jordan", 0) == 0)
                counts += std::string(counts.empty() ? "" : ", ") + dims + " " + d.substr(d.rfind(' ') + 1);
    }
    o.note("K3 coadjoint module holds; GF(3) surveys " + counts);
    return o;
}

Outcome criterion_7()
{
    Outcome o;
    std::string counts;
    for (const auto* rep : {"adj", "coadj", "adj_tw", "coadj_tw"}) {
        const auto r = run_recorded({"search", "equivalence", "--kind", "o-operator", "--file", fixture("gf3.alg"),
                                     "--rep", rep});
        o.expect(r.code == exit_pass, std::string("O-operator equivalence fails on ") + rep);
        for (const auto& d : r.report.details)
            if (d.rfind("set o-operator: ", 0) == 0)
                counts += std::string(counts.empty() ? "" : ", ") + rep + " " + d.substr(16);
    }
    const auto wb = load_workbench(fixture("gf3.alg"));
    const auto e = o_operator_equivalence(wb.rep("coadj"));
    o.expect(e.sets.size() == 6, "expected six characterizations");
    o.note("six characterizations agree; O-operators " + counts);
    return o;
}

Outcome criterion_8()
{
    Outcome o;
    std::string counts;
    for (const auto* a : {"S", "S_tw", "T"}) {
        const auto r = run_recorded({"search", "equivalence", "--kind", "ybe", "--file", fixture("gf3.alg"),
                                     "--algebra", a});
        o.expect(r.code == exit_pass, std::string("solution equivalence fails on ") + a);
        const auto& sets = r.report.details;
        for (const auto& d : sets)
            if (d.rfind("set ", 0) == 0 && counts.find(std::string(a) + " ") == std::string::npos)
                counts += std::string(counts.empty() ? "" : ", ") + a + " " + d.substr(d.rfind(' ') + 1);
    }
    o.note("solutions equal coadjoint O-operators; solutions " + counts);
    return o;
}

Outcome criterion_9()
{
    Outcome o;
    for (const auto* dims : {"2|0", "1|1", "0|2"}) {
        const auto r = run_recorded({"search", "equivalence", "--kind", "transport", "--field", "gf2", "--dims", dims});
        o.expect(r.code == exit_pass, std::string("transport survey fails on ") + dims);
        o.expect(r.report.checks.size() == 5, std::string("expected five rules on ") + dims);
    }
    o.note("dendriform, pre-Jordan, alternative, left-multiplication and pre-Jordan-form rules hold over GF(2) "
           "on 2|0, 1|1 and 0|2");
    return o;
}

Outcome criterion_10()
{
    Outcome o;
    const auto wb = load_workbench(fixture("gf3.alg"));

    // S: every solution is singular, so the claim is vacuous there.
    const auto s = find_ybe_solutions(wb.algebra("S"));
    std::size_t s_invertible = 0;
    for (const auto& r : s.solutions)
        s_invertible += rank(r.coefficients()) == r.dim();
    o.expect(s.count() == 3 && s_invertible == 0, "S: solution profile changed");

    // T: every invertible solution gives a symplectic form and a compatible pre-Jordan product.
    const auto& t = wb.algebra("T");
    const auto sols = find_ybe_solutions(t);
    std::size_t t_invertible = 0;
    for (const auto& r : sols.solutions) {
        if (rank(r.coefficients()) != r.dim())
            continue;
        ++t_invertible;
        const auto b = form_from_tensor(r);
        o.expect(check_symplectic(b).passed(), "form of an invertible solution is not symplectic");
        const auto p = prejordan_from_form(t, b, 1);
        o.expect(check_class(p, AlgebraClass::hom_pre_jordan).passed(), "induced product not pre-Jordan");
        o.expect(plus_product(p).product() == t.product(), "induced product does not symmetrize to the base");
    }
    o.expect(t_invertible == 4, "T: expected four invertible solutions");
    const auto plus = run_recorded({"prejordan-from-form", "--file", fixture("gf3.alg"), "--form", "B", "--sign", "+"});
    o.expect(plus.code == exit_pass, "prejordan-from-form with sign + fails");

    // Contrapositive on S ⋉ S: invertible skew non-solutions give non-symplectic forms.
    const auto sd = semidirect(adjoint_rep(wb.algebra("S")));
    const SkewTensorUniverse u(sd);
    std::size_t invertible = 0, non_symplectic = 0;
    for (std::uint64_t i = 0; i < u.size(); ++i) {
        const auto r = u.at(i);
        if (rank(r.coefficients()) != r.dim())
            continue;
        ++invertible;
        const bool sol = r.is_alpha_stable() && hjybe_residual(r).is_zero();
        const bool sym = check_symplectic(form_from_tensor(r), true).passed();
        o.expect(sol == sym, "solution and symplectic verdicts differ");
        non_symplectic += !sym;
    }
    o.note("S: 0 of " + std::to_string(s.count()) + " solutions invertible (vacuous); T: "
           + std::to_string(t_invertible) + " invertible solutions give symplectic forms and pre-Jordan products; "
           + "S x S semidirect: " + std::to_string(non_symplectic) + "/" + std::to_string(invertible)
           + " invertible non-solutions non-symplectic");
    return o;
}

/// Byte-stable replay of every search-style command, with more workers and against the frozen counts.
Outcome criterion_11(const std::vector<std::pair<std::vector<std::string>, std::string>>& first)
{
    Outcome o;
    std::size_t frozen = 0;
    for (const auto& [args, text] : first) {
        auto again = args;
        const bool searches = args[0] == "search";
        if (searches)
            again.insert(again.end(), {"--jobs", "3", "--fixtures", counts_file});
        const auto r = run(again);
        auto stripped = r.report;
        if (searches) {
            o.expect(!r.report.forced_failure, "frozen counts differ: " + join(args));
            for (const auto& d : r.report.details)
                o.expect(d.rfind("frozen count missing", 0) != 0, "no frozen count for " + join(args));
            frozen += r.report.frozen_count.has_value();
            stripped.inputs.pop_back();
            stripped.frozen_count.reset();
        }
        o.expect(emit_text(stripped) == text, "output changed on rerun: " + join(args));
        o.expect(emit_text(run(args).report) == text, "output changed on plain rerun: " + join(args));
    }
    o.note(std::to_string(first.size()) + " commands rerun byte-identical; " + std::to_string(frozen)
           + " frozen counts matched");
    return o;
}

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
};

bool report_line(int id, const std::string& name, const Outcome& o, double seconds)
{
    std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " [" << name << "] ";
    if (!o.ok)
        std::cout << o.failure;
    else
        for (std::size_t k = 0; k < o.notes.size(); ++k)
            std::cout << (k ? "; " : "") << o.notes[k];
    std::cout << " (" << std::fixed << std::setprecision(2) << seconds << " s)" << std::endl;
    return o.ok;
}

Outcome timed(const std::function<Outcome()>& f, double& seconds)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

int run_all()
{
    const std::vector<Criterion> criteria{
        {1, "K3 is Hom-Jordan", criterion_1},
        {2, "twisted K3 table", criterion_2},
        {3, "corrected K3 twist", criterion_3},
        {4, "discrepancy report", criterion_4},
        {5, "module equivalence", criterion_5},
        {6, "coadjoint modules", criterion_6},
        {7, "O-operator equivalence", criterion_7},
        {8, "solution equivalence", criterion_8},
        {9, "structure transport", criterion_9},
        {10, "symplectic forms", criterion_10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        double s = 0;
        const auto o = timed(c.run, s);
        failed += !report_line(c.id, c.name, o, s);
    }
    std::vector<std::pair<std::vector<std::string>, std::string>> first;
    for (const auto& args : replay)
        first.emplace_back(args, emit_text(run(args).report));
    double s = 0;
    const auto o = timed([&] { return criterion_11(first); }, s);
    failed += !report_line(11, "determinism", o, s);
    std::cout << "summary: " << 11 - failed << "/11 criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}

/// The harness must flag a corrupted predicate and a wrong frozen count.
int self_test()
{
    int detected = 0;

    const auto wb = load_workbench(fixture("gf3.alg"));
    const auto& rho = wb.rep("coadj");
    const EvenMapUniverse u(rho.field(), rho.space(), rho.base().space());
    auto honest = [&](std::uint64_t i) { return check_o_operator(OOperatorCandidate(u.at(i), rho), true).passed(); };
    const auto accepted = parallel_filter(u.size(), 1, honest);
    const auto victim = accepted.empty() ? 0 : accepted.back();
    auto corrupted = [&](std::uint64_t i) { return i != victim && honest(i); };
    double s = 0;
    const auto o = timed(
        [&] {
            Outcome out;
            const auto e = equivalence_over("self-test", u.size(), {{"honest", honest}, {"corrupted", corrupted}},
                                            [](std::uint64_t i) { return std::to_string(i); });
            out.expect(e.passed(), "corrupted predicate disagrees at candidate " + std::to_string(victim));
            return out;
        },
        s);
    report_line(0, "self-test corrupted predicate", o, s);
    detected += !o.ok;

    const auto path = std::string("hsw_self_test_counts.txt");
    const std::vector<std::string> args{"search", "o-operators", "--file", fixture("gf3.alg"), "--rep", "coadj",
                                        "--fixtures", path};
    {
        auto freeze = args;
        freeze.push_back("--freeze");
        run(freeze);
        auto store = FixtureStore::load(path);
        store.set(spec_hash("o-operators " + canonical_text(rho)), "o-operator", 999);
        store.save(path);
    }
    const auto f = timed(
        [&] {
            Outcome out;
            const auto r = run(args);
            out.expect(r.code == exit_pass, "frozen count mismatch detected");
            return out;
        },
        s);
    std::remove(path.c_str());
    report_line(0, "self-test wrong frozen count", f, s);
    detected += !f.ok;

    std::cout << "self-test: harness detected " << detected << "/2 injected faults" << std::endl;
    return detected == 2 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1 && std::string(argv[1]) == "--self-test")
        return self_test();
    return run_all();
}
