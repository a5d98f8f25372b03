#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "darboux/parse.hpp"
#include "darboux/solver.hpp"

using namespace darboux;

namespace {

std::string branch_repr(const SolutionBranch& b) {
    std::ostringstream os;
    for (const auto& [u, v] : b.assignment) os << u << "=" << v.str() << ";";
    os << "free:";
    for (const auto& f : b.free_unknowns) os << f << ",";
    if (b.defining) os << "def(" << b.defining->first << ")=" << b.defining->second.str();
    os << (b.complete ? "" : " INCOMPLETE");
    return os.str();
}

// does the branch cover the rational point?
bool covers(const SolutionBranch& b, const std::map<std::string, Rational>& pt) {
    if (!b.complete) return false;
    if (b.defining) {
        auto it = pt.find(b.defining->first);
        if (it == pt.end()) return false;
        if (!b.defining->second.eval_rational(it->second).is_zero()) return false;
    }
    for (const auto& [u, expr] : b.assignment) {
        Poly v = expr.eval_partial(pt);
        if (!v.is_constant()) return false;
        if (v.constant_value() != pt.at(u)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("two linear equations") {
    ConstraintSystem cs;
    cs.unknowns = {"a", "b"};
    cs.add(parse_poly("a+b-3", {"a", "b"}));
    cs.add(parse_poly("a-b-1", {"a", "b"}));
    auto branches = solve(cs);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].complete);
    CHECK(branches[0].assignment.at("a") == Poly(Rational(2)));
    CHECK(branches[0].assignment.at("b") == Poly(Rational(1)));
    CHECK(branches[0].free_unknowns.empty());
}

TEST_CASE("x^2 + 1 over Q: one defining-polynomial branch") {
    ConstraintSystem cs;
    cs.unknowns = {"x"};
    cs.add(parse_poly("x^2+1", {"x"}));
    auto branches = solve(cs);
    REQUIRE(branches.size() == 1);
    REQUIRE(branches[0].defining.has_value());
    CHECK(branches[0].defining->first == "x");
    CHECK(branches[0].defining->second.to_poly() == parse_poly("x^2+1", {"x"}));
    CHECK(branches[0].assignment.empty());
    CHECK(branches[0].complete);
}

TEST_CASE("inconsistent system is empty") {
    ConstraintSystem cs;
    cs.unknowns = {"a"};
    cs.add(parse_poly("a-1", {"a"}));
    cs.add(parse_poly("a-2", {"a"}));
    CHECK(solve(cs).empty());
}

TEST_CASE("quadratic with rational roots against the oracle") {
    ConstraintSystem cs;
    cs.unknowns = {"a"};
    cs.add(parse_poly("a^2 - 25/4", {"a"}));
    auto pts = brute_force_oracle(cs, 6, 2);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].at("a") == Rational(-5, 2));
    CHECK(pts[1].at("a") == Rational(5, 2));
    auto branches = solve(cs);
    REQUIRE(branches.size() == 2);
    for (const auto& pt : pts)
        CHECK(std::any_of(branches.begin(), branches.end(),
                          [&](const SolutionBranch& b) { return covers(b, pt); }));
}

TEST_CASE("row-2 termination condition at xi=-2, alpha=1, sigma=0") {
    // delta = 25a/12 - 5s/6 - 125/24 gives 25/12 - 125/24 = -25/8
    const Rational expected = Rational(25, 12) - Rational(125, 24);
    CHECK(expected == Rational(-25, 8));
    ConstraintSystem cs;
    cs.unknowns = {"d"};
    cs.add(parse_poly("d - (25/12 - 125/24)", {"d"}));
    auto pts = brute_force_oracle(cs, 26, 8);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].at("d") == expected);
    auto branches = solve(cs);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].assignment.at("d") == Poly(expected));
}

TEST_CASE("inconsistent oracle scan is empty") {
    ConstraintSystem cs;
    cs.unknowns = {"a"};
    cs.add(parse_poly("a-1", {"a"}));
    cs.add(parse_poly("a-2", {"a"}));
    CHECK(brute_force_oracle(cs, 4, 2).empty());
}

TEST_CASE("positive-dimensional solution sets come out as expression branches") {
    // {d - a*(e+a)/3, s - 2*(e+a)/3} with unknowns (d, s): a, e stay free
    const std::vector<std::string> vars{"a", "e", "s", "d"};
    ConstraintSystem cs;
    cs.unknowns = {"d", "s"};
    cs.add(parse_poly("3*d - a*(e+a)", vars));
    cs.add(parse_poly("3*s - 2*(e+a)", vars));
    auto branches = solve(cs);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].complete);
    CHECK(branches[0].assignment.at("d") == parse_poly("a*(e+a)/3", vars));
    CHECK(branches[0].assignment.at("s") == parse_poly("2*(e+a)/3", vars));
}

TEST_CASE("family branch when an unknown is unconstrained") {
    ConstraintSystem cs;
    cs.unknowns = {"a", "b"};
    cs.add(parse_poly("a - 7", {"a", "b"}));
    auto branches = solve(cs);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].assignment.at("a") == Poly(Rational(7)));
    REQUIRE(branches[0].free_unknowns.size() == 1);
    CHECK(branches[0].free_unknowns[0] == "b");
}

TEST_CASE("mixed system: quadratic times line") {
    // (a-1)(a-2) = 0, b = a^2
    ConstraintSystem cs;
    cs.unknowns = {"b", "a"};
    cs.add(parse_poly("(a-1)*(a-2)", {"a", "b"}));
    cs.add(parse_poly("b - a^2", {"a", "b"}));
    auto branches = solve(cs);
    REQUIRE(branches.size() == 2);
    for (const auto& b : branches) {
        CHECK(b.complete);
        const Rational av = b.assignment.at("a").constant_value();
        CHECK(b.assignment.at("b").constant_value() == av * av);
    }
}

TEST_CASE("theta branch with linear back-substitution") {
    // a^2 = 2, b = a + 1: branch must report b as an expression in a
    ConstraintSystem cs;
    cs.unknowns = {"b", "a"};
    cs.add(parse_poly("a^2 - 2", {"a", "b"}));
    cs.add(parse_poly("b - a - 1", {"a", "b"}));
    auto branches = solve(cs);
    REQUIRE(branches.size() == 1);
    REQUIRE(branches[0].defining.has_value());
    CHECK(branches[0].defining->first == "a");
    CHECK(branches[0].assignment.at("b") == parse_poly("a + 1", {"a", "b"}));
    CHECK(branches[0].complete);
}

TEST_CASE("power sums: verbatim and Newton cases") {
    const std::vector<std::string> fam{"c1", "c2"};
    CHECK(symmetric_to_power_sums(parse_poly("c1+c2", fam), fam, "C") ==
          Poly::variable("C1"));
    CHECK(symmetric_to_power_sums(parse_poly("c1^2+c2^2", fam), fam, "C") ==
          Poly::variable("C2"));
    CHECK(symmetric_to_power_sums(parse_poly("c1*c2", fam), fam, "C") ==
          parse_poly("(C1^2 - C2)/2", {"C1", "C2"}));
    CHECK_THROWS_AS(symmetric_to_power_sums(parse_poly("c1 - c2", fam), fam, "C"), NotSymmetric);
}

TEST_CASE("power sums: evaluation round-trip on random tuples") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> cd(-5, 5);
    const std::vector<std::string> fam{"c1", "c2", "c3"};
    for (int it = 0; it < 25; ++it) {
        // random symmetric polynomial: a permutation orbit of one monomial
        Poly sym;
        std::vector<int> e{cd(rng) & 3, cd(rng) & 3, cd(rng) & 3};
        std::vector<int> perm{0, 1, 2};
        std::set<std::vector<int>> orbit;
        do {
            orbit.insert({e[static_cast<std::size_t>(perm[0])], e[static_cast<std::size_t>(perm[1])],
                          e[static_cast<std::size_t>(perm[2])]});
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (const auto& o : orbit) sym = sym + Poly::monomial(fam, o, Rational(1));
        if (sym.is_zero()) continue;

        Poly red = symmetric_to_power_sums(sym, fam, "C");
        std::map<std::string, Rational> tuple{{"c1", Rational(cd(rng))},
                                              {"c2", Rational(cd(rng))},
                                              {"c3", Rational(cd(rng))}};
        std::map<std::string, Rational> sums;
        for (int m = 1; m <= 3; ++m) {
            Rational s(0);
            for (const auto& [k, v] : tuple) s += v.pow(m);
            sums["C" + std::to_string(m)] = s;
        }
        CHECK(sym.eval_partial(tuple) == red.eval_partial(sums));
    }
}

TEST_CASE("solve covers the brute-force oracle on planted systems") {
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> nd(1, 3), cd(-3, 3), dd(1, 2), ed(0, 2);
    const std::vector<std::string> names{"u", "v", "w"};
    int done = 0, total_checked = 0;
    while (done < 100) {
        const int n = nd(rng);
        std::vector<std::string> unknowns(names.begin(), names.begin() + n);
        std::map<std::string, Rational> target;
        for (const auto& u : unknowns) target[u] = Rational(cd(rng), dd(rng));

        ConstraintSystem cs;
        cs.unknowns = unknowns;
        const int m = n + (ed(rng) > 0 ? 1 : 0);
        for (int k = 0; k < m; ++k) {
            Poly eq;
            for (int t = 0; t < 2; ++t) {
                Poly term(Rational(cd(rng)));
                bool nontrivial = false;
                for (const auto& u : unknowns) {
                    const int e = ed(rng);
                    if (e == 0) continue;
                    nontrivial = true;
                    Poly lin = Poly::variable(u) - Poly(target.at(u));
                    term = term * lin.pow(static_cast<unsigned>(e));
                }
                if (nontrivial) eq = eq + term;
            }
            cs.add(eq);
        }
        if (cs.equations.empty()) continue;
        ++done;

        auto pts = brute_force_oracle(cs, 4, 2);
        auto branches = solve(cs);
        for (const auto& pt : pts) {
            ++total_checked;
            const bool found = std::any_of(branches.begin(), branches.end(),
                                           [&](const SolutionBranch& b) { return covers(b, pt); });
            CHECK_MESSAGE(found, "missing oracle point");
        }
        // every complete branch substitutes to zero
        for (const auto& b : branches) {
            if (!b.complete) continue;
            for (const auto& e : cs.equations) CHECK(apply_branch(e, b).is_zero());
        }
    }
    CHECK(total_checked > 100);  // the scan actually exercised points
}

TEST_CASE("determinism: identical systems give identical branch ordering") {
    auto run = [] {
        ConstraintSystem cs;
        cs.unknowns = {"b", "a"};
        cs.add(parse_poly("(a-1)*(a+2)*(a-1/2)", {"a", "b"}));
        cs.add(parse_poly("b^2 - a", {"a", "b"}));
        std::ostringstream os;
        for (const auto& b : solve(cs)) os << branch_repr(b) << "\n";
        return os.str();
    };
    CHECK(run() == run());
}
