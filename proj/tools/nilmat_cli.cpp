// Command-line front end. Machine output is JSON (TSV for `coeffs`) with
// rationals printed exactly; --pretty switches to a human-readable layout.
// Exit codes: 0 success, 1 a requested check failed, 2 usage or input error.

#include "nilmat/catalog.hpp"
#include "nilmat/coeffs.hpp"
#include "nilmat/json_io.hpp"
#include "nilmat/riccati.hpp"
#include "nilmat/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace nilmat;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Mat load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw usage_error("invalid JSON in '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

std::map<std::size_t, Rational> parse_free(const std::string& spec) {
    std::map<std::size_t, Rational> values;
    if (spec.empty()) return values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw usage_error("--free entries must look like k=v, got '" + item + "'");
        std::size_t idx;
        try {
            idx = std::stoul(item.substr(0, eq));
        } catch (const std::exception&) {
            throw usage_error("bad index in --free entry '" + item + "'");
        }
        auto q = try_parse_rational(item.substr(eq + 1));
        if (!q) throw usage_error("bad rational in --free entry '" + item + "'");
        values[idx] = *q;
    }
    return values;
}

void print_matrix_pretty(const Mat& m, std::ostream& os) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            width[j] = std::max(width[j], to_string(m(i, j)).size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string s = to_string(m(i, j));
            os << std::string(width[j] - s.size(), ' ') << s << (j + 1 < m.cols() ? "  " : "");
        }
        os << " ]\n";
    }
}

void emit(const json& j, bool pretty) {
    if (!pretty) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << j.dump(2) << "\n";
}

// ---- subcommand bodies; each returns the process exit code ----

int cmd_solve_jordan(std::size_t n, unsigned p, const std::string& free_spec, bool pretty) {
    FreeAssignment assign(n, p, parse_free(free_spec));
    SolutionReport r = solve_full_jordan(assign);
    if (pretty) {
        std::cout << "solution X for n=" << n << ", p=" << p << ":\n";
        print_matrix_pretty(r.x, std::cout);
        std::cout << "residual zero: " << (r.residual.is_zero() ? "yes" : "no")
                  << "\nnilpotency index: " << r.nilpotency_index << "\n";
    } else {
        emit(solution_report_to_json(r), false);
    }
    return 0;
}

int cmd_verify(const std::string& a_path, const std::string& x_path, unsigned p, bool pretty) {
    Mat a = load_matrix(a_path);
    Mat x = load_matrix(x_path);
    Mat res = residual(a, x, p);
    bool ok = res.is_zero();
    if (pretty) {
        std::cout << (ok ? "X solves XA - AX = X^p" : "X does not solve the equation") << "\n";
        if (!ok) {
            std::cout << "residual:\n";
            print_matrix_pretty(res, std::cout);
        }
    } else {
        emit(json{{"residual_zero", ok}, {"residual", matrix_to_json(res)}}, false);
    }
    return ok ? 0 : 1;
}

int cmd_x0(std::size_t n, const std::string& alpha_str, bool pretty) {
    auto alpha = try_parse_rational(alpha_str);
    if (!alpha) throw usage_error("bad rational for --alpha: '" + alpha_str + "'");
    Mat x = x0_special(n, *alpha);
    if (pretty)
        print_matrix_pretty(x, std::cout);
    else
        emit(matrix_to_json(x), false);
    return 0;
}

int cmd_normalize(const std::string& x_path, bool pretty) {
    Mat x = load_matrix(x_path);
    Mat s = Mat::zero(x.rows(), x.cols());
    try {
        s = normalize_to_x0(x);
    } catch (const not_normalizable_error& e) {
        if (pretty)
            std::cout << "not normalizable: " << e.what() << "\n";
        else
            emit(json{{"normalizable", false}, {"reason", e.what()}}, false);
        return 1;
    }
    if (pretty) {
        std::cout << "conjugator S with S X0 S^-1 = X:\n";
        print_matrix_pretty(s, std::cout);
    } else {
        emit(json{{"normalizable", true},
                  {"alpha", to_string(x(0, 1))},
                  {"s", matrix_to_json(s)}},
             false);
    }
    return 0;
}

int cmd_riccati_chains(const std::string& a_path, bool pretty) {
    Mat a = load_matrix(a_path);
    ChainSet cs = jordan_chains_nilpotent(build_T(a));
    if (pretty) {
        std::cout << cs.chains.size() << " chain(s) for T = [[A,-E],[0,A]]:\n";
        for (std::size_t c = 0; c < cs.chains.size(); ++c) {
            std::cout << "chain " << c + 1 << " (length " << cs.chains[c].size() << "):\n";
            for (const Mat& v : cs.chains[c]) {
                std::cout << "  (";
                for (std::size_t i = 0; i < v.rows(); ++i)
                    std::cout << to_string(v(i, 0)) << (i + 1 < v.rows() ? ", " : "");
                std::cout << ")\n";
            }
        }
    } else {
        emit(chain_set_to_json(cs), false);
    }
    return 0;
}

int cmd_riccati_solve(const std::string& a_path, unsigned rounds, unsigned seed, bool pretty) {
    Mat a = load_matrix(a_path);
    std::vector<Mat> sols = rounds == 0 ? solutions_from_chain_prefixes(a)
                                        : solutions_from_sampled_chains(a, rounds, seed);
    if (pretty) {
        std::cout << sols.size() << " solution(s) of XA - AX = X^2 from chain selections:\n";
        for (std::size_t i = 0; i < sols.size(); ++i) {
            std::cout << "solution " << i + 1 << ":\n";
            print_matrix_pretty(sols[i], std::cout);
        }
    } else {
        json arr = json::array();
        for (const Mat& x : sols) arr.push_back(matrix_to_json(x));
        emit(json{{"count", sols.size()}, {"solutions", std::move(arr)}}, false);
    }
    return 0;
}

int cmd_coeffs(unsigned p, unsigned lmax, bool symbolic, bool closed) {
    if (symbolic) {
        // interpolate each c(l, k, .) through enough integer p values to
        // pin down its polynomial, then print with integer coefficients
        std::cout << "l\tk\tc(l,k,p)\n";
        for (unsigned l = 1; l <= lmax; ++l)
            for (unsigned k = 0; k < l; ++k) {
                std::vector<Rational> xs, ys;
                for (unsigned pv = 2; pv <= 2 + l; ++pv) {
                    xs.push_back(Int(pv));
                    ys.push_back(Rational(c_coeff_rec(l, k, pv)));
                }
                auto poly = interpolate_polynomial(xs, ys);
                while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
                std::string out;
                for (std::size_t d = poly.size(); d-- > 0;) {
                    if (poly[d] == 0 && poly.size() > 1) continue;
                    std::string coef = to_string(poly[d]);
                    if (!out.empty()) {
                        out += (poly[d] < 0) ? " - " : " + ";
                        if (poly[d] < 0) coef = to_string(-poly[d]);
                    }
                    if (d == 0)
                        out += coef;
                    else {
                        if (coef != "1") out += coef + "*";
                        out += (d == 1) ? "p" : "p^" + std::to_string(d);
                    }
                }
                std::cout << l << "\t" << k << "\t" << out << "\n";
            }
        return 0;
    }
    CoeffTable t = CoeffTable::generate(
        p, lmax, closed ? CoeffSource::closed_form : CoeffSource::recurrence);
    std::cout << "l\tk\tc(l,k," << p << ")\n";
    for (unsigned l = 1; l <= lmax; ++l)
        for (unsigned k = 0; k <= l; ++k)
            std::cout << l << "\t" << k << "\t" << t.values[l - 1][k].str() << "\n";
    return 0;
}

int cmd_identities(unsigned l, unsigned m, unsigned p, std::size_t n, bool pretty) {
    ExpansionReport xa = expand_Xl_Am(l, m, p, n);
    ExpansionReport ax = expand_Am_Xl(l, m, p, n);
    ExpansionReport axl = expand_AX_l(l, p, n);
    bool ok = xa.equal && ax.equal && axl.equal;
    if (pretty) {
        std::cout << "X^l A^m expansion: " << (xa.equal ? "holds" : "fails") << "\n"
                  << "A^m X^l expansion: " << (ax.equal ? "holds" : "fails") << "\n"
                  << "(AX)^l expansion:  " << (axl.equal ? "holds" : "fails") << "\n";
    } else {
        emit(json{{"xl_am", xa.equal}, {"am_xl", ax.equal}, {"ax_l", axl.equal}}, false);
    }
    return ok ? 0 : 1;
}

// ---- the golden regression suite ----

Mat suite_col(const std::vector<Rational>& v) {
    Mat m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

int cmd_paper_suite(const std::string& filter, bool pretty) {
    std::vector<std::pair<std::string, std::function<bool()>>> items;

    items.emplace_back("mixed-3x3-pair", [] {
        Mat a{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}};
        Mat x{{-1, 0, 1}, {-1, 0, 0}, {-1, 0, 1}};
        return residual(a, x, 2).is_zero();
    });

    items.emplace_back("jordan-n5-closed-forms", [] {
        std::vector<std::vector<Rational>> samples = {
            {1, 1, 1, 1},
            {2, -1, Rational(1, 2), 3},
            {Rational(1, 3), 5, -2, Rational(7, 2)},
            {-3, Rational(2, 5), 1, -1},
            {Rational(5, 7), 0, -4, Rational(1, 6)},
        };
        for (const auto& s : samples) {
            const Rational &x12 = s[0], &x13 = s[1], &x14 = s[2];
            Mat x = solve_full_jordan(FreeAssignment::from_list(5, 2, s)).x;
            Rational d1 = 1 + x12, d2 = 1 + 2 * x12, d3 = 1 + 3 * x12;
            if (x(1, 2) != x12 / d1 || x(1, 3) != x13 / d2 ||
                x(1, 4) != (d2 * d2 * x14 - d1 * x13 * x13) / (d1 * d2 * d3) ||
                x(2, 3) != x12 / d2 || x(2, 4) != d1 * x13 / (d2 * d3) ||
                x(3, 4) != x12 / d3)
                return false;
        }
        return true;
    });

    items.emplace_back("special-solution-x0", [] {
        for (std::size_t n = 3; n <= 10; ++n)
            for (const Rational& al : {Rational(1), Rational(1, 2), Rational(-2)})
                if (!residual(jordan_block(n), x0_special(n, al), 2).is_zero()) return false;
        return true;
    });

    items.emplace_back("central-j8-solution", [] {
        Mat a = jordan_block(8);
        Mat x = mat_add(mat_add(mat_pow(a, 4), mat_scale(-2, mat_pow(a, 5))),
                        mat_add(mat_scale(Rational(1, 3), mat_pow(a, 6)),
                                mat_scale(5, mat_pow(a, 7))));
        return residual(a, x, 2).is_zero() && mat_pow(x, 2).is_zero();
    });

    items.emplace_back("families-p2", [] { return catalog::verify_catalog_families(2).ok; });
    items.emplace_back("families-p3", [] { return catalog::verify_catalog_families(3).ok; });

    items.emplace_back("riccati-worked-example", [] {
        Mat a = catalog::a_double_j2();
        std::vector<Mat> sel = {suite_col({2, 0, 0, 0, 0, 0, 0, 0}),
                                suite_col({0, 1, 0, 0, -1, 0, 0, 0}),
                                suite_col({0, 0, -1, 0, 0, -1, 0, 0}),
                                suite_col({0, 0, 0, 1, 0, 0, 1, 0})};
        return solution_from_chains(a, sel) == catalog::p2_x1();
    });

    items.emplace_back("riccati-chain-family", [] {
        Mat t = build_T(catalog::a_double_j2());
        std::vector<std::vector<Rational>> samples = {
            {1, 0, 0, 0, 0, 0, 0, 0},
            {2, -1, 3, Rational(1, 2), 0, 1, -2, 5},
            {Rational(1, 3), 1, 1, 1, 1, 1, 1, 1},
        };
        for (const auto& v : samples) {
            std::vector<Mat> chain = {
                suite_col({2 * v[0], 0, 2 * v[1], 0, 0, 0, 0, 0}),
                suite_col({v[2], v[0], v[3], v[1], -v[0], 0, -v[1], 0}),
                suite_col({v[4], v[5], v[6], v[7], v[5] - v[2], -v[0], v[7] - v[3], -v[1]})};
            if (!validate_chains(t, ChainSet{0, {chain}})) return false;
        }
        return true;
    });

    items.emplace_back("coeff-table-l6", [] {
        const std::vector<std::vector<std::vector<Int>>> table = {
            {{1}},
            {{1}, {1}},
            {{1}, {3}, {1, 1}},
            {{1}, {6}, {7, 4}, {1, 3, 2}},
            {{1}, {10}, {25, 10}, {15, 25, 10}, {1, 6, 11, 6}},
            {{1}, {15}, {65, 20}, {90, 105, 30}, {31, 101, 106, 36}, {1, 10, 35, 50, 24}},
        };
        for (unsigned p : {2, 3, 5, 7})
            for (unsigned l = 1; l <= 6; ++l)
                for (unsigned k = 0; k < l; ++k) {
                    Rational v = 0;
                    const auto& poly = table[l - 1][k];
                    for (std::size_t d = poly.size(); d-- > 0;) v = v * Int(p) + poly[d];
                    if (Rational(c_coeff_rec(l, k, p)) != v) return false;
                }
        return true;
    });

    items.emplace_back("coeff-special-values", [] {
        for (unsigned p : {2, 3, 5, 7})
            for (unsigned l = 2; l <= 8; ++l) {
                SpecialCValues sv = special_c_values(l, p);
                if (sv.c_l_1 != Rational(c_coeff_rec(l, 1, p))) return false;
                if (l >= 3 && sv.c_l_2 != Rational(c_coeff_rec(l, 2, p))) return false;
                if (sv.c_l_lm1 != Rational(c_coeff_rec(l, l - 1, p))) return false;
            }
        return true;
    });

    json results = json::array();
    bool all_ok = true;
    std::size_t ran = 0;
    for (const auto& [name, run] : items) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        ++ran;
        bool ok;
        try {
            ok = run();
        } catch (const std::exception&) {
            ok = false;
        }
        all_ok = all_ok && ok;
        if (pretty)
            std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
        else
            results.push_back(json{{"item", name}, {"pass", ok}});
    }
    if (ran == 0) {
        std::cerr << "no suite item matches filter '" << filter << "'\n";
        return 2;
    }
    if (!pretty) emit(json{{"items", std::move(results)}, {"all_pass", all_ok}}, false);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and verifier for the matrix equation XA - AX = X^p"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    app.fallthrough();  // accept --pretty after the subcommand as well

    std::size_t n = 0;
    unsigned p = 2, l = 1, m = 1, lmax = 6, rounds = 0, seed = 1;
    std::string a_path, x_path, free_spec, alpha = "1", filter;
    bool symbolic = false, closed = false;

    auto* solve = app.add_subcommand("solve-jordan",
                                     "solve over a single nilpotent Jordan block A = J(n)");
    solve->add_option("--n", n, "block size")->required();
    solve->add_option("--p", p, "exponent p");
    solve->add_option("--free", free_spec, "first-row values k=v,... for k = 2..n")->required();

    auto* verify = app.add_subcommand("verify", "check XA - AX = X^p for given A, X");
    verify->add_option("--a", a_path, "matrix A (JSON file)")->required();
    verify->add_option("--x", x_path, "matrix X (JSON file)")->required();
    verify->add_option("--p", p, "exponent p");

    auto* x0 = app.add_subcommand("x0", "the special one-parameter solution for A = J(n)");
    x0->add_option("--n", n, "block size")->required();
    x0->add_option("--alpha", alpha, "parameter (rational string)");

    auto* normalize =
        app.add_subcommand("normalize", "conjugator from the special solution, p = 2");
    normalize->add_option("--x", x_path, "solution X (JSON file)")->required();

    auto* chains = app.add_subcommand("riccati-chains",
                                      "Jordan chains of T = [[A,-E],[0,A]] for nilpotent A");
    chains->add_option("--a", a_path, "matrix A (JSON file)")->required();

    auto* rsolve = app.add_subcommand("riccati-solve",
                                      "solutions of XA - AX = X^2 from chain selections");
    rsolve->add_option("--a", a_path, "matrix A (JSON file)")->required();
    rsolve->add_option("--rounds", rounds, "extra random selection rounds (0 = prefixes only)");
    rsolve->add_option("--seed", seed, "seed for the random rounds");

    auto* coeffs = app.add_subcommand("coeffs", "triangular c(l,k,p) coefficient table (TSV)");
    coeffs->add_option("--p", p, "exponent p");
    coeffs->add_option("--lmax", lmax, "largest l");
    coeffs->add_flag("--symbolic", symbolic, "print entries as polynomials in p");
    coeffs->add_flag("--closed-form", closed, "generate from the closed form");

    auto* ident = app.add_subcommand("identities", "check the power-expansion identities");
    ident->add_option("--l", l, "exponent of X")->required();
    ident->add_option("--m", m, "exponent of A")->required();
    ident->add_option("--p", p, "exponent p");
    ident->add_option("--n", n, "block size (default 2(l+m))");

    auto* suite = app.add_subcommand("paper-suite", "run the named golden regression items");
    suite->add_option("--filter", filter, "run only items whose name contains this string");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*solve) return cmd_solve_jordan(n, p, free_spec, pretty);
        if (*verify) return cmd_verify(a_path, x_path, p, pretty);
        if (*x0) return cmd_x0(n, alpha, pretty);
        if (*normalize) return cmd_normalize(x_path, pretty);
        if (*chains) return cmd_riccati_chains(a_path, pretty);
        if (*rsolve) return cmd_riccati_solve(a_path, rounds, seed, pretty);
        if (*coeffs) return cmd_coeffs(p, lmax, symbolic, closed);
        if (*ident) return cmd_identities(l, m, p, n ? n : 2 * (l + m), pretty);
        if (*suite) return cmd_paper_suite(filter, pretty);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
