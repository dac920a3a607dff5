#include "ecs/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>

#include "ecs/coherent.hpp"
#include "ecs/hermite.hpp"
#include "ecs/json_io.hpp"
#include "ecs/rational_ext.hpp"
#include "ecs/schur_vertex.hpp"

namespace rext::cli {

namespace {

struct IntList {
    std::vector<int> values;
    std::vector<size_t> offsets;
};

IntList parse_int_list(const std::string& s, bool allow_negative) {
    IntList out;
    size_t i = 0;
    while (i < s.size()) {
        const size_t start = i;
        if (s[i] == '-' || s[i] == '+') {
            if (s[i] == '-' && !allow_negative) throw ParseError("negative value not allowed", i);
            ++i;
        }
        const size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw ParseError(std::string("expected a digit, found '") + (i < s.size() ? s.substr(i, 1) : "end of input") + "'", i);
        try {
            out.values.push_back(std::stoi(s.substr(start, i - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
        out.offsets.push_back(start);
        if (i < s.size()) {
            if (s[i] != ',') throw ParseError("expected ',' but found '" + s.substr(i, 1) + "'", i);
            ++i;
            if (i == s.size()) throw ParseError("trailing ','", i - 1);
        }
    }
    return out;
}

double parse_scalar(const std::string& s, size_t offset) {
    static const std::regex re(R"(^([+-]?)(\d*\.?\d*(?:[eE][+-]?\d+)?)\*?(pi)?(?:/(\d+(?:\.\d*)?))?$)");
    std::smatch m;
    if (s.empty() || !std::regex_match(s, m, re) || (m[2].length() == 0 && !m[3].matched))
        throw ParseError("malformed number '" + s + "'", offset);
    double v = m[2].length() ? std::stod(m[2].str()) : 1.0;
    if (m[3].matched) v *= std::numbers::pi;
    if (m[4].matched) v /= std::stod(m[4].str());
    return m[1].str() == "-" ? -v : v;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

// ---- maya -------------------------------------------------------------------

nlohmann::json maya_report(const MayaDiagram& m) {
    const Partition lam = partition_from_maya(m);
    const int qc = threshold_critical_degree(lam);
    return {{"partition", lam},
            {"maya", m},
            {"index_set", m.index_set()},
            {"sigma", m.index()},
            {"weight", lam.weight()},
            {"d_lambda", dim_tableaux(lam).get_str()},
            {"hooklengths", hooklengths(lam)},
            {"q_c", qc},
            {"critical_degrees", critical_degrees(lam, qc + 4)},
            {"regular", is_krein_adler_regular(m)}};
}

void print_maya_text(std::ostream& out, const MayaDiagram& m, const nlohmann::json& j) {
    const Partition lam = partition_from_maya(m);
    out << "partition: " << lam.to_string() << "\n";
    out << "maya: " << m.to_string() << "\n";
    out << "filled_nonneg: " << join({m.filled_nonneg().begin(), m.filled_nonneg().end()}) << "\n";
    out << "empty_neg: " << join({m.empty_neg().begin(), m.empty_neg().end()}) << "\n";
    out << "sigma: " << m.index() << "\n";
    out << "index_set: " << m.index_set().to_string() << "\n";
    out << "d_lambda: " << dim_tableaux(lam).get_str() << "\n";
    out << "hooklengths: " << j.at("hooklengths").dump() << "\n";
    out << "q_c: " << j.at("q_c").get<int>() << "\n";
    out << "critical_degrees: " << join(j.at("critical_degrees").get<std::vector<int>>()) << "\n";
    out << "regular: " << (j.at("regular").get<bool>() ? "true" : "false") << "\n";
}

// ---- extension --------------------------------------------------------------

nlohmann::json extension_report(const MayaDiagram& m) {
    const RationalExtension ext = build_extension(m);
    const Partition lam = partition_from_maya(m);
    const int qc = threshold_critical_degree(lam);
    nlohmann::json states = nlohmann::json::array();
    for (int k : bound_state_indices(m, 6))
        states.push_back({{"m", k}, {"energy", 2 * k + 1}, {"polynomial", exceptional_hermite(m, k).to_string()}});
    nlohmann::json ann = nlohmann::json::array();
    for (int q : critical_degrees(lam, qc + 3)) {
        if (q < qc) continue;
        const LadderOperator l = ladder(m, q);
        ann.push_back({{"q", q}, {"order", l.op.order()}, {"kernel", l.kernel_indices}});
    }
    return {{"partition", lam},
            {"index_set", m.index_set()},
            {"sigma", m.index()},
            {"potential", potential_display(ext)},
            {"tau", ext.tau.to_string()},
            {"regular", ext.regular},
            {"bound_states", states},
            {"annihilators", ann}};
}

void print_extension_text(std::ostream& out, const nlohmann::json& j) {
    out << "potential: " << j.at("potential").get<std::string>() << "\n";
    out << "tau: " << j.at("tau").get<std::string>() << "\n";
    out << "regular: " << (j.at("regular").get<bool>() ? "true" : "false") << "\n";
    out << "bound states:\n";
    for (const auto& s : j.at("bound_states"))
        out << "  m=" << s.at("m").get<int>() << " E=" << s.at("energy").get<int>() << " "
            << s.at("polynomial").get<std::string>() << "\n";
    out << "annihilators:\n";
    for (const auto& a : j.at("annihilators"))
        out << "  q=" << a.at("q").get<int>() << " order=" << a.at("order").get<int>()
            << " kernel=" << a.at("kernel").get<IndexSet>().to_string() << "\n";
}

// ---- verify -----------------------------------------------------------------

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

Check check_schur_forms(const Partition& lam) {
    const MultiPoly jt = schur(lam);
    const bool ok = jt == schur_wronskian(lam) && jt == schur_via_raising(lam);
    return {"schur-forms", ok, "S = " + jt.to_string()};
}

Check check_vertex_relation(const Partition& lam) {
    const MultiPoly s = schur(lam);
    const std::map<int, MultiPoly> y = vertex_X_range(-3, 5, s);
    std::map<int, std::map<int, MultiPoly>> xy;
    for (const auto& [b, p] : y) xy.emplace(b, vertex_X_range(-4, 4, p));
    for (int m = -3; m <= 4; ++m)
        for (int n = -3; n <= 4; ++n)
            if (!(xy.at(n).at(m) + xy.at(m + 1).at(n - 1)).is_zero())
                return {"vertex-relation", false, "X_m X_n + X_{n-1} X_{m+1} nonzero at m=" + std::to_string(m) +
                                                      ", n=" + std::to_string(n)};
    return {"vertex-relation", true, "m,n in [-3,4] on S"};
}

Check check_vertex_expansion(const Partition& lam) {
    const MultiPoly s = schur(lam);
    const int lo = -lam.length() - 2, hi = lam.part(1) + 2;
    const std::map<int, MultiPoly> x = vertex_X_range(lo, hi, s);
    const MayaDiagram m = maya_from_partition(lam);
    for (int k = lo; k <= hi; ++k) {
        MultiPoly expected;
        if (!m.contains(k)) {
            const Insertion ins = insertion(k, lam);
            expected = Rational(ins.sign) * schur(ins.partition);
        }
        if (!(x.at(k) == expected))
            return {"vertex-expansion", false, "X_m S mismatch at m=" + std::to_string(k)};
    }
    return {"vertex-expansion", true, "m in [" + std::to_string(lo) + "," + std::to_string(hi) + "]"};
}

Check check_schur_specialization(const MayaDiagram& m) {
    const Partition lam = partition_from_maya(m);
    const Rational c = Rational(BigInt(BigInt(1) << lam.weight()) * factorial(static_cast<unsigned>(lam.weight()))) /
                       Rational(dim_tableaux(lam));
    const UPoly rhs = hermite_specialization(schur(lam)).to_upoly() * c;
    const UPoly lhs = normalized_pw(m);
    return {"schur-specialization", lhs == rhs, "H = " + lhs.to_string()};
}

Check check_pseudo_wronskian_routes(const MayaDiagram& m) {
    return {"pseudo-wronskian-routes", pseudo_wronskian(m) == pseudo_wronskian_via_wronskian(m),
            "determinant vs exp(sigma x^2/2) Wr[psi]"};
}

Check check_translation(const MayaDiagram& m) {
    const UPoly h = normalized_pw(m);
    for (int n = -3; n <= 3; ++n)
        if (!(normalized_pw(translate(m, n)) == h))
            return {"translation-invariance", false, "shift " + std::to_string(n)};
    return {"translation-invariance", true, "|n| <= 3"};
}

Check check_eigenrelation(const MayaDiagram& m) {
    const LinearDiffOp t = build_extension(m).hamiltonian;
    std::vector<int> ks = bound_state_indices(m, 6);
    const std::vector<int> members = m.members_from(m.smallest_nonmember() - 3);
    for (size_t i = 0; i < 3 && i < members.size(); ++i) ks.push_back(members[i]);
    for (int k : ks) {
        const ExpPolyFn psi = eigenfunction(m, k);
        if (!(t.apply(psi) - RationalFn(2 * k + 1) * psi).is_zero())
            return {"eigenrelation", false, "T psi != (2m+1) psi at m=" + std::to_string(k)};
    }
    std::vector<int> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    return {"eigenrelation", true, "m in " + join(sorted)};
}

Check check_annihilator(const MayaDiagram& m, int q, bool expect_fail) {
    const SymbolicCheck r = annihilator_eigencheck(m, q);
    const std::string name = "annihilator-q" + std::to_string(q) + (expect_fail ? "-negative-control" : "");
    if (expect_fail)
        return {name, !r.ok, r.ok ? "residual unexpectedly zero" : "residual nonzero as expected"};
    return {name, r.ok, r.ok ? "L_q Psi = z^q Psi" : "residual " + r.residual.to_string()};
}

Check check_hamiltonian_gf(const MayaDiagram& m) {
    const SymbolicCheck r = hamiltonian_eigencheck(m);
    return {"hamiltonian-generating-function", r.ok,
            r.ok ? "T Psi = (2z d/dz + 1 + 2 sigma) Psi" : "residual " + r.residual.to_string()};
}

Check check_expansion(const MayaDiagram& m) {
    const ExpansionCheck e = expansion_coefficients(m, 8);
    std::vector<int> idx = e.indices;
    return {"generating-function-expansion", e.ok,
            e.ok ? "m in " + join(idx) : "first mismatch at m=" + std::to_string(e.first_mismatch)};
}

// ---- uncertainty ------------------------------------------------------------

std::string csv_name(const std::string& prefix, double alpha) { return prefix + "_alpha" + format_double(alpha) + ".csv"; }

struct Common {
    std::optional<std::string> partition, index_set;
    std::string format = "text";
};

void add_diagram_options(CLI::App* cmd, Common& c) {
    cmd->add_option("--partition", c.partition, "partition as comma-separated parts, e.g. 2,2");
    cmd->add_option("--index-set", c.index_set, "index set as comma-separated integers, e.g. 2,3");
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

Partition parse_partition(const std::string& s) {
    IntList parts = parse_int_list(s, false);
    for (size_t i = 1; i < parts.values.size(); ++i)
        if (parts.values[i] > parts.values[i - 1])
            throw ParseError("partition parts must be weakly decreasing", parts.offsets[i]);
    return Partition(std::move(parts.values));
}

IndexSet parse_index_set(const std::string& s) {
    const IntList v = parse_int_list(s, true);
    std::set<int> k;
    for (size_t i = 0; i < v.values.size(); ++i)
        if (!k.insert(v.values[i]).second) throw ParseError("repeated index", v.offsets[i]);
    return IndexSet(std::move(k));
}

std::vector<double> parse_alphas(const std::string& s) {
    std::vector<double> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        const double a = parse_scalar(s.substr(start, end - start), start);
        if (!(a > 0)) throw ParseError("alpha must be positive", start);
        out.push_back(a);
        start = end + 1;
    }
    return out;
}

std::vector<double> parse_time_grid(const std::string& s) {
    const size_t c1 = s.find(':');
    const size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("expected start:stop:count", s.size());
    const double a = parse_scalar(s.substr(0, c1), 0);
    const double b = parse_scalar(s.substr(c1 + 1, c2 - c1 - 1), c1 + 1);
    const std::string cs = s.substr(c2 + 1);
    std::vector<int> n;
    try {
        n = parse_int_list(cs, false).values;
    } catch (const ParseError& e) {
        throw ParseError("malformed count '" + cs + "'", c2 + 1 + e.position());
    }
    if (n.size() != 1) throw ParseError("count must be a single integer", c2 + 1);
    if (n[0] < 2) throw ParseError("count must be at least 2", c2 + 1);
    std::vector<double> t;
    for (int i = 0; i < n[0]; ++i) t.push_back(a + (b - a) * i / (n[0] - 1));
    return t;
}

MayaDiagram select_diagram(const std::optional<std::string>& partition, const std::optional<std::string>& index_set) {
    if (partition.has_value() == index_set.has_value())
        throw std::invalid_argument("give exactly one of --partition and --index-set");
    if (partition) return maya_from_partition(parse_partition(*partition));
    return MayaDiagram::from_index_set(parse_index_set(*index_set));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational extensions of the harmonic oscillator and their coherent states"};
    app.require_subcommand(1);

    Common maya_opts, ext_opts, ver_opts, unc_opts;
    CLI::App* maya = app.add_subcommand("maya", "partition / Maya diagram combinatorics");
    add_diagram_options(maya, maya_opts);
    CLI::App* ext = app.add_subcommand("extension", "rational extension, eigenstates and annihilators");
    add_diagram_options(ext, ext_opts);

    CLI::App* ver = app.add_subcommand("verify", "exact identity suite");
    add_diagram_options(ver, ver_opts);
    std::optional<int> ver_q;
    bool expect_fail = false;
    ver->add_option("--q", ver_q, "check only the annihilator relation at this degree");
    ver->add_flag("--expect-fail", expect_fail, "the --q check is a negative control");

    CLI::App* unc = app.add_subcommand("uncertainty", "uncertainty product of the coherent state");
    add_diagram_options(unc, unc_opts);
    std::string alphas = "4", grid = "0:pi:201", out_prefix = "uncertainty";
    double quad_tol = 1e-10, quad_half = 0;
    unc->add_option("--alpha", alphas, "comma-separated alpha values");
    unc->add_option("--t", grid, "time grid start:stop:count");
    unc->add_option("--out", out_prefix, "output file prefix");
    unc->add_option("--quad-tol", quad_tol, "quadrature tolerance");
    unc->add_option("--quad-halfwidth", quad_half, "integration half-width (default alpha + 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*maya) {
            const MayaDiagram m = select_diagram(maya_opts.partition, maya_opts.index_set);
            const nlohmann::json j = maya_report(m);
            if (maya_opts.format == "json") out << j.dump(2) << "\n";
            else print_maya_text(out, m, j);
            return 0;
        }
        if (*ext) {
            const MayaDiagram m = select_diagram(ext_opts.partition, ext_opts.index_set);
            const nlohmann::json j = extension_report(m);
            if (!j.at("regular").get<bool>())
                err << "warning: " << m.index_set().to_string()
                    << " is not Krein-Adler regular (odd block); the potential has real poles\n";
            if (ext_opts.format == "json") out << j.dump(2) << "\n";
            else print_extension_text(out, j);
            return 0;
        }
        if (*ver) {
            const MayaDiagram m = select_diagram(ver_opts.partition, ver_opts.index_set);
            if (expect_fail && !ver_q) throw std::invalid_argument("--expect-fail requires --q");
            const Partition lam = partition_from_maya(m);
            std::vector<Check> checks;
            if (ver_q) {
                checks.push_back(check_annihilator(m, *ver_q, expect_fail));
            } else {
                checks.push_back(check_schur_forms(lam));
                checks.push_back(check_vertex_relation(lam));
                checks.push_back(check_vertex_expansion(lam));
                checks.push_back(check_schur_specialization(m));
                checks.push_back(check_pseudo_wronskian_routes(m));
                checks.push_back(check_translation(m));
                checks.push_back(check_eigenrelation(m));
                const int qc = std::max(threshold_critical_degree(lam), 1);
                checks.push_back(check_annihilator(m, qc, false));
                checks.push_back(check_annihilator(m, qc + 1, false));
                checks.push_back(check_hamiltonian_gf(m));
                checks.push_back(check_expansion(m));
            }
            bool all = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const Check& c : checks) {
                all = all && c.passed;
                arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            }
            const nlohmann::json summary = {
                {"partition", lam}, {"index_set", m.index_set()}, {"checks", arr}, {"passed", all}};
            if (ver_opts.format == "json") {
                out << summary.dump(2) << "\n";
            } else {
                for (const Check& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
                out << "summary: " << summary.dump() << "\n";
            }
            return all ? 0 : 1;
        }
        if (*unc) {
            const MayaDiagram m = select_diagram(unc_opts.partition, unc_opts.index_set);
            const std::vector<double> as = parse_alphas(alphas);
            const std::vector<double> ts = parse_time_grid(grid);
            QuadConfig cfg;
            cfg.tolerance = quad_tol;
            cfg.half_width = quad_half;
            nlohmann::json reports = nlohmann::json::array();
            for (double a : as) {
                const UncertaintyReport r = uncertainty(m, a, ts, cfg);
                const std::string name = csv_name(out_prefix, a);
                std::ofstream f(name);
                if (!f) throw std::runtime_error("cannot write " + name);
                write_csv(f, r);
                reports.push_back(r);
                if (unc_opts.format != "json") out << "wrote " << name << "\n";
            }
            if (unc_opts.format == "json") out << reports.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rext::cli
