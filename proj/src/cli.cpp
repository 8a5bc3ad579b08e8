#include "phiirred/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "phiirred/certificate_io.hpp"
#include "phiirred/certifier.hpp"
#include "phiirred/hermite.hpp"
#include "phiirred/oracle.hpp"
#include "phiirred/poly_io.hpp"
#include "phiirred/polygon.hpp"
#include "phiirred/schur.hpp"

namespace phiirred {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::irreducible: return 0;
        case Verdict::hypothesis_failed: return 2;
        case Verdict::inconclusive: return 3;
    }
    return 1;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

HermiteSpec hermite_spec_from_json(const json& j) {
    if (!j.contains("schema") || j.at("schema") != kHermiteSchema)
        throw std::invalid_argument("expected \"schema\": \"" + std::string(kHermiteSchema) + "\"");
    for (const char* key : {"m", "phi", "a_top", "a"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    HermiteSpec spec;
    const Integer m = integer_from_json(j.at("m"));
    if (m < 0 || m > 100000) throw std::invalid_argument("m out of range");
    spec.m = static_cast<unsigned>(m.get_ui());
    spec.phi = from_json_literal(j.at("phi"));
    spec.a_top = j.at("a_top").is_array() ? reject_polynomial_leading_coefficient(from_json_literal(j.at("a_top")))
                                          : integer_from_json(j.at("a_top"));
    for (const auto& e : j.at("a")) spec.a_low.push_back(from_json_literal(e));
    spec.validate();
    return spec;
}

json cross_check_to_json(const CrossCheckReport& rep) {
    json roots = json::array();
    for (const auto& r : rep.roots.roots) roots.push_back(r.get_str());
    json factors = json::array();
    if (rep.known)
        for (const auto& s : rep.known->phi_forms) factors.push_back(s);
    return {{"integer_roots", roots},
            {"root_search_complete", rep.roots.complete},
            {"known_form", rep.known ? json(rep.known->pattern) : json(nullptr)},
            {"known_factors", factors},
            {"sieve", to_string(rep.sieve.outcome)},
            {"sieve_primes", rep.sieve.evidence.size()},
            {"contradiction", rep.contradiction},
            {"notes", rep.notes}};
}

struct CertifyOptions {
    std::string path;
    std::string json_out;
    bool verify = false;
    bool cross_check = false;
    bool serial = false;
};

int cmd_certify(const CertifyOptions& o, std::ostream& out, std::ostream& err) {
    const json doc = read_json_file(o.path);
    const Execution exec = o.serial ? Execution::serial : Execution::parallel;
    const std::string schema = doc.is_object() && doc.contains("schema") && doc.at("schema").is_string()
                                   ? doc.at("schema").get<std::string>()
                                   : "";

    ProblemInstance inst;
    Certificate cert;
    json document;
    if (schema == kHermiteSchema) {
        const HermiteSpec spec = hermite_spec_from_json(doc);
        try {
            HermiteCertificate hc = certify_hermite(spec, HermiteBound::theorem, exec);
            inst = hc.certificate.instance;
            cert = std::move(hc.certificate);
            document = certificate_to_json(cert);
            document["hermite"] = {{"m", std::to_string(spec.m)},
                                   {"odd_factor", hc.odd_factor ? to_json_literal(*hc.odd_factor) : json(nullptr)},
                                   {"cofactor", to_json_literal(hc.cofactor)}};
        } catch (const HermiteExcluded& e) {
            err << "hypothesis failed: " << e.what() << "\n";
            return 2;
        }
    } else {
        inst = instance_from_json(doc);
        cert = certify(inst, exec);
        document = certificate_to_json(cert);
    }

    if (o.verify) {
        const VerificationResult vr = verify_certificate(inst, cert);
        document["verification"] = {{"ok", vr.ok}, {"mismatches", vr.mismatches}};
        if (!vr.ok) {
            for (const auto& m : vr.mismatches) err << "verify: " << m << "\n";
            if (!o.json_out.empty()) std::ofstream(o.json_out) << document.dump(2) << "\n";
            return 1;
        }
    }
    if (o.cross_check) {
        const CrossCheckReport rep = cross_check(inst, cert, default_prime_budget(), exec);
        document["cross_check"] = cross_check_to_json(rep);
        if (rep.contradiction) {
            for (const auto& n : rep.notes) err << "cross-check: " << n << "\n";
            return 1;
        }
    }

    if (o.json_out.empty()) {
        out << document.dump(2) << "\n";
    } else {
        std::ofstream file(o.json_out);
        if (!file) throw UsageError("cannot write " + o.json_out);
        file << document.dump(2) << "\n";
        out << to_string(cert.verdict) << ": " << cert.summary << "\n";
    }
    return exit_code(cert.verdict);
}

struct PolygonOptions {
    std::string input;
    std::string phi = "x";
    std::uint64_t p = 0;
    bool tsv = false;
    bool json_output = false;
};

int cmd_polygon(const PolygonOptions& o, std::ostream& out) {
    IntPoly f, phi;
    if (std::filesystem::is_regular_file(o.input)) {
        const ProblemInstance inst = instance_from_json(read_json_file(o.input));
        f = build_scaled_polynomial(inst);
        phi = inst.phi;
    } else {
        f = parse_inline(o.input);
        phi = parse_inline(o.phi);
    }
    if (!is_prime(o.p)) throw std::invalid_argument("p = " + std::to_string(o.p) + " is not prime");
    const NewtonPolygon np = build_polygon(f, phi, o.p);

    if (o.json_output) {
        out << polygon_to_json(np).dump(2) << "\n";
    } else if (o.tsv) {
        out << "i\tv\tvertex\n";
        for (const auto& pt : np.points) {
            const bool vertex = std::find(np.vertices.begin(), np.vertices.end(), pt.index) != np.vertices.end();
            out << pt.index << "\t" << pt.valuation.to_string() << "\t" << (vertex ? 1 : 0) << "\n";
        }
    } else {
        out << "points:";
        for (const auto& pt : np.points) out << " (" << pt.index << ", " << pt.valuation.to_string() << ")";
        out << "\nvertices:";
        for (auto v : np.vertices) out << " " << v;
        out << "\nslopes:";
        for (const auto& s : np.slopes()) out << " " << s.to_string();
        out << "\n";
    }
    return 0;
}

int cmd_expand(const std::string& poly, const std::string& phi_text, std::ostream& out) {
    const PhiExpansion e = phi_expand(parse_inline(poly), parse_inline(phi_text));
    for (std::size_t i = 0; i < e.terms.size(); ++i) out << "b_" << i << " = " << to_string(e.terms[i]) << "\n";
    out << "f = " << phi_form(e) << "\n";
    return 0;
}

struct HermiteOptions {
    unsigned m = 0;
    std::string phi = "x";
    std::string spec_path;
    bool corollary = false;
    bool certify = false;
    bool serial = false;
};

int cmd_hermite(const HermiteOptions& o, std::ostream& out, std::ostream& err) {
    const IntPoly phi = parse_inline(o.phi);
    HermiteSpec spec = o.spec_path.empty() ? classical_spec(o.m, phi) : hermite_spec_from_json(read_json_file(o.spec_path));
    if (o.spec_path.empty()) spec.validate();
    out << to_string(generalized_hermite(spec)) << "\n";
    if (!o.certify) return 0;
    try {
        const HermiteCertificate hc = certify_hermite(spec, o.corollary ? HermiteBound::corollary : HermiteBound::theorem,
                                                      o.serial ? Execution::serial : Execution::parallel);
        out << to_string(hc.certificate.verdict) << ": " << hc.certificate.summary << "\n";
        if (hc.odd_factor) out << "odd factor: " << to_string(*hc.odd_factor) << "\n";
        out << "cofactor: " << to_string(hc.cofactor) << "\n";
        return exit_code(hc.certificate.verdict);
    } catch (const HermiteExcluded& e) {
        err << "hypothesis failed: " << e.what() << "\n";
        return 2;
    }
}

struct SchurOptions {
    std::uint64_t n = 0, k = 0;
    std::uint64_t k_max = 0, n_max = 0;
    bool serial = false;
};

int cmd_schur(const SchurOptions& o, std::ostream& out) {
    if (o.k_max > 0 || o.n_max > 0) {
        const auto ex = schur_exception_scan(o.k_max, o.n_max, o.serial ? Execution::serial : Execution::parallel);
        out << "exceptions for k <= " << o.k_max << ", n <= " << o.n_max << ": " << ex.size() << "\n";
        for (const auto& e : ex) out << "k=" << e.k << " n=" << e.n << " 2n+1=" << 2 * e.n + 1 << "\n";
        return 0;
    }
    const auto w = find_schur_prime(o.n, o.k);
    if (!w) {
        out << "no prime > " << 2 * o.k + 1 << " divides any of " << 2 * o.n + 1 << ".." << 2 * o.n + 2 * o.k - 1 << "\n";
        return 0;
    }
    out << "p = " << w->p << " divides " << w->divides << "\n";
    return 0;
}

int cmd_oracle(const std::string& input, const std::string& phi_text, std::size_t budget, bool serial,
               std::ostream& out) {
    IntPoly f, phi = parse_inline(phi_text);
    if (std::filesystem::is_regular_file(input)) {
        const ProblemInstance inst = instance_from_json(read_json_file(input));
        f = build_scaled_polynomial(inst);
        phi = inst.phi;
    } else {
        f = parse_inline(input);
    }
    const Execution exec = serial ? Execution::serial : Execution::parallel;
    out << "f = " << to_string(f) << "\n";
    const RootSearch rs = integer_root_search(f);
    std::vector<std::string> roots;
    for (const auto& r : rs.roots) roots.push_back(r.get_str());
    out << "integer roots: " << (roots.empty() ? "none" : join(roots, ", ")) << (rs.complete ? "" : " (incomplete)")
        << "\n";
    if (!f.is_constant()) {
        if (auto k = known_form_factor(f, phi)) {
            out << "known form: " << k->pattern << "\n";
            out << "  f = " << (k->scale == 1 ? "" : k->scale.get_str() + " * ");
            for (const auto& s : k->phi_forms) out << "(" << s << ")";
            out << "\n";
        } else {
            out << "known form: none\n";
        }
        const SieveVerdict v = assess(f, phi, budget, exec);
        out << "verdict: " << to_string(v.outcome) << "\n";
        for (const auto& g : v.witness_factors) out << "  factor: " << to_string(g) << "\n";
        for (const auto& pat : v.evidence) {
            out << "  p=" << pat.p << ":";
            for (const auto& [d, c] : pat.degrees) out << " " << d << "^" << c;
            out << "\n";
        }
        std::vector<std::string> feas;
        for (auto d : v.feasible_degrees) feas.push_back(std::to_string(d));
        if (v.outcome != SieveOutcome::reducible_with_witness)
            out << "feasible factor degrees: " << (feas.empty() ? "none" : join(feas, " ")) << "\n";
    }
    return 0;
}

ProblemInstance family(unsigned c, unsigned n, const IntPoly& phi) {
    return ProblemInstance{c, n, phi, 1, std::vector<IntPoly>(n, IntPoly::constant(1)), std::nullopt};
}

ExampleRow certify_row(const std::string& name, const ProblemInstance& inst, Execution exec) {
    const Certificate cert = certify(inst, exec);
    const bool replay = verify_certificate(inst, cert).ok;
    ExampleRow row{name, "IRREDUCIBLE, replays", to_string(cert.verdict) + (replay ? ", replays" : ", replay FAILED"),
                   false, {}};
    row.pass = cert.verdict == Verdict::irreducible && replay;
    if (!row.pass) row.detail.push_back(cert.summary);
    return row;
}

ExampleRow counterexample_row(const std::string& name, const ProblemInstance& inst,
                              const std::vector<std::string>& expected_factors, Execution exec) {
    const Certificate cert = certify(inst, exec);
    const auto known = known_form_factor(build_scaled_polynomial(inst), inst.phi);
    std::string expected = "HYPOTHESIS_FAILED; ";
    for (const auto& s : expected_factors) expected += "(" + s + ")";
    std::string observed = to_string(cert.verdict) + "; ";
    if (known)
        for (const auto& s : known->phi_forms) observed += "(" + s + ")";
    else
        observed += "no factorization";
    return {name, expected, observed, expected == observed, {}};
}

ExampleRow polynomial_top_row(const std::string& name, unsigned c, const IntPoly& phi, const IntPoly& top,
                              const std::vector<IntPoly>& lower) {
    json doc = {{"schema", kInstanceSchema}, {"c", std::to_string(c)}, {"n", "2"},
                {"phi", to_json_literal(phi)},  {"a_n", to_json_literal(top)}, {"a", json::array()}};
    for (const auto& a : lower) doc["a"].push_back(to_json_literal(a));
    bool rejected = false;
    try {
        instance_from_json(doc);
    } catch (const PolynomialLeadingCoefficient&) {
        rejected = true;
    }
    const RootSearch rs = integer_root_search(build_scaled_polynomial(c, phi, top, lower));
    const bool zero = std::find(rs.roots.begin(), rs.roots.end(), Integer(0)) != rs.roots.end();
    return {name, "rejected at parse; root 0",
            std::string(rejected ? "rejected at parse" : "accepted") + "; " + (zero ? "root 0" : "no root 0"),
            rejected && zero,
            {}};
}

}  // namespace

std::vector<ExampleRow> example_suite_rows(Execution exec) {
    std::vector<ExampleRow> rows;
    const IntPoly phi37 = parse_inline("x^3 - x + 37");
    const IntPoly phi17 = parse_inline("x^2 - x + 17");
    for (unsigned n = 2; n <= 5; ++n)
        rows.push_back(certify_row("family x^3-x+37, c=0, n=" + std::to_string(n), family(0, n, phi37), exec));
    for (unsigned n = 2; n <= 4; ++n)
        rows.push_back(certify_row("family x^2-x+17, c=2, n=" + std::to_string(n), family(2, n, phi17), exec));

    const IntPoly phi5 = parse_inline("x^2 - x + 5");
    const IntPoly phi11 = parse_inline("x^2 - x + 11");
    rows.push_back(counterexample_row("content, c=0, phi=x^2-x+5",
                                      {0, 2, phi5, 1, {IntPoly::constant(-3), IntPoly()}, std::nullopt},
                                      {"phi^2 - 3", "phi^2 + 3"}, exec));
    rows.push_back(counterexample_row("content, c=2, phi=x^2-x+11",
                                      {2, 2, phi11, 1, {IntPoly::constant(15), IntPoly::constant(6)}, std::nullopt},
                                      {"phi^2 + 15", "phi^2 + 15"}, exec));
    rows.push_back(polynomial_top_row("polynomial a_n, c=0, phi=x^2-x+5", 0, phi5, parse_inline("x - 3"),
                                      {parse_inline("5x - 25"), parse_inline("x + 26")}));
    rows.push_back(polynomial_top_row("polynomial a_n, c=2, phi=x^2-x+11", 2, phi11, parse_inline("x - 15"),
                                      {parse_inline("x - 121"), parse_inline("x + 366")}));
    rows.push_back(counterexample_row("n=1, phi^2 - x^2, phi=x^3-x+37",
                                      {0, 1, phi37, 1, {parse_inline("-x^2")}, std::nullopt},
                                      {"phi - x", "phi + x"}, exec));

    {
        const bool k2 = !find_schur_prime(12, 2).has_value();
        const bool k1 = !find_schur_prime(4, 1).has_value() && !find_schur_prime(13, 1).has_value();
        rows.push_back({"Schur lemma exceptions 2n+1=25 (k=2), 9 and 27 (k=1)", "no witness",
                        k1 && k2 ? "no witness" : "witness found", k1 && k2, {}});
    }

    {
        const ProblemInstance inst = family(2, 13, IntPoly::x());
        const Certificate cert = certify(inst, exec);
        const bool reached = cert.verdict == Verdict::irreducible || cert.verdict == Verdict::inconclusive;
        const bool replay = cert.verdict != Verdict::irreducible || verify_certificate(inst, cert).ok;
        ExampleRow row{"stress c=2, n=13, phi=x", "IRREDUCIBLE or INCONCLUSIVE", to_string(cert.verdict),
                       reached && replay, {}};
        for (const auto& st : cert.steps) {
            if (st.k != 4) continue;
            for (const auto& t : st.search_log)
                row.detail.push_back("k=4 p=" + std::to_string(t.p) + ": " + t.outcome);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified irreducibility for phi-Hermite-type polynomials", "phi-irred"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "phi-irred 1.0.0");

    CertifyOptions co;
    auto* certify_cmd = app.add_subcommand("certify", "Certify an instance file (phi-irred/1 or phi-hermite/1)");
    certify_cmd->add_option("path", co.path, "Instance file")->required();
    certify_cmd->add_option("--json-out", co.json_out, "Write the certificate here instead of standard output");
    certify_cmd->add_flag("--verify", co.verify, "Replay the certificate");
    certify_cmd->add_flag("--cross-check", co.cross_check, "Run the factorization oracle on F_c");
    certify_cmd->add_flag("--serial", co.serial, "Disable OpenMP kernels");

    PolygonOptions po;
    auto* polygon_cmd = app.add_subcommand("polygon", "Print the phi-Newton polygon");
    polygon_cmd->add_option("input", po.input, "Instance file or inline polynomial")->required();
    polygon_cmd->add_option("--phi", po.phi, "Inline phi (ignored for instance files)");
    polygon_cmd->add_option("--p", po.p, "Prime")->required();
    auto* tsv = polygon_cmd->add_flag("--tsv", po.tsv, "Tab-separated points for plotting");
    polygon_cmd->add_flag("--json", po.json_output, "JSON output")->excludes(tsv);

    std::string expand_poly, expand_phi = "x";
    auto* expand_cmd = app.add_subcommand("expand", "Print the phi-expansion");
    expand_cmd->add_option("poly", expand_poly, "Inline polynomial")->required();
    expand_cmd->add_option("--phi", expand_phi, "Inline phi");

    HermiteOptions ho;
    bool classical = false;
    auto* hermite_cmd = app.add_subcommand("hermite", "Print or certify Hermite polynomials");
    auto* m_opt = hermite_cmd->add_option("--m", ho.m, "Degree in phi");
    hermite_cmd->add_option("--phi", ho.phi, "Inline phi");
    auto* classical_flag = hermite_cmd->add_flag("--classical", classical, "Classical coefficients (default)");
    auto* spec_opt = hermite_cmd->add_option("--spec", ho.spec_path, "phi-hermite/1 file");
    spec_opt->excludes(classical_flag)->excludes(m_opt);
    hermite_cmd->add_flag("--corollary", ho.corollary, "Use the primes < m bound");
    hermite_cmd->add_flag("--certify", ho.certify, "Run the certifier");
    hermite_cmd->add_flag("--serial", ho.serial, "Disable OpenMP kernels");

    SchurOptions so;
    auto* schur_cmd = app.add_subcommand("schur", "Schur prime lemma witnesses");
    schur_cmd->add_option("--n", so.n, "Window start 2n+1");
    schur_cmd->add_option("--k", so.k, "Window length");
    schur_cmd->add_option("--k-max", so.k_max, "Scan all k up to this value");
    schur_cmd->add_option("--n-max", so.n_max, "Scan all n up to this value");
    schur_cmd->add_flag("--serial", so.serial, "Disable OpenMP kernels");

    std::string oracle_input, oracle_phi = "x";
    std::size_t budget = default_prime_budget();
    bool oracle_serial = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "Roots, known forms and the degree sieve");
    oracle_cmd->add_option("input", oracle_input, "Instance file or inline polynomial")->required();
    oracle_cmd->add_option("--phi", oracle_phi, "Inline phi for known-form detection");
    oracle_cmd->add_option("--budget", budget, "Good primes used by the sieve");
    oracle_cmd->add_flag("--serial", oracle_serial, "Disable OpenMP kernels");

    bool examples_serial = false;
    auto* examples_cmd = app.add_subcommand("paper-examples", "Run the built-in example suite");
    examples_cmd->add_flag("--serial", examples_serial, "Disable OpenMP kernels");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (certify_cmd->parsed()) return cmd_certify(co, out, err);
        if (polygon_cmd->parsed()) return cmd_polygon(po, out);
        if (expand_cmd->parsed()) return cmd_expand(expand_poly, expand_phi, out);
        if (hermite_cmd->parsed()) {
            if (ho.spec_path.empty() && m_opt->count() == 0) throw UsageError("hermite needs --m or --spec");
            if (ho.certify && ho.m < 3 && ho.spec_path.empty()) throw UsageError("certification needs m >= 3");
            return cmd_hermite(ho, out, err);
        }
        if (schur_cmd->parsed()) {
            const bool scan = so.k_max > 0 || so.n_max > 0;
            if (!scan && (so.k == 0 || so.n <= so.k)) throw UsageError("schur needs --n N --k K with N > K >= 1");
            return cmd_schur(so, out);
        }
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_input, oracle_phi, budget, oracle_serial, out);
        if (examples_cmd->parsed()) {
            const auto rows = example_suite_rows(examples_serial ? Execution::serial : Execution::parallel);
            std::size_t width = 0;
            for (const auto& r : rows) width = std::max(width, r.name.size());
            bool all = true;
            for (const auto& r : rows) {
                out << (r.pass ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ')
                    << "expected: " << r.expected << " | observed: " << r.observed << "\n";
                for (const auto& d : r.detail) out << "        " << d << "\n";
                all = all && r.pass;
            }
            const auto passed = std::count_if(rows.begin(), rows.end(), [](const ExampleRow& r) { return r.pass; });
            out << passed << "/" << rows.size() << " examples behave as stated\n";
            return all ? 0 : 1;
        }
    } catch (const PolynomialLeadingCoefficient& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace phiirred
