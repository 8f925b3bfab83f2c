// Command-line front end: enumeration, map evaluation, verification suites and
// rank-2 SVG rendering for the Anderson/zeta map library.
//
// Exit codes: 0 success, 1 verification or precondition failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "weylcat/weylcat.hpp"

using namespace weylcat;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t enumeration_bound() {
    if (const char* env = std::getenv("WEYL_CATALAN_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 100000;
}

RootSystem parse_type(const std::string& s) {
    try {
        return build_root_system(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

json parse_json(const std::string& s, const char* what) {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded()) throw UsageError(std::string("invalid JSON for ") + what);
    return j;
}

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << j.dump() << '\n';
}

json report_to_json(const VerificationReport& rep) {
    json params = json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    return json{{"suite", rep.suite},
                {"params", params},
                {"total", rep.total},
                {"mismatches", rep.mismatches},
                {"elapsed_ms", rep.elapsed_ms},
                {"pass", rep.pass()}};
}

void print_report_line(const VerificationReport& rep, bool to_stdout) {
    std::ostringstream os;
    os << rep.suite;
    for (const auto& [k, v] : rep.params) os << ' ' << k << '=' << v;
    os << ": " << rep.total << " cases, " << rep.mismatches.size() << " mismatches, "
       << rep.elapsed_ms << " ms [" << (rep.pass() ? "PASS" : "FAIL") << ']';
    (to_stdout ? std::cout : std::cerr) << os.str() << '\n';
}

int cmd_info(const std::string& type_str, bool pretty) {
    RootSystem rs = parse_type(type_str);
    if (pretty) {
        std::cout << "type:                " << rs.type().to_string() << '\n'
                  << "rank:                " << rs.rank() << '\n'
                  << "roots:               " << rs.roots().size() << '\n'
                  << "coxeter number:      " << rs.coxeter_number() << '\n'
                  << "highest root:        " << format_window(rs.theta().coeffs) << '\n'
                  << "index of connection: " << rs.index_of_connection() << '\n'
                  << "weyl group order:    " << rs.weyl_order() << '\n'
                  << "positive roots:      ";
        for (std::size_t i = 0; i < rs.num_positive(); ++i)
            std::cout << (i ? " " : "") << format_window(rs.positive_roots()[i].coeffs);
        std::cout << '\n';
        return 0;
    }
    json roots = json::array();
    for (const RootVec& a : rs.roots()) roots.push_back(root_to_json(a));
    json out{{"type", rs.type().to_string()},
             {"rank", rs.rank()},
             {"num_roots", rs.roots().size()},
             {"coxeter_number", rs.coxeter_number()},
             {"highest_root", root_to_json(rs.theta())},
             {"index_of_connection", rs.index_of_connection()},
             {"weyl_order", rs.weyl_order()},
             {"roots", roots}};
    emit(out, false);
    return 0;
}

int cmd_enumerate(const std::string& type_str, std::optional<Int> p, std::optional<int> m,
                  bool pretty) {
    RootSystem rs = parse_type(type_str);
    if (p.has_value() == m.has_value())
        throw UsageError("enumerate: specify exactly one of -p, -m");
    Int pp = p ? *p : static_cast<Int>(*m) * rs.coxeter_number() + 1;
    std::vector<AffineWeylElement> stable = enumerate_p_stable(rs, pp, enumeration_bound());
    json elems = json::array();
    for (const AffineWeylElement& a : stable) {
        json e = element_to_json(rs, a);
        if (rs.type().family == 'A') e["window"] = from_affine_weyl(rs, a).window();
        elems.push_back(e);
    }
    emit(json{{"type", rs.type().to_string()},
              {"p", pp},
              {"count", stable.size()},
              {"elements", elems}},
         pretty);
    return 0;
}

AffineWeylElement parse_element_arg(const RootSystem& rs, const std::string& element_json,
                                    const std::string& window_str) {
    if (!element_json.empty() && !window_str.empty())
        throw UsageError("give either --element or --window, not both");
    if (!element_json.empty()) {
        try {
            return element_from_json(rs, parse_json(element_json, "--element"));
        } catch (const json::exception&) {
            throw UsageError("malformed element JSON");
        }
    }
    if (!window_str.empty()) {
        if (rs.type().family != 'A') throw UsageError("--window requires a type A system");
        try {
            return to_affine_weyl(rs, AffinePermutation(parse_window(window_str)));
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("missing --element or --window");
}

int cmd_map(const std::string& name, const std::string& type_str, std::optional<Int> p,
            std::optional<int> m, const std::string& window_str, const std::string& pf_str,
            const std::string& torus_str, const std::string& element_str,
            const std::string& park_str, bool pretty) {
    if (name == "gmv") {
        if (window_str.empty() || !p) throw UsageError("gmv needs --window and -p");
        AffinePermutation window = [&] {
            try {
                return AffinePermutation(parse_window(window_str));
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
        }();
        VertLabelledPath v = anderson_gmv(window, *p);
        json out = labelled_path_to_json(v);
        out["pf"] = format_pf(labelled_to_pf(v).values);
        emit(out, pretty);
        return 0;
    }
    if (name == "zeta-hl") {
        if (pf_str.empty()) throw UsageError("zeta-hl needs --pf");
        IntVec f;
        try {
            f = parse_pf(pf_str);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        Int n = static_cast<Int>(f.size());
        if (p && *p != n + 1) throw std::invalid_argument("zeta-hl is defined for p = n+1 only");
        DiagLabelledPath d = zeta_haglund_loehr(pf_to_labelled(ParkingFunction(n, n + 1, f)));
        emit(diag_path_to_json(d), pretty);
        return 0;
    }

    if (type_str.empty()) throw UsageError("map " + name + " needs --type");
    RootSystem rs = parse_type(type_str);

    if (name == "anderson") {
        if (!p) throw UsageError("anderson needs -p");
        AffineWeylElement a = parse_element_arg(rs, element_str, window_str);
        emit(torus_to_json(AndersonMap(rs, *p, enumeration_bound())(a)), pretty);
        return 0;
    }
    if (name == "chi") {
        if (torus_str.empty()) throw UsageError("chi needs --torus");
        TorusElement t = torus_from_json(parse_json(torus_str, "--torus"));
        json out{{"pf", format_pf(chi_map(rs, t).values)}};
        emit(out, pretty);
        return 0;
    }
    if (name == "zeta") {
        if (torus_str.empty() || !m) throw UsageError("zeta needs --torus and -m");
        TorusElement t = torus_from_json(parse_json(torus_str, "--torus"));
        ParkClass cls = ZetaMap(rs, *m, enumeration_bound()).zeta(t);
        emit(park_to_json(rs, cls), pretty);
        return 0;
    }
    if (name == "theta") {
        if (park_str.empty()) throw UsageError("theta needs --park");
        ParkClass cls = park_from_json(rs, parse_json(park_str, "--park"));
        AffineWeylElement a = theta_map(rs, cls);
        json out = element_to_json(rs, a);
        if (rs.type().family == 'A') out["window"] = from_affine_weyl(rs, a).window();
        emit(out, pretty);
        return 0;
    }
    throw UsageError("unknown map: " + name);
}

int cmd_verify(const std::string& suite, std::optional<Int> n, std::optional<Int> p,
               std::optional<int> m, const std::string& type_str, Int box, bool pretty) {
    std::vector<VerificationReport> reports;
    auto counts_for = [&](const RootSystem& rs, Int pp) {
        reports.push_back(verify_counts(rs, pp));
    };
    if (suite == "gmv") {
        if (!n || !p) throw UsageError("verify gmv needs -n and -p");
        reports.push_back(verify_gmv(*n, *p));
    } else if (suite == "zeta") {
        if (!n) throw UsageError("verify zeta needs -n");
        reports.push_back(verify_zeta_equivalence(*n));
    } else if (suite == "counts") {
        if (type_str.empty()) throw UsageError("verify counts needs --type");
        RootSystem rs = parse_type(type_str);
        if (p.has_value() == m.has_value())
            throw UsageError("verify counts: specify exactly one of -p, -m");
        counts_for(rs, p ? *p : static_cast<Int>(*m) * rs.coxeter_number() + 1);
    } else if (suite == "stab") {
        if (type_str.empty() || !p) throw UsageError("verify stab needs --type and -p");
        reports.push_back(verify_stabilizers(parse_type(type_str), *p));
    } else if (suite == "minimal") {
        if (type_str.empty() || !m) throw UsageError("verify minimal needs --type and -m");
        reports.push_back(verify_minimal_alcoves(parse_type(type_str), *m, box));
    } else if (suite == "all") {
        RootSystem a2 = build_root_system("A2");
        RootSystem b2 = build_root_system("B2");
        RootSystem g2 = build_root_system("G2");
        RootSystem a3 = build_root_system("A3");
        for (Int pp : {2, 4, 5, 7}) counts_for(a2, pp);
        for (Int pp : {3, 5}) counts_for(b2, pp);
        for (Int pp : {5, 7}) counts_for(g2, pp);
        for (Int pp : {3, 5, 7}) counts_for(a3, pp);
        for (int mm : {1, 2}) counts_for(a2, mm * a2.coxeter_number() + 1);
        counts_for(b2, b2.coxeter_number() + 1);
        reports.push_back(verify_gmv(3, 4));
        reports.push_back(verify_gmv(3, 5));
        reports.push_back(verify_gmv(4, 5));
        reports.push_back(verify_gmv(4, 7));
        for (Int nn : {3, 4, 5}) reports.push_back(verify_zeta_equivalence(nn));
        reports.push_back(verify_stabilizers(a2, 4));
        reports.push_back(verify_stabilizers(a2, 7));
        reports.push_back(verify_stabilizers(b2, 5));
        reports.push_back(verify_minimal_alcoves(a2, 1, 3));
        reports.push_back(verify_minimal_alcoves(a2, 2, 3));
    } else {
        throw UsageError("unknown suite: " + suite);
    }

    bool all_pass = true;
    json out = json::array();
    for (const VerificationReport& rep : reports) {
        all_pass = all_pass && rep.pass();
        out.push_back(report_to_json(rep));
        print_report_line(rep, pretty);
    }
    if (!pretty) emit(out, false);
    return all_pass ? 0 : 1;
}

int cmd_render(const std::string& type_str, std::optional<Int> p, std::optional<int> m,
               const std::string& out_path, bool lattice) {
    RootSystem rs = parse_type(type_str);
    if (rs.rank() != 2) throw UsageError("render: rank-2 types only");
    if (p.has_value() == m.has_value())
        throw UsageError("render: specify exactly one of -p, -m");
    RenderOptions opt;
    if (p) opt.p = *p;
    if (m) opt.m = *m;
    opt.lattice = lattice;
    std::string svg = render_svg(rs, opt);
    if (out_path.empty() || out_path == "-") {
        std::cout << svg;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file " + out_path);
        file << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic Anderson and zeta maps for crystallographic root systems"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "pretty"}));

    std::string type_str, window_str, pf_str, torus_str, element_str, park_str, out_path,
        map_name, suite, info_type;
    std::optional<Int> p_opt, n_opt;
    std::optional<int> m_opt;
    Int box = 3;
    bool lattice = false;

    CLI::App* info = app.add_subcommand("info", "root system data for a Cartan type");
    info->add_option("type", info_type, "Cartan type, e.g. A2")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list the p-stable elements");
    enumerate->add_option("--type", type_str)->required();
    enumerate->add_option("-p", p_opt);
    enumerate->add_option("-m", m_opt);

    CLI::App* map_cmd = app.add_subcommand("map", "evaluate one of the bijections");
    map_cmd->add_option("name", map_name, "anderson | gmv | zeta | zeta-hl | chi | theta")
        ->required();
    map_cmd->add_option("--type", type_str);
    map_cmd->add_option("-p", p_opt);
    map_cmd->add_option("-m", m_opt);
    map_cmd->add_option("--window", window_str);
    map_cmd->add_option("--pf", pf_str);
    map_cmd->add_option("--torus", torus_str);
    map_cmd->add_option("--element", element_str);
    map_cmd->add_option("--park", park_str);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "gmv | zeta | counts | stab | minimal | all")->required();
    verify->add_option("-n", n_opt);
    verify->add_option("-p", p_opt);
    verify->add_option("-m", m_opt);
    verify->add_option("--type", type_str);
    verify->add_option("--box", box);

    CLI::App* render = app.add_subcommand("render", "rank-2 SVG picture");
    render->add_option("--type", type_str)->required();
    render->add_option("-p", p_opt);
    render->add_option("-m", m_opt);
    render->add_option("-o", out_path);
    render->add_flag("--lattice", lattice);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    bool pretty = format == "pretty";
    try {
        if (*info) return cmd_info(info_type, pretty);
        if (*enumerate) return cmd_enumerate(type_str, p_opt, m_opt, pretty);
        if (*map_cmd)
            return cmd_map(map_name, type_str, p_opt, m_opt, window_str, pf_str, torus_str,
                           element_str, park_str, pretty);
        if (*verify) return cmd_verify(suite, n_opt, p_opt, m_opt, type_str, box, pretty);
        if (*render) return cmd_render(type_str, p_opt, m_opt, out_path, lattice);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
