#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "extremal/certificate.hpp"
#include "extremal/connectivity.hpp"
#include "extremal/dicolouring.hpp"
#include "extremal/hypergraph.hpp"
#include "extremal/instances.hpp"
#include "extremal/io.hpp"
#include "extremal/recognition.hpp"

namespace {

using nlohmann::json;
using namespace extremal;

// Exit codes: 0 ok/affirmative, 1 negative verdict, 2 usage or parse
// error, 3 budget exceeded, 4 timeout.
int exit_code_for(const Error& e) {
    switch (e.code()) {
    case Errc::BudgetExceeded: return 3;
    case Errc::Timeout: return 4;
    default: return 2;
    }
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return read_file(path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path == "-")
        std::cout << content;
    else
        write_file(out_path, content);
}

json digraph_json(const Digraph& d) {
    json arcs = json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back(json::array({u, v}));
    return {{"n", d.order()}, {"m", d.size()}, {"arcs", std::move(arcs)}};
}

struct GenSpec {
    Digraph d;
    std::optional<Certificate> cert;
};

GenSpec parse_gen_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) fail(Errc::BadParameter, "expected <family>:<params>");
    std::string family = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    auto to_int = [](const std::string& s) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            fail(Errc::BadParameter, "expected an integer, got '" + s + "'");
        }
        if (used != s.size()) fail(Errc::BadParameter, "expected an integer, got '" + s + "'");
        return value;
    };

    GenSpec out;
    Certificate cert;
    if (family == "complete") {
        cert.kind = Certificate::Kind::BaseComplete;
        cert.param = to_int(params);
    } else if (family == "wheel") {
        cert.kind = Certificate::Kind::BaseOddWheel;
        cert.param = to_int(params);
    } else if (family == "dicycle") {
        cert.kind = Certificate::Kind::BaseDirectedCycle;
        cert.param = to_int(params);
    } else if (family == "random") {
        std::vector<int> nums;
        std::istringstream in(params);
        std::string field;
        while (std::getline(in, field, ',')) nums.push_back(to_int(field));
        if (nums.size() != 3) fail(Errc::BadParameter, "random spec is random:<k>,<joins>,<seed>");
        auto member =
            random_member(nums[0], nums[1], static_cast<std::uint64_t>(nums[2]));
        out.d = std::move(member.d);
        out.cert = *member.certificate;
        return out;
    } else {
        fail(Errc::BadParameter, "unknown family '" + family + "'");
    }
    out.d = replay(cert);
    out.cert = std::move(cert);
    return out;
}

int cmd_gen(const std::string& spec, const std::string& out_path, const std::string& cert_path,
            bool as_json) {
    auto gen = parse_gen_spec(spec);
    if (!cert_path.empty()) write_file(cert_path, certificate_to_json(*gen.cert) + "\n");
    if (as_json) {
        json j = digraph_json(gen.d);
        j["certificate"] = json::parse(certificate_to_json(*gen.cert, false));
        emit(out_path, j.dump(2) + "\n");
    } else {
        emit(out_path, write_digraph(gen.d));
    }
    return 0;
}

int cmd_check(const std::string& input, int k, bool as_json) {
    auto d = parse_digraph(slurp(input));
    bool strong = d.order() > 0 && is_strong(d);
    bool biconnected = is_biconnected(d);
    bool eulerian = is_eulerian(d);
    if (d.order() > 18) fail(Errc::BudgetExceeded, "check is limited to 18 vertices");
    int lambda = d.order() >= 2 ? lambda_max(d) : 0;
    int chi = dichromatic_number(d);
    bool dicritical = chi >= 2 && is_dicritical(d, chi);
    bool extremal = strong && biconnected && lambda == k && chi == k + 1;
    if (as_json) {
        json j{{"k", k},
               {"strong", strong},
               {"biconnected", biconnected},
               {"eulerian", eulerian},
               {"lambda", lambda},
               {"chi", chi},
               {"dicritical", dicritical},
               {"extremal", extremal}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "strong:      " << (strong ? "yes" : "no") << '\n'
                  << "biconnected: " << (biconnected ? "yes" : "no") << '\n'
                  << "eulerian:    " << (eulerian ? "yes" : "no") << '\n'
                  << "lambda:      " << lambda << '\n'
                  << "chi:         " << chi << '\n'
                  << "dicritical:  " << (dicritical ? "yes" : "no") << '\n'
                  << "verdict:     " << (extremal ? "" : "NOT ") << k << "-extremal\n";
    }
    return extremal ? 0 : 1;
}

int cmd_recognize(const std::string& input, int k, double timeout_s, const std::string& cert_path,
                  bool as_json) {
    if (k < 3) fail(Errc::BadK, "recognition needs --k >= 3");
    auto d = parse_digraph(slurp(input));
    Deadline deadline;
    if (timeout_s > 0)
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(timeout_s));
    std::optional<Certificate> cert;
    try {
        cert = recognize_extremal(d, k, deadline);
    } catch (const Error& e) {
        if (e.code() != Errc::Timeout) throw;
        if (as_json)
            std::cout << json{{"timeout", true}}.dump(2) << '\n';
        else
            std::cout << "TIMEOUT\n";
        return 4;
    }
    if (!cert) {
        if (as_json)
            std::cout << json{{"extremal", false}}.dump(2) << '\n';
        else
            std::cout << "NOT-EXTREMAL\n";
        return 1;
    }
    if (!cert_path.empty()) write_file(cert_path, certificate_to_json(*cert) + "\n");
    if (as_json) {
        json j{{"extremal", true},
               {"certificate", json::parse(certificate_to_json(*cert, false))}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << certificate_to_json(*cert) << '\n';
    }
    return 0;
}

int cmd_lambda(const std::string& input, int u, int v, bool as_json) {
    auto d = parse_digraph(slurp(input));
    bool pair = u >= 0 || v >= 0;
    int value = pair ? lambda_pair(d, u, v) : lambda_max(d);
    if (as_json)
        std::cout << json{{"lambda", value}}.dump(2) << '\n';
    else
        std::cout << value << '\n';
    return 0;
}

int cmd_chroma(const std::string& input, bool as_json) {
    auto d = parse_digraph(slurp(input));
    int chi = dichromatic_number(d);
    auto phi = find_dicolouring(d, std::max(chi, 1));
    if (as_json) {
        json j{{"chi", chi}};
        if (phi) j["colouring"] = phi->colour;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << chi << '\n';
        if (phi) std::cout << write_dicolouring(*phi);
    }
    return 0;
}

int cmd_hyper(const std::string& input, bool as_json) {
    auto d = parse_digraph(slurp(input));
    auto h = dicycle_hypergraph(d);
    int chroma = hyper_chromatic_number(h);
    bool pairwise = pairwise_intersection_check(h);
    if (as_json) {
        json edges = json::array();
        for (const auto& e : h.edges()) edges.push_back(e);
        json j{{"n", h.order()},
               {"hyperedges", std::move(edges)},
               {"chromatic", chroma},
               {"pairwise_ok", pairwise}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << write_hypergraph(h) << "chromatic: " << chroma << '\n'
                  << "pairwise:  " << (pairwise ? "ok" : "violated") << '\n';
    }
    return 0;
}

int cmd_convert(const std::string& input, const std::string& to, bool as_json) {
    if (to != "dot") fail(Errc::BadParameter, "unknown target format '" + to + "'");
    auto d = parse_digraph(slurp(input));
    if (as_json)
        std::cout << json{{"dot", to_dot(d)}}.dump(2) << '\n';
    else
        std::cout << to_dot(d);
    return 0;
}

int cmd_repro(const std::string& claim, bool as_json) {
    auto r = run_repro(claim);
    if (as_json) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"ok", c.ok}});
        std::cout << json{{"claim", r.claim}, {"pass", r.pass}, {"checks", std::move(checks)}}
                         .dump(2)
                  << '\n';
    } else {
        for (const auto& c : r.checks)
            std::cout << c.name << ": expected " << c.expected << ", computed " << c.computed
                      << (c.ok ? "" : "  MISMATCH") << '\n';
        std::cout << (r.pass ? "pass" : "FAIL") << '\n';
    }
    return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-extremal digraph toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // allow global flags like --format after the subcommand
    bool as_json = false;
    app.add_flag("--format-json,--json", as_json, "machine-readable JSON output");
    // Accept `--format json` as well.
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string gen_spec, gen_out = "-", gen_cert;
    auto* gen = app.add_subcommand("gen", "generate a digraph family member");
    gen->add_option("spec", gen_spec,
                    "complete:<n> | wheel:<l> | dicycle:<n> | random:<k>,<joins>,<seed>")
        ->required();
    gen->add_option("-o,--out", gen_out, "output path ('-' = stdout)");
    gen->add_option("--cert", gen_cert, "also write the build certificate here");

    std::string check_in;
    int check_k = 3;
    auto* check = app.add_subcommand("check", "oracle check of k-extremality");
    check->add_option("file", check_in, "digraph file ('-' = stdin)")->required();
    check->add_option("--k", check_k, "target k")->required();

    std::string rec_in, rec_cert;
    int rec_k = 3;
    double rec_timeout = 0;
    auto* rec = app.add_subcommand("recognize", "structural recognition with certificate");
    rec->add_option("file", rec_in, "digraph file ('-' = stdin)")->required();
    rec->add_option("--k", rec_k, "target k (>= 3)")->required();
    rec->add_option("--timeout", rec_timeout, "wall-clock limit in seconds");
    rec->add_option("--cert", rec_cert, "also write the certificate here");

    std::string lam_in;
    std::pair<int, int> lam_pair{-1, -1};
    auto* lam = app.add_subcommand("lambda", "local arc-connectivity");
    lam->add_option("file", lam_in, "digraph file ('-' = stdin)")->required();
    lam->add_option("--pair", lam_pair, "specific ordered pair u v");

    std::string chr_in;
    auto* chr = app.add_subcommand("chroma", "dichromatic number and a witness colouring");
    chr->add_option("file", chr_in, "digraph file ('-' = stdin)")->required();

    std::string hyp_in;
    auto* hyp = app.add_subcommand("hyper", "induced-dicycle hypergraph report");
    hyp->add_option("file", hyp_in, "digraph file ('-' = stdin)")->required();

    std::string conv_in, conv_to;
    auto* conv = app.add_subcommand("convert", "format conversion");
    conv->add_option("file", conv_in, "digraph file ('-' = stdin)")->required();
    conv->add_option("--to", conv_to, "target format (dot)")->required();

    std::string repro_claim;
    auto* rep = app.add_subcommand("repro", "re-derive a registered claim");
    rep->add_option("claim", repro_claim, "claim id (see --list)");
    bool repro_list = false;
    rep->add_flag("--list", repro_list, "list registered claim ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    as_json = as_json || format == "json";

    try {
        if (gen->parsed()) return cmd_gen(gen_spec, gen_out, gen_cert, as_json);
        if (check->parsed()) return cmd_check(check_in, check_k, as_json);
        if (rec->parsed()) return cmd_recognize(rec_in, rec_k, rec_timeout, rec_cert, as_json);
        if (lam->parsed()) return cmd_lambda(lam_in, lam_pair.first, lam_pair.second, as_json);
        if (chr->parsed()) return cmd_chroma(chr_in, as_json);
        if (hyp->parsed()) return cmd_hyper(hyp_in, as_json);
        if (conv->parsed()) return cmd_convert(conv_in, conv_to, as_json);
        if (rep->parsed()) {
            if (repro_list) {
                for (const auto& c : repro_claims()) std::cout << c << '\n';
                return 0;
            }
            if (repro_claim.empty()) fail(Errc::BadParameter, "missing claim id");
            return cmd_repro(repro_claim, as_json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
