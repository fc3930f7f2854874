// Command-line front end: queries, certifications, scans, JSON emission.
//
// Exit codes: 0 = a verdict was produced (including known_defective and
// rank-deficit reports), 2 = unknown / not verified, 1 = usage or input
// error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "svsec/horace.hpp"
#include "svsec/inequalities.hpp"
#include "svsec/splitting.hpp"

using namespace svsec;
using nlohmann::ordered_json;

namespace {

#ifndef SVSEC_DEFAULT_DATA_DIR
#define SVSEC_DEFAULT_DATA_DIR "data/appendix"
#endif

struct CommonOpts {
    std::string n_str, d_str, m_str, t_str = "0";
    int n0 = -1;
    std::uint64_t prime = MERSENNE31;
    std::uint64_t seed = 0;
    int trials = 3;
    std::size_t cap = 10'000'000;
    std::string format = "json";
};

MultiIndex parse_tuple(const std::string& s, const std::string& flag) {
    MultiIndex out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(part, &pos);
            if (pos != part.size()) throw std::invalid_argument(part);
            out.e.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "expected a comma-separated integer list");
        }
    }
    if (out.e.empty()) throw CLI::ValidationError(flag, "empty tuple");
    return out;
}

Int parse_big(const std::string& s, const std::string& flag) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected an integer");
    }
}

ScanBox parse_box(const std::string& s, ScanBox box) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto eq = part.find('=');
        auto dots = part.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq)
            throw CLI::ValidationError("--box", "expected k=a..b,n=a..b,d=a..b");
        std::string key = part.substr(0, eq);
        int lo = std::stoi(part.substr(eq + 1, dots - eq - 1));
        int hi = std::stoi(part.substr(dots + 2));
        if (key == "k") {
            box.k_min = lo;
            box.k_max = hi;
        } else if (key == "n") {
            box.n_min = lo;
            box.n_max = hi;
        } else if (key == "d") {
            box.d_min = lo;
            box.d_max = hi;
        } else {
            throw CLI::ValidationError("--box", "unknown range key " + key);
        }
    }
    return box;
}

void add_tuple_flags(CLI::App* cmd, CommonOpts& o, bool need_m) {
    cmd->add_option("-n", o.n_str, "factor dimensions, e.g. 2,2,2")->required();
    cmd->add_option("-d", o.d_str, "factor degrees, e.g. 3,3,3")->required();
    auto* m = cmd->add_option("-m", o.m_str, "secant index");
    if (need_m) m->required();
}

void add_oracle_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--prime", o.prime, "prime modulus for rank computations");
    cmd->add_option("--seed", o.seed, "seed for all sampling");
    cmd->add_option("--trials", o.trials, "rank trials per prime");
    cmd->add_option("--cap", o.cap, "matrix entry cap");
}

OracleOptions oracle_options(const CommonOpts& o) {
    OracleOptions opt;
    opt.prime = o.prime;
    opt.seed = o.seed;
    opt.trials = o.trials;
    opt.matrix_cap = o.cap;
    return opt;
}

void emit(const CommonOpts& o, const ordered_json& doc, const std::string& text) {
    if (o.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

ordered_json outcome_json(const RankOutcome& out) {
    ordered_json j;
    j["observed_rank"] = out.observed_rank;
    j["expected"] = out.expected;
    j["verdict"] = to_string(out.verdict);
    j["trials"] = out.trials;
    j["prime"] = out.prime;
    j["seed"] = out.seed;
    j["extra_primes"] = out.extra_primes;
    return j;
}

std::string data_dir_default() {
    if (const char* env = std::getenv("SVSEC_DATA_DIR")) return env;
    return SVSEC_DEFAULT_DATA_DIR;
}

// --- certificate cache -----------------------------------------------------

std::string cache_key(const SecantProblem& p, const std::string& tag, const CommonOpts& o) {
    std::string key = "n";
    for (std::size_t i = 0; i < p.n.size(); ++i) key += (i ? "_" : "") + std::to_string(p.n[i]);
    key += "-d";
    for (std::size_t i = 0; i < p.d.size(); ++i) key += (i ? "_" : "") + std::to_string(p.d[i]);
    key += "-" + tag;
    key += "-p" + std::to_string(o.prime) + "-s" + std::to_string(o.seed) + "-t" +
           std::to_string(o.trials);
    return key;
}

std::optional<ordered_json> cache_load(const std::string& key) {
    const char* dir = std::getenv("SVSEC_CACHE_DIR");
    if (!dir) return std::nullopt;
    std::ifstream is(std::string(dir) + "/" + key + ".json");
    if (!is) return std::nullopt;
    try {
        ordered_json j = ordered_json::parse(is);
        return j;
    } catch (...) {
        return std::nullopt;
    }
}

void cache_store(const std::string& key, const ordered_json& doc) {
    const char* dir = std::getenv("SVSEC_CACHE_DIR");
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream os(std::string(dir) + "/" + key + ".json");
    if (os) os << doc.dump(2) << "\n";
}

int verdict_exit(CertVerdict v) { return v == CertVerdict::Unknown ? 2 : 0; }

std::string render_certificate_text(const Certificate& c, int indent = 0) {
    std::string pad(indent * 2, ' ');
    std::string s = pad + "sigma_" + c.problem.m.get_str() + " of SV n=" + c.problem.n.str() +
                    " d=" + c.problem.d.str() + ": " + to_string(c.verdict) + " [" +
                    justification_type(c.just) + "]\n";
    for (const auto& child : c.children) s += render_certificate_text(child, indent + 1);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifier for (non-)defectivity of secant varieties of Segre-Veronese "
                 "varieties"};
    app.require_subcommand(1);
    CommonOpts o;

    // expected ---------------------------------------------------------------
    auto* cmd_expected = app.add_subcommand("expected", "ambient count, expected rank, abundance");
    add_tuple_flags(cmd_expected, o, true);
    cmd_expected->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    // critical ---------------------------------------------------------------
    auto* cmd_critical = app.add_subcommand("critical", "critical values r_* and r^*");
    add_tuple_flags(cmd_critical, o, false);
    cmd_critical->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    // terracini ---------------------------------------------------------------
    auto* cmd_terr = app.add_subcommand("terracini", "exact rank experiment over F_p");
    add_tuple_flags(cmd_terr, o, true);
    cmd_terr->add_option("--t", o.t_str, "extra V (x) w' spaces (needs d_1 = 1 or --n0)");
    cmd_terr->add_option("--n0", o.n0, "dimension of an extra degree-1 factor (property T)");
    add_oracle_flags(cmd_terr, o);
    std::string dump_matrix;
    cmd_terr->add_option("--dump-matrix", dump_matrix, "write the first trial matrix as SMS text");
    cmd_terr->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    // certify ------------------------------------------------------------------
    auto* cmd_certify = app.add_subcommand("certify", "certificate tree for (n, d, m)");
    add_tuple_flags(cmd_certify, o, false);
    add_oracle_flags(cmd_certify, o);
    cmd_certify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    // split ---------------------------------------------------------------------
    auto* cmd_split = app.add_subcommand("split", "property-T certificate for P^n0 x SV_n^d");
    add_tuple_flags(cmd_split, o, true);
    cmd_split->add_option("--n0", o.n0, "dimension of the degree-1 factor")->required();
    cmd_split->add_option("--t", o.t_str, "extra V (x) w' spaces");
    add_oracle_flags(cmd_split, o);
    cmd_split->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    // thresholds -----------------------------------------------------------------
    auto* cmd_thresh = app.add_subcommand("thresholds",
                                          "certified ranges and identifiability bounds");
    add_tuple_flags(cmd_thresh, o, false);
    cmd_thresh->add_option("--n0", o.n0, "dimension of the degree-1 factor");
    cmd_thresh->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    // scan --------------------------------------------------------------------
    auto* cmd_scan = app.add_subcommand("scan", "exhaustive scan of a numeric lemma");
    std::string lemma;
    std::string box_str;
    cmd_scan->add_option("lemma", lemma, "A1, A2, A3 or ineq31")->required();
    cmd_scan->add_option("--box", box_str, "ranges, e.g. k=3..5,n=2..6,d=3..5");
    cmd_scan->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    // verify-appendix ------------------------------------------------------------
    auto* cmd_va = app.add_subcommand("verify-appendix",
                                      "reproduce every printed expansion and sign claim");
    std::string data_dir = data_dir_default();
    cmd_va->add_option("--data-dir", data_dir, "directory with the expected coefficient tables");
    std::string va_box_str;
    cmd_va->add_option("--box", va_box_str, "override the lemma scan box");
    cmd_va->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_expected)) {
            MultiIndex n = parse_tuple(o.n_str, "-n");
            MultiIndex d = parse_tuple(o.d_str, "-d");
            Int m = parse_big(o.m_str, "-m");
            validate_problem({n, d, m});
            Int N = ambient_count(n, d);
            Int er = expected_rank(n, d, m);
            AbundanceClass ab = abundance(n, d, m);
            ordered_json j;
            j["N"] = int_to_json(N);
            j["expected_rank"] = int_to_json(er);
            j["abundance"] = to_string(ab);
            emit(o, j,
                 "N = " + N.get_str() + "\nexpected_rank = " + er.get_str() +
                     " (projective dimension " + Int(er - 1).get_str() + ")\nabundance = " +
                     to_string(ab) + "\n");
            return 0;
        }

        if (app.got_subcommand(cmd_critical)) {
            MultiIndex n = parse_tuple(o.n_str, "-n");
            MultiIndex d = parse_tuple(o.d_str, "-d");
            validate_tuples(n, d);
            Int N = ambient_count(n, d);
            CriticalValues cv = critical_values(n, d);
            ordered_json j;
            j["N"] = int_to_json(N);
            j["r_star_lower"] = int_to_json(cv.lower);
            j["r_star_upper"] = int_to_json(cv.upper);
            emit(o, j,
                 "N = " + N.get_str() + "\nr_* = " + cv.lower.get_str() + "\nr^* = " +
                     cv.upper.get_str() + "\n");
            return 0;
        }

        if (app.got_subcommand(cmd_terr)) {
            MultiIndex n = parse_tuple(o.n_str, "-n");
            MultiIndex d = parse_tuple(o.d_str, "-d");
            Int m = parse_big(o.m_str, "-m");
            Int t = parse_big(o.t_str, "--t");
            OracleOptions opt = oracle_options(o);
            RankOutcome out;
            if (o.n0 >= 0)
                out = check_T_property(o.n0, n, d, m, t, opt);
            else if (t > 0)
                out = check_T_property(n[0], MultiIndex(std::vector<int>(n.e.begin() + 1,
                                                                         n.e.end())),
                                       MultiIndex(std::vector<int>(d.e.begin() + 1, d.e.end())),
                                       m, t, opt);
            else
                out = check_nondefective(n, d, m, opt);
            if (!dump_matrix.empty()) {
                MultiIndex nr = n, dr = d;
                if (o.n0 >= 0) {
                    nr.e.insert(nr.e.begin(), o.n0);
                    dr.e.insert(dr.e.begin(), 1);
                }
                PrimeField F(opt.prime);
                FpMatrix M = terracini_matrix(nr, dr, static_cast<std::size_t>(to_u64(m)),
                                              static_cast<std::size_t>(to_u64(t)), F,
                                              absorb_seed(opt.seed, 0), opt.matrix_cap);
                std::ofstream os(dump_matrix);
                write_sms(M, os);
            }
            emit(o, outcome_json(out),
                 std::string(to_string(out.verdict)) + ": rank " +
                     std::to_string(out.observed_rank) + " / " + std::to_string(out.expected) +
                     "\n");
            return 0;
        }

        if (app.got_subcommand(cmd_certify)) {
            MultiIndex n = parse_tuple(o.n_str, "-n");
            MultiIndex d = parse_tuple(o.d_str, "-d");
            CertifyConfig cfg;
            cfg.oracle = oracle_options(o);
            auto [ns, ds] = normalize(n, d);

            if (!o.m_str.empty()) {
                Int m = parse_big(o.m_str, "-m");
                std::string key = cache_key({ns, ds, m}, "m" + m.get_str(), o);
                if (auto cached = cache_load(key)) {
                    Certificate cert = certificate_from_json(*cached);
                    if (verify_certificate(cert).empty()) {
                        emit(o, *cached, render_certificate_text(cert));
                        return verdict_exit(cert.verdict);
                    }
                }
                Certificate cert = certify(n, d, m, cfg);
                ordered_json j = certificate_to_json(cert);
                cache_store(key, j);
                emit(o, j, render_certificate_text(cert));
                return verdict_exit(cert.verdict);
            }

            // no -m: certify both critical values
            std::string key = cache_key({ns, ds, 0}, "crit", o);
            if (auto cached = cache_load(key)) {
                try {
                    Certificate lo = certificate_from_json(cached->at("lower"));
                    Certificate hi = certificate_from_json(cached->at("upper"));
                    if (verify_certificate(lo).empty() && verify_certificate(hi).empty()) {
                        emit(o, *cached,
                             render_certificate_text(lo) + render_certificate_text(hi));
                        return verdict_exit(lo.verdict) == 0 && verdict_exit(hi.verdict) == 0
                                   ? 0
                                   : 2;
                    }
                } catch (...) {
                }
            }
            CriticalCertificates cc = theorem11_schedule(n, d, cfg);
            ordered_json j;
            j["version"] = CERT_SCHEMA_VERSION;
            j["problem"] = {{"n", ns.e}, {"d", ds.e}};
            j["critical_values"] = {{"lower", int_to_json(cc.cv.lower)},
                                    {"upper", int_to_json(cc.cv.upper)}};
            CertVerdict combined =
                cc.lower.verdict == cc.upper.verdict ? cc.lower.verdict : CertVerdict::Unknown;
            if (cc.lower.verdict == CertVerdict::Defective ||
                cc.upper.verdict == CertVerdict::Defective)
                combined = CertVerdict::Defective;
            j["verdict"] = to_string(combined);
            j["lower"] = certificate_to_json(cc.lower);
            j["upper"] = certificate_to_json(cc.upper);
            cache_store(key, j);
            emit(o, j, render_certificate_text(cc.lower) + render_certificate_text(cc.upper));
            return verdict_exit(combined);
        }

        if (app.got_subcommand(cmd_split)) {
            MultiIndex n = parse_tuple(o.n_str, "-n");
            MultiIndex d = parse_tuple(o.d_str, "-d");
            Int m = parse_big(o.m_str, "-m");
            Int t = parse_big(o.t_str, "--t");
            CertifyConfig cfg;
            cfg.oracle = oracle_options(o);
            Certificate cert = certify_T(o.n0, n, d, m, t, cfg);
            emit(o, certificate_to_json(cert), render_certificate_text(cert));
            return verdict_exit(cert.verdict);
        }

        if (app.got_subcommand(cmd_thresh)) {
            MultiIndex n = parse_tuple(o.n_str, "-n");
            MultiIndex d = parse_tuple(o.d_str, "-d");
            validate_tuples(n, d);
            ordered_json j;
            std::string text;
            if (o.n0 >= 0) {
                Int N = ambient_count(n, d);
                Thresholds a = thresholds(o.n0, n.sum(), N);
                auto [lo, hi] = theorem12_range(o.n0, n, d);
                Int ident = identifiability_bound(n, d, o.n0);
                j["n0"] = o.n0;
                j["a_star_lower"] = int_to_json(a.lower);
                j["a_star_upper"] = int_to_json(a.upper);
                j["m_low"] = int_to_json(lo);
                j["m_high"] = int_to_json(hi);
                j["identifiable_up_to"] = int_to_json(ident - 1);
                j["identifiability_citation"] = CITE_IDENT;
                text = "a_* = " + a.lower.get_str() + ", a^* = " + a.upper.get_str() +
                       "\ncertified m <= " + lo.get_str() + " and m >= " + hi.get_str() +
                       "\ngenerically " + Int(ident - 1).get_str() + "-identifiable by " +
                       CITE_IDENT + "\n";
            } else {
                CriticalValues cv = critical_values(n, d);
                Int ident = identifiability_bound(n, d);
                j["r_star_lower"] = int_to_json(cv.lower);
                j["r_star_upper"] = int_to_json(cv.upper);
                j["identifiable_up_to"] = int_to_json(ident - 1);
                j["identifiability_citation"] = CITE_IDENT;
                text = "r_* = " + cv.lower.get_str() + ", r^* = " + cv.upper.get_str() +
                       "\ngenerically " + Int(ident - 1).get_str() + "-identifiable by " +
                       CITE_IDENT + "\n";
            }
            emit(o, j, text);
            return 0;
        }

        if (app.got_subcommand(cmd_scan)) {
            ScanBox box = default_box(lemma);
            if (!box_str.empty()) box = parse_box(box_str, box);
            ScanReport rep = scan_lemma(lemma, box);
            ordered_json j;
            j["lemma"] = rep.lemma;
            j["box"] = {{"k", {rep.box.k_min, rep.box.k_max}},
                        {"n", {rep.box.n_min, rep.box.n_max}},
                        {"d", {rep.box.d_min, rep.box.d_max}}};
            j["instances"] = rep.instances;
            ordered_json ces = ordered_json::array();
            for (const auto& ce : rep.counterexamples)
                ces.push_back({{"n", ce.n.e},
                               {"d", ce.d.e},
                               {"r", int_to_json(ce.r)},
                               {"detail", ce.detail}});
            j["counterexamples"] = ces;
            std::string text = rep.lemma + ": " + std::to_string(rep.instances) +
                               " instances, " + std::to_string(rep.counterexamples.size()) +
                               " counterexamples\n";
            emit(o, j, text);
            return rep.clean() ? 0 : 2;
        }

        if (app.got_subcommand(cmd_va)) {
            std::optional<ScanBox> box;
            if (!va_box_str.empty()) box = parse_box(va_box_str, ScanBox{});
            AppendixReport rep = verify_appendix(data_dir, box);
            ordered_json j = ordered_json::array();
            std::string text;
            for (const auto& c : rep.checks) {
                j.push_back({{"id", c.id}, {"what", c.what}, {"pass", c.pass},
                             {"detail", c.detail}});
                text += std::string(c.pass ? "[ pass ] " : "[ FAIL ] ") + c.id + ": " + c.what +
                        (c.detail.empty() ? "" : "  -- " + c.detail) + "\n";
            }
            emit(o, j, text);
            return rep.ok() ? 0 : 2;
        }
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
