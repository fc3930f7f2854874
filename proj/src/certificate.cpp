#include "svsec/certificate.hpp"

#include <limits>

#include "svsec/registry.hpp"

namespace svsec {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

const char* justification_type(const Justification& j) {
    struct V {
        const char* operator()(const TerraciniJ&) { return "terracini"; }
        const char* operator()(const HoraceStepJ&) { return "horace_step"; }
        const char* operator()(const BcWindowJ&) { return "bc_window"; }
        const char* operator()(const BaseJ&) { return "base"; }
        const char* operator()(const MonotoneJ&) { return "monotone"; }
        const char* operator()(const SplittingJ&) { return "splitting"; }
        const char* operator()(const KnownDefectiveJ&) { return "known_defective"; }
        const char* operator()(const UnresolvedJ&) { return "unresolved"; }
    };
    return std::visit(V{}, j);
}

namespace {

ordered_json problem_to_json(const SecantProblem& p) {
    ordered_json j;
    j["n"] = p.n.e;
    j["d"] = p.d.e;
    j["m"] = int_to_json(p.m);
    return j;
}

SecantProblem problem_from_json(const json& j) {
    SecantProblem p;
    p.n = MultiIndex(j.at("n").get<std::vector<int>>());
    p.d = MultiIndex(j.at("d").get<std::vector<int>>());
    p.m = int_from_json(j.at("m"));
    return p;
}

ordered_json outcome_to_json(const RankOutcome& o) {
    ordered_json j;
    j["observed_rank"] = o.observed_rank;
    j["expected"] = o.expected;
    j["verdict"] = to_string(o.verdict);
    j["trials"] = o.trials;
    j["prime"] = o.prime;
    j["seed"] = o.seed;
    j["extra_primes"] = o.extra_primes;
    return j;
}

RankOutcome outcome_from_json(const json& j) {
    RankOutcome o;
    o.observed_rank = j.at("observed_rank").get<std::size_t>();
    o.expected = j.at("expected").get<std::size_t>();
    o.verdict = j.at("verdict").get<std::string>() == "certified_nondefective"
                    ? RankVerdict::CertifiedNondefective
                    : RankVerdict::RankDeficitObserved;
    o.trials = j.at("trials").get<int>();
    o.prime = j.at("prime").get<std::uint64_t>();
    o.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("extra_primes"))
        o.extra_primes = j.at("extra_primes").get<std::vector<std::uint64_t>>();
    return o;
}

struct DataWriter {
    ordered_json data = ordered_json::object();
    ordered_json side = ordered_json::object();

    void operator()(const TerraciniJ& t) {
        data = outcome_to_json(t.outcome);
        if (t.n0 >= 0) {
            data["n0"] = t.n0;
            data["t"] = int_to_json(t.t);
        }
    }
    void operator()(const HoraceStepJ& h) {
        data["pivot"] = h.pivot;
        data["s_r"] = int_to_json(h.nums.s);
        data["eps_r"] = int_to_json(h.nums.eps);
        side["s_ge_eps"] = h.s_ge_eps;
        side["d2"] = {{"lhs", int_to_json(h.d2_lhs)}, {"rhs", int_to_json(h.d2_rhs)},
                      {"holds", h.d2_holds}};
        side["lemma_regime"] = h.lemma_regime;
        if (h.lemma_regime) {
            side["a1"] = {{"lhs", int_to_json(h.a1_lhs)}, {"rhs", int_to_json(h.a1_rhs)},
                          {"holds", h.a1_holds}};
            side["a3"] = {{"lhs", int_to_json(h.a3_lhs)}, {"rhs", int_to_json(h.a3_rhs)},
                          {"holds", h.a3_holds}};
        }
    }
    void operator()(const BcWindowJ& b) {
        data["r_star_lower"] = int_to_json(b.cv.lower);
        data["r_star_upper"] = int_to_json(b.cv.upper);
        data["side"] = b.side;
        data["bound"] = int_to_json(b.bound);
    }
    void operator()(const BaseJ& b) {
        data["name"] = b.name;
        data["citation"] = b.citation;
        if (b.peel >= 0) {
            data["peel"] = b.peel;
            data["dim_x"] = b.dim_x;
            data["ineq_lhs"] = int_to_json(b.ineq_lhs);
            data["ineq_rhs"] = int_to_json(b.ineq_rhs);
            data["discharge_r"] = int_to_json(b.discharge_r);
        }
    }
    void operator()(const MonotoneJ& m) {
        data["from"] = problem_to_json(m.from);
        data["direction"] = m.direction;
    }
    void operator()(const SplittingJ& s) {
        data["triple"] = {{"n0", s.n0}, {"m", int_to_json(s.m)}, {"t", int_to_json(s.t)},
                          {"x", s.x},   {"alpha_plus_1", int_to_json(s.alpha_plus_1)}};
        data["n_prime"] = s.n_prime;
        data["m_prime"] = int_to_json(s.m_prime);
        if (!s.note.empty()) data["note"] = s.note;
    }
    void operator()(const KnownDefectiveJ& k) {
        data["name"] = k.name;
        data["citation"] = k.citation;
        if (k.evidence) data["evidence"] = outcome_to_json(*k.evidence);
    }
    void operator()(const UnresolvedJ& u) { data["reason"] = u.reason; }
};

Justification justification_from_json(const std::string& type, const json& data,
                                      const json& side) {
    if (type == "terracini") {
        TerraciniJ t;
        t.outcome = outcome_from_json(data);
        if (data.contains("n0")) {
            t.n0 = data.at("n0").get<int>();
            t.t = int_from_json(data.at("t"));
        }
        return t;
    }
    if (type == "horace_step") {
        HoraceStepJ h;
        h.pivot = data.at("pivot").get<int>();
        h.nums.s = int_from_json(data.at("s_r"));
        h.nums.eps = int_from_json(data.at("eps_r"));
        h.s_ge_eps = side.at("s_ge_eps").get<bool>();
        h.d2_lhs = int_from_json(side.at("d2").at("lhs"));
        h.d2_rhs = int_from_json(side.at("d2").at("rhs"));
        h.d2_holds = side.at("d2").at("holds").get<bool>();
        h.lemma_regime = side.at("lemma_regime").get<bool>();
        if (h.lemma_regime) {
            h.a1_lhs = int_from_json(side.at("a1").at("lhs"));
            h.a1_rhs = int_from_json(side.at("a1").at("rhs"));
            h.a1_holds = side.at("a1").at("holds").get<bool>();
            h.a3_lhs = int_from_json(side.at("a3").at("lhs"));
            h.a3_rhs = int_from_json(side.at("a3").at("rhs"));
            h.a3_holds = side.at("a3").at("holds").get<bool>();
        }
        return h;
    }
    if (type == "bc_window") {
        BcWindowJ b;
        b.cv.lower = int_from_json(data.at("r_star_lower"));
        b.cv.upper = int_from_json(data.at("r_star_upper"));
        b.side = data.at("side").get<std::string>();
        b.bound = int_from_json(data.at("bound"));
        return b;
    }
    if (type == "base") {
        BaseJ b;
        b.name = data.at("name").get<std::string>();
        b.citation = data.at("citation").get<std::string>();
        if (data.contains("peel")) {
            b.peel = data.at("peel").get<int>();
            b.dim_x = data.at("dim_x").get<int>();
            b.ineq_lhs = int_from_json(data.at("ineq_lhs"));
            b.ineq_rhs = int_from_json(data.at("ineq_rhs"));
            b.discharge_r = int_from_json(data.at("discharge_r"));
        }
        return b;
    }
    if (type == "monotone") {
        MonotoneJ m;
        m.from = problem_from_json(data.at("from"));
        m.direction = data.at("direction").get<std::string>();
        return m;
    }
    if (type == "splitting") {
        SplittingJ s;
        const json& tr = data.at("triple");
        s.n0 = tr.at("n0").get<int>();
        s.m = int_from_json(tr.at("m"));
        s.t = int_from_json(tr.at("t"));
        s.x = tr.at("x").get<int>();
        s.alpha_plus_1 = int_from_json(tr.at("alpha_plus_1"));
        s.n_prime = data.at("n_prime").get<int>();
        s.m_prime = int_from_json(data.at("m_prime"));
        if (data.contains("note")) s.note = data.at("note").get<std::string>();
        return s;
    }
    if (type == "known_defective") {
        KnownDefectiveJ k;
        k.name = data.at("name").get<std::string>();
        k.citation = data.at("citation").get<std::string>();
        if (data.contains("evidence")) k.evidence = outcome_from_json(data.at("evidence"));
        return k;
    }
    if (type == "unresolved") {
        UnresolvedJ u;
        u.reason = data.at("reason").get<std::string>();
        return u;
    }
    throw std::invalid_argument("unknown justification type: " + type);
}

CertVerdict verdict_from_string(const std::string& s) {
    if (s == "nondefective") return CertVerdict::Nondefective;
    if (s == "defective") return CertVerdict::Defective;
    if (s == "unknown") return CertVerdict::Unknown;
    throw std::invalid_argument("unknown verdict: " + s);
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const Certificate& c, bool root) {
    ordered_json j;
    if (root) j["version"] = CERT_SCHEMA_VERSION;
    j["problem"] = problem_to_json(c.problem);
    j["verdict"] = to_string(c.verdict);
    DataWriter w;
    std::visit(w, c.just);
    ordered_json just;
    just["type"] = justification_type(c.just);
    just["data"] = std::move(w.data);
    just["side_conditions"] = std::move(w.side);
    ordered_json kids = ordered_json::array();
    for (const auto& child : c.children) kids.push_back(certificate_to_json(child, false));
    just["children"] = std::move(kids);
    j["justification"] = std::move(just);
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.problem = problem_from_json(j.at("problem"));
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    const json& just = j.at("justification");
    c.just = justification_from_json(just.at("type").get<std::string>(), just.at("data"),
                                     just.at("side_conditions"));
    for (const json& kid : just.at("children")) c.children.push_back(certificate_from_json(kid));
    return c;
}

// ---------------------------------------------------------------------------
// Independent checker
// ---------------------------------------------------------------------------

namespace {

struct Checker {
    std::vector<std::string> errors;

    void fail(const Certificate& c, const std::string& msg) {
        errors.push_back("problem n=" + c.problem.n.str() + " d=" + c.problem.d.str() + " m=" +
                         c.problem.m.get_str() + " [" + justification_type(c.just) + "]: " + msg);
    }

    static std::pair<MultiIndex, MultiIndex> pivot_front(const MultiIndex& n, const MultiIndex& d,
                                                         int pivot) {
        MultiIndex na, da;
        na.e.push_back(n[pivot]);
        da.e.push_back(d[pivot]);
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (static_cast<int>(i) == pivot) continue;
            na.e.push_back(n[i]);
            da.e.push_back(d[i]);
        }
        return {na, da};
    }

    static SecantProblem drop_point_factors(MultiIndex n, MultiIndex d, Int m) {
        MultiIndex nn, dd;
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (n[i] == 0 && n.size() > 1) continue;  // a P^0 factor is a trivial tensor factor
            nn.e.push_back(n[i]);
            dd.e.push_back(d[i]);
        }
        if (nn.e.empty()) {
            nn.e.push_back(0);
            dd.e.push_back(d[0]);
        }
        return {nn, dd, m};
    }

    static SecantProblem normalized(const SecantProblem& p) {
        auto [n, d] = normalize(p.n, p.d);
        return {n, d, p.m};
    }

    // Triple claimed by a node of the splitting chain.
    static bool claimed_triple(const Certificate& c, int& n0, Int& m, Int& t) {
        if (const auto* s = std::get_if<SplittingJ>(&c.just)) {
            n0 = s->n0;
            m = s->m;
            t = s->t;
            return true;
        }
        if (const auto* tj = std::get_if<TerraciniJ>(&c.just)) {
            if (tj->n0 < 0) return false;
            n0 = tj->n0;
            m = c.problem.m;
            t = tj->t;
            return true;
        }
        return false;
    }

    void check(const Certificate& c) {
        try {
            validate_problem(c.problem);
        } catch (const std::exception& e) {
            fail(c, std::string("invalid problem: ") + e.what());
            return;
        }
        std::visit([&](const auto& j) { check_node(c, j); }, c.just);
        for (const auto& child : c.children) check(child);
    }

    void check_node(const Certificate& c, const TerraciniJ& t) {
        Int expected;
        if (t.n0 >= 0) {
            if (c.problem.n.size() < 2 || c.problem.n[0] != t.n0 || c.problem.d[0] != 1) {
                fail(c, "T-property leaf does not match its realized problem");
                return;
            }
            MultiIndex nx(std::vector<int>(c.problem.n.e.begin() + 1, c.problem.n.e.end()));
            MultiIndex dx(std::vector<int>(c.problem.d.e.begin() + 1, c.problem.d.e.end()));
            expected = t_property_expected(t.n0, nx, dx, c.problem.m, t.t);
        } else {
            expected = expected_rank(c.problem.n, c.problem.d, c.problem.m);
        }
        if (Int(static_cast<unsigned long>(t.outcome.expected)) != expected)
            fail(c, "recorded expected rank " + std::to_string(t.outcome.expected) +
                        " differs from recomputed " + expected.get_str());
        bool certified = t.outcome.certified();
        if (certified && t.outcome.observed_rank != t.outcome.expected)
            fail(c, "certified outcome with observed != expected");
        if (!certified && t.outcome.observed_rank >= t.outcome.expected)
            fail(c, "deficit outcome with observed >= expected");
        CertVerdict want = certified ? CertVerdict::Nondefective : CertVerdict::Unknown;
        if (c.verdict != want) fail(c, "verdict inconsistent with rank outcome");
        if (!c.children.empty()) fail(c, "terracini nodes are leaves");
    }

    void check_node(const Certificate& c, const HoraceStepJ& h) {
        if (c.verdict != CertVerdict::Nondefective) {
            fail(c, "horace_step nodes must conclude nondefective");
            return;
        }
        if (h.pivot < 0 || h.pivot >= static_cast<int>(c.problem.n.size())) {
            fail(c, "pivot out of range");
            return;
        }
        auto [n, d] = pivot_front(c.problem.n, c.problem.d, h.pivot);
        if (d[0] < 3) fail(c, "pivot degree below 3");
        Int r = c.problem.m;
        HoraceNumbers nums;
        try {
            nums = horace_numbers(n, d, r);
        } catch (const std::exception& e) {
            fail(c, std::string("split numbers not computable: ") + e.what());
            return;
        }
        if (nums.s != h.nums.s || nums.eps != h.nums.eps)
            fail(c, "recorded split numbers differ from recomputation");
        if (!(h.nums.s >= h.nums.eps) || !h.s_ge_eps) fail(c, "condition s_r >= eps_r not met");
        Int d2_lhs = (r - nums.s - nums.eps) * (n.sum() + 1);
        Int d2_rhs = ambient_count(n, d.reduced(2));
        if (d2_lhs != h.d2_lhs || d2_rhs != h.d2_rhs || !h.d2_holds || d2_lhs < d2_rhs)
            fail(c, "superabundance condition on the d(2) child not met");
        if (h.lemma_regime && !(h.a1_holds && h.a3_holds))
            fail(c, "appendix lemma bounds violated inside their regime");

        if (c.children.size() != 3) {
            fail(c, "horace_step needs exactly 3 children");
            return;
        }
        SecantProblem want1 = normalized(drop_point_factors(n.reduced(1), d, nums.s));
        SecantProblem want2 = normalized({n, d.reduced(1), r - nums.s});
        SecantProblem want3 = normalized({n, d.reduced(2), r - nums.s - nums.eps});
        const SecantProblem want[3] = {want1, want2, want3};
        for (int i = 0; i < 3; ++i) {
            if (!(c.children[i].problem == want[i]))
                fail(c, "child " + std::to_string(i + 1) + " problem mismatch: recorded n=" +
                            c.children[i].problem.n.str() + " d=" + c.children[i].problem.d.str() +
                            " m=" + c.children[i].problem.m.get_str());
            if (!c.children[i].nondefective())
                fail(c, "child " + std::to_string(i + 1) + " is not certified nondefective");
        }
    }

    void check_node(const Certificate& c, const BcWindowJ& b) {
        if (c.verdict != CertVerdict::Nondefective) fail(c, "bc_window concludes nondefective");
        auto cv = critical_values(c.problem.n, c.problem.d);
        if (cv.lower != b.cv.lower || cv.upper != b.cv.upper)
            fail(c, "recorded critical values differ from recomputation");
        Int x1 = c.problem.n.sum() + 1;
        if (b.side == "low") {
            if (b.bound != cv.lower - x1 || c.problem.m > b.bound)
                fail(c, "m not inside the low window");
        } else if (b.side == "high") {
            if (b.bound != cv.upper + x1 || c.problem.m < b.bound)
                fail(c, "m not inside the high window");
        } else {
            fail(c, "unknown window side " + b.side);
        }
        if (!c.children.empty()) fail(c, "bc_window nodes are leaves");
    }

    void check_node(const Certificate& c, const BaseJ& b) {
        if (c.verdict != CertVerdict::Nondefective) fail(c, "base rules conclude nondefective");
        const MultiIndex& n = c.problem.n;
        const MultiIndex& d = c.problem.d;
        if (b.name == "trivial-secant") {
            if (c.problem.m > 1) fail(c, "trivial rule applies only to m <= 1");
        } else if (b.name == "veronese-ah") {
            if (n.size() != 1) fail(c, "veronese rule needs one factor");
            else if (veronese_defective(n[0], d[0], c.problem.m))
                fail(c, "problem is an Alexander-Hirschowitz exception");
        } else if (b.name == "p1-products") {
            if (!all_at_least(n, 1) || n.sum() != static_cast<int>(n.size()))
                fail(c, "p1 rule needs all factors of dimension 1");
            else if (p1_product_defective(n, d, c.problem.m))
                fail(c, "problem is a defective P^1 product");
        } else if (b.name == "go-two-factors") {
            if (n.size() != 2 || !all_at_least(d, 3))
                fail(c, "GO rule needs two factors of degree >= 3");
        } else if (b.name == "ballico-add-factor") {
            check_ballico(c, b);
            return;
        } else {
            fail(c, "unknown base rule " + b.name);
        }
        if (!c.children.empty()) fail(c, "base rule should be a leaf");
    }

    void check_ballico(const Certificate& c, const BaseJ& b) {
        const MultiIndex& n = c.problem.n;
        const MultiIndex& d = c.problem.d;
        if (b.peel < 0 || b.peel >= static_cast<int>(n.size())) {
            fail(c, "ballico peel index out of range");
            return;
        }
        if (n[b.peel] != 1) fail(c, "peeled factor must be a P^1");
        if (d[b.peel] < 2) fail(c, "peeled factor needs degree >= 2");
        MultiIndex nx, dx;
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (static_cast<int>(i) == b.peel) continue;
            nx.e.push_back(n[i]);
            dx.e.push_back(d[i]);
        }
        if (!all_at_least(dx, 3)) fail(c, "remaining degrees must all be >= 3");
        if (nx.sum() < 3) fail(c, "dim X must be >= 3");
        if (b.dim_x != nx.sum()) fail(c, "recorded dim X differs");
        Int N = ambient_count(nx, dx);
        Int rhs = Int(nx.sum()) * Int(nx.sum());
        if (b.ineq_lhs != N || b.ineq_rhs != rhs) fail(c, "recorded inequality sides differ");
        if (!(N > rhs)) fail(c, "ambient inequality N > dim(X)^2 fails");
        Int r = floor_div(N, Int(nx.sum()));
        if (b.discharge_r != r) fail(c, "recorded discharge index differs");
        if (c.children.size() != 1) {
            fail(c, "ballico rule carries exactly one discharge child");
            return;
        }
        SecantProblem want = normalized({nx, dx, r});
        if (!(c.children[0].problem == want)) fail(c, "discharge child problem mismatch");
        if (!c.children[0].nondefective()) fail(c, "discharge child not nondefective");
    }

    void check_node(const Certificate& c, const MonotoneJ& m) {
        if (c.verdict != CertVerdict::Nondefective) fail(c, "monotone concludes nondefective");
        if (!(m.from.n == c.problem.n) || !(m.from.d == c.problem.d))
            fail(c, "monotone reduction must stay on the same variety");
        auto cv = critical_values(c.problem.n, c.problem.d);
        if (m.direction == "subabundant") {
            if (!(c.problem.m <= m.from.m && m.from.m <= cv.lower))
                fail(c, "subabundant reduction out of range");
        } else if (m.direction == "superabundant") {
            if (!(c.problem.m >= m.from.m && m.from.m >= cv.upper))
                fail(c, "superabundant reduction out of range");
        } else {
            fail(c, "unknown monotone direction");
        }
        if (c.children.size() != 1) {
            fail(c, "monotone carries exactly one child");
            return;
        }
        if (!(c.children[0].problem == m.from)) fail(c, "monotone child problem mismatch");
        if (!c.children[0].nondefective()) fail(c, "monotone child not nondefective");
    }

    void check_node(const Certificate& c, const SplittingJ& s) {
        if (c.verdict != CertVerdict::Nondefective) fail(c, "splitting concludes nondefective");
        // realized problem shape: ((n0, n), (1, d), m)
        if (c.problem.n.size() < 2 || c.problem.n[0] != s.n0 || c.problem.d[0] != 1) {
            fail(c, "splitting node does not match its realized problem");
            return;
        }
        MultiIndex nx(std::vector<int>(c.problem.n.e.begin() + 1, c.problem.n.e.end()));
        MultiIndex dx(std::vector<int>(c.problem.d.e.begin() + 1, c.problem.d.e.end()));
        if (s.x != nx.sum()) fail(c, "recorded dim X differs");
        if (s.alpha_plus_1 != ambient_count(nx, dx)) fail(c, "recorded alpha+1 differs");
        if (s.m != c.problem.m) fail(c, "triple m differs from problem m");
        if (s.n_prime < 0 || s.n_prime > s.n0 - 1) fail(c, "n' out of range");
        if (s.m_prime < 0 || s.m_prime > s.m) fail(c, "m' out of range");

        if (c.children.size() != 2) {
            fail(c, "splitting carries exactly two children");
            return;
        }
        // expected sub-triples
        int ln0 = s.n_prime;
        Int lm = s.m_prime;
        Int lt = s.t + s.m - s.m_prime;
        int rn0 = s.n0 - s.n_prime - 1;
        Int rm = s.m - s.m_prime;
        Int rt = s.t + s.m_prime;

        // row bookkeeping identity of the split, cf. the subabundance closure
        Int parent_rows = s.m * (s.n0 + s.x + 1) + s.t * (s.n0 + 1);
        Int child_rows = lm * (ln0 + s.x + 1) + lt * (ln0 + 1) + rm * (rn0 + s.x + 1) +
                         rt * (rn0 + 1);
        if (parent_rows != child_rows)
            fail(c, "split row bookkeeping identity broken");

        const int want_n0[2] = {ln0, rn0};
        const Int want_m[2] = {lm, rm};
        const Int want_t[2] = {lt, rt};
        for (int i = 0; i < 2; ++i) {
            const Certificate& child = c.children[i];
            // child realized problem must be ((child n0, n), (1, d), child m)
            if (child.problem.n.size() != nx.size() + 1 || child.problem.n[0] != want_n0[i] ||
                child.problem.d[0] != 1 ||
                !std::equal(nx.e.begin(), nx.e.end(), child.problem.n.e.begin() + 1) ||
                !std::equal(dx.e.begin(), dx.e.end(), child.problem.d.e.begin() + 1) ||
                child.problem.m != want_m[i]) {
                fail(c, "splitting child " + std::to_string(i) + " realized problem mismatch");
                continue;
            }
            int cn0;
            Int cm, ct;
            if (!claimed_triple(child, cn0, cm, ct)) {
                if (child.verdict == CertVerdict::Unknown) continue;
                fail(c, "splitting child carries no triple");
                continue;
            }
            if (cn0 != want_n0[i] || cm != want_m[i] || ct != want_t[i])
                fail(c, "child triple " + std::to_string(i) + " mismatch");
            if (!child.nondefective())
                fail(c, "splitting child " + std::to_string(i) + " not nondefective");
        }
    }

    void check_node(const Certificate& c, const KnownDefectiveJ& k) {
        if (c.verdict != CertVerdict::Defective) fail(c, "known_defective concludes defective");
        const MultiIndex& n = c.problem.n;
        bool listed = false;
        if (n.size() == 1)
            listed = veronese_defective(n[0], c.problem.d[0], c.problem.m);
        else
            listed = p1_product_defective(n, c.problem.d, c.problem.m);
        if (!listed) fail(c, "problem is not in the defective registry");
        if (k.evidence) {
            if (k.evidence->certified()) fail(c, "defective node with certifying evidence");
            if (k.evidence->observed_rank >= k.evidence->expected)
                fail(c, "evidence does not show a deficit");
        }
        if (!c.children.empty()) fail(c, "known_defective nodes are leaves");
    }

    void check_node(const Certificate& c, const UnresolvedJ&) {
        if (c.verdict != CertVerdict::Unknown) fail(c, "unresolved must stay unknown");
    }
};

}  // namespace

std::vector<std::string> verify_certificate(const Certificate& c) {
    Checker ck;
    ck.check(c);
    return ck.errors;
}

}  // namespace svsec
