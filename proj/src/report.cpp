#include "qh/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "qh/e8limit.hpp"
#include "qh/normalform.hpp"

namespace qh {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

std::string status_of(const VerifyResult& r) {
    if (r.ok) return "ok";
    const std::string& d = r.detail;
    auto starts = [&](const char* p) { return d.rfind(p, 0) == 0; };
    if (r.fail_kind == "BranchMismatch" || starts("BranchMismatch"))
        return "branch-mismatch";
    if (starts("ScaleNotConstant")) return "scale-not-constant";
    if (starts("ClaimMismatch") || starts("SlotInconsistent"))
        return "shape-mismatch";
    return "error";
}

std::string witness_of(const CaseSpec& c, const VerifyResult& r) {
    std::string w;
    for (auto& gs : c.gauges) {
        if (!w.empty()) w += " | ";
        w += (gs.kind == GaugeStep::Rational ? "rational(" : "pochhammer(") +
             gs.param.str() + ")";
    }
    RatFn one(1L);
    if (r.ok && !r.power_witness.eq(one)) {
        if (!w.empty()) w += " | ";
        w += "power(" + r.power_witness.str() + ")";
    }
    return w;
}

CaseReport run_registry_case(const CaseSpec& c, const RunConfig& cfg) {
    CaseReport rep;
    rep.id = c.id;
    auto t0 = Clock::now();
    if (cfg.symbolic) {
        VerifyResult r = verify_case(c, nullptr);
        rep.status = status_of(r);
        rep.accessory = r.E_derived.str();
        rep.gauge_witness = witness_of(c, r);
        if (!r.ok) rep.detail = r.fail_kind + ": " + r.detail;
    } else {
        Sampler smp(cfg.seed);
        for (int s = 0; s < cfg.seeds; ++s) {
            VerifyResult r;
            bool sampled = false;
            for (int attempt = 0; attempt < 20 && !sampled; ++attempt) {
                ParamBinding b = smp.sample(family_d5());
                r = verify_case(c, &b);
                sampled = r.fail_kind != "DenominatorVanishes";
            }
            if (!sampled) {
                rep.status = "error";
                rep.detail = "binding resampling exhausted";
                break;
            }
            if (s == 0) {
                rep.accessory = r.E_derived.str();
                rep.gauge_witness = witness_of(c, r);
            }
            rep.status = status_of(r);
            if (!r.ok) {
                rep.detail = r.fail_kind + ": " + r.detail;
                break;
            }
        }
    }
    rep.millis = ms_since(t0);
    return rep;
}

CaseReport run_theorem_case(const std::string& id, const RunConfig& cfg) {
    CaseReport rep;
    rep.id = id;
    auto t0 = Clock::now();
    rep.status = "ok";
    rep.gauge_witness = "rational((z-q*u1)*(u1*z-h1)/z)";
    Sampler smp(cfg.seed);
    try {
        for (int s = 0; s < cfg.seeds; ++s) {
            E8LimitInput in;
            in.binding = e8_sample_binding(smp);
            in.truncation = cfg.truncation;
            if (id == "e8:thm31") {
                LimitTheoremReport r = check_theorem31(in);
                if (s == 0) rep.accessory = r.residualC0Prime.str();
                if (!r.ok()) {
                    rep.status = "shape-mismatch";
                    rep.detail = "limit-coefficient identity failed";
                    break;
                }
            } else {
                if (!check_theorem32_rvd(in)) {
                    rep.status = "shape-mismatch";
                    rep.detail = "operator dictionary equivalence failed";
                    break;
                }
            }
        }
    } catch (const Error& e) {
        rep.status = "error";
        rep.detail = std::string(e.kind) + ": " + e.what();
    }
    rep.millis = ms_since(t0);
    return rep;
}

}  // namespace

std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (auto& c : all_cases()) ids.push_back(c.id);
    ids.push_back("e8:thm31");
    ids.push_back("e8:thm32");
    return ids;
}

bool glob_match(const std::string& pattern, const std::string& s) {
    size_t p = 0, i = 0, star = std::string::npos, mark = 0;
    while (i < s.size()) {
        if (p < pattern.size() &&
            (pattern[p] == '?' || pattern[p] == s[i])) {
            ++p, ++i;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = i;
        } else if (star != std::string::npos) {
            p = star + 1;
            i = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

CaseReport run_case(const std::string& id, const RunConfig& cfg) {
    if (id == "e8:thm31" || id == "e8:thm32") return run_theorem_case(id, cfg);
    const CaseSpec* c = find_case(id);
    if (!c) throw Error("UnknownCase", "no registry case named " + id);
    return run_registry_case(*c, cfg);
}

SuiteReport run_suite(const RunConfig& cfg) {
    SuiteReport suite;
    suite.seed = cfg.seed;
    suite.mode = cfg.symbolic ? "symbolic" : "specialized";
    for (const std::string& id : registry_ids()) {
        if (!glob_match(cfg.cases, id)) continue;
        CaseReport r = run_case(id, cfg);
        ++suite.total;
        ++(r.status == "ok" ? suite.ok : suite.failed);
        suite.cases.push_back(std::move(r));
    }
    return suite;
}

std::string emit_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = {{"total", r.total},
                  {"ok", r.ok},
                  {"failed", r.failed},
                  {"seed", r.seed},
                  {"mode", r.mode}};
    j["cases"] = nlohmann::ordered_json::array();
    for (auto& c : r.cases) {
        nlohmann::ordered_json e{{"id", c.id},
                                 {"status", c.status},
                                 {"accessory", c.accessory},
                                 {"gauge_witness", c.gauge_witness},
                                 {"millis", c.millis}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["cases"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string emit_markdown(const SuiteReport& r) {
    std::ostringstream os;
    os << "# Verification report\n\n"
       << "mode: " << r.mode << ", seed: " << r.seed << " — " << r.ok << "/"
       << r.total << " ok, " << r.failed << " failed\n\n"
       << "| case | status | accessory | gauge witness | ms |\n"
       << "|------|--------|-----------|---------------|----|\n";
    for (auto& c : r.cases)
        os << "| " << c.id << " | " << c.status << " | " << c.accessory
           << " | " << c.gauge_witness << " | " << c.millis << " |\n";
    return os.str();
}

std::string registry_listing() {
    std::ostringstream os;
    for (auto& c : all_cases()) {
        os << c.id << "  ";
        os << (c.kind == NormalKind::Deg2   ? "degree-2"
               : c.kind == NormalKind::Deg3 ? "degree-3"
                                            : "degree-4");
        if (c.is_chart)
            os << "  chart f=" << c.chart.f_expr.str()
               << " g=" << c.chart.g_expr.str();
        else
            os << "  substitution f=" << c.f_value.str();
        for (auto& gs : c.gauges)
            os << (gs.kind == GaugeStep::Rational ? "  rational(" : "  pochhammer(")
               << gs.param.str() << ")";
        os << "\n";
    }
    os << "e8:thm31  limit-equation coefficient identities\n";
    os << "e8:thm32  operator dictionary equivalence\n";
    return os.str();
}

}  // namespace qh
