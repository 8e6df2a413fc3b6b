#include "qent/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace qent {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(const std::string& data) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

ordered_json json_number(double x) { return ordered_json(round12(x)); }

ordered_json report_header(const std::string& command, const std::string& input_bytes) {
    ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = command;
    doc["input_digest"] = digest_hex(input_bytes);
    return doc;
}

ordered_json to_json(const CriterionReport& r) {
    ordered_json j;
    j["criterion"] = r.criterion;
    j["partition"] = r.partition;
    j["verdict"] = verdict_name(r.verdict);
    j["evidence"] = json_number(r.evidence);
    j["threshold"] = json_number(r.threshold);
    j["note"] = r.note;
    return j;
}

ordered_json to_json(const BatteryResult& r) {
    ordered_json j;
    j["verdict"] = verdict_name(r.verdict);
    j["note"] = r.note;
    j["reports"] = ordered_json::array();
    for (const CriterionReport& c : r.reports) j["reports"].push_back(to_json(c));
    return j;
}

ordered_json to_json(const MeasureValue& v) {
    ordered_json j;
    j["measure"] = v.measure;
    j["value"] = json_number(v.value);
    j["exact"] = v.exact;
    return j;
}

namespace {

ordered_json settings_json(const BellSettings& s) {
    ordered_json sites = ordered_json::array();
    for (const auto& pair : s.site) {
        ordered_json axes = ordered_json::array();
        for (const Vec3& a : pair) {
            ordered_json v = ordered_json::array();
            for (double c : a) v.push_back(json_number(c));
            axes.push_back(v);
        }
        sites.push_back(axes);
    }
    return sites;
}

}  // namespace

ordered_json to_json(const ChshAnalysis& a) {
    ordered_json j;
    j["M"] = json_number(a.M);
    j["B"] = json_number(a.B);
    j["max_value"] = json_number(a.max_value);
    j["lhv_bound"] = json_number(2.0);
    j["optimal_settings"] = settings_json(a.optimal);
    return j;
}

ordered_json to_json(const WwzbResult& r) {
    ordered_json j;
    j["lhs"] = json_number(r.lhs);
    j["bound"] = json_number(r.bound);
    j["pass"] = r.pass;
    return j;
}

ordered_json to_json(const TonerResult& r) {
    ordered_json j;
    j["vAB"] = json_number(r.vAB);
    j["vAC"] = json_number(r.vAC);
    j["sum"] = json_number(r.sum);
    j["bound"] = json_number(4.0);
    j["pass"] = r.pass;
    return j;
}

ordered_json to_json(const DistillationTrace& t) {
    ordered_json j;
    j["reached_target"] = t.reachedTarget;
    j["final_yield_estimate"] = json_number(t.finalYieldEstimate);
    j["rounds"] = ordered_json::array();
    for (const DistillationRound& r : t.rounds) {
        ordered_json rd;
        rd["F"] = json_number(r.F);
        rd["p_success"] = json_number(r.pSuccess);
        rd["surviving_fraction"] = json_number(r.survivingFraction);
        j["rounds"].push_back(rd);
    }
    return j;
}

ordered_json to_json(const TeleportationReport& r) {
    ordered_json j;
    j["resource_fraction"] = json_number(r.resourceFraction);
    j["analytic_fidelity"] = json_number(r.analyticFidelity);
    j["axial_average"] = json_number(r.axialAverage);
    j["haar_average"] = json_number(r.haarAverage);
    j["haar_samples"] = r.haarSamples;
    j["classical_bound"] = json_number(2.0 / 3.0);
    return j;
}

ordered_json to_json(const DenseCodingReport& r) {
    ordered_json j;
    j["bits"] = json_number(r.bits);
    j["max_cross_overlap"] = json_number(r.maxCrossOverlap);
    j["codewords"] = ordered_json::array();
    for (const State& s : r.encoded) {
        ordered_json amps = ordered_json::array();
        for (const cplx& z : s.psi) {
            ordered_json pair = ordered_json::array();
            pair.push_back(json_number(z.real()));
            pair.push_back(json_number(z.imag()));
            amps.push_back(pair);
        }
        j["codewords"].push_back(amps);
    }
    return j;
}

ordered_json to_json(const SwappingReport& r) {
    ordered_json j;
    j["outcome_probabilities"] = ordered_json::array();
    for (double p : r.outcomeProbabilities)
        j["outcome_probabilities"].push_back(json_number(p));
    j["corrected_fidelity"] = ordered_json::array();
    for (double f : r.correctedFidelity)
        j["corrected_fidelity"].push_back(json_number(f));
    return j;
}

std::string render_report(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace qent
