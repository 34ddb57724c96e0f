#include "cowpath/report_json.hpp"

#include <cmath>

namespace cowpath {

using nlohmann::json;

const char* tool_version() { return "1.0.0"; }

void to_json(json& j, const Direction& q) { j = q.vec().coords(); }

void to_json(json& j, const Hyperplane& h) {
    j = json{{"normal", h.normal}, {"offset", h.offset}};
}

void to_json(json& j, const CoverageReport& r) {
    j = json{{"mode", r.mode == CoverageMode::sampled ? "sampled" : "exact-low-d"},
             {"n_samples", r.n_samples},
             {"seed", r.seed},
             {"fraction_visible", r.fraction_visible},
             {"min_support_margin", r.min_support_margin},
             {"uncovered_witnesses", r.uncovered_witnesses},
             {"verdict", r.verdict}};
}

void to_json(json& j, const RatioReport& r) {
    j = json{{"unbounded", r.unbounded},
             {"grid", r.grid},
             {"seed", r.seed}};
    if (r.unbounded) {
        j["sup_ratio"] = nullptr;
    } else {
        j["sup_ratio"] = r.sup_ratio;
    }
    if (r.argmax_hyperplane) {
        j["argmax_hyperplane"] = *r.argmax_hyperplane;
    } else {
        j["argmax_hyperplane"] = nullptr;
    }
}

void to_json(json& j, const LemmaVerdict& v) {
    j = json{{"lemma_id", v.lemma_id},
             {"trials", v.trials},
             {"violations", v.violations},
             {"skipped", v.skipped},
             {"worst_margin", v.worst_margin},
             {"params", v.params},
             {"seed", v.seed}};
}

void to_json(json& j, const Milestone& m) {
    j = json{{"index", m.index},
             {"arc_time", m.arc_time},
             {"direction", m.direction},
             {"attained_norm", m.attained_norm}};
}

void to_json(json& j, const AuditReport& r) {
    j = json{{"d", r.d},
             {"tau", std::isfinite(r.tau) ? json(r.tau) : json(nullptr)},
             {"milestones", r.milestones},
             {"m", r.m},
             {"certified_lower_bound", r.certified_lower_bound},
             {"measured_length", r.measured_length},
             {"monotone_ok", r.monotone_ok}};
}

void to_json(json& j, const CorollaryVerdict& v) {
    const char* branch = nullptr;
    switch (v.branch) {
        case CorollaryBranch::reached_radius: branch = "reached-radius"; break;
        case CorollaryBranch::long_path: branch = "long-path"; break;
        case CorollaryBranch::non_covering_certificate:
            branch = "non-covering-certificate";
            break;
    }
    j = json{{"branch", branch},
             {"threshold_radius", v.threshold_radius},
             {"length_threshold", v.length_threshold},
             {"max_norm", v.max_norm},
             {"measured_length", v.measured_length},
             {"details", v.details}};
    if (v.coverage_evidence) {
        j["coverage_evidence"] = *v.coverage_evidence;
    } else {
        j["coverage_evidence"] = nullptr;
    }
}

} // namespace cowpath
