#include "hardylab/json_io.hpp"

#include <sstream>

namespace hardylab {

Json to_json(const GroupSpec& g) {
    return Json{{"dilation_exponents", g.dilation_exponents}, {"Q", g.Q}};
}

Json to_json(const QuasiNormSpec& n) {
    return Json{{"kind", to_string(n.kind)}, {"bounding_radius", n.bounding_radius}};
}

Json to_json(const RadialGrid& g) {
    return Json{{"r_min", g.r_min()}, {"r_max", g.r_max()}, {"n_nodes", g.size()}};
}

Json to_json(const HardyParams& p) {
    return Json{{"p", p.p}, {"q", p.q}, {"alpha", p.alpha}, {"beta", p.beta},
                {"p_conj", p.p_conj}};
}

Json to_json(const SphereMeasure& s) {
    return Json{{"value", s.value},
                {"stderr", s.estimate_stderr},
                {"method", to_string(s.method)},
                {"seed", s.seed},
                {"samples", s.samples}};
}

Json to_json(const VerificationReport& r) {
    return Json{{"check", r.check},     {"passed", r.passed},
                {"value", r.value},     {"oracle", r.oracle},
                {"tolerance", r.tolerance}, {"stderr", r.stderr_},
                {"seed", r.seed},       {"details", r.details},
                {"note", r.note}};
}

Json to_json(const RatioResult& r) {
    return Json{{"lhs", r.lhs},
                {"rhs", r.rhs},
                {"ratio", r.ratio},
                {"constant", r.constant},
                {"margin", r.margin},
                {"lhs_stderr", r.lhs_stderr},
                {"rhs_stderr", r.rhs_stderr},
                {"ratio_stderr", r.ratio_stderr},
                {"seed", r.seed},
                {"warnings", r.warnings},
                {"details", r.details}};
}

Json to_json(const SharpnessReport& r) {
    Json j{{"constant", r.target_constant},
           {"ratio", r.best_ratio},
           {"attainment", r.attainment},
           {"parameter_names", r.parameter_names},
           {"best_parameters", r.best_parameters},
           {"evaluations", r.search_trace.size()},
           {"seed", r.seed}};
    if (r.oracle_value) j["oracle_value"] = *r.oracle_value;
    return j;
}

std::string trace_to_csv(const SharpnessReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "eval";
    for (const auto& n : r.parameter_names) os << "," << n;
    os << ",ratio,best_so_far\n";
    for (std::size_t i = 0; i < r.search_trace.size(); ++i) {
        const auto& e = r.search_trace[i];
        os << i;
        for (double v : e.params) os << "," << v;
        os << "," << e.ratio << "," << e.best_so_far << "\n";
    }
    return os.str();
}

} // namespace hardylab
