#include "report.hpp"

namespace fatpoints::cli {

Json class_json(const SystemP3& s) { return Json{{"degree", s.degree}, {"mults", s.mults}}; }

Json class_json(const CurveClassP3& c) { return Json{{"degree", c.degree}, {"mults", c.mults}}; }

Json class_json(const PlaneSystem& s) { return Json{{"degree", s.degree}, {"mults", s.mults}}; }

Json class_json(const QuadricSystem& q) {
  return Json{{"bidegree", Json::array({q.a, q.b})}, {"mults", q.mults}};
}

Json step_json(const ReductionStep& step) {
  Json detail = Json::object();
  switch (step.kind) {
    case StepKind::sort: detail["order"] = step.points; break;
    case StepKind::remove_plane: detail["points"] = step.points; break;
    case StepKind::cremona:
      detail["k"] = step.k;
      detail["points"] = step.points;
      break;
    case StepKind::clamp: detail["points"] = step.points; break;
    case StepKind::declare_empty: detail["reason"] = step.reason; break;
  }
  return Json{{"kind", std::string(to_string(step.kind))},
              {"before", class_json(step.before)},
              {"after", class_json(step.after)},
              {"detail", detail}};
}

Json oracle_json(const OracleResult& r, const OracleConfig& cfg) {
  return Json{{"dim", r.dim},
              {"samples", cfg.samples},
              {"samples_run", r.samples_run},
              {"primes", r.primes},
              {"rank", r.rank},
              {"rows", r.rows},
              {"cols", r.cols}};
}

Json dim_report_json(const char* command, const SystemP3& input, const DimReport& report,
                     const Json& oracle) {
  Json corrections = Json::array();
  for (const auto& term : report.correction_terms) {
    corrections.push_back({{"index", term.index}, {"t", term.t}, {"contribution", term.contribution}});
  }
  Json trace = Json::array();
  for (const auto& step : report.trace) trace.push_back(step_json(step));
  return Json{{"command", command},
              {"input", class_json(input)},
              {"result",
               {{"dim", report.dim},
                {"vdim", report.vdim},
                {"speciality", report.speciality},
                {"special", report.special},
                {"terminal", class_json(report.terminal)},
                {"correction_terms", corrections}}},
              {"trace", trace},
              {"oracle", oracle}};
}

}  // namespace fatpoints::cli
