#include "farey/report_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>

namespace farey {

namespace {

std::string float_str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* precision_name(Precision p) {
  return p == Precision::Extended ? "extended" : "double";
}

const char* scheme_name(DilationScheme s) {
  switch (s) {
    case DilationScheme::OneSided: return "one_sided";
    case DilationScheme::Central: return "central";
    case DilationScheme::Richardson: return "richardson";
  }
  return "?";
}

}  // namespace

void write_step_csv(std::ostream& out, const StepFunction& step) {
  out << "breakpoint_num,breakpoint_den,value_num,value_den,value_float\n";
  for (std::size_t i = 0; i < step.piece_count(); ++i) {
    const Rational& b = step.breakpoint(i);
    const Rational& v = step.value(i);
    out << b.num().get_str() << ',' << b.den().get_str() << ','
        << v.num().get_str() << ',' << v.den().get_str() << ','
        << float_str(v.to_double()) << '\n';
  }
}

nlohmann::json to_json(const ConvergenceReport& report) {
  nlohmann::json grid = {{"start", report.grid.start.str()},
                         {"stop", report.grid.stop.str()},
                         {"count", report.grid.count}};
  nlohmann::json argmax = nlohmann::json::array();
  for (const Rational& r : report.argmax_points) argmax.push_back(r.str());
  return {{"experiment", report.experiment},
          {"grid", grid},
          {"orders", report.orders},
          {"sup_errors", report.sup_errors},
          {"argmax", argmax},
          {"precision", precision_name(report.precision)},
          {"timestamp", iso8601_utc_now()}};
}

nlohmann::json to_json(const VerificationResult& result) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : result.violations) {
    violations.push_back({{"kind", v.kind},
                          {"order", v.order},
                          {"point", v.point.str()},
                          {"margin", v.margin.str()}});
  }
  nlohmann::json witness;
  if (result.witness) {
    witness = {{"order", result.witness->order},
               {"point", result.witness->point.str()},
               {"margin", result.witness->margin.str()},
               {"margin_float", result.witness->margin_float}};
  }
  return {{"suite", result.suite},
          {"n_max", result.n_max},
          {"checked_orders", {result.order_lo, result.order_hi}},
          {"breakpoint_count", result.breakpoint_count},
          {"violations", violations},
          {"witness", witness},
          {"justification", result.justification},
          {"timestamp", iso8601_utc_now()}};
}

nlohmann::json to_json(const MinFReport& report) {
  return {{"experiment", "min_f"},
          {"order", report.order},
          {"value", report.value.str()},
          {"value_float", report.value_float},
          {"argmin", report.argmin.str()},
          {"gap_to_one_minus_log2", report.gap},
          {"timestamp", iso8601_utc_now()}};
}

nlohmann::json to_json(const DilationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"label", row.label},
                    {"x", row.x},
                    {"computed", row.computed},
                    {"expected", row.expected},
                    {"abs_error", row.abs_error},
                    {"rel_error", row.rel_error}});
  }
  return {{"check", report.check},
          {"scheme", scheme_name(report.params.scheme)},
          {"h", report.params.h},
          {"rows", rows},
          {"max_abs_error", report.max_abs_error},
          {"max_rel_error", report.max_rel_error},
          {"timestamp", iso8601_utc_now()}};
}

std::string iso8601_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace farey
