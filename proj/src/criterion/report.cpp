#include "seqhc/criterion/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace seqhc::criterion {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string verdict_label(Verdict v) {
  return v == Verdict::pass ? "pass (finite-horizon)" : to_string(v);
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

json to_json(const Sample& s) {
  json seminorms = json::array();
  for (const double p : s.seminorms) seminorms.push_back(number(p));
  json out = {{"k", s.k}, {"j", s.j}, {"x", s.x}, {"seminorms", seminorms},
              {"fnorm", number(s.fnorm)}, {"radius", number(s.radius)}, {"in_y", s.in_y},
              {"exact_zero", s.exact_zero}, {"member", s.member}, {"pass", s.pass}};
  if (s.inconclusive) out["inconclusive"] = true;
  if (!s.note.empty()) out["note"] = s.note;
  return out;
}

json to_json(const SequenceSummary& s) {
  json out = {{"j", s.j}, {"x", s.x}};
  out["contained_from"] = s.contained_from ? json(*s.contained_from) : json(nullptr);
  out["settled_from"] = s.settled_from ? json(*s.settled_from) : json(nullptr);
  out["verdict"] = to_string(s.verdict);
  return out;
}

json to_json(const ConditionReport& r) {
  json out = {{"condition", r.condition_id}, {"verdict", to_string(r.verdict)},
              {"label", verdict_label(r.verdict)}};
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  json samples = json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  out["samples"] = std::move(samples);
  if (!r.sequences.empty()) {
    json seqs = json::array();
    for (const auto& s : r.sequences) seqs.push_back(to_json(s));
    out["sequences"] = std::move(seqs);
  }
  if (!r.details.empty()) out["details"] = r.details;
  return out;
}

std::string emit_convergence_table(std::span<const ConditionReport> reports, std::size_t horizon) {
  std::ostringstream os;
  os << "condition,k,j,x";
  for (std::size_t n = 1; n <= horizon; ++n) os << ",seminorm_" << n;
  os << ",fnorm,member,pass\n";
  for (const auto& r : reports) {
    for (const auto& s : r.samples) {
      os << r.condition_id << ',' << s.k << ',' << s.j << ',' << s.x;
      for (std::size_t n = 0; n < horizon; ++n) {
        os << ',';
        if (n < s.seminorms.size()) os << format_number(s.seminorms[n]);
      }
      os << ',' << format_number(s.fnorm) << ',' << (s.member ? 1 : 0) << ',' << (s.pass ? 1 : 0) << '\n';
    }
  }
  return os.str();
}

std::string emit_convergence_table(const ConditionReport& report, std::size_t horizon) {
  return emit_convergence_table(std::span<const ConditionReport>(&report, 1), horizon);
}

}  // namespace seqhc::criterion
