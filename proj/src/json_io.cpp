#include "deo/json_io.hpp"

#include <sstream>

#include "deo/errors.hpp"

namespace deo {

namespace {

Json rational_json(const Rational& q) { return {{"exact", to_string(q)}, {"value", q.get_d()}}; }

Json samples_json(const std::vector<CrossCheckSample>& samples) {
  Json arr = Json::array();
  for (const auto& s : samples) {
    Json row = {{"family", s.family}, {"k", s.k}, {"t", s.t}};
    if (!s.error.empty()) {
      row["error"] = s.error;
    } else {
      row["exact"] = s.exact;
      row["numeric"] = s.numeric;
      row["scale"] = s.scale;
      row["abs_dev"] = s.abs_dev;
      row["rel_dev"] = s.rel_dev;
      row["pass"] = s.pass;
    }
    arr.push_back(std::move(row));
  }
  return arr;
}

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("plan JSON: missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("plan JSON: bad '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const DecompositionPlan& plan) {
  Json terms = Json::array();
  for (const auto& t : plan.terms) {
    terms.push_back({{"binom", t.binom},
                     {"prefactor", to_string(t.prefactor)},
                     {"family", t.family.name()},
                     {"k", t.order},
                     {"operand_deriv", t.operand_deriv},
                     {"cofactor_power", t.cofactor_power},
                     {"cofactor_deriv", t.cofactor_deriv},
                     {"subplan", t.subplan ? to_json(*t.subplan) : Json(nullptr)}});
  }
  return {{"n", plan.n}, {"v", plan.v}, {"terms", terms}};
}

DecompositionPlan plan_from_json(const Json& j) {
  DecompositionPlan plan;
  plan.n = required<int>(j, "n");
  plan.v = required<int>(j, "v");
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw InvalidInput("plan JSON: 'terms' must be an array");
  for (const auto& tj : terms) {
    PlanTerm t;
    t.binom = required<std::int64_t>(tj, "binom");
    t.prefactor = parse_rational(required<std::string>(tj, "prefactor"));
    t.family = OperatorFamily::parse(required<std::string>(tj, "family"));
    t.order = required<int>(tj, "k");
    t.operand_deriv = required<int>(tj, "operand_deriv");
    t.cofactor_power = required<int>(tj, "cofactor_power");
    t.cofactor_deriv = required<int>(tj, "cofactor_deriv");
    if (tj.contains("subplan") && !tj.at("subplan").is_null())
      t.subplan = std::make_shared<const DecompositionPlan>(plan_from_json(tj.at("subplan")));
    plan.terms.push_back(std::move(t));
  }
  return plan;
}

Json to_json(const MembershipReport& r) {
  Json plus = Json::object(), minus = Json::object();
  for (const auto& [k, v] : r.psi_plus_nonzero) plus[std::to_string(k)] = v;
  for (const auto& [k, v] : r.psi_minus_nonzero) minus[std::to_string(k)] = v;
  return {{"k_window", {r.k_lo, r.k_hi}},
          {"psi_plus_nonzero", plus},
          {"psi_minus_nonzero", minus},
          {"verdict", r.verdict}};
}

MembershipReport membership_from_json(const Json& j) {
  MembershipReport r;
  auto window = required<std::vector<int>>(j, "k_window");
  if (window.size() != 2) throw InvalidInput("membership JSON: k_window needs two entries");
  r.k_lo = window[0];
  r.k_hi = window[1];
  for (const auto& [k, v] : j.at("psi_plus_nonzero").items()) r.psi_plus_nonzero[std::stoi(k)] = v.get<bool>();
  for (const auto& [k, v] : j.at("psi_minus_nonzero").items()) r.psi_minus_nonzero[std::stoi(k)] = v.get<bool>();
  r.verdict = required<bool>(j, "verdict");
  return r;
}

Json to_json(const ClosedFormValue& v) { return {{"exact", v.str()}, {"value", v.value()}}; }

Json to_json(const TaylorReport& r) {
  Json coeffs = Json::array();
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
    Json c = to_json(r.coeffs[k]);
    c["k"] = k;
    coeffs.push_back(std::move(c));
  }
  Json ratios = Json::array();
  for (const auto& e : r.ratio_seq)
    ratios.push_back({{"p", e.p}, {"value", e.value ? Json(*e.value) : Json(nullptr)},
                      {"zero_denominator", !e.value.has_value()}});
  Json sums = Json::array();
  for (std::size_t k = 0; k < r.partial_sums.size(); ++k)
    sums.push_back({{"k", k}, {"partial_sum", r.partial_sums[k]}, {"error", r.errors[k]}});
  return {{"a", rational_json(r.a)},
          {"tau0", rational_json(r.tau0)},
          {"tau", rational_json(r.tau)},
          {"K", r.K},
          {"coeffs", coeffs},
          {"routes_agree", r.routes_agree},
          {"exact_energy", to_json(r.exact_energy)},
          {"partial_sums", sums},
          {"final_error", r.final_error()},
          {"ratio_seq", ratios},
          {"bound_violations", r.bound_violations},
          {"passed", r.passed()}};
}

Json to_json(const CosExampleReport& r) {
  Json derivs = Json::array();
  for (const auto& d : r.derivatives)
    derivs.push_back({{"p", d.p}, {"exact", to_string(d.exact)}, {"matches_pattern", d.matches},
                      {"periodic", d.periodic}});
  Json bounds = Json::array();
  for (const auto& b : r.bounds)
    bounds.push_back({{"p", b.p}, {"max_abs", b.max_abs}, {"bound", b.bound}, {"parity_bound", b.parity_bound},
                      {"printed_bound", b.printed_bound}, {"holds", b.holds}});
  Json ratios = Json::array();
  for (const auto& x : r.ratios)
    ratios.push_back({{"p", x.p}, {"factor", x.factor.str()}, {"value", x.value}, {"expected", x.expected},
                      {"matches", x.matches}});
  Json dist = Json::array();
  for (const auto& d : r.distances)
    dist.push_back({{"p", d.p}, {"distance", d.distance}, {"telescoped", d.telescoped},
                    {"displayed", d.displayed}, {"displayed_bound", d.displayed_bound}, {"matches", d.matches}});
  return {{"A", rational_json(r.A)},
          {"tau0", rational_json(r.tau0)},
          {"tau", rational_json(r.tau)},
          {"Kmax", r.Kmax},
          {"pattern_ok", r.pattern_ok},
          {"periodicity_ok", r.periodicity_ok},
          {"bounds_ok", r.bounds_ok},
          {"ratio_ok", r.ratio_ok},
          {"ratio_trend_ok", r.ratio_trend_ok},
          {"distance_ok", r.distance_ok},
          {"derivatives", derivs},
          {"bounds", bounds},
          {"ratios", ratios},
          {"distances", dist},
          {"taylor", to_json(r.taylor)},
          {"discrepancy_notes", r.discrepancy_notes},
          {"passed", r.passed()}};
}

Json to_json(const CrossCheckReport& r) {
  Json worst = samples_json({r.worst}).at(0);
  return {{"function", r.function},
          {"k_window", {r.k_lo, r.k_hi}},
          {"grid",
           {{"t_lo", static_cast<double>(r.grid.t_lo)},
            {"t_hi", static_cast<double>(r.grid.t_hi)},
            {"n_points", r.grid.n_points},
            {"h", static_cast<double>(r.grid.h())},
            {"tail_start", static_cast<double>(r.grid.tail_start)}}},
          {"tol", r.tol},
          {"abs_floor", r.abs_floor},
          {"tail_bound", r.tail_bound},
          {"evaluated", r.evaluated},
          {"failed", r.failed},
          {"out_of_range", r.out_of_range},
          {"domain_skipped", r.domain_skipped},
          {"max_abs_dev", r.max_abs_dev},
          {"max_rel_dev", r.max_rel_dev},
          {"worst", worst},
          {"samples", samples_json(r.samples)},
          {"passed", r.passed}};
}

Json to_json(const SuiteReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups)
    groups.push_back({{"name", g.name}, {"pass", g.pass}, {"fail", g.fail}, {"skip", g.skip},
                      {"failures", g.failures}});
  Json members = Json::array();
  for (const auto& m : r.membership) {
    Json row = {{"function", m.function}};
    if (m.report)
      row["report"] = to_json(*m.report);
    else
      row["error"] = m.error;
    members.push_back(std::move(row));
  }
  return {{"groups", groups}, {"membership", members}, {"passed", r.passed()}};
}

std::string taylor_csv(const TaylorReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "k,partial_sum,error\n";
  for (std::size_t k = 0; k < r.partial_sums.size(); ++k) os << k << ',' << r.partial_sums[k] << ',' << r.errors[k] << '\n';
  return os.str();
}

}  // namespace deo
