#include "egcert/json.hpp"

#include <stdexcept>

namespace egcert {
namespace {

Json label_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

std::vector<std::pair<std::string, std::string>> label_pairs_from(const Json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Json& p : j) out.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  return out;
}

Json counts(const std::map<std::string, long>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

}  // namespace

Json to_json(const Witness& w) {
  return Json{{"kind", std::string(to_string(w.kind))}, {"vertices", w.vertices}};
}

Witness witness_from_json(const Json& j) {
  const auto kind = parse_witness_kind(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown witness kind " + j.at("kind").get<std::string>());
  return Witness{*kind, j.at("vertices").get<std::vector<int>>()};
}

Json to_json(const ExtractionTrace& t) {
  Json events = Json::array();
  for (const TraceEvent& ev : t.events) {
    Json bind = Json::object();
    for (const auto& [label, v] : ev.bind) bind[label] = v;
    events.push_back(Json{{"claim", ev.claim},
                          {"case", ev.case_id},
                          {"bind", bind},
                          {"adj", label_pairs(ev.adjacent)},
                          {"nonadj", label_pairs(ev.nonadjacent)}});
  }
  return Json{{"events", events}};
}

ExtractionTrace trace_from_json(const Json& j) {
  ExtractionTrace t;
  for (const Json& e : j.at("events")) {
    TraceEvent ev;
    ev.claim = e.at("claim").get<std::string>();
    ev.case_id = e.at("case").get<std::string>();
    for (const auto& [label, v] : e.at("bind").items()) ev.bind.emplace_back(label, v.get<int>());
    if (e.contains("adj")) ev.adjacent = label_pairs_from(e.at("adj"));
    if (e.contains("nonadj")) ev.nonadjacent = label_pairs_from(e.at("nonadj"));
    t.events.push_back(std::move(ev));
  }
  return t;
}

Json to_json(const Certificate& c, bool with_trace) {
  Json out{{"witness", to_json(c.witness)}};
  if (with_trace) out["trace"] = to_json(c.trace);
  return out;
}

Json to_json(const CheckOutput& c, bool with_traces) {
  Json out;
  out["n"] = c.n;
  out["m"] = c.m;
  out["min_degree"] = c.min_degree;
  out["max_degree"] = c.max_degree;
  if (c.complete) out["connectivity"] = "complete";
  else out["connectivity"] = c.connectivity;
  out["p5_free"] = c.p5_free;
  out["p8_free"] = c.p8_free;
  out["cycle_spectrum"] = Json{{"max_length", c.spectrum_bound}, {"lengths", c.cycle_spectrum}};
  if (c.power_of_two)
    out["power_of_two_cycle"] = Json{{"length", 1 << c.power_of_two->exponent}, {"vertices", c.power_of_two->cycle.vertices}};
  else
    out["power_of_two_cycle"] = nullptr;
  Json witnesses = Json::object();
  if (c.p5_certificate) witnesses["p5"] = to_json(*c.p5_certificate, with_traces);
  if (c.p8_certificate) witnesses["p8"] = to_json(*c.p8_certificate, with_traces);
  out["witnesses"] = witnesses;
  return out;
}

Json to_json(const SweepReport& r) {
  Json checks = Json::array();
  for (SweepCheck c : r.config.checks) checks.push_back(std::string(to_string(c)));
  Json config{{"source", r.config.source == SweepSource::kInternal ? "internal" : "graph6-stream"},
              {"min_degree", r.config.min_degree},
              {"checks", checks}};
  if (r.config.source == SweepSource::kInternal) {
    config["n_min"] = r.config.n_min;
    config["n_max"] = r.config.n_max;
  }
  Json orders = Json::array();
  for (const OrderReport& o : r.orders) {
    Json failures = Json::array();
    for (const SweepFailure& f : o.failures) failures.push_back(Json{{"graph6", f.graph6}, {"reason", f.reason}});
    Json entry{{"n", o.n},
               {"graphs_total", o.graphs_total},
               {"graphs_connected_min_deg", o.graphs_connected_min_deg},
               {"c4_free_count", o.c4_free_count},
               {"p5_free_count", o.p5_free_count},
               {"p8_free_count", o.p8_free_count},
               {"power_of_two_cycle_count", o.power_of_two_cycle_count},
               {"witnesses_by_kind", Json{{"theorem1", counts(o.theorem1_witnesses)},
                                          {"theorem2", counts(o.theorem2_witnesses)}}},
               {"failures", failures}};
    if (r.config.timing) entry["wall_time_seconds"] = o.wall_time_seconds;
    orders.push_back(entry);
  }
  return Json{{"config", config}, {"orders", orders}, {"failure_count", r.failure_count()}};
}

}  // namespace egcert
