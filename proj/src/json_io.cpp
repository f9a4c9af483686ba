#include "matcon/json_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace matcon {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

void expect_keys(const Json& j, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional, const std::string& what) {
  if (!j.is_object()) fail(what + " must be a JSON object");
  for (const char* key : required)
    if (!j.contains(key)) fail(what + " is missing \"" + key + "\"");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) fail(what + " has unknown field \"" + key + "\"");
  }
}

std::int64_t integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    fail(what + " is out of range");
  return j.get<std::int64_t>();
}

const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + " must be an array");
  return j;
}

std::vector<std::int64_t> int_vector(const Json& j, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& v : array(j, what)) out.push_back(integer(v, what + " entry"));
  return out;
}

CountTable int_table(const Json& j, const std::string& what) {
  CountTable out;
  for (const auto& row : array(j, what)) out.push_back(int_vector(row, what + " row"));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Instance instance_from_json(const Json& j) {
  expect_keys(j, {"resources", "jobs", "supplies"}, {"provenance"}, "instance");
  RawInstance raw;
  const std::int64_t r = integer(j["resources"], "resources");
  if (r < INT32_MIN || r > INT32_MAX) fail("resources is out of range");
  raw.resources = static_cast<int>(r);
  for (const auto& job : array(j["jobs"], "jobs")) {
    expect_keys(job, {"p", "a"}, {}, "job");
    raw.jobs.push_back({integer(job["p"], "p"), int_vector(job["a"], "a")});
  }
  for (const auto& s : array(j["supplies"], "supplies")) {
    expect_keys(s, {"u", "b"}, {}, "supply");
    raw.supplies.push_back({integer(s["u"], "u"), int_vector(s["b"], "b")});
  }
  return validate_instance(std::move(raw));
}

Json to_json(const Instance& inst) {
  Json j;
  j["resources"] = inst.resource_count();
  j["jobs"] = Json::array();
  for (const auto& job : inst.jobs()) j["jobs"].push_back(Json{{"p", job.p}, {"a", job.a}});
  j["supplies"] = Json::array();
  for (const auto& s : inst.supplies()) j["supplies"].push_back(Json{{"u", s.u}, {"b", s.b}});
  return j;
}

Schedule schedule_from_json(const Json& j) {
  expect_keys(j, {"starts"}, {}, "schedule");
  Schedule sched;
  for (const auto& e : array(j["starts"], "starts")) {
    expect_keys(e, {"job", "start"}, {}, "start entry");
    const std::int64_t job = integer(e["job"], "job");
    if (job < INT32_MIN || job > INT32_MAX) fail("job index is out of range");
    sched.starts.push_back({static_cast<int>(job), integer(e["start"], "start")});
  }
  return sched;
}

Json to_json(const Schedule& sched) {
  Json starts = Json::array();
  for (const auto& s : sched.starts) starts.push_back(Json{{"job", s.job}, {"start", s.start}});
  return Json{{"starts", std::move(starts)}};
}

SolveResult result_from_json(const Json& j) {
  expect_keys(j, {"makespan", "front_idle", "algorithm", "schedule"}, {}, "result");
  SolveResult r;
  r.makespan = integer(j["makespan"], "makespan");
  r.front_idle = integer(j["front_idle"], "front_idle");
  if (!j["algorithm"].is_string()) fail("algorithm must be a string");
  r.algorithm = j["algorithm"].get<std::string>();
  r.schedule = schedule_from_json(j["schedule"]);
  return r;
}

Json to_json(const SolveResult& result) {
  Json j;
  j["makespan"] = result.makespan;
  j["front_idle"] = result.front_idle;
  j["algorithm"] = result.algorithm;
  j["schedule"] = to_json(result.schedule);
  return j;
}

PhaseCertificate certificate_from_json(const Json& j) {
  expect_keys(j, {"x", "x_sigma", "alpha", "d"}, {}, "certificate");
  PhaseCertificate c;
  c.x = int_table(j["x"], "x");
  c.x_sigma = int_table(j["x_sigma"], "x_sigma");
  c.alpha = int_table(j["alpha"], "alpha");
  c.d = int_vector(j["d"], "d");
  return c;
}

Json to_json(const PhaseCertificate& cert) {
  Json j;
  j["x"] = cert.x;
  j["x_sigma"] = cert.x_sigma;
  j["alpha"] = cert.alpha;
  j["d"] = cert.d;
  return j;
}

Json to_json(const GeneratedInstance& gen) {
  Json j = to_json(gen.instance);
  Json prov;
  prov["family"] = gen.provenance.family;
  prov["target_makespan"] = gen.target_makespan;
  prov["decision_meaning"] = gen.decision_meaning;
  prov["job_labels"] = gen.provenance.job_labels;
  Json supplies = Json::array();
  for (const auto& [u, label] : gen.provenance.supply_labels)
    supplies.push_back(Json{{"u", u}, {"label", label}});
  prov["supply_labels"] = std::move(supplies);
  j["provenance"] = std::move(prov);
  return j;
}

GraphInstance graph_from_json(const Json& j) {
  expect_keys(j, {"vertices", "edges"}, {}, "graph");
  GraphInstance g;
  const std::int64_t n = integer(j["vertices"], "vertices");
  if (n < 0 || n > INT32_MAX) fail("vertices is out of range");
  g.vertices = static_cast<int>(n);
  for (const auto& e : array(j["edges"], "edges")) {
    const auto ends = int_vector(e, "edge");
    if (ends.size() != 2) fail("an edge must have exactly two endpoints");
    for (auto v : ends)
      if (v < 0 || v >= n) fail("edge endpoint " + std::to_string(v) + " is out of range");
    g.edges.emplace_back(static_cast<int>(ends[0]), static_cast<int>(ends[1]));
  }
  return g;
}

}  // namespace matcon
