#include "rootgeom/serialize.hpp"

namespace rootgeom {

namespace {

Json vectors(const std::vector<QVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& q : v.coords()) out.push_back(to_string(q));
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const RootSystem& system) {
  return Json{{"type", to_string(system.type)},
              {"rank", system.type.rank()},
              {"ambient_dim", system.ambient_dim},
              {"gram", to_json(system.gram.matrix())},
              {"roots", vectors(system.roots)},
              {"simple_roots", vectors(system.simple_roots)},
              {"weight_basis", vectors(system.weight_lattice.basis())}};
}

Json to_json(const StabilityReport& report) {
  Json shells = Json::array();
  for (const auto& s : report.shells) {
    shells.push_back({{"norm", to_string(s.norm)},
                      {"lattice_count", s.lattice_count},
                      {"root_count", s.root_count},
                      {"determining", s.determining}});
  }
  Json out{{"type", to_string(report.type)},
           {"verdict", to_string(report.verdict)},
           {"shells", shells},
           {"witnesses", vectors(report.witnesses)},
           {"scope", "weight_lattice"}};
  if (report.diophantine_unstable) out["diophantine_unstable"] = *report.diophantine_unstable;
  return out;
}

Json to_json(const ChamberIndexRecord& record) {
  return Json{{"sub", to_string(record.sub)},
              {"sup", to_string(record.sup)},
              {"w_sup", record.w_sup},
              {"w_sub", record.w_sub},
              {"index", record.index},
              {"dynkin_bound", record.dynkin_bound},
              {"exceeds_bound", record.exceeds_bound}};
}

Json to_json(const ViolationCertificate& cert, const ChamberIndexRecord& record) {
  return Json{{"pair", {{"sub", to_string(cert.sub)}, {"sup", to_string(cert.sup)}}},
              {"alpha", to_json(cert.alpha)},
              {"r", to_json(cert.r)},
              {"image", to_json(cert.image)},
              {"index_record", to_json(record)}};
}

Json to_json(const SweepResult& sweep, int max_rank) {
  Json reports = Json::array();
  for (const auto& [type, report] : sweep.reports) reports.push_back(to_json(report));
  Json flagged = Json::array();
  for (const auto& t : sweep.flagged) flagged.push_back(to_string(t));
  return Json{{"max_rank", max_rank},
              {"reports", reports},
              {"flagged", flagged},
              {"matches_theorem6", sweep.matches_theorem6}};
}

QVec qvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error("qvec_from_json: expected an array of fraction strings");
  QVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw Error("qvec_from_json: expected fraction strings");
    v[i] = parse_rational(j[i].get<std::string>());
  }
  return v;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rootgeom
