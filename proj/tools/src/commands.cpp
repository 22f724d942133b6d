#include "commands.hpp"

#include <sstream>

#include "gsp4/endoscopy.hpp"
#include "gsp4/involutions.hpp"
#include "gsp4/oracle.hpp"
#include "gsp4/params.hpp"
#include "gsp4/restriction.hpp"
#include "gsp4/weyl.hpp"

namespace gsp4::cli {

using nlohmann::json;

void Report::check(const std::string& name, bool ok, const std::string& detail) {
  add(std::string(ok ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : ": " + detail));
  records.push_back({{"check", name}, {"pass", ok}, {"detail", detail}});
  if (!ok) failed = true;
}

void Report::append(const Report& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  for (const auto& r : other.records) records.push_back(r);
  failed = failed || other.failed;
}

std::string Report::text() const {
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

json Report::to_json(std::uint64_t seed) const {
  return {{"seed", std::to_string(seed)}, {"pass", !failed}, {"records", records}};
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string describe_group(const TwoGroup& g) {
  TwoGroup free(g.labels(), {});
  std::vector<std::string> rels;
  for (Mask r : g.relations()) rels.push_back(free.describe(r));
  return "order " + std::to_string(g.order()) + " labels {" + join(g.labels(), ",") + "} relations {" +
         join(rels, ",") + "}";
}

std::string type_tag(ArthurType t) { return to_string(t) + " (" + remark_letter(t) + ")"; }

std::string field(const json& req, const char* key) {
  if (!req.contains(key) || !req.at(key).is_string())
    throw InputError(std::string("request needs a string field '") + key + "'");
  return req.at(key).get<std::string>();
}

GroupTag target_of(const json& req) {
  if (!req.contains("target")) return GroupTag::gspin_odd(2);
  try {
    return parse_group(field(req, "target"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

const FormalParameter& parameter_of(const Scenario& s, const json& req) {
  const std::string id = field(req, "parameter");
  auto it = s.parameters.find(id);
  if (it == s.parameters.end()) throw InputError("undeclared parameter " + id);
  return it->second;
}

const CuspidalHandle& cuspidal_of(const Scenario& s, const json& req) {
  const std::string id = field(req, "cuspidal");
  auto it = s.cuspidals.find(id);
  if (it == s.cuspidals.end()) throw InputError("undeclared cuspidal " + id);
  return it->second;
}

// Classification tag when psi is a GSpin5 parameter, empty otherwise.
std::string tag_if_gspin5(const FormalParameter& psi, const GroupTag& target) {
  if (target.kind != GroupKind::GSpinOdd || target.n != 2) return "";
  try {
    return " [" + type_tag(classify(psi).type) + "]";
  } catch (const std::invalid_argument&) {
    return "";
  }
}

void do_classify(const Scenario& s, const json& req, Report& r) {
  const std::string id = field(req, "parameter");
  const FormalParameter& psi = parameter_of(s, req);
  Classification c;
  try {
    c = classify(psi);
  } catch (const std::invalid_argument& e) {
    throw InputError("classify " + id + ": " + e.what());
  }
  r.add("classify " + id + ": " + type_tag(c.type) + " S_psi " + describe_group(c.s_group) + " s_psi " +
        c.s_group.describe(c.s_psi) + " eps " + describe(c.epsilon));
  r.records.push_back({{"request", "classify"},
                       {"parameter", id},
                       {"type", to_string(c.type)},
                       {"remark", std::string(1, remark_letter(c.type))},
                       {"s_group_order", c.s_group.order()},
                       {"s_psi", c.s_group.describe(c.s_psi)},
                       {"epsilon", describe(c.epsilon)}});
}

void do_membership(const Scenario& s, const json& req, Report& r) {
  const std::string id = field(req, "parameter");
  const GroupTag target = target_of(req);
  Membership m;
  try {
    m = psi_disc_membership(s.characters, parameter_of(s, req), target);
  } catch (const std::invalid_argument& e) {
    throw InputError("membership " + id + ": " + e.what());
  }
  r.add("membership " + id + " in " + target.name() + ": " + (m.member ? "yes" : "no") +
        (m.reason.empty() ? "" : " (" + m.reason + ")"));
  r.records.push_back(
      {{"request", "membership"}, {"parameter", id}, {"target", target.name()}, {"member", m.member}, {"reason", m.reason}});
}

std::vector<LocalDatum> local_characters(const Scenario& s, const std::string& local_id, const std::string& param_id,
                                         const TwoGroup& g) {
  std::vector<LocalDatum> out;
  if (local_id.empty()) return out;
  auto it = s.local_data.find(local_id);
  if (it == s.local_data.end()) throw InputError("undeclared local data " + local_id);
  if (it->second.parameter != param_id)
    throw InputError("local data " + local_id + " belongs to " + it->second.parameter);
  for (const auto& [place, signs] : it->second.places) {
    LocalDatum d{place, trivial_character(g)};
    for (const auto& [label, v] : signs) {
      try {
        d.character.values[g.index(label)] = v;
      } catch (const std::out_of_range&) {
        throw InputError("local data " + local_id + ": " + label + " is not a label of S_psi");
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

void do_multiplicity(const Scenario& s, const json& req, Report& r) {
  const std::string id = field(req, "parameter");
  const GroupTag target = target_of(req);
  const FormalParameter& psi = parameter_of(s, req);
  const std::string local_id = req.contains("local") ? field(req, "local") : "";
  TwoGroup g;
  TwoGroupCharacter eps;
  try {
    g = s_group_table(psi, target);
    eps = epsilon_table(psi, target);
  } catch (const std::invalid_argument& e) {
    throw InputError("multiplicity " + id + ": " + e.what());
  }
  auto local = local_characters(s, local_id, id, g);
  TwoGroupCharacter prod = trivial_character(g);
  int m = 0;
  try {
    m = multiplicity(psi, target, local);
  } catch (const std::invalid_argument& e) {
    throw InputError("multiplicity " + id + ": " + e.what());
  }
  for (const auto& l : local) prod = multiply(prod, l.character);
  r.add("multiplicity " + id + " on " + target.name() + tag_if_gspin5(psi, target) + ": places " +
        std::to_string(local.size()) + " product " + describe(prod) + " eps " + describe(eps) + " m_psi " +
        std::to_string(m_psi(psi, target)) + " -> " + std::to_string(m));
  r.records.push_back({{"request", "multiplicity"},
                       {"parameter", id},
                       {"target", target.name()},
                       {"product", describe(prod)},
                       {"epsilon", describe(eps)},
                       {"m_psi", m_psi(psi, target)},
                       {"multiplicity", m}});
}

void do_oracle(const Scenario& s, const json& req, std::uint64_t seed, Report& r) {
  const std::string id = field(req, "parameter");
  const GroupTag target = target_of(req);
  const FormalParameter& psi = parameter_of(s, req);
  TwoGroup table;
  Mask table_s = 0;
  try {
    table = s_group_table(psi, target);
    table_s = s_psi_mask(psi);
  } catch (const std::invalid_argument& e) {
    throw InputError("oracle " + id + ": " + e.what());
  }
  OracleAgreement a = compare_with_table(component_group_oracle(psi, target, seed), table, table_s);
  r.check("oracle " + id + " on " + target.name() + tag_if_gspin5(psi, target), a.pass(),
          std::string("group ") + (a.group_ok ? "ok" : "differs") + ", s_psi " + (a.s_psi_ok ? "ok" : "differs") +
              (a.detail.empty() ? "" : " (" + a.detail + ")"));
}

void do_alternative(const Scenario& s, const json& req, bool gl4, Report& r) {
  const CuspidalHandle& pi = cuspidal_of(s, req);
  const Character chi = req.contains("chi") ? parse_character(s.characters, field(req, "chi")) : pi.chi;
  std::string verdict;
  try {
    if (gl4) {
      Gl4Alternative a = gl4_alternative(s.characters, pi, chi);
      verdict = to_string(a.which) + (a.asai_class ? " class " + *a.asai_class : "");
    } else {
      Gl2Alternative a = gl2_alternative(s.characters, pi, chi);
      verdict = a.symplectic ? "symplectic" : "orthogonal, dihedral from " + a.dihedral_class.value_or("?");
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(pi.id + ": " + e.what());
  }
  const std::string op = gl4 ? "gl4_alternative" : "gl2_alternative";
  r.add(op + " " + pi.id + ": " + verdict);
  r.records.push_back({{"request", op}, {"cuspidal", pi.id}, {"result", verdict}});
}

void do_restriction(const json& req, std::uint64_t seed, Report& r) {
  std::vector<BoundedShape> shapes;
  if (req.contains("shape")) {
    const std::string name = field(req, "shape");
    for (auto sh : all_bounded_shapes())
      if (to_string(sh) == name) shapes.push_back(sh);
    if (shapes.empty()) throw InputError("unknown bounded shape " + name);
  } else {
    shapes = all_bounded_shapes();
  }
  for (auto sh : shapes) {
    auto phi = make_descriptor(sh, sample_generators(sh, seed));
    auto proj = project_parameter(phi);
    std::vector<std::string> parts;
    for (const auto& m : packet(phi)) {
      std::vector<std::string> chars;
      for (const auto& c : restrict_member(m, proj)) chars.push_back(describe(c));
      parts.push_back(describe(m.label) + " -> {" + join(chars, ",") + "}");
    }
    CountReport c = restriction_count_identity(phi, proj);
    r.check("restriction " + to_string(sh),
            c.pass(),
            "S_phi order " + std::to_string(phi.s_group.group.order()) + ", S_phi' order " +
                std::to_string(proj.s_group_prime.group.order()) + ", " + join(parts, "; ") +
                (c.failure.empty() ? "" : " (" + c.failure + ")"));
  }
}

void do_gso4(const json& req, std::uint64_t seed, Report& r) {
  std::vector<Gso4Shape> shapes;
  if (req.contains("shape")) {
    const std::string name = field(req, "shape");
    for (auto sh : all_gso4_shapes())
      if (to_string(sh) == name) shapes.push_back(sh);
    if (shapes.empty()) throw InputError("unknown GSO4 shape " + name);
  } else {
    shapes = all_gso4_shapes();
  }
  for (auto sh : shapes) {
    Gso4Restriction g = restrict_gso4(sample_gso4_generators(sh, seed));
    std::vector<std::string> chars;
    for (const auto& c : g.constituents) chars.push_back(describe(c));
    const bool ok = g.constituents.size() == all_characters(g.s_group_prime.group).size();
    r.check("restrict-gso4 " + to_string(sh), ok,
            "S_phi' order " + std::to_string(g.s_group_prime.group.order()) + ", constituents {" + join(chars, ",") + "}");
  }
}

}  // namespace

Report verify_endoscopy(std::uint64_t seed) {
  Report r;
  for (auto amb : {EndoscopicAmbient::TwistedGamma, EndoscopicAmbient::GSpin5, EndoscopicAmbient::GSpin4}) {
    for (const auto& d : catalog(amb)) {
      CentralizerReport c = verify_centralizer(d, seed);
      std::string detail = "dim " + std::to_string(c.computed) + " expected " + std::to_string(c.expected);
      if (d.iota) detail += ", iota " + to_string(*d.iota);
      if (!c.failure.empty()) detail += " (" + c.failure + ")";
      r.check("centralizer " + c.datum, c.pass(), detail);
    }
  }
  PinningReport p = pinning_fixed_by_theta();
  r.check("pinning fixed by theta", p.pass, p.failing);
  DiagramReport d = restriction_diagrams_commute(seed, 20);
  r.check("restriction diagrams", d.pass(),
          std::to_string(d.first_square_ok) + "/" + std::to_string(d.samples) + " and " +
              std::to_string(d.second_square_ok) + "/" + std::to_string(d.samples) +
              (d.failure.empty() ? "" : " (" + d.failure + ")"));
  return r;
}

Report enumerate_weyl(const GroupTag& group, bool verbose) {
  Report r;
  for (const auto& l : enumerate_levis(group)) {
    int total = 0, regular = 0, mismatches = 0;
    for (const auto& w : enumerate_weyl(l)) {
      const bool reg = is_regular(w);
      const Rational det = det_w_minus_one(w);
      ++total;
      if (reg) ++regular;
      if (reg == is_zero(det)) ++mismatches;
      if (verbose) r.add("  " + w.str() + " regular " + (reg ? "yes" : "no") + " det " + to_string(det));
    }
    r.check(group.name() + " [" + l.str() + "]", mismatches == 0,
            std::to_string(total) + " elements, " + std::to_string(regular) + " regular, " +
                std::to_string(mismatches) + " mismatches");
  }
  return r;
}

Report factor_involution(const json& input) {
  Matrix gram, g;
  try {
    gram = parse_matrix(input.at("gram"));
    g = parse_matrix(input.at("g"));
  } catch (const json::exception&) {
    throw InputError("factor-involution input needs 'gram' and 'g'");
  }
  SimilitudeElement e;
  try {
    e = make_similitude(gram, g);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  Report r;
  r.add("nu " + to_string(e.nu));
  try {
    InvolutionPair p = factor(e);
    r.add("x " + p.x.str());
    r.add("y " + p.y.str());
    r.records.push_back({{"request", "factor-involution"},
                         {"nu", to_string(e.nu)},
                         {"x", matrix_json(p.x)},
                         {"y", matrix_json(p.y)}});
    r.check("verify g = x y", verify(e, p));
  } catch (const std::domain_error& ex) {
    r.check("factor", false, ex.what());
  }
  return r;
}

Report run_scenario(const Scenario& s, std::uint64_t seed) {
  Report r;
  std::size_t index = 0;
  for (const auto& req : s.requests) {
    ++index;
    if (!req.is_object() || !req.contains("op") || !req.at("op").is_string())
      throw InputError("request " + std::to_string(index) + " needs an 'op'");
    const std::string op = req.at("op").get<std::string>();
    try {
      if (op == "classify") {
        do_classify(s, req, r);
      } else if (op == "membership") {
        do_membership(s, req, r);
      } else if (op == "multiplicity") {
        do_multiplicity(s, req, r);
      } else if (op == "oracle") {
        do_oracle(s, req, seed, r);
      } else if (op == "gl2_alternative" || op == "gl4_alternative") {
        do_alternative(s, req, op == "gl4_alternative", r);
      } else if (op == "verify-endoscopy") {
        r.append(verify_endoscopy(seed));
      } else if (op == "enumerate-weyl") {
        GroupTag g;
        try {
          g = parse_group(field(req, "group"));
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
        r.append(enumerate_weyl(g, false));
      } else if (op == "restriction") {
        do_restriction(req, seed, r);
      } else if (op == "restrict-gso4") {
        do_gso4(req, seed, r);
      } else if (op == "factor-involution") {
        r.append(factor_involution(req));
      } else {
        throw InputError("unknown op " + op);
      }
    } catch (const InputError& e) {
      throw InputError("request " + std::to_string(index) + " (" + op + "): " + e.what());
    } catch (const std::exception& e) {
      // computation errors: report and keep going
      r.check("request " + std::to_string(index) + " (" + op + ")", false, e.what());
    }
  }
  return r;
}

}  // namespace gsp4::cli
