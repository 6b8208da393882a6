#include <json.hpp>

#include "defsem/io.hpp"

namespace defsem {

namespace {

using Json = nlohmann::ordered_json;

Json names(const ArgSet& s) {
  Json out = Json::array();
  for (const auto& a : s) out.push_back(a.name());
  return out;
}

Json node_json(const DefenseNode& n) {
  return Json{{"defender", to_string(n.defender)}, {"defendee", n.defendee.name()}};
}

Json defense_ext_json(const DefenseExtension& d) {
  Json out = Json::array();
  for (const auto& n : d) out.push_back(node_json(n));
  return out;
}

Json reason_json(const ReasonSet& r) {
  Json out = Json::array();
  for (const auto& s : r.members()) out.push_back(to_string(s));
  return out;
}

Json bag_json(const ReasonBag& bag) {
  Json out = Json::array();
  for (const auto& r : bag) out.push_back(reason_json(r));
  return out;
}

Json attacks_json(const std::vector<Attack>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(Json::array({a.from.name(), a.to.name()}));
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

struct WitnessJson {
  Json operator()(const ExtensionWitness& w) const {
    return Json{{"type", "extension"}, {"extension", names(w.extension)}, {"present_in", w.present_in}};
  }
  Json operator()(const DefenseExtensionWitness& w) const {
    return Json{{"type", "defense_extension"},
                {"extension", defense_ext_json(w.extension)},
                {"present_in", w.present_in}};
  }
  Json operator()(const KernelWitness& w) const {
    return Json{{"type", "kernel"},
                {"arguments_only_in_first", names(w.arguments_only_in_first)},
                {"arguments_only_in_second", names(w.arguments_only_in_second)},
                {"attacks_only_in_first", attacks_json(w.attacks_only_in_first)},
                {"attacks_only_in_second", attacks_json(w.attacks_only_in_second)}};
  }
  Json operator()(const ReasonWitness& w) const {
    return Json{{"type", "root_reasons"},
                {"argument", w.argument.name()},
                {"first", bag_json(w.first)},
                {"second", bag_json(w.second)}};
  }
  Json operator()(const ReasonProfileWitness& w) const {
    Json args = Json::array();
    for (const auto& a : w.arguments) args.push_back(a.name());
    Json profile = Json::array();
    for (const auto& r : w.profile) profile.push_back(reason_json(r));
    return Json{{"type", "root_reason_profile"},
                {"arguments", args},
                {"profile", profile},
                {"in_first", w.in_first},
                {"in_second", w.in_second}};
  }
  Json operator()(const ArgumentSetWitness& w) const {
    return Json{{"type", "argument_set"}, {"missing_from_full", names(w.missing_from_full)}};
  }
};

}  // namespace

std::string extensions_to_json(Semantics s, const std::vector<Extension>& exts) {
  Json list = Json::array();
  for (const auto& e : exts) list.push_back(names(e));
  return render(Json{{"semantics", to_string(s)}, {"extensions", list}});
}

std::string defense_extensions_to_json(Semantics s, const std::vector<DefenseExtension>& exts) {
  Json list = Json::array();
  for (const auto& d : exts) list.push_back(defense_ext_json(d));
  return render(Json{{"semantics", to_string(s)}, {"defense_extensions", list}});
}

std::string reasons_to_json(const ArgId& a, ReasonKind kind, Semantics s, const ReasonBag& bag) {
  return render(Json{{"argument", a.name()},
                     {"kind", to_string(kind)},
                     {"semantics", to_string(s)},
                     {"reasons", bag_json(bag)}});
}

std::string defense_graph_to_json(const DefenseGraph& dg) {
  Json nodes = Json::array();
  for (const auto& n : dg.nodes()) {
    Json j = node_json(n);
    j["kind"] = n.kind == NodeKind::defense ? "defense" : "defeater";
    nodes.push_back(std::move(j));
  }
  Json edges = Json::array();
  for (const auto& [from, to] : dg.edges()) edges.push_back(Json::array({from, to}));
  return render(Json{{"nodes", nodes}, {"edges", edges}});
}

std::string verdict_to_json(const EquivalenceVerdict& v) {
  Json j{{"kind", to_string(v.kind)}};
  j["semantics"] = v.semantics ? Json(to_string(*v.semantics)) : Json(nullptr);
  j["result"] = v.result;
  j["witness"] = v.witness ? std::visit(WitnessJson{}, *v.witness) : Json(nullptr);
  return render(j);
}

}  // namespace defsem
