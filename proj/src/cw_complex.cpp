#include "afnorm/cw_complex.hpp"

#include <set>

namespace afnorm {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* where) {
  if (!j.is_array()) throw CwError(std::string(where) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw CwError(std::string(where) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Complex2 complex_from_json(const json& j) {
  if (!j.is_object()) throw CwError("complex must be a JSON object");
  Complex2 c;
  c.vertices = string_list(j.at("vertices"), "vertices");
  if (!j.at("edges").is_array()) throw CwError("edges must be an array");
  for (const auto& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("id") || !e.contains("tail") || !e.contains("head"))
      throw CwError("each edge needs id, tail and head");
    c.edges.push_back({e.at("id").get<std::string>(), e.at("tail").get<std::string>(),
                       e.at("head").get<std::string>()});
  }
  if (!j.at("faces").is_array()) throw CwError("faces must be an array");
  for (const auto& f : j.at("faces")) {
    if (!f.is_object() || !f.contains("id") || !f.contains("walk"))
      throw CwError("each face needs id and walk");
    Complex2::Face face;
    face.id = f.at("id").get<std::string>();
    if (!f.at("walk").is_array()) throw CwError("face walk must be an array");
    for (const auto& step : f.at("walk")) {
      if (!step.is_array() || step.size() != 2 || !step[0].is_string() ||
          !step[1].is_number_integer())
        throw CwError("walk steps must be [edge id, +1 or -1] pairs");
      int dir = step[1].get<int>();
      if (dir != 1 && dir != -1) throw CwError("walk direction must be +1 or -1");
      face.walk.emplace_back(step[0].get<std::string>(), dir);
    }
    c.faces.push_back(std::move(face));
  }
  if (j.contains("boundary")) {
    const json& b = j.at("boundary");
    if (!b.is_object()) throw CwError("boundary must be an object");
    if (b.contains("vertices")) c.boundary_vertices = string_list(b.at("vertices"), "boundary vertices");
    if (b.contains("edges")) c.boundary_edges = string_list(b.at("edges"), "boundary edges");
  }
  return c;
}

nlohmann::ordered_json complex_to_json(const Complex2& c) {
  nlohmann::ordered_json j;
  j["vertices"] = c.vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : c.edges)
    j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  j["faces"] = nlohmann::ordered_json::array();
  for (const auto& f : c.faces) {
    nlohmann::ordered_json walk = nlohmann::ordered_json::array();
    for (const auto& [id, dir] : f.walk) walk.push_back({id, dir});
    j["faces"].push_back({{"id", f.id}, {"walk", walk}});
  }
  j["boundary"] = {{"vertices", c.boundary_vertices}, {"edges", c.boundary_edges}};
  return j;
}

ComplexInfo validate_complex(const Complex2& c) {
  ComplexInfo info;
  for (const auto& v : c.vertices)
    if (!info.vertex_index.emplace(v, static_cast<int>(info.vertex_index.size())).second)
      throw CwError("duplicate vertex id '" + v + "'");
  for (const auto& e : c.edges) {
    if (!info.edge_index.emplace(e.id, static_cast<int>(info.edge_index.size())).second)
      throw CwError("duplicate edge id '" + e.id + "'");
    if (!info.vertex_index.count(e.tail))
      throw CwError("edge '" + e.id + "' has unknown tail '" + e.tail + "'");
    if (!info.vertex_index.count(e.head))
      throw CwError("edge '" + e.id + "' has unknown head '" + e.head + "'");
  }
  std::set<std::string> face_ids;
  info.edge_use.assign(c.edges.size(), 0);

  for (const auto& f : c.faces) {
    if (!face_ids.insert(f.id).second) throw CwError("duplicate face id '" + f.id + "'");
    if (f.walk.empty()) throw CwError("face '" + f.id + "' has an empty walk");
    std::string at;
    bool start_set = false;
    std::string start;
    for (const auto& [eid, dir] : f.walk) {
      auto it = info.edge_index.find(eid);
      if (it == info.edge_index.end())
        throw CwError("face '" + f.id + "' walks along unknown edge '" + eid + "'");
      const Complex2::Edge& e = c.edges[it->second];
      std::string from = dir > 0 ? e.tail : e.head;
      std::string to = dir > 0 ? e.head : e.tail;
      if (!start_set) {
        start = from;
        start_set = true;
      } else if (at != from) {
        throw CwError("face '" + f.id + "' walk is not connected at edge '" + eid + "'");
      }
      at = to;
      ++info.edge_use[it->second];
    }
    if (at != start) throw CwError("face '" + f.id + "' walk does not close up");
  }

  info.vertex_on_boundary.assign(c.vertices.size(), false);
  info.edge_on_boundary.assign(c.edges.size(), false);
  for (const auto& v : c.boundary_vertices) {
    auto it = info.vertex_index.find(v);
    if (it == info.vertex_index.end()) throw CwError("unknown boundary vertex '" + v + "'");
    info.vertex_on_boundary[it->second] = true;
  }
  for (const auto& e : c.boundary_edges) {
    auto it = info.edge_index.find(e);
    if (it == info.edge_index.end()) throw CwError("unknown boundary edge '" + e + "'");
    info.edge_on_boundary[it->second] = true;
  }
  for (size_t i = 0; i < c.edges.size(); ++i) {
    if (!info.edge_on_boundary[i]) continue;
    const Complex2::Edge& e = c.edges[i];
    if (!info.vertex_on_boundary[info.vertex_index.at(e.tail)] ||
        !info.vertex_on_boundary[info.vertex_index.at(e.head)])
      throw CwError("boundary edge '" + e.id + "' has a non-boundary endpoint");
  }

  info.weight.assign(c.edges.size(), Rational(0));
  for (size_t i = 0; i < c.edges.size(); ++i) {
    if (info.edge_on_boundary[i]) continue;
    if (info.edge_use[i] < 2)
      throw CwError("edge '" + c.edges[i].id + "' is used " +
                    std::to_string(info.edge_use[i]) +
                    " times by faces; every non-boundary edge needs at least 2");
    info.weight[i] = Rational(info.edge_use[i] - 2, 2);
  }
  return info;
}

Cocycle cocycle_from_json(const json& j, const Complex2&, const ComplexInfo& info) {
  if (!j.is_object()) throw CwError("cocycle must be a JSON object of edge: value pairs");
  Cocycle k;
  for (const auto& [key, value] : j.items()) {
    if (!info.edge_index.count(key)) throw CwError("cocycle names unknown edge '" + key + "'");
    if (!value.is_number_integer()) throw CwError("cocycle values must be integers");
    k[key] = Integer(value.get<long long>());
  }
  return k;
}

nlohmann::ordered_json cocycle_to_json(const Cocycle& k) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [id, v] : k) j[id] = static_cast<long long>(v);
  return j;
}

namespace {

Integer cocycle_value(const Cocycle& k, const std::string& edge) {
  auto it = k.find(edge);
  return it == k.end() ? Integer(0) : it->second;
}

}  // namespace

bool is_cocycle(const Complex2& c, const ComplexInfo& info, const Cocycle& k) {
  for (size_t i = 0; i < c.edges.size(); ++i)
    if (info.edge_on_boundary[i] && cocycle_value(k, c.edges[i].id) != 0) return false;
  for (const auto& f : c.faces) {
    Integer sum(0);
    for (const auto& [eid, dir] : f.walk) sum += dir * cocycle_value(k, eid);
    if (sum != 0) return false;
  }
  return true;
}

Rational cocycle_norm(const Complex2& c, const ComplexInfo& info, const Cocycle& k) {
  Rational total(0);
  for (size_t i = 0; i < c.edges.size(); ++i) {
    if (info.edge_on_boundary[i]) continue;
    total += info.weight[i] * Rational(abs_int(cocycle_value(k, c.edges[i].id)));
  }
  return total;
}

Complex2 presentation_complex(const Presentation& p) {
  Complex2 c;
  c.vertices.push_back("v");
  for (const auto& g : p.generators) c.edges.push_back({g.name, "v", "v"});
  for (int j = 0; j < p.relator_count(); ++j) {
    const FreeWord& r = p.relators[j];
    if (r.is_identity()) continue;
    Complex2::Face f;
    f.id = "r" + std::to_string(j + 1);
    for (const auto& s : r.syllables()) {
      int dir = s.exponent > 0 ? 1 : -1;
      for (long long i = 0; i < std::llabs(s.exponent); ++i)
        f.walk.emplace_back(p.generators[s.generator].name, dir);
    }
    c.faces.push_back(std::move(f));
  }
  return c;
}

Cocycle induced_cocycle(const Presentation& p, const AbelianStructure& h,
                        const std::vector<Integer>& cls) {
  Cocycle k;
  for (int i = 0; i < p.generator_count(); ++i) {
    HClass c = class_of_word(h, FreeWord::generator_power(i, 1));
    Integer value(0);
    for (size_t j = 0; j < cls.size(); ++j) value += cls[j] * c.free_part[j];
    if (value != 0) k[p.generators[i].name] = value;
  }
  return k;
}

}  // namespace afnorm
