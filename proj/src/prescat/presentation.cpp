#include "singext/prescat/presentation.hpp"

#include "singext/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace singext::prescat {

using json = nlohmann::ordered_json;

std::size_t QuiverPresentation::object_index(const std::string& o) const {
  auto it = std::find(objects.begin(), objects.end(), o);
  if (it == objects.end())
    throw InvalidInput("unknown object '" + o + "'");
  return static_cast<std::size_t>(it - objects.begin());
}

std::size_t QuiverPresentation::arrow_index(const std::string& a) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == a)
      return i;
  throw InvalidInput("unknown arrow '" + a + "'");
}

std::string identity_name(const std::string& object) { return "id(" + object + ")"; }

std::optional<std::string> parse_identity(const std::string& symbol) {
  if (symbol.size() > 4 && symbol.compare(0, 3, "id(") == 0 && symbol.back() == ')')
    return symbol.substr(3, symbol.size() - 4);
  return std::nullopt;
}

std::pair<std::string, std::string>
QuiverPresentation::path_ends(const std::vector<std::string>& path) const {
  if (path.empty())
    throw InvalidInput("empty path; write id(X) for an identity");
  if (auto o = parse_identity(path[0])) {
    if (path.size() != 1)
      throw InvalidInput("identity symbol must stand alone in a path");
    object_index(*o);
    return {*o, *o};
  }
  std::string src = arrows[arrow_index(path.back())].src;
  std::string cur = src;
  for (std::size_t k = path.size(); k-- > 0;) {
    if (parse_identity(path[k]))
      throw InvalidInput("identity symbol must stand alone in a path");
    const Arrow& a = arrows[arrow_index(path[k])];
    if (a.src != cur)
      throw InvalidInput("path is not composable at '" + a.name + "'");
    cur = a.dst;
  }
  return {src, cur};
}

void QuiverPresentation::validate() const {
  std::set<std::string> seen;
  for (const auto& o : objects)
    if (!seen.insert(o).second)
      throw InvalidInput("duplicate object '" + o + "'");
  seen.clear();
  for (const auto& a : arrows) {
    if (!seen.insert(a.name).second)
      throw InvalidInput("duplicate arrow '" + a.name + "'");
    if (parse_identity(a.name))
      throw InvalidInput("arrow name '" + a.name + "' is reserved");
    object_index(a.src);
    object_index(a.dst);
  }
  for (const auto& r : relations) {
    if (r.empty())
      throw InvalidInput("empty relation");
    const auto ends = path_ends(r.front().path);
    for (const auto& t : r)
      if (path_ends(t.path) != ends)
        throw InvalidInput("relation mixes non-parallel paths");
  }
  if (torsion && *torsion < 1)
    throw InvalidInput("torsion must be positive");
}

QuiverPresentation parse_presentation(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("presentation is not valid JSON: ") + e.what());
  }
  QuiverPresentation p;
  try {
    p.name = j.value("name", std::string{});
    for (const auto& o : j.at("objects"))
      p.objects.push_back(o.get<std::string>());
    for (const auto& a : j.at("arrows"))
      p.arrows.push_back({a.at("name").get<std::string>(), a.at("src").get<std::string>(),
                          a.at("dst").get<std::string>()});
    for (const auto& r : j.value("relations", json::array())) {
      Relation rel;
      for (const auto& t : r) {
        if (!t.is_array() || t.size() != 2)
          throw InvalidInput("relation term must be [coefficient, [arrows...]]");
        Term term;
        term.coef = t[0].is_string() ? Int(t[0].get<std::string>()) : Int(t[0].get<long long>());
        for (const auto& s : t[1])
          term.path.push_back(s.get<std::string>());
        rel.push_back(std::move(term));
      }
      p.relations.push_back(std::move(rel));
    }
    if (j.contains("torsion") && !j["torsion"].is_null())
      p.torsion = j["torsion"].get<long>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed presentation: ") + e.what());
  }
  p.validate();
  return p;
}

std::string serialize_presentation(const QuiverPresentation& p) {
  json j;
  if (!p.name.empty())
    j["name"] = p.name;
  j["objects"] = p.objects;
  j["arrows"] = json::array();
  for (const auto& a : p.arrows)
    j["arrows"].push_back({{"name", a.name}, {"src", a.src}, {"dst", a.dst}});
  j["relations"] = json::array();
  for (const auto& r : p.relations) {
    json rel = json::array();
    for (const auto& t : r) {
      json coef;
      if (abs(t.coef) < Int(1) << 62)
        coef = static_cast<long long>(t.coef);
      else
        coef = t.coef.str();
      rel.push_back(json::array({coef, t.path}));
    }
    j["relations"].push_back(std::move(rel));
  }
  if (p.torsion)
    j["torsion"] = *p.torsion;
  return j.dump(2) + "\n";
}

namespace {

Term term(long c, std::vector<std::string> path) { return {Int(c), std::move(path)}; }

QuiverPresentation muro_r() {
  QuiverPresentation p;
  p.name = "R";
  p.objects = {"d", "c", "i", "t"};
  p.arrows = {{"delta", "d", "t"}, {"xi", "t", "d"},  {"phi", "t", "i"},
              {"gamma", "i", "t"}, {"eta", "t", "c"}, {"sigma", "c", "t"}};
  p.relations = {
      {term(2, {"delta", "xi"})},
      {term(2, {"sigma", "eta"})},
      {term(1, {"eta", "delta"})},
      {term(1, {"phi", "sigma"})},
      {term(1, {"xi", "gamma"})},
      {term(1, {"xi", "delta"}), term(-2, {"id(d)"})},
      {term(1, {"eta", "sigma"}), term(-2, {"id(c)"})},
      {term(1, {"phi", "gamma"}), term(-2, {"id(i)"})},
      {term(1, {"gamma", "phi"}), term(-1, {"delta", "xi"}), term(-1, {"sigma", "eta"})},
  };
  p.torsion = 4;
  return p;
}

} // namespace

std::vector<Relation> muro_r1_relations() {
  return {{term(2, {"xi"})}, {term(2, {"sigma"})}, {term(1, {"xi", "sigma"})}};
}

std::vector<Relation> muro_r2_relations() {
  return {{term(1, {"gamma", "phi"}), term(-2, {"id(t)"})}};
}

std::vector<std::string> builtin_names() { return {"R", "R1", "R2", "F4", "F2"}; }

QuiverPresentation builtin(const std::string& name) {
  if (name == "R")
    return muro_r();
  if (name == "R1" || name == "R2") {
    QuiverPresentation p = muro_r();
    for (auto& r : muro_r1_relations())
      p.relations.push_back(std::move(r));
    if (name == "R2")
      for (auto& r : muro_r2_relations())
        p.relations.push_back(std::move(r));
    p.name = name;
    return p;
  }
  if (name == "F4" || name == "F2") {
    QuiverPresentation p;
    p.name = name;
    p.objects = {"*"};
    p.torsion = name == "F4" ? 4 : 2;
    return p;
  }
  throw InvalidInput("unknown builtin presentation '" + name + "'");
}

} // namespace singext::prescat
