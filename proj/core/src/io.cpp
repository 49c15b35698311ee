#include "esgame/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "esgame/constructions.hpp"
#include "json.hpp"

namespace esgame {
namespace {

using Json = nlohmann::ordered_json;

std::string kind_name(Document::Kind k) {
  switch (k) {
    case Document::Kind::esp: return "esp";
    case Document::Kind::map: return "map";
    case Document::Kind::prestrategy: return "prestrategy";
  }
  return "esp";
}

Json esp_to_json(const Esp& e, const std::string& name) {
  Json j;
  j["kind"] = "esp";
  j["name"] = name;

  Json events = Json::array();
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    Json ev;
    ev["id"] = e.es->id(i);
    ev["pol"] = std::string(1, polarity_char(e.polarity(i)));
    events.push_back(std::move(ev));
  }
  j["events"] = std::move(events);

  std::vector<std::pair<std::string, std::string>> prec;
  for (auto [a, b] : e.es->immediate())
    prec.emplace_back(e.es->id(a), e.es->id(b));
  std::sort(prec.begin(), prec.end());
  Json jprec = Json::array();
  for (auto& [a, b] : prec) jprec.push_back(Json::array({a, b}));
  j["prec"] = std::move(jprec);

  std::vector<std::vector<std::string>> conflicts;
  for (const Bits& g : e.es->generators())
    conflicts.push_back(e.es->names_of(g));
  std::sort(conflicts.begin(), conflicts.end());
  Json jconf = Json::array();
  for (auto& c : conflicts) {
    Json one = Json::array();
    for (auto& id : c) one.push_back(id);
    jconf.push_back(std::move(one));
  }
  j["conflicts"] = std::move(jconf);
  return j;
}

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

void check_fields(const Json& j, const std::vector<std::string>& allowed,
                  const std::string& context) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      fail("unknown field '" + it.key() + "' in " + context);
  }
}

std::string string_field(const Json& j, const std::string& key,
                         const std::string& context) {
  const Json& v = j.at(key);
  if (!v.is_string()) fail("field '" + key + "' in " + context +
                           " must be a string");
  return v.get<std::string>();
}

EspPtr esp_from_json(const Json& j, const std::string& context) {
  if (!j.is_object()) fail(context + " must be a json object");
  check_fields(j, {"kind", "name", "events", "prec", "conflicts"}, context);
  if (!j.contains("kind") || string_field(j, "kind", context) != "esp")
    fail(context + " must have kind \"esp\"");
  if (j.contains("name")) string_field(j, "name", context);

  EsData data;
  std::unordered_map<std::string, Polarity> pol_of;
  if (j.contains("events")) {
    const Json& events = j.at("events");
    if (!events.is_array()) fail("field 'events' in " + context +
                                 " must be an array");
    for (const Json& ev : events) {
      if (!ev.is_object()) fail("event entries in " + context +
                                " must be objects");
      check_fields(ev, {"id", "pol"}, context + " event");
      if (!ev.contains("id") || !ev.contains("pol"))
        fail("event entries in " + context + " need 'id' and 'pol'");
      std::string id = string_field(ev, "id", context + " event");
      std::string pol = string_field(ev, "pol", context + " event");
      if (id.empty()) fail("empty event id in " + context);
      if (pol != "+" && pol != "-")
        fail("polarity of '" + id + "' in " + context +
             " must be \"+\" or \"-\"");
      data.events.push_back(id);
      pol_of[id] = pol == "+" ? Polarity::pos : Polarity::neg;
    }
  }
  if (j.contains("prec")) {
    const Json& prec = j.at("prec");
    if (!prec.is_array()) fail("field 'prec' in " + context +
                               " must be an array");
    for (const Json& e : prec) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string())
        fail("prec entries in " + context +
             " must be [from, to] pairs of event ids");
      data.prec.emplace_back(e[0].get<std::string>(),
                             e[1].get<std::string>());
    }
  }
  if (j.contains("conflicts")) {
    const Json& conf = j.at("conflicts");
    if (!conf.is_array()) fail("field 'conflicts' in " + context +
                               " must be an array");
    for (const Json& c : conf) {
      if (!c.is_array()) fail("conflict entries in " + context +
                              " must be arrays of event ids");
      std::vector<std::string> one;
      for (const Json& id : c) {
        if (!id.is_string()) fail("conflict entries in " + context +
                                  " must be arrays of event ids");
        one.push_back(id.get<std::string>());
      }
      data.conflicts.push_back(std::move(one));
    }
  }

  EsPtr es = EventStructure::from_data(data);
  std::vector<Polarity> pol(es->size());
  for (std::size_t i = 0; i < es->size(); ++i) pol[i] = pol_of.at(es->id(i));
  return make_esp(es, std::move(pol));
}

Document parse_json_document(const Json& j, const std::string& directory);

EspPtr endpoint_from_json(const Json& v, const std::string& directory,
                          const std::string& field) {
  if (v.is_string()) {
    std::filesystem::path p(v.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(directory) / p;
    Document inner = load_document(p.string());
    if (inner.kind != Document::Kind::esp)
      fail("field '" + field + "' refers to '" + p.string() +
           "', which is not an esp document");
    return inner.esp;
  }
  if (v.is_object()) return esp_from_json(v, "field '" + field + "'");
  fail("field '" + field + "' must be a path or an inline esp document");
}

Document parse_json_document(const Json& j, const std::string& directory) {
  if (!j.is_object()) fail("document must be a json object");
  if (!j.contains("kind")) fail("document is missing the 'kind' field");
  std::string kind = string_field(j, "kind", "document");

  Document d;
  if (kind == "esp") {
    d.kind = Document::Kind::esp;
    d.esp = esp_from_json(j, "esp document");
    if (j.contains("name")) d.name = string_field(j, "name", "esp document");
    return d;
  }
  if (kind != "map" && kind != "prestrategy")
    fail("unknown document kind '" + kind + "'");
  d.kind = kind == "map" ? Document::Kind::map : Document::Kind::prestrategy;
  std::string context = kind + " document";
  check_fields(j, {"kind", "name", "source", "target", "pairs", "game_split"},
               context);
  if (j.contains("name")) d.name = string_field(j, "name", context);
  if (!j.contains("source") || !j.contains("target"))
    fail(context + " needs 'source' and 'target'");
  d.source = endpoint_from_json(j.at("source"), directory, "source");
  d.target = endpoint_from_json(j.at("target"), directory, "target");

  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("pairs")) {
    const Json& jp = j.at("pairs");
    if (!jp.is_array()) fail("field 'pairs' in " + context +
                             " must be an array");
    for (const Json& e : jp) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string())
        fail("pairs entries in " + context +
             " must be [source, target] pairs of event ids");
      pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  d.map = EsMap::from_pairs(d.source->es, d.target->es, pairs);

  if (j.contains("game_split")) {
    const Json& gs = j.at("game_split");
    if (!gs.is_boolean()) fail("field 'game_split' in " + context +
                               " must be a boolean");
    d.game_split = gs.get<bool>();
  }
  return d;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Shared DOT body: per-event display names, order, and conflict generators.
std::string dot_body(const EventStructure& es,
                     const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph es {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int e = 0; e < static_cast<int>(es.size()); ++e)
    out << "  " << dot_quote(es.id(e)) << " [label=" << dot_quote(labels[e])
        << "];\n";
  for (auto [a, b] : es.immediate())
    out << "  " << dot_quote(es.id(a)) << " -> " << dot_quote(es.id(b))
        << ";\n";
  int k = 0;
  for (const Bits& g : es.generators()) {
    std::vector<std::string> members = es.names_of(g);
    if (members.size() == 2) {
      out << "  " << dot_quote(members[0]) << " -> " << dot_quote(members[1])
          << " [dir=none, style=dashed, constraint=false];\n";
    } else {
      std::string hub = "conflict" + std::to_string(k++);
      out << "  " << dot_quote(hub) << " [shape=point, label=\"\"];\n";
      for (const std::string& m : members)
        out << "  " << dot_quote(hub) << " -> " << dot_quote(m)
            << " [dir=none, style=dashed, constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::vector<std::string> polar_labels(const Esp& e) {
  std::vector<std::string> labels(e.size());
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    labels[i] = e.es->id(i) + polarity_char(e.polarity(i));
  return labels;
}

}  // namespace

Document esp_document(EspPtr e, std::string name) {
  Document d;
  d.kind = Document::Kind::esp;
  d.name = std::move(name);
  d.esp = std::move(e);
  return d;
}

Document prestrategy_document(const PreStrategy& s, std::string name) {
  Document d;
  d.kind = Document::Kind::prestrategy;
  d.name = std::move(name);
  d.source = s.inner;
  d.target = s.game;
  d.map = s.label;
  try {
    split_hom_game(*s.game);
    d.game_split = true;
  } catch (const InputError&) {
    d.game_split = false;
  }
  return d;
}

Document map_document(EsMap f, EspPtr source, EspPtr target,
                      std::string name) {
  if (!(*f.src == *source->es) || !(*f.tgt == *target->es))
    fail("map document: endpoints do not match the map");
  Document d;
  d.kind = Document::Kind::map;
  d.name = std::move(name);
  d.source = std::move(source);
  d.target = std::move(target);
  d.map = std::move(f);
  return d;
}

std::string serialize(const Document& d) {
  Json j;
  if (d.kind == Document::Kind::esp) {
    j = esp_to_json(*d.esp, d.name);
  } else {
    j["kind"] = kind_name(d.kind);
    j["name"] = d.name;
    j["source"] = esp_to_json(*d.source, "");
    j["target"] = esp_to_json(*d.target, "");
    Json pairs = Json::array();
    for (int e = 0; e < static_cast<int>(d.source->size()); ++e)
      if (d.map.defined(e))
        pairs.push_back(Json::array(
            {d.source->es->id(e), d.target->es->id(d.map(e))}));
    j["pairs"] = std::move(pairs);
    if (d.game_split) j["game_split"] = true;
  }
  return j.dump(2) + "\n";
}

Document parse_document(const std::string& text,
                        const std::string& directory) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& err) {
    std::size_t offset = err.byte > 0 ? err.byte - 1 : 0;
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail("syntax error at line " + std::to_string(line) + ", column " +
         std::to_string(column) + ": " + err.what());
  }
  return parse_json_document(j, directory);
}

Document load_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_document(buf.str(), ".");
  }
  std::ifstream file(path);
  if (!file) fail("cannot open file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  std::string dir = std::filesystem::path(path).parent_path().string();
  if (dir.empty()) dir = ".";
  return parse_document(buf.str(), dir);
}

PreStrategy document_prestrategy(const Document& d, const Limits& limits) {
  if (!d.is_map_kind())
    fail("expected a map or prestrategy document, got an esp");
  return make_prestrategy(d.source, d.target, d.map, limits);
}

std::string dot_export(const Esp& e) {
  return dot_body(*e.es, polar_labels(e));
}

std::string dot_export(const PreStrategy& s) {
  std::vector<std::string> labels(s.inner->size());
  for (int i = 0; i < static_cast<int>(s.inner->size()); ++i)
    labels[i] = s.game->es->id(s.label(i)) +
                polarity_char(s.inner->polarity(i));
  return dot_body(*s.inner->es, labels);
}

std::string dot_export(const Pullback& pb) {
  std::vector<std::string> labels(pb.apex->size());
  for (int i = 0; i < static_cast<int>(pb.apex->size()); ++i)
    labels[i] = pb.to_game.tgt->id(pb.to_game(i));
  return dot_body(*pb.apex, labels);
}

}  // namespace esgame
