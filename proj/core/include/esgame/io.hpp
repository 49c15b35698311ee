#pragma once

// JSON documents for games and labelled structures, canonical text form, and
// DOT export. Documents are strict: unknown fields are rejected.

#include <string>

#include "esgame/games.hpp"

namespace esgame {

struct Document {
  enum class Kind { esp, map, prestrategy };
  Kind kind = Kind::esp;
  std::string name;

  EspPtr esp;  // kind esp

  EspPtr source, target;  // map kinds
  EsMap map;              // source->es to target->es, possibly partial
  bool game_split = false;  // target is meant as a two-sided L./R. game

  bool is_map_kind() const { return kind != Kind::esp; }
};

Document esp_document(EspPtr e, std::string name = "");
Document prestrategy_document(const PreStrategy& s, std::string name = "");
Document map_document(EsMap f, EspPtr source, EspPtr target,
                      std::string name = "");

// Canonical text: fixed field order, events sorted by id, edge lists and
// conflicts sorted, two-space indentation, trailing newline. Injective on
// structural equivalence classes.
std::string serialize(const Document& d);

// Strict parse; the directory is used to resolve source/target given as
// paths. Throws InputError with a position on syntax errors and a reason on
// semantic ones.
Document parse_document(const std::string& text,
                        const std::string& directory = ".");

// Reads the file ("-" reads standard input) and parses it.
Document load_document(const std::string& path);

// Validated views of a map-kind document.
PreStrategy document_prestrategy(const Document& d, const Limits& limits = {});

// Deterministic DOT text: solid causality arrows from the transitive
// reduction, dashed undirected edges for two-event conflicts, a point node
// joined to the members for larger ones, and +/- polarity suffixes.
std::string dot_export(const Esp& e);
// Inner events named by their labels in the game, as diagrams are drawn.
std::string dot_export(const PreStrategy& s);
// The interaction apex, named by the shared-game labelling.
std::string dot_export(const Pullback& pb);

}  // namespace esgame
