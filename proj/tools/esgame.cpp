// Command-line surface over the core library: documents in, documents or
// verdicts out. Exit codes: 0 success or property holds, 1 property fails or
// not isomorphic, 2 invalid input, 3 enumeration guard exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esgame/io.hpp"
#include "esgame/iso.hpp"
#include "esgame/laws.hpp"

using namespace esgame;

namespace {

Limits cli_limits() {
  Limits l;
  if (const char* g = std::getenv("ESGAME_GUARD")) {
    char* end = nullptr;
    long v = std::strtol(g, &end, 10);
    if (end == g || *end != '\0' || v <= 0)
      throw InputError("ESGAME_GUARD must be a positive integer");
    l.max_enum_events = static_cast<int>(v);
    l.max_sync_pairs = static_cast<int>(4 * v);
  }
  return l;
}

void emit(const std::string& text, const std::string& out) {
  if (out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw InputError("cannot open file: " + out);
  file << text;
}

EspPtr load_esp(const std::string& path) {
  Document d = load_document(path);
  if (d.kind != Document::Kind::esp)
    throw InputError(path + ": expected an esp document");
  return d.esp;
}

// Game plus its document name, for transforms that keep the input identity.
std::pair<EspPtr, std::string> load_named_esp(const std::string& path) {
  Document d = load_document(path);
  if (d.kind != Document::Kind::esp)
    throw InputError(path + ": expected an esp document");
  return {d.esp, d.name};
}

PreStrategy load_strategy(const std::string& path, const Limits& limits) {
  return document_prestrategy(load_document(path), limits);
}

std::string config_text(const EventStructure& es, const Bits& xs) {
  std::string out = "{";
  bool first = true;
  for (const std::string& id : es.names_of(xs)) {
    if (!first) out += ", ";
    out += id;
    first = false;
  }
  return out + "}";
}

int run_validate(const std::string& path, const Limits& limits) {
  Document d = load_document(path);
  if (d.kind == Document::Kind::esp) {
    std::cout << "esp '" << d.name << "': " << d.esp->size() << " events, "
              << d.esp->es->immediate().size() << " immediate pairs, "
              << d.esp->es->generators().size() << " conflicts\n";
    return 0;
  }
  MapCheck mc = check_map(d.map, d.source.get(), d.target.get(), limits);
  if (!mc.is_map()) throw InputError(path + ": " + mc.reason);
  if (d.kind == Document::Kind::prestrategy)
    document_prestrategy(d, limits);  // throws when not a labelling
  const char* verdict = mc.polarity_preserving() ? "polarity-preserving map"
                        : mc.verdict == MapCheck::Verdict::total_map
                            ? "total map"
                            : "partial map";
  std::cout << (d.kind == Document::Kind::prestrategy ? "prestrategy"
                                                      : "map")
            << " '" << d.name << "': " << verdict << ", "
            << d.source->size() << " -> " << d.target->size() << " events\n";
  return 0;
}

int run_configs(const std::string& path, bool covers, const std::string& dot,
                const Limits& limits) {
  Document d = load_document(path);
  EspPtr e;
  std::string dot_text;
  if (d.kind == Document::Kind::esp) {
    e = d.esp;
    dot_text = dot_export(*e);
  } else {
    PreStrategy s = document_prestrategy(d, limits);
    e = s.inner;
    dot_text = dot_export(s);
  }
  ConfigGraph cg = enumerate_configurations(*e->es, limits);
  for (const Bits& xs : cg.configs)
    std::cout << config_text(*e->es, xs) << "\n";
  if (covers)
    for (auto [from, to, ev] : cg.covers)
      std::cout << config_text(*e->es, cg.configs[from]) << " + "
                << e->es->id(ev) << " -> "
                << config_text(*e->es, cg.configs[to]) << "\n";
  if (!dot.empty()) emit(dot_text, dot);
  return 0;
}

int run_check(const std::string& path, bool receptive, bool courteous,
              const std::string& fibration, bool strategy,
              const Limits& limits) {
  PreStrategy s = load_strategy(path, limits);
  if (!receptive && !courteous && fibration.empty() && !strategy)
    receptive = courteous = true;
  bool ok = true;
  auto report = [&](const char* name, bool holds, const std::string& detail) {
    std::cout << name << ": " << (holds ? "ok" : "fails") ;
    if (!holds && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    ok = ok && holds;
  };
  if (receptive) {
    CheckResult r = is_receptive(s, limits);
    report("receptive", r.holds, r.detail);
  }
  if (courteous) {
    CheckResult r = is_courteous(s);
    report("courteous", r.holds, r.detail);
  }
  if (!fibration.empty()) {
    FibrationVariant v;
    if (fibration == "neg") v = FibrationVariant::neg;
    else if (fibration == "pos") v = FibrationVariant::pos;
    else if (fibration == "scott") v = FibrationVariant::scott;
    else throw InputError("unknown fibration variant: " + fibration);
    CheckResult r = is_discrete_fibration(s, v, limits);
    report(("fibration " + fibration).c_str(), r.holds, r.detail);
  }
  if (strategy) {
    StrategyCheck r = is_strategy(s, limits);
    report("strategy", r.holds, r.detail);
  }
  return ok ? 0 : 1;
}

int run_iso(const std::string& pa, const std::string& pb,
            const std::string& over, const Limits& limits) {
  Document da = load_document(pa);
  Document db = load_document(pb);
  if (da.kind == Document::Kind::esp && db.kind == Document::Kind::esp) {
    if (!over.empty())
      throw InputError("--over applies to labelled documents only");
    auto isos = find_isomorphisms(*da.esp, *db.esp);
    if (isos.empty()) {
      std::cout << "not isomorphic\n";
      return 1;
    }
    for (std::size_t e = 0; e < isos[0].size(); ++e)
      std::cout << da.esp->es->id(static_cast<int>(e)) << " -> "
                << db.esp->es->id(isos[0][e]) << "\n";
    return 0;
  }
  if (da.kind == Document::Kind::esp || db.kind == Document::Kind::esp)
    throw InputError("iso needs two documents of the same kind");
  PreStrategy sa = document_prestrategy(da, limits);
  PreStrategy sb = document_prestrategy(db, limits);
  if (!over.empty()) {
    EspPtr game = load_esp(over);
    if (!same_esp(*sa.game, *game) || !same_esp(*sb.game, *game)) {
      std::cout << "not isomorphic: games differ from the given one\n";
      return 1;
    }
  }
  if (!same_esp(*sa.game, *sb.game)) {
    std::cout << "not isomorphic: the games differ\n";
    return 1;
  }
  auto iso = find_isomorphism_over(*sa.inner, *sb.inner, sa.label, sb.label);
  if (!iso) {
    std::cout << "not isomorphic over the game\n";
    return 1;
  }
  for (std::size_t e = 0; e < sa.inner->size(); ++e)
    std::cout << sa.inner->es->id(static_cast<int>(e)) << " -> "
              << sb.inner->es->id(iso->to[e]) << "\n";
  return 0;
}

int run_interact(const std::string& plo, const std::string& phi,
                 const std::string& out, const Limits& limits) {
  PreStrategy lo = load_strategy(plo, limits);
  PreStrategy hi = load_strategy(phi, limits);
  StrategyInteraction si = interact(lo, hi, limits);

  // Polarities on the apex follow the participants: events over the lower
  // strategy keep its inner polarity, pure right-hand events take the upper
  // one. The spine reads the same convention off the games.
  std::vector<Polarity> apex_pol(si.pb.apex->size());
  const EventStructure& left_src = *si.left_pad.src;
  for (std::size_t e = 0; e < si.pb.apex->size(); ++e) {
    const std::string& l = left_src.id(si.pb.to_left.to[e]);
    apex_pol[e] = l.rfind("0.", 0) == 0
                      ? lo.inner->polarity(lo.inner->es->index_of(l.substr(2)))
                      : hi.inner->polarity(hi.inner->es->index_of(
                            si.right_pad.src->id(si.pb.to_right.to[e])
                                .substr(2)));
  }
  std::vector<Polarity> spine_pol(si.spine->size());
  for (std::size_t e = 0; e < si.spine->size(); ++e) {
    const std::string& id = si.spine->id(static_cast<int>(e));
    if (id.rfind("0.0.", 0) == 0)
      spine_pol[e] = lo.game->polarity(lo.game->es->index_of("L." + id.substr(4)));
    else if (id.rfind("0.1.", 0) == 0)
      spine_pol[e] = lo.game->polarity(lo.game->es->index_of("R." + id.substr(4)));
    else
      spine_pol[e] = hi.game->polarity(hi.game->es->index_of("R." + id.substr(2)));
  }
  Document doc = map_document(si.pb.to_game, make_esp(si.pb.apex, apex_pol),
                              make_esp(si.spine, spine_pol), "interaction");
  emit(serialize(doc), out);
  return 0;
}

int run_gen(std::uint64_t seed, int events, const std::string& game_path,
            bool family, const std::string& out, const Limits& limits) {
  if (family && !game_path.empty())
    throw InputError("gen: --family and --prestrategy are exclusive");
  Document doc;
  if (family) {
    doc = prestrategy_document(gen_family(seed, std::max(1, events), limits),
                               "gen");
  } else if (!game_path.empty()) {
    doc = prestrategy_document(gen_prestrategy(seed, load_esp(game_path),
                                               limits),
                               "gen");
  } else {
    doc = esp_document(gen_esp(seed, events), "gen");
  }
  emit(serialize(doc), out);
  return 0;
}

int run_laws(std::uint64_t seed, int trials, int max_events,
             const Limits& limits) {
  LawOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  opt.max_events = max_events;
  opt.limits = limits;
  const std::vector<LawRun (*)(const LawOptions&)> suites = {
      law_main_theorem,      law_pullback_universal, law_scott_order,
      law_parallel_product,  law_strategy_closure,   law_pentagon,
      law_triangle,          law_unitor_naturality,  law_snake,
      law_hiding_algebra,    law_copycat_clauses};
  bool ok = true;
  std::cout << std::left << std::setw(22) << "law" << std::right
            << std::setw(8) << "trials" << std::setw(10) << "failures"
            << std::setw(10) << "seconds" << "\n"
            << std::flush;
  for (auto suite : suites) {
    LawRun r = suite(opt);
    std::cout << std::left << std::setw(22) << r.name << std::right
              << std::setw(8) << r.trials << std::setw(10) << r.failures
              << std::setw(10) << std::fixed << std::setprecision(2)
              << r.seconds << "\n";
    if (!r.ok()) {
      std::cout << "  first failure: " << r.detail << "\n";
      ok = false;
    }
    std::cout << std::flush;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite event structure games: construction, interaction, "
               "composition, and the laws that govern them"};
  app.require_subcommand(1);
  int code = 0;

  try {
    const Limits limits = cli_limits();
    std::string in1, in2, in3, in4, out = "-", dot, keep, fibration, over;
    bool covers = false, receptive = false, courteous = false,
         strategy = false, family = false;
    std::uint64_t seed = 1;
    int events = 4, trials = 25, max_events = 5;

    auto* validate = app.add_subcommand("validate", "parse and check a document");
    validate->add_option("file", in1, "document path or -")->required();
    validate->callback([&] { code = run_validate(in1, limits); });

    auto* configs = app.add_subcommand("configs", "enumerate configurations");
    configs->add_option("file", in1)->required();
    configs->add_flag("--covers", covers, "also print covering steps");
    configs->add_option("--dot", dot, "write DOT to this path");
    configs->callback([&] { code = run_configs(in1, covers, dot, limits); });

    auto* par = app.add_subcommand("parallel", "parallel composition of two games");
    par->add_option("left", in1)->required();
    par->add_option("right", in2)->required();
    par->add_option("-o,--output", out);
    par->callback([&] {
      emit(serialize(esp_document(
               parallel(load_esp(in1), load_esp(in2)).both, "parallel")),
           out);
    });

    auto* du = app.add_subcommand("dual", "reverse all polarities");
    du->add_option("game", in1)->required();
    du->add_option("-o,--output", out);
    du->callback([&] {
      auto [e, name] = load_named_esp(in1);
      emit(serialize(esp_document(dual(*e), name)), out);
    });

    auto* proj = app.add_subcommand("project", "restrict to a set of events");
    proj->add_option("game", in1)->required();
    proj->add_option("--keep", keep, "comma-separated event ids")->required();
    proj->add_option("-o,--output", out);
    proj->callback([&] {
      auto [e, name] = load_named_esp(in1);
      std::vector<std::string> ids;
      std::stringstream ss(keep);
      std::string id;
      while (std::getline(ss, id, ','))
        if (!id.empty()) ids.push_back(id);
      ProjectionEsp pr = project(e, e->es->set_of(ids), limits);
      emit(serialize(esp_document(pr.restricted, name)), out);
    });

    auto* cc = app.add_subcommand("copycat", "copycat strategy on a game");
    cc->add_option("game", in1)->required();
    cc->add_option("-o,--output", out);
    cc->callback([&] {
      emit(serialize(prestrategy_document(copycat(load_esp(in1), limits),
                                          "copycat")),
           out);
    });

    auto* inter = app.add_subcommand("interact", "synchronize two strategies");
    inter->add_option("lower", in1)->required();
    inter->add_option("upper", in2)->required();
    inter->add_option("-o,--output", out);
    inter->callback([&] { code = run_interact(in1, in2, out, limits); });

    auto* comp = app.add_subcommand("compose", "compose with hiding");
    comp->add_option("lower", in1)->required();
    comp->add_option("upper", in2)->required();
    comp->add_option("-o,--output", out);
    comp->callback([&] {
      emit(serialize(prestrategy_document(
               compose(load_strategy(in1, limits), load_strategy(in2, limits),
                       limits)
                   .strat,
               "compose")),
           out);
    });

    auto* check = app.add_subcommand("check", "test strategy conditions");
    check->add_option("file", in1)->required();
    check->add_flag("--receptive", receptive);
    check->add_flag("--courteous", courteous);
    check->add_option("--fibration", fibration, "neg | pos | scott");
    check->add_flag("--strategy", strategy, "copycat invariance");
    check->callback([&] {
      code = run_check(in1, receptive, courteous, fibration, strategy, limits);
    });

    auto* iso = app.add_subcommand("iso", "isomorphism of structures or strategies");
    iso->add_option("left", in1)->required();
    iso->add_option("right", in2)->required();
    iso->add_option("--over", over, "game both strategies must live on");
    iso->callback([&] { code = run_iso(in1, in2, over, limits); });

    auto* ten = app.add_subcommand("tensor", "side-by-side product");
    ten->add_option("left", in1)->required();
    ten->add_option("right", in2)->required();
    ten->add_option("-o,--output", out);
    ten->callback([&] {
      emit(serialize(prestrategy_document(
               tensor(load_strategy(in1, limits), load_strategy(in2, limits),
                      limits),
               "tensor")),
           out);
    });

    auto* lift = app.add_subcommand("lift", "lift a receptive courteous map");
    lift->add_option("map", in1)->required();
    lift->add_option("-o,--output", out);
    lift->callback([&] {
      Document d = load_document(in1);
      if (d.kind != Document::Kind::map)
        throw InputError(in1 + ": expected a map document");
      emit(serialize(prestrategy_document(
               lift_map(d.map, d.source, d.target, limits), "lift")),
           out);
    });

    auto* snake = app.add_subcommand("snake", "both duality equations");
    snake->add_option("game", in1)->required();
    snake->callback([&] {
      LawReport r = snake_check(load_esp(in1), limits);
      if (!r.holds) std::cout << r.detail << "\n";
      code = r.holds ? 0 : 1;
    });

    auto* pent = app.add_subcommand("pentagon", "pentagon for four strategies");
    pent->add_option("s1", in1)->required();
    pent->add_option("s2", in2)->required();
    pent->add_option("s3", in3)->required();
    pent->add_option("s4", in4)->required();
    pent->callback([&] {
      LawReport r = pentagon_check(
          load_strategy(in1, limits), load_strategy(in2, limits),
          load_strategy(in3, limits), load_strategy(in4, limits), limits);
      if (!r.holds) std::cout << r.detail << "\n";
      code = r.holds ? 0 : 1;
    });

    auto* gen = app.add_subcommand("gen", "seeded generation of documents");
    gen->add_option("--seed", seed);
    gen->add_option("--events", events, "size for games, budget for --family");
    gen->add_option("--prestrategy", in1, "game to draw a pre-strategy over");
    gen->add_flag("--family", family, "member of the strategy family");
    gen->add_option("-o,--output", out);
    gen->callback(
        [&] { code = run_gen(seed, events, in1, family, out, limits); });

    auto* laws = app.add_subcommand("laws", "run the seeded law suites");
    laws->add_option("--seed", seed);
    laws->add_option("--trials", trials);
    laws->add_option("--max-events", max_events);
    laws->callback([&] { code = run_laws(seed, trials, max_events, limits); });

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  }
  return code;
}
