#include "semicomm/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "semicomm/commutator.hpp"
#include "semicomm/congruence.hpp"
#include "semicomm/constructors.hpp"
#include "semicomm/corpus.hpp"
#include "semicomm/series.hpp"
#include "semicomm/structure.hpp"
#include "semicomm/theorems.hpp"

namespace semicomm {

  using Json = nlohmann::ordered_json;

  namespace {

    void flatten(Json const& j, std::string const& prefix,
                 std::vector<std::pair<std::string, std::string>>& out) {
      if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
          flatten(it.value(),
                  prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
        return;
      }
      std::string value;
      if (j.is_null()) {
        value = "none";
      } else if (j.is_string()) {
        value = j.get<std::string>();
      } else {
        value = j.dump();
      }
      out.emplace_back(prefix, value);
    }

    std::vector<std::pair<std::string, std::string>> flat_pairs(
        Json const& j) {
      std::vector<std::pair<std::string, std::string>> out;
      flatten(j, "", out);
      return out;
    }

    struct Input {
      std::string             source;
      FiniteSemigroup         semigroup;
      std::optional<ReesSpec> rees;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw FormatError("cannot read '" + path + "'");
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    Input load_input(std::string const& source) {
      if (source.rfind("builtin:", 0) == 0) {
        auto const name = source.substr(8);
        Input in{source, builtin_semigroup(name), std::nullopt};
        if (name == "paper_S2") {
          in.rees = paper_s2_spec();
        }
        return in;
      }
      if (source.rfind("rees:", 0) == 0) {
        auto spec = rees_spec_from_json(read_file(source.substr(5)));
        auto S    = rees_matrix(spec);
        return {source, std::move(S), std::move(spec)};
      }
      return {source, read_cayley_file(source), std::nullopt};
    }

    Json names_of(FiniteSemigroup const& S, std::vector<Element> const& xs) {
      Json out = Json::array();
      for (Element x : xs) {
        out.push_back(S.name(x));
      }
      return out;
    }

    Json series_json(SeriesReport const& r) {
      Json terms = Json::array();
      for (auto const& t : r.terms) {
        terms.push_back(to_string(t));
      }
      return Json{{"terms", terms},
                  {"stabilized", r.stabilized},
                  {"budget_exhausted", r.budget_exhausted},
                  {"degree", r.degree ? Json(*r.degree) : Json(nullptr)}};
    }

    struct Options {
      std::string              input;
      std::string              format = "human";
      std::uint64_t            cube_cap    = Budget{}.cube_cap;
      std::size_t              lattice_cap = DEFAULT_LATTICE_CAP;
      std::size_t              max_arity   = DEFAULT_MAX_ARITY;
      std::size_t              max_terms   = DEFAULT_MAX_TERMS;
      std::size_t              workers     = 1;
      std::vector<std::string> asserts;

      std::size_t              arity = 2;
      std::vector<std::string> alphas;
      std::string              delta;
      std::string              kind;
      std::size_t              order = 0;
      std::vector<std::string> filters;
      std::string              manifest_out;
      std::string              corpus;
      std::vector<std::string> sources;
      std::vector<std::string> theorems;
      std::string              output;

      Budget budget() const {
        Budget b;
        b.cube_cap      = cube_cap;
        b.lattice_cap   = lattice_cap;
        b.max_dimension = std::max<std::size_t>(max_arity, 4);
        b.workers       = workers;
        return b;
      }
    };

    Json base(std::string const& command) {
      return Json{{"schema_version", CLI_SCHEMA_VERSION},
                  {"command", command}};
    }

    std::vector<Congruence> parse_alphas(Options const&         o,
                                         FiniteSemigroup const& S,
                                         std::size_t            count) {
      std::vector<Congruence> alphas;
      if (o.alphas.empty()) {
        alphas.assign(count, Partition::full(S.size()));
      } else {
        if (o.alphas.size() != count) {
          throw InvalidArgument("expected " + std::to_string(count)
                                + " congruences, got "
                                + std::to_string(o.alphas.size()));
        }
        for (auto const& text : o.alphas) {
          auto p = parse_partition(text, S.size());
          if (!is_congruence(S, p)) {
            throw NotACongruence(text + " is not a congruence");
          }
          alphas.push_back(std::move(p));
        }
      }
      return alphas;
    }

    Json cmd_props(Options const& o) {
      auto const in = load_input(o.input);
      auto const& S = in.semigroup;
      Json doc = base("props");
      doc["algebra"]              = in.source;
      doc["order"]                = S.size();
      doc["idempotents"]          = names_of(S, idempotents(S));
      doc["regular"]              = is_regular(S);
      doc["inverse"]              = is_inverse_semigroup(S);
      doc["orthodox"]             = is_orthodox(S);
      doc["simple"]               = is_simple(S);
      doc["completely_simple"]    = is_completely_simple(S);
      doc["band"]                 = is_band(S);
      doc["left_zero"]            = is_left_zero(S);
      doc["right_zero"]           = is_right_zero(S);
      doc["rectangular_band"]     = is_rectangular_band(S);
      doc["commutative"]          = is_commutative(S);
      doc["idempotent_antichain"] = is_idempotent_antichain(S);
      if (auto w = orthodoxy_witness(S)) {
        Element const p = S((*w)[0], (*w)[1]);
        doc["orthodoxy_witness"] = Json{
            {"pair", names_of(S, {(*w)[0], (*w)[1]})},
            {"product", S.name(p)},
            {"square", S.name(S(p, p))}};
      } else {
        doc["orthodoxy_witness"] = nullptr;
      }
      doc["abelian"] = is_abelian(S, o.budget());
      return doc;
    }

    Json cmd_congruences(Options const& o, std::string& dot) {
      auto const in = load_input(o.input);
      auto const& S = in.semigroup;
      auto const  L = all_congruences(S, o.lattice_cap);
      Json doc = base("congruences");
      doc["algebra"] = in.source;
      doc["count"]   = L.size();
      Json members   = Json::array();
      for (auto const& c : L.members()) {
        members.push_back(to_string(c));
      }
      doc["congruences"] = members;
      if (in.rees) {
        Json triples = Json::array();
        for (auto const& c : L.members()) {
          auto const t = linked_triple(*in.rees, c);
          Json normal  = Json::array();
          for (Element g : t.normal_subgroup) {
            normal.push_back(in.rees->group.underlying().name(g));
          }
          triples.push_back(Json{{"rho_i", to_string(t.rho_i)},
                                 {"normal_subgroup", normal},
                                 {"rho_lambda", to_string(t.rho_lambda)}});
        }
        doc["linked_triples"] = triples;
      }
      dot = lattice_to_dot(L);
      return doc;
    }

    Json cmd_commutator(Options const& o) {
      auto const in = load_input(o.input);
      auto const& S = in.semigroup;
      if (o.arity < 2) {
        throw InvalidArgument("arity must be at least 2");
      }
      auto const alphas = parse_alphas(o, S, o.arity);
      auto const c      = commutator(S, alphas, o.budget());
      Json doc = base("commutator");
      doc["algebra"] = in.source;
      doc["arity"]   = o.arity;
      Json a         = Json::array();
      for (auto const& x : alphas) {
        a.push_back(to_string(x));
      }
      doc["alphas"]     = a;
      doc["commutator"] = to_string(c);
      doc["is_zero"]    = c.is_identity();
      return doc;
    }

    Json cmd_centralize(Options const& o) {
      auto const in = load_input(o.input);
      auto const& S = in.semigroup;
      if (o.alphas.empty()) {
        throw InvalidArgument("centralize needs --alphas");
      }
      auto const alphas = parse_alphas(o, S, o.alphas.size());
      auto const delta  = parse_partition(o.delta, S.size());
      if (!is_congruence(S, delta)) {
        throw NotACongruence(o.delta + " is not a congruence");
      }
      auto const result = centralizes(S, alphas, delta, o.budget());
      Json doc = base("centralize");
      doc["algebra"] = in.source;
      Json a         = Json::array();
      for (auto const& x : alphas) {
        a.push_back(to_string(x));
      }
      doc["alphas"] = a;
      doc["delta"]  = to_string(delta);
      doc["holds"]  = result.holds;
      doc["witness"]
          = result.witness ? names_of(S, *result.witness) : Json(nullptr);
      return doc;
    }

    Json cmd_degrees(Options const& o) {
      auto const in = load_input(o.input);
      auto const& S = in.semigroup;
      auto const  b = o.budget();
      auto const nil  = lower_central_series(S, o.max_terms, b);
      auto const solv = derived_series(S, o.max_terms, b);
      auto const sup  = supernilpotency_report(S, o.max_arity, b);
      auto deg = [](SeriesReport const& r) {
        return r.degree ? Json(*r.degree) : Json(nullptr);
      };
      Json doc = base("degrees");
      doc["algebra"]        = in.source;
      doc["abelian"]        = !nil.terms.empty() && nil.terms[0].is_identity();
      doc["nilpotent"]      = deg(nil);
      doc["solvable"]       = deg(solv);
      doc["supernilpotent"] = deg(sup);
      doc["max_arity"]      = o.max_arity;
      doc["max_terms"]      = o.max_terms;
      doc["series"] = Json{{"lower_central", series_json(nil)},
                           {"derived", series_json(solv)},
                           {"supernilpotent_arity", series_json(sup)}};
      return doc;
    }

    Json group_json(GroupSpec const& G) {
      Json rows = Json::array();
      for (Element a = 0; a < G.size(); ++a) {
        Json row = Json::array();
        for (Element b = 0; b < G.size(); ++b) {
          row.push_back(G.product(a, b));
        }
        rows.push_back(row);
      }
      Json names = Json::array();
      for (Element a = 0; a < G.size(); ++a) {
        names.push_back(G.underlying().name(a));
      }
      return Json{{"order", G.size()}, {"names", names}, {"table", rows}};
    }

    Json cmd_decompose(Options const& o) {
      auto const in = load_input(o.input);
      auto const& S = in.semigroup;
      Json doc = base("decompose");
      doc["algebra"] = in.source;
      doc["kind"]    = o.kind;
      auto absent = [&](std::string const& reason) {
        doc["exists"] = false;
        doc["reason"] = reason;
        return doc;
      };
      auto present = [&](Decomposition const& d) {
        doc["exists"]     = true;
        doc["group"]      = group_json(d.group);
        doc["left_size"]  = d.left_size;
        doc["right_size"] = d.right_size;
        doc["witness"]    = names_of(S, d.witness.mapping);
        return doc;
      };
      if (o.kind == "orthodox") {
        try {
          return present(orthodox_cs_decomposition(S));
        } catch (NotOrthodox const& e) {
          doc["orthodoxy_witness"]
              = names_of(S, {e.witness()[0], e.witness()[1]});
          return absent("NotOrthodox");
        } catch (NotCompletelySimple const&) {
          return absent("NotCompletelySimple");
        }
      }
      if (o.kind == "warne") {
        try {
          auto d = warne_decomposition(S, o.budget());
          return d ? present(*d) : absent("not abelian");
        } catch (NotRegular const&) {
          return absent("NotRegular");
        }
      }
      if (o.kind == "inverse") {
        try {
          auto g = inverse_supernilpotent_decomposition(S, o.max_arity,
                                                        o.budget());
          if (!g) {
            return absent("not supernilpotent within max arity");
          }
          doc["exists"] = true;
          doc["group"]  = group_json(*g);
          return doc;
        } catch (NotInverse const&) {
          return absent("NotInverse");
        }
      }
      throw InvalidArgument("unknown decomposition kind '" + o.kind + "'");
    }

    Json cmd_enumerate(Options const& o) {
      auto const list = enumerate_semigroups(o.order, o.filters);
      Json doc = base("enumerate");
      doc["order"]   = o.order;
      doc["filters"] = o.filters;
      doc["count"]   = list.size();
      Json items     = Json::array();
      for (auto const& e : list) {
        Json rows = Json::array();
        for (Element a = 0; a < e.semigroup.size(); ++a) {
          auto const r = e.semigroup.row(a);
          rows.push_back(Json(std::vector<Element>(r.begin(), r.end())));
        }
        items.push_back(Json{{"index", e.index}, {"table", rows}});
      }
      doc["semigroups"] = items;
      if (!o.manifest_out.empty()) {
        std::string spec = "generated:" + std::to_string(o.order);
        if (!o.filters.empty()) {
          spec += ":";
          for (std::size_t i = 0; i < o.filters.size(); ++i) {
            spec += (i ? "," : "") + o.filters[i];
          }
        }
        save_manifest(build_manifest({spec}), o.manifest_out);
        doc["manifest"] = o.manifest_out;
      }
      return doc;
    }

    Json cmd_verify(Options const& o, bool& failed) {
      CorpusManifest manifest;
      std::string    base_dir;
      if (!o.corpus.empty()) {
        manifest = load_manifest(o.corpus);
        base_dir = std::filesystem::path(o.corpus).parent_path().string();
      }
      if (!o.sources.empty()) {
        auto extra = build_manifest(o.sources);
        for (auto& e : extra.entries) {
          manifest.entries.push_back(std::move(e));
        }
      }
      if (manifest.entries.empty()) {
        throw InvalidArgument("verify-theorems needs --corpus or --source");
      }
      SuiteOptions opt;
      opt.budget    = o.budget();
      opt.max_arity = o.max_arity;
      opt.max_terms = o.max_terms;
      opt.workers   = o.workers;
      opt.only      = o.theorems;
      auto const report
          = verify_theorem_suite(materialize(manifest, base_dir), opt);
      failed   = report.has_failures();
      Json doc = Json::parse(theorem_report_to_json(report));
      Json out = base("verify-theorems");
      out["algebras"] = manifest.entries.size();
      out["max_arity"] = o.max_arity;
      out["max_terms"] = o.max_terms;
      out["counts"]    = doc["counts"];
      out["results"]   = doc["results"];
      if (!o.output.empty()) {
        std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
        if (!f) {
          throw FormatError("cannot write '" + o.output + "'");
        }
        f << out.dump(2) << "\n";
      }
      return out;
    }

    // Looks up a dotted key in the flattened document.
    std::optional<std::string> lookup(Json const& doc, std::string const& key) {
      for (auto const& [k, v] : flat_pairs(doc)) {
        if (k == key) {
          return v;
        }
      }
      return std::nullopt;
    }

    void emit_error(std::ostream& out, std::ostream& err,
                    std::string const& format, std::string const& kind,
                    std::string const& message) {
      if (format == "json") {
        Json doc{{"schema_version", CLI_SCHEMA_VERSION},
                 {"error", Json{{"kind", kind}, {"message", message}}}};
        out << doc.dump(2) << "\n";
      }
      err << "error: " << kind << ": " << message << "\n";
    }
  }  // namespace

  std::string render_human(std::string const& json_text) {
    std::string out;
    for (auto const& [k, v] : flat_pairs(Json::parse(json_text))) {
      out += k + ": " + v + "\n";
    }
    return out;
  }

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    Options  o;
    CLI::App app{"Commutators, degrees and structure of finite semigroups",
                 "semicomm"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool with_input) {
      if (with_input) {
        sub->add_option("input", o.input,
                        "builtin:NAME, rees:SPEC.json or a Cayley table file")
            ->required();
      }
      sub->add_option("--format", o.format, "human, json or dot")
          ->check(CLI::IsMember({"human", "json", "dot"}));
      sub->add_option("--cube-cap", o.cube_cap, "maximum cubes per cube set")
          ->check(CLI::PositiveNumber);
      sub->add_option("--lattice-cap", o.lattice_cap,
                      "maximum congruences per lattice")
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-arity", o.max_arity,
                      "largest commutator arity probed")
          ->check(CLI::Range(2, 15));
      sub->add_option("--max-terms", o.max_terms, "longest series computed")
          ->check(CLI::PositiveNumber);
      sub->add_option("--workers", o.workers,
                      "threads used for cube generation or corpus checks")
          ->check(CLI::PositiveNumber);
      sub->add_option("--assert", o.asserts,
                      "KEY=VALUE; exit 1 unless the output has that value");
    };

    auto* props = app.add_subcommand("props", "classification of a semigroup");
    common(props, true);
    auto* congs = app.add_subcommand("congruences", "the congruence lattice");
    common(congs, true);
    auto* comm = app.add_subcommand("commutator", "a k-ary commutator");
    common(comm, true);
    comm->add_option("--arity", o.arity, "number of congruences (>= 2)");
    comm->add_option("--alphas", o.alphas,
                     "congruences as partitions such as {0,1|2,3}; default "
                     "all full");
    auto* cent = app.add_subcommand("centralize",
                                    "the term condition C(alphas; delta)");
    common(cent, true);
    cent->add_option("--alphas", o.alphas, "congruences, last one centralized")
        ->required();
    cent->add_option("--delta", o.delta, "the congruence delta")->required();
    auto* degs = app.add_subcommand(
        "degrees", "nilpotency, solvability and supernilpotency");
    common(degs, true);
    auto* deco = app.add_subcommand("decompose",
                                    "direct-product decompositions");
    common(deco, true);
    deco->add_option("--kind", o.kind, "warne, orthodox or inverse")
        ->required()
        ->check(CLI::IsMember({"warne", "orthodox", "inverse"}));
    auto* enumr = app.add_subcommand("enumerate",
                                     "semigroups of an order up to isomorphism");
    common(enumr, false);
    enumr->add_option("--order", o.order, "order, at most 5")->required();
    enumr->add_option("--filter", o.filters, "property every result must have");
    enumr->add_option("--manifest", o.manifest_out,
                      "also write a corpus manifest here");
    auto* verify = app.add_subcommand("verify-theorems",
                                      "run the theorem checks over a corpus");
    common(verify, false);
    verify->add_option("--corpus", o.corpus, "corpus manifest file");
    verify->add_option("--source", o.sources,
                       "extra corpus source (builtin:NAME, file:PATH, "
                       "generated:N[:FILTERS])");
    verify->add_option("--theorem", o.theorems, "restrict to these ids");
    verify->add_option("--output", o.output, "also write the report here");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return EXIT_OK;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return EXIT_OK;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << "\n";
      return EXIT_USAGE;
    }

    auto* sub = app.get_subcommands().front();
    try {
      Json        doc;
      std::string dot;
      bool        failed = false;
      std::string const name = sub->get_name();
      if (o.format == "dot" && name != "congruences") {
        throw InvalidArgument("dot output is only available for congruences");
      }
      if (name == "props") {
        doc = cmd_props(o);
      } else if (name == "congruences") {
        doc = cmd_congruences(o, dot);
      } else if (name == "commutator") {
        doc = cmd_commutator(o);
      } else if (name == "centralize") {
        doc = cmd_centralize(o);
      } else if (name == "degrees") {
        doc = cmd_degrees(o);
      } else if (name == "decompose") {
        doc = cmd_decompose(o);
      } else if (name == "enumerate") {
        doc = cmd_enumerate(o);
      } else {
        doc = cmd_verify(o, failed);
      }

      int code = failed ? EXIT_FALSE : EXIT_OK;
      Json assertions = Json::array();
      for (auto const& a : o.asserts) {
        auto const eq = a.find('=');
        if (eq == std::string::npos) {
          throw InvalidArgument("assertion '" + a + "' is not KEY=VALUE");
        }
        auto const key    = a.substr(0, eq);
        auto const wanted = a.substr(eq + 1);
        auto const actual = lookup(doc, key);
        if (!actual) {
          throw InvalidArgument("assertion key '" + key
                                + "' is not in the output");
        }
        bool const holds = *actual == wanted;
        assertions.push_back(Json{{"key", key},
                                  {"expected", wanted},
                                  {"actual", *actual},
                                  {"holds", holds}});
        if (!holds) {
          code = EXIT_FALSE;
        }
      }
      if (!o.asserts.empty()) {
        doc["assertions"] = assertions;
      }

      if (o.format == "json") {
        out << doc.dump(2) << "\n";
      } else if (o.format == "dot") {
        out << dot;
      } else {
        out << render_human(doc.dump());
      }
      return code;
    } catch (BudgetExceeded const& e) {
      emit_error(out, err, o.format, e.kind(), e.what());
      return EXIT_BUDGET;
    } catch (Error const& e) {
      emit_error(out, err, o.format, e.kind(), e.what());
      return EXIT_USAGE;
    } catch (std::filesystem::filesystem_error const& e) {
      emit_error(out, err, o.format, "IOError", e.what());
      return EXIT_USAGE;
    }
  }

}  // namespace semicomm
