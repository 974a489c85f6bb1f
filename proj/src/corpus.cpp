#include "semicomm/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "semicomm/constructors.hpp"

namespace semicomm {

  using nlohmann::json;

  std::vector<std::string> const& known_filters() {
    static std::vector<std::string> const names{
        "band",     "commutative", "completely_simple", "idempotent_antichain",
        "inverse",  "orthodox",    "regular",           "simple"};
    return names;
  }

  bool satisfies_filter(FiniteSemigroup const& S, std::string const& filter) {
    if (filter == "band") {
      return is_band(S);
    } else if (filter == "commutative") {
      return is_commutative(S);
    } else if (filter == "completely_simple") {
      return is_completely_simple(S);
    } else if (filter == "idempotent_antichain") {
      return is_idempotent_antichain(S);
    } else if (filter == "inverse") {
      return is_inverse_semigroup(S);
    } else if (filter == "orthodox") {
      return is_orthodox(S);
    } else if (filter == "regular") {
      return is_regular(S);
    } else if (filter == "simple") {
      return is_simple(S);
    }
    throw InvalidArgument("unknown filter '" + filter + "'");
  }

  namespace {
    constexpr int UNKNOWN = -1;

    // Least-table test: no relabeling yields a smaller row-major table.
    bool least_under_relabeling(std::vector<int> const& t, std::size_t n) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      while (std::next_permutation(perm.begin(), perm.end())) {
        // perm maps old labels to new ones; inv recovers the old label.
        std::vector<std::size_t> inv(n);
        for (std::size_t x = 0; x < n; ++x) {
          inv[perm[x]] = x;
        }
        for (std::size_t cell = 0; cell < n * n; ++cell) {
          std::size_t const p = cell / n, q = cell % n;
          int const relabeled = static_cast<int>(
              perm[static_cast<std::size_t>(t[inv[p] * n + inv[q]])]);
          if (relabeled != t[cell]) {
            if (relabeled < t[cell]) {
              return false;
            }
            break;
          }
        }
      }
      return true;
    }

    class Enumerator {
     public:
      using Visit = std::function<bool(std::size_t, std::vector<int> const&)>;

      Enumerator(std::size_t n, std::vector<std::string> filters, Visit visit)
          : _n(n),
            _filters(std::move(filters)),
            _visit(std::move(visit)),
            _t(n * n, UNKNOWN) {}

      void run() {
        fill(0);
      }

     private:
      int at(std::size_t a, std::size_t b) const {
        return _t[a * _n + b];
      }

      // Every associativity triple whose four entries are known and that
      // involves cell (x, y).
      bool consistent(std::size_t x, std::size_t y) const {
        int const v = at(x, y);
        for (std::size_t c = 0; c < _n; ++c) {
          // (xy)c = x(yc)
          int const yc = at(y, c);
          int const l  = at(static_cast<std::size_t>(v), c);
          if (yc != UNKNOWN && l != UNKNOWN) {
            int const r = at(x, static_cast<std::size_t>(yc));
            if (r != UNKNOWN && r != l) {
              return false;
            }
          }
        }
        for (std::size_t a = 0; a < _n; ++a) {
          // (ax)y = a(xy)
          int const ax = at(a, x);
          int const r  = at(a, static_cast<std::size_t>(v));
          if (ax != UNKNOWN && r != UNKNOWN) {
            int const l = at(static_cast<std::size_t>(ax), y);
            if (l != UNKNOWN && l != r) {
              return false;
            }
          }
        }
        for (std::size_t a = 0; a < _n; ++a) {
          for (std::size_t b = 0; b < _n; ++b) {
            // (ab)y with ab = x, against a(by).
            if (at(a, b) == static_cast<int>(x)) {
              int const by = at(b, y);
              if (by != UNKNOWN) {
                int const r = at(a, static_cast<std::size_t>(by));
                if (r != UNKNOWN && r != v) {
                  return false;
                }
              }
            }
            // x(ab) with ab = y, against (xa)b.
            if (at(a, b) == static_cast<int>(y)) {
              int const xa = at(x, a);
              if (xa != UNKNOWN) {
                int const l = at(static_cast<std::size_t>(xa), b);
                if (l != UNKNOWN && l != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      bool fill(std::size_t cell) {
        if (cell == _n * _n) {
          return complete();
        }
        std::size_t const x = cell / _n, y = cell % _n;
        for (std::size_t v = 0; v < _n; ++v) {
          _t[cell] = static_cast<int>(v);
          if (consistent(x, y) && !fill(cell + 1)) {
            _t[cell] = UNKNOWN;
            return false;
          }
        }
        _t[cell] = UNKNOWN;
        return true;
      }

      bool complete() {
        if (!least_under_relabeling(_t, _n)) {
          return true;
        }
        std::size_t const index = _classes++;
        if (!_filters.empty()) {
          FiniteSemigroup const S = to_semigroup(_t, _n);
          for (auto const& f : _filters) {
            if (!satisfies_filter(S, f)) {
              return true;
            }
          }
        }
        return _visit(index, _t);
      }

     public:
      static FiniteSemigroup to_semigroup(std::vector<int> const& t,
                                          std::size_t             n) {
        std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            table[a][b] = static_cast<Element>(t[a * n + b]);
          }
        }
        return FiniteSemigroup(table);
      }

     private:
      std::size_t              _n;
      std::vector<std::string> _filters;
      Visit                    _visit;
      std::vector<int>         _t;
      std::size_t              _classes = 0;
    };

    void check_request(std::size_t n, std::vector<std::string> const& filters,
                       bool allow_unfiltered_five) {
      if (n == 0) {
        throw InvalidArgument("order must be positive");
      }
      if (n > MAX_ENUMERATION_ORDER) {
        throw CapExceeded("enumeration is limited to order "
                          + std::to_string(MAX_ENUMERATION_ORDER));
      }
      if (n == MAX_ENUMERATION_ORDER && filters.empty()
          && !allow_unfiltered_five) {
        throw CapExceeded("order 5 enumeration requires a filter");
      }
      for (auto const& f : filters) {
        auto const& known = known_filters();
        if (std::find(known.begin(), known.end(), f) == known.end()) {
          throw InvalidArgument("unknown filter '" + f + "'");
        }
      }
    }
  }  // namespace

  std::vector<Enumerated> enumerate_semigroups(
      std::size_t n, std::vector<std::string> const& filters) {
    check_request(n, filters, false);
    std::vector<Enumerated> out;
    Enumerator(n, filters,
               [&](std::size_t index, std::vector<int> const& t) {
                 out.push_back({index, Enumerator::to_semigroup(t, n)});
                 return true;
               })
        .run();
    return out;
  }

  std::size_t count_semigroups(std::size_t                     n,
                               std::vector<std::string> const& filters) {
    check_request(n, filters, false);
    std::size_t count = 0;
    Enumerator(n, filters,
               [&](std::size_t, std::vector<int> const&) {
                 ++count;
                 return true;
               })
        .run();
    return count;
  }

  namespace {
    std::vector<int> flat(FiniteSemigroup const& S) {
      auto const& f = S.flat_table();
      return {f.begin(), f.end()};
    }
  }  // namespace

  bool is_canonical(FiniteSemigroup const& S) {
    return least_under_relabeling(flat(S), S.size());
  }

  FiniteSemigroup canonical_form(FiniteSemigroup const& S) {
    std::size_t const        n = S.size();
    std::vector<Element>     perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<FiniteSemigroup> best;
    do {
      FiniteSemigroup candidate = relabel(S, perm);
      auto const c = candidate.flat_table();
      if (!best
          || std::lexicographical_compare(c.begin(), c.end(),
                                          best->flat_table().begin(),
                                          best->flat_table().end())) {
        best = std::move(candidate);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return FiniteSemigroup(best->table());
  }

  PropertyCache compute_properties(FiniteSemigroup const& S) {
    PropertyCache p;
    p.order             = S.size();
    p.idempotent_count  = idempotents(S).size();
    p.regular           = is_regular(S);
    p.orthodox          = is_orthodox(S);
    p.inverse           = is_inverse_semigroup(S);
    p.completely_simple = is_completely_simple(S);
    p.band              = is_band(S);
    p.commutative       = is_commutative(S);
    return p;
  }

  namespace {
    std::string generated_id(std::size_t order, std::size_t index) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "gen%zu_%04zu", order, index);
      return buf;
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::stringstream        in(s);
      std::string              part;
      while (std::getline(in, part, sep)) {
        out.push_back(part);
      }
      return out;
    }

    std::size_t parse_order(std::string const& s) {
      if (s.empty()
          || !std::all_of(s.begin(), s.end(),
                          [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidArgument("bad order '" + s + "'");
      }
      return std::stoul(s);
    }

    // Visits canonical classes of order n (unfiltered order 5 allowed: the
    // caller wants specific indices).
    void for_each_class(std::size_t n, std::vector<std::string> const& filters,
                        Enumerator::Visit visit) {
      check_request(n, filters, true);
      Enumerator(n, filters, std::move(visit)).run();
    }
  }  // namespace

  CorpusManifest build_manifest(std::vector<std::string> const& specs) {
    CorpusManifest        manifest;
    std::set<std::string> ids;
    auto add = [&](ManifestEntry entry, FiniteSemigroup const& S) {
      if (!ids.insert(entry.id).second) {
        throw InvalidArgument("duplicate manifest id '" + entry.id + "'");
      }
      entry.properties = compute_properties(S);
      manifest.entries.push_back(std::move(entry));
    };
    for (auto const& spec : specs) {
      auto const colon = spec.find(':');
      std::string const scheme
          = colon == std::string::npos ? "" : spec.substr(0, colon);
      std::string const rest
          = colon == std::string::npos ? spec : spec.substr(colon + 1);
      if (scheme == "builtin") {
        ManifestEntry e;
        e.id   = spec;
        e.kind = SourceKind::builtin;
        e.name = rest;
        add(e, builtin_semigroup(rest));
      } else if (scheme == "file") {
        ManifestEntry e;
        e.id   = spec;
        e.kind = SourceKind::file;
        e.name = rest;
        add(e, read_cayley_file(rest));
      } else if (scheme == "generated") {
        auto const parts = split(rest, ':');
        if (parts.empty() || parts.size() > 2) {
          throw InvalidArgument("bad generated spec '" + spec + "'");
        }
        std::vector<std::string> filters;
        if (parts.size() == 2) {
          filters = split(parts[1], ',');
        }
        std::size_t lo, hi;
        auto const  dash = parts[0].find('-');
        if (dash == std::string::npos) {
          lo = hi = parse_order(parts[0]);
        } else {
          lo = parse_order(parts[0].substr(0, dash));
          hi = parse_order(parts[0].substr(dash + 1));
        }
        for (std::size_t n = lo; n <= hi; ++n) {
          for (auto const& item : enumerate_semigroups(n, filters)) {
            ManifestEntry e;
            e.id    = generated_id(n, item.index);
            e.kind  = SourceKind::generated;
            e.order = n;
            e.index = item.index;
            add(e, item.semigroup);
          }
        }
      } else {
        throw InvalidArgument("unknown corpus source '" + spec + "'");
      }
    }
    return manifest;
  }

  namespace {
    json properties_to_json(PropertyCache const& p) {
      return json{{"order", p.order},
                  {"idempotent_count", p.idempotent_count},
                  {"regular", p.regular},
                  {"orthodox", p.orthodox},
                  {"inverse", p.inverse},
                  {"completely_simple", p.completely_simple},
                  {"band", p.band},
                  {"commutative", p.commutative}};
    }

    PropertyCache properties_from_json(json const& j) {
      PropertyCache p;
      p.order             = j.at("order").get<std::size_t>();
      p.idempotent_count  = j.at("idempotent_count").get<std::size_t>();
      p.regular           = j.at("regular").get<bool>();
      p.orthodox          = j.at("orthodox").get<bool>();
      p.inverse           = j.at("inverse").get<bool>();
      p.completely_simple = j.at("completely_simple").get<bool>();
      p.band              = j.at("band").get<bool>();
      p.commutative       = j.at("commutative").get<bool>();
      return p;
    }

    std::string kind_name(SourceKind k) {
      switch (k) {
        case SourceKind::builtin:
          return "builtin";
        case SourceKind::file:
          return "file";
        case SourceKind::generated:
          return "generated";
      }
      return "unknown";
    }
  }  // namespace

  std::string manifest_to_json(CorpusManifest const& manifest) {
    json entries = json::array();
    for (auto const& e : manifest.entries) {
      json source{{"kind", kind_name(e.kind)}};
      if (e.kind == SourceKind::generated) {
        source["order"] = e.order;
        source["index"] = e.index;
      } else {
        source["name"] = e.name;
      }
      entries.push_back(json{{"id", e.id},
                             {"source", source},
                             {"properties", properties_to_json(e.properties)}});
    }
    json doc{{"schema_version", MANIFEST_SCHEMA_VERSION},
             {"cache_version", manifest.cache_version},
             {"entries", entries}};
    return doc.dump(2) + "\n";
  }

  CorpusManifest manifest_from_json(std::string const& text,
                                    std::string const& base_dir) {
    CorpusManifest manifest;
    try {
      json const doc = json::parse(text);
      if (doc.at("schema_version").get<int>() != MANIFEST_SCHEMA_VERSION) {
        throw FormatError("unsupported manifest schema version");
      }
      int const             version = doc.at("cache_version").get<int>();
      std::set<std::string> ids;
      for (auto const& j : doc.at("entries")) {
        ManifestEntry e;
        e.id = j.at("id").get<std::string>();
        if (!ids.insert(e.id).second) {
          throw FormatError("duplicate manifest id '" + e.id + "'");
        }
        auto const&       source = j.at("source");
        std::string const kind   = source.at("kind").get<std::string>();
        if (kind == "builtin" || kind == "file") {
          e.kind = kind == "builtin" ? SourceKind::builtin : SourceKind::file;
          e.name = source.at("name").get<std::string>();
        } else if (kind == "generated") {
          e.kind  = SourceKind::generated;
          e.order = source.at("order").get<std::size_t>();
          e.index = source.at("index").get<std::size_t>();
        } else {
          throw FormatError("unknown source kind '" + kind + "'");
        }
        if (version == MANIFEST_CACHE_VERSION) {
          e.properties = properties_from_json(j.at("properties"));
        }
        manifest.entries.push_back(std::move(e));
      }
      if (version != MANIFEST_CACHE_VERSION) {
        for (auto& e : manifest.entries) {
          e.properties = compute_properties(materialize(e, base_dir));
        }
      }
    } catch (json::exception const& ex) {
      throw FormatError(std::string("malformed manifest: ") + ex.what());
    }
    manifest.cache_version = MANIFEST_CACHE_VERSION;
    return manifest;
  }

  void save_manifest(CorpusManifest const& manifest, std::string const& path) {
    std::string const tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw FormatError("cannot write '" + tmp + "'");
      }
      out << manifest_to_json(manifest);
      if (!out) {
        throw FormatError("cannot write '" + tmp + "'");
      }
    }
    std::filesystem::rename(tmp, path);
  }

  CorpusManifest load_manifest(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw FormatError("cannot read '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto const dir = std::filesystem::path(path).parent_path().string();
    return manifest_from_json(buffer.str(), dir);
  }

  FiniteSemigroup materialize(ManifestEntry const& entry,
                              std::string const&   base_dir) {
    switch (entry.kind) {
      case SourceKind::builtin:
        return builtin_semigroup(entry.name);
      case SourceKind::file: {
        std::filesystem::path p(entry.name);
        if (p.is_relative() && !base_dir.empty()) {
          p = std::filesystem::path(base_dir) / p;
        }
        return read_cayley_file(p.string());
      }
      case SourceKind::generated:
        break;
    }
    std::optional<FiniteSemigroup> found;
    for_each_class(entry.order, {},
                   [&](std::size_t index, std::vector<int> const& t) {
                     if (index == entry.index) {
                       found = Enumerator::to_semigroup(t, entry.order);
                       return false;
                     }
                     return true;
                   });
    if (!found) {
      throw FormatError("no generated class " + std::to_string(entry.index)
                        + " of order " + std::to_string(entry.order));
    }
    return *found;
  }

  std::vector<CorpusAlgebra> materialize(CorpusManifest const& manifest,
                                         std::string const&    base_dir) {
    std::vector<CorpusAlgebra> out;
    // Generated classes are enumerated once per order.
    std::map<std::size_t, std::vector<FiniteSemigroup>> generated;
    for (auto const& e : manifest.entries) {
      if (e.kind == SourceKind::generated) {
        auto& list = generated[e.order];
        if (list.empty()) {
          for_each_class(e.order, {},
                         [&](std::size_t, std::vector<int> const& t) {
                           list.push_back(Enumerator::to_semigroup(t, e.order));
                           return true;
                         });
        }
        if (e.index >= list.size()) {
          throw FormatError("no generated class " + std::to_string(e.index)
                            + " of order " + std::to_string(e.order));
        }
        out.push_back({e.id, list[e.index]});
      } else {
        out.push_back({e.id, materialize(e, base_dir)});
      }
    }
    return out;
  }

}  // namespace semicomm
