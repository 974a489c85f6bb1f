#include "semicomm/constructors.hpp"

#include <algorithm>
#include <charconv>

#include "json.hpp"

namespace semicomm {

  namespace {
    using Table = std::vector<std::vector<Element>>;

    // Verified in tests/test_constructors.cpp; identity is always id 0.
    Table const S3_TABLE = {{0, 1, 2, 3, 4, 5},
                            {1, 0, 4, 5, 2, 3},
                            {2, 3, 0, 1, 5, 4},
                            {3, 2, 5, 4, 0, 1},
                            {4, 5, 1, 0, 3, 2},
                            {5, 4, 3, 2, 1, 0}};

    Table const D4_TABLE = {{0, 1, 2, 3, 4, 5, 6, 7},
                            {1, 0, 6, 7, 5, 4, 2, 3},
                            {2, 3, 0, 1, 6, 7, 4, 5},
                            {3, 2, 4, 5, 7, 6, 0, 1},
                            {4, 5, 3, 2, 0, 1, 7, 6},
                            {5, 4, 7, 6, 1, 0, 3, 2},
                            {6, 7, 1, 0, 2, 3, 5, 4},
                            {7, 6, 5, 4, 3, 2, 1, 0}};

    // 1, -1, i, -i, j, -j, k, -k
    Table const Q8_TABLE = {{0, 1, 2, 3, 4, 5, 6, 7},
                            {1, 0, 3, 2, 5, 4, 7, 6},
                            {2, 3, 1, 0, 6, 7, 5, 4},
                            {3, 2, 0, 1, 7, 6, 4, 5},
                            {4, 5, 7, 6, 1, 0, 2, 3},
                            {5, 4, 6, 7, 0, 1, 3, 2},
                            {6, 7, 4, 5, 3, 2, 1, 0},
                            {7, 6, 5, 4, 2, 3, 0, 1}};

    Table const C2XC2_TABLE
        = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

    std::vector<std::string> const Q8_NAMES
        = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};

    std::size_t parse_size(std::string const& s, std::string const& context) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
        throw UnknownAlgebra("bad size '" + s + "' in '" + context + "'");
      }
      return value;
    }
  }  // namespace

  GroupSpec::GroupSpec(FiniteSemigroup S)
      : _underlying(std::move(S)), _identity(0), _inverse() {
    std::size_t const n  = _underlying.size();
    bool              found = false;
    for (Element e = 0; e < n && !found; ++e) {
      found = true;
      for (Element x = 0; x < n && found; ++x) {
        found = _underlying(e, x) == x && _underlying(x, e) == x;
      }
      if (found) {
        _identity = e;
      }
    }
    if (!found) {
      throw InvalidGroup("no two-sided identity");
    }
    _inverse.resize(n);
    for (Element x = 0; x < n; ++x) {
      bool has_inverse = false;
      for (Element y = 0; y < n && !has_inverse; ++y) {
        if (_underlying(x, y) == _identity && _underlying(y, x) == _identity) {
          _inverse[x] = y;
          has_inverse = true;
        }
      }
      if (!has_inverse) {
        throw InvalidGroup("element " + std::to_string(x)
                           + " has no inverse");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  void validate(ReesSpec const& spec) {
    if (spec.i_size == 0 || spec.lambda_size == 0) {
      throw InvalidArgument("index sets must be nonempty");
    }
    if (spec.sandwich.size() != spec.lambda_size) {
      throw InvalidArgument("sandwich matrix must have |Lambda| rows");
    }
    for (std::size_t l = 0; l < spec.lambda_size; ++l) {
      if (spec.sandwich[l].size() != spec.i_size) {
        throw InvalidArgument("sandwich matrix must have |I| columns");
      }
      for (std::size_t i = 0; i < spec.i_size; ++i) {
        if (spec.sandwich[l][i] >= spec.group.size()) {
          throw InvalidArgument("sandwich entry is not a group element");
        }
      }
    }
    Element const e = spec.group.identity();
    for (std::size_t i = 0; i < spec.i_size; ++i) {
      if (spec.sandwich[0][i] != e) {
        throw NotNormalized("p[0][" + std::to_string(i)
                            + "] is not the identity");
      }
    }
    for (std::size_t l = 0; l < spec.lambda_size; ++l) {
      if (spec.sandwich[l][0] != e) {
        throw NotNormalized("p[" + std::to_string(l)
                            + "][0] is not the identity");
      }
    }
  }

  Element rees_code(ReesSpec const& spec, std::size_t i, Element g,
                    std::size_t lambda) {
    return static_cast<Element>((i * spec.group.size() + g) * spec.lambda_size
                                + lambda);
  }

  ReesCoordinates rees_coordinates(ReesSpec const& spec, Element x) {
    std::size_t const lambda = x % spec.lambda_size;
    std::size_t const rest   = x / spec.lambda_size;
    return {rest / spec.group.size(),
            static_cast<Element>(rest % spec.group.size()),
            lambda};
  }

  FiniteSemigroup rees_matrix(ReesSpec const& spec) {
    validate(spec);
    std::size_t const n
        = spec.i_size * spec.group.size() * spec.lambda_size;
    Table table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) {
      auto const a = rees_coordinates(spec, x);
      for (Element y = 0; y < n; ++y) {
        auto const    b = rees_coordinates(spec, y);
        Element const g = spec.group.product(
            spec.group.product(a.g, spec.sandwich[a.lambda][b.i]), b.g);
        table[x][y] = rees_code(spec, a.i, g, b.lambda);
      }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (Element x = 0; x < n; ++x) {
      auto const c = rees_coordinates(spec, x);
      names.push_back("(" + std::to_string(c.i + 1) + ","
                      + spec.group.underlying().name(c.g) + ","
                      + std::to_string(c.lambda + 1) + ")");
    }
    return FiniteSemigroup(table, std::move(names));
  }

  ReesSpec paper_s2_spec() {
    return ReesSpec{cyclic_group(2), 2, 2, {{0, 0}, {0, 1}}};
  }

  FiniteSemigroup paper_s2() {
    return rees_matrix(paper_s2_spec());
  }

  ////////////////////////////////////////////////////////////////////////
  // Bands and groups
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup left_zero(std::size_t n) {
    Table table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) {
      std::fill(table[x].begin(), table[x].end(), x);
    }
    return FiniteSemigroup(table);
  }

  FiniteSemigroup right_zero(std::size_t n) {
    Table table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[x][y] = y;
      }
    }
    return FiniteSemigroup(table);
  }

  FiniteSemigroup rectangular_band(std::size_t m, std::size_t k) {
    std::size_t const n = m * k;
    Table             table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[x][y] = static_cast<Element>((x / k) * k + y % k);
      }
    }
    return FiniteSemigroup(table);
  }

  FiniteSemigroup trivial_semigroup() {
    return FiniteSemigroup(Table{{0}});
  }

  GroupSpec cyclic_group(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("cyclic group of order 0");
    }
    Table                    table(n, std::vector<Element>(n));
    std::vector<std::string> names;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[x][y] = static_cast<Element>((x + y) % n);
      }
      names.push_back(x == 0   ? std::string("e")
                      : x == 1 ? std::string("g")
                               : "g^" + std::to_string(x));
    }
    return GroupSpec(FiniteSemigroup(table, std::move(names)));
  }

  GroupSpec builtin_group(std::string const& name) {
    if (name == "S3") {
      return GroupSpec(FiniteSemigroup(S3_TABLE));
    } else if (name == "D4") {
      return GroupSpec(FiniteSemigroup(D4_TABLE));
    } else if (name == "Q8") {
      return GroupSpec(FiniteSemigroup(Q8_TABLE, Q8_NAMES));
    } else if (name == "C2xC2") {
      return GroupSpec(FiniteSemigroup(C2XC2_TABLE));
    }
    throw UnknownGroupName("unknown group '" + name + "'");
  }

  FiniteSemigroup adjoin_zero(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    Table             table(n + 1, std::vector<Element>(n + 1, n));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[x][y] = S(x, y);
      }
    }
    std::vector<std::string> names = S.names();
    if (!names.empty()) {
      names.push_back("0");
    }
    return FiniteSemigroup(table, std::move(names));
  }

  FiniteSemigroup relabel(FiniteSemigroup const&      S,
                          std::vector<Element> const& perm) {
    std::size_t const n = S.size();
    if (perm.size() != n) {
      throw InvalidArgument("relabelling has the wrong length");
    }
    Table table(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[perm[x]][perm[y]] = perm[S(x, y)];
      }
    }
    std::vector<std::string> names;
    if (!S.names().empty()) {
      names.resize(n);
      for (Element x = 0; x < n; ++x) {
        names[perm[x]] = S.names()[x];
      }
    }
    return FiniteSemigroup(table, std::move(names));
  }

  FiniteSemigroup builtin_semigroup(std::string const& name) {
    auto const colon = name.find(':');
    if (colon != std::string::npos) {
      std::string const head = name.substr(0, colon);
      std::string const arg  = name.substr(colon + 1);
      if (head == "left_zero") {
        return left_zero(parse_size(arg, name));
      } else if (head == "right_zero") {
        return right_zero(parse_size(arg, name));
      } else if (head == "rect_band") {
        auto const x = arg.find('x');
        if (x == std::string::npos) {
          throw UnknownAlgebra("expected rect_band:MxK, got '" + name + "'");
        }
        return rectangular_band(parse_size(arg.substr(0, x), name),
                                parse_size(arg.substr(x + 1), name));
      } else if (head == "cyclic") {
        return cyclic_group(parse_size(arg, name)).underlying();
      } else if (head == "adjoin_zero") {
        return adjoin_zero(builtin_semigroup(arg));
      }
      throw UnknownAlgebra("unknown algebra '" + name + "'");
    }
    if (name == "paper_S2") {
      return paper_s2();
    } else if (name == "trivial") {
      return trivial_semigroup();
    } else if (name == "S3" || name == "D4" || name == "Q8"
               || name == "C2xC2") {
      return builtin_group(name).underlying();
    } else if (name.size() > 1 && name[0] == 'C') {
      return cyclic_group(parse_size(name.substr(1), name)).underlying();
    }
    throw UnknownAlgebra("unknown algebra '" + name + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON form
  ////////////////////////////////////////////////////////////////////////

  std::string rees_spec_to_json(ReesSpec const& spec) {
    nlohmann::json doc;
    doc["group_table"] = spec.group.underlying().table();
    if (!spec.group.underlying().names().empty()) {
      doc["group_names"] = spec.group.underlying().names();
    }
    doc["i_size"]      = spec.i_size;
    doc["lambda_size"] = spec.lambda_size;
    doc["sandwich"]    = spec.sandwich;
    return doc.dump(2) + "\n";
  }

  ReesSpec rees_spec_from_json(std::string const& text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
      auto table = doc.at("group_table").get<Table>();
      std::vector<std::string> names;
      if (doc.contains("group_names")) {
        names = doc.at("group_names").get<std::vector<std::string>>();
      }
      ReesSpec spec{GroupSpec(FiniteSemigroup(table, std::move(names))),
                    doc.at("i_size").get<std::size_t>(),
                    doc.at("lambda_size").get<std::size_t>(),
                    doc.at("sandwich").get<Table>()};
      validate(spec);
      return spec;
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(std::string("malformed Rees spec: ") + e.what());
    }
  }

}  // namespace semicomm
