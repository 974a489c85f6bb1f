#include "semicomm/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace semicomm {

  FiniteSemigroup::FiniteSemigroup(
      std::vector<std::vector<Element>> const& table,
      std::vector<std::string>                 names)
      : _n(table.size()), _table(), _names(std::move(names)) {
    if (_n == 0) {
      throw InvalidArgument("a semigroup must have at least one element");
    }
    if (!_names.empty() && _names.size() != _n) {
      throw InvalidArgument("expected " + std::to_string(_n)
                            + " names, found "
                            + std::to_string(_names.size()));
    }
    _table.reserve(_n * _n);
    for (std::size_t a = 0; a < _n; ++a) {
      if (table[a].size() != _n) {
        throw InvalidArgument("row " + std::to_string(a) + " has "
                              + std::to_string(table[a].size())
                              + " entries, expected " + std::to_string(_n));
      }
      for (std::size_t b = 0; b < _n; ++b) {
        if (table[a][b] >= _n) {
          throw OutOfRangeEntry("entry (" + std::to_string(a) + ", "
                                + std::to_string(b) + ") = "
                                + std::to_string(table[a][b])
                                + " is not an element id");
        }
        _table.push_back(table[a][b]);
      }
    }
    for (Element a = 0; a < _n; ++a) {
      for (Element b = 0; b < _n; ++b) {
        Element const ab = product(a, b);
        for (Element c = 0; c < _n; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            throw NotAssociative(a,
                                 b,
                                 c,
                                 "(" + std::to_string(a) + "*"
                                     + std::to_string(b) + ")*"
                                     + std::to_string(c) + " != "
                                     + std::to_string(a) + "*("
                                     + std::to_string(b) + "*"
                                     + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  std::vector<std::vector<Element>> FiniteSemigroup::table() const {
    std::vector<std::vector<Element>> out(_n);
    for (Element a = 0; a < _n; ++a) {
      out[a].assign(row(a).begin(), row(a).end());
    }
    return out;
  }

  std::string FiniteSemigroup::name(Element x) const {
    return _names.empty() ? std::to_string(x) : _names[x];
  }

  std::vector<Element> FiniteSemigroup::coordinates(Element x) const {
    if (_factor_orders.empty()) {
      throw MissingProductMetadata("semigroup is not a direct product");
    }
    std::vector<Element> out(_factor_orders.size());
    for (std::size_t i = _factor_orders.size(); i-- > 0;) {
      out[i] = static_cast<Element>(x % _factor_orders[i]);
      x /= static_cast<Element>(_factor_orders[i]);
    }
    return out;
  }

  Element FiniteSemigroup::encode(std::span<Element const> coords) const {
    if (_factor_orders.empty()) {
      throw MissingProductMetadata("semigroup is not a direct product");
    }
    if (coords.size() != _factor_orders.size()) {
      throw InvalidArgument("wrong number of coordinates");
    }
    Element x = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      x = x * static_cast<Element>(_factor_orders[i]) + coords[i];
    }
    return x;
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents and predicates
  ////////////////////////////////////////////////////////////////////////

  bool is_idempotent(FiniteSemigroup const& S, Element e) {
    return S(e, e) == e;
  }

  std::vector<Element> idempotents(FiniteSemigroup const& S) {
    std::vector<Element> out;
    for (Element e = 0; e < S.size(); ++e) {
      if (is_idempotent(S, e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  bool natural_leq(FiniteSemigroup const& S, Element e, Element f) {
    if (!is_idempotent(S, e) || !is_idempotent(S, f)) {
      throw NotIdempotent("natural order is only defined on idempotents");
    }
    return S(e, f) == e && S(f, e) == e;
  }

  bool is_idempotent_antichain(FiniteSemigroup const& S) {
    auto const E = idempotents(S);
    for (Element e : E) {
      for (Element f : E) {
        if (e != f && natural_leq(S, e, f)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_regular(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      bool found = false;
      for (Element y = 0; y < S.size() && !found; ++y) {
        found = S(S(x, y), x) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  std::vector<Element> inverses_of(FiniteSemigroup const& S, Element x) {
    std::vector<Element> out;
    for (Element y = 0; y < S.size(); ++y) {
      if (S(S(x, y), x) == x && S(S(y, x), y) == y) {
        out.push_back(y);
      }
    }
    return out;
  }

  bool is_band(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      if (!is_idempotent(S, x)) {
        return false;
      }
    }
    return true;
  }

  bool is_left_zero(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        if (S(x, y) != x) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_right_zero(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        if (S(x, y) != y) {
          return false;
        }
      }
    }
    return true;
  }

  // A band satisfying xyx = x is a rectangular band.
  bool is_rectangular_band(FiniteSemigroup const& S) {
    if (!is_band(S)) {
      return false;
    }
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        if (S(S(x, y), x) != x) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_commutative(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = x + 1; y < S.size(); ++y) {
        if (S(x, y) != S(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_orthodox(FiniteSemigroup const& S) {
    if (!is_regular(S)) {
      return false;
    }
    auto const E = idempotents(S);
    for (Element e : E) {
      for (Element f : E) {
        if (!is_idempotent(S, S(e, f))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    std::vector<Element> to_sorted(std::vector<bool> const& mask) {
      std::vector<Element> out;
      for (Element x = 0; x < mask.size(); ++x) {
        if (mask[x]) {
          out.push_back(x);
        }
      }
      return out;
    }
  }  // namespace

  std::vector<Element> principal_right_ideal(FiniteSemigroup const& S,
                                             Element               a) {
    std::vector<bool> in(S.size(), false);
    in[a] = true;
    for (Element s = 0; s < S.size(); ++s) {
      in[S(a, s)] = true;
    }
    return to_sorted(in);
  }

  std::vector<Element> principal_left_ideal(FiniteSemigroup const& S,
                                            Element               a) {
    std::vector<bool> in(S.size(), false);
    in[a] = true;
    for (Element s = 0; s < S.size(); ++s) {
      in[S(s, a)] = true;
    }
    return to_sorted(in);
  }

  std::vector<Element> principal_ideal(FiniteSemigroup const& S, Element a) {
    std::vector<bool> in(S.size(), false);
    for (Element x : principal_right_ideal(S, a)) {
      in[x] = true;
      for (Element s = 0; s < S.size(); ++s) {
        in[S(s, x)] = true;
      }
    }
    return to_sorted(in);
  }

  bool is_simple(FiniteSemigroup const& S) {
    for (Element a = 0; a < S.size(); ++a) {
      if (principal_ideal(S, a).size() != S.size()) {
        return false;
      }
    }
    return true;
  }

  bool is_completely_simple(FiniteSemigroup const& S) {
    if (!is_simple(S)) {
      return false;
    }
    auto const E = idempotents(S);
    return std::any_of(E.begin(), E.end(), [&](Element e) {
      return std::none_of(E.begin(), E.end(), [&](Element f) {
        return f != e && natural_leq(S, f, e);
      });
    });
  }

  bool is_inverse_semigroup(FiniteSemigroup const& S) {
    if (!is_regular(S)) {
      return false;
    }
    for (Element x = 0; x < S.size(); ++x) {
      if (inverses_of(S, x).size() != 1) {
        return false;
      }
    }
    return true;
  }

  GreenClasses green_classes(FiniteSemigroup const& S) {
    GreenClasses out;
    out.r_class_of.resize(S.size());
    out.l_class_of.resize(S.size());
    std::map<std::vector<Element>, std::size_t> r_ids, l_ids;
    for (Element a = 0; a < S.size(); ++a) {
      auto [rit, rnew] = r_ids.emplace(principal_right_ideal(S, a),
                                       r_ids.size());
      out.r_class_of[a] = rit->second;
      auto [lit, lnew] = l_ids.emplace(principal_left_ideal(S, a),
                                       l_ids.size());
      out.l_class_of[a] = lit->second;
    }
    out.r_count = r_ids.size();
    out.l_count = l_ids.size();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct products
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup direct_product(std::vector<FiniteSemigroup> const& factors) {
    if (factors.empty()) {
      throw InvalidArgument("direct product needs at least one factor");
    }
    std::vector<std::size_t> orders;
    std::size_t              n = 1;
    for (auto const& F : factors) {
      orders.push_back(F.size());
      n *= F.size();
    }
    auto coords = [&](std::size_t x) {
      std::vector<Element> c(orders.size());
      for (std::size_t i = orders.size(); i-- > 0;) {
        c[i] = static_cast<Element>(x % orders[i]);
        x /= orders[i];
      }
      return c;
    };
    auto encode = [&](std::vector<Element> const& c) {
      Element x = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        x = x * static_cast<Element>(orders[i]) + c[i];
      }
      return x;
    };
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
      auto const ca = coords(a);
      for (std::size_t b = 0; b < n; ++b) {
        auto       cb = coords(b);
        for (std::size_t i = 0; i < cb.size(); ++i) {
          cb[i] = factors[i](ca[i], cb[i]);
        }
        table[a][b] = encode(cb);
      }
    }
    std::vector<std::string> names;
    bool all_named = std::all_of(factors.begin(), factors.end(), [](auto& F) {
      return !F.names().empty();
    });
    if (all_named) {
      for (std::size_t x = 0; x < n; ++x) {
        auto const  c = coords(x);
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
          s += (i == 0 ? "" : ",") + factors[i].name(c[i]);
        }
        names.push_back(s + ")");
      }
    }
    FiniteSemigroup out(table, std::move(names));
    out._factor_orders = std::move(orders);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley text format
  ////////////////////////////////////////////////////////////////////////

  std::string to_cayley_text(FiniteSemigroup const& S) {
    std::ostringstream out;
    out << S.size() << '\n';
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = 0; b < S.size(); ++b) {
        out << (b == 0 ? "" : " ") << S(a, b);
      }
      out << '\n';
    }
    if (!S.names().empty()) {
      out << "# names:";
      for (auto const& name : S.names()) {
        out << ' ' << name;
      }
      out << '\n';
    }
    return out.str();
  }

  FiniteSemigroup from_cayley_text(std::string const& text) {
    std::istringstream in(text);
    std::string        line;
    auto next_line = [&](std::string& into) -> bool {
      while (std::getline(in, into)) {
        if (into.find_first_not_of(" \t\r") != std::string::npos) {
          return true;
        }
      }
      return false;
    };
    if (!next_line(line)) {
      throw FormatError("empty Cayley table");
    }
    long long n = 0;
    {
      std::istringstream head(line);
      if (!(head >> n) || n <= 0) {
        throw FormatError("first line must be a positive order, got '" + line
                          + "'");
      }
      std::string rest;
      if (head >> rest) {
        throw FormatError("trailing data after the order");
      }
    }
    std::vector<std::vector<Element>> table;
    for (long long a = 0; a < n; ++a) {
      if (!next_line(line)) {
        throw FormatError("expected " + std::to_string(n) + " rows, found "
                          + std::to_string(a));
      }
      std::istringstream      row(line);
      std::vector<Element> entries;
      long long               v;
      while (row >> v) {
        if (v < 0) {
          throw OutOfRangeEntry("negative entry in row " + std::to_string(a));
        }
        entries.push_back(static_cast<Element>(v));
      }
      if (!row.eof()) {
        throw FormatError("non-numeric entry in row " + std::to_string(a));
      }
      if (entries.size() != static_cast<std::size_t>(n)) {
        throw FormatError("row " + std::to_string(a) + " has "
                          + std::to_string(entries.size()) + " entries");
      }
      table.push_back(std::move(entries));
    }
    std::vector<std::string> names;
    if (next_line(line)) {
      std::string const prefix = "# names:";
      if (line.rfind(prefix, 0) != 0) {
        throw FormatError("unexpected trailing line '" + line + "'");
      }
      std::istringstream rest(line.substr(prefix.size()));
      std::string        name;
      while (rest >> name) {
        names.push_back(name);
      }
      if (next_line(line)) {
        throw FormatError("unexpected data after the names line");
      }
    }
    return FiniteSemigroup(table, std::move(names));
  }

  FiniteSemigroup read_cayley_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw FormatError("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_cayley_text(buffer.str());
  }

}  // namespace semicomm
