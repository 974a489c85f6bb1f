#include "semicomm/isomorphism.hpp"

#include <algorithm>
#include <array>

namespace semicomm {

  bool is_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T,
                      IsoWitness const& w) {
    std::size_t const n = S.size();
    if (T.size() != n || w.mapping.size() != n) {
      return false;
    }
    std::vector<bool> hit(n, false);
    for (Element x : w.mapping) {
      if (x >= n || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (w.mapping[S(a, b)] != T(w.mapping[a], w.mapping[b])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    using Signature = std::array<std::size_t, 9>;

    // Quantities preserved by every isomorphism.
    std::vector<Signature> signatures(FiniteSemigroup const& S) {
      std::size_t const n  = S.size();
      auto const        gc = green_classes(S);
      std::vector<std::size_t> r_size(n, 0), l_size(n, 0);
      for (Element x = 0; x < n; ++x) {
        ++r_size[gc.r_class_of[x]];
        ++l_size[gc.l_class_of[x]];
      }
      std::vector<Signature> out(n);
      for (Element x = 0; x < n; ++x) {
        // Index and period of the monogenic subsemigroup.
        std::vector<std::size_t> seen(n, 0);
        Element                  power = x;
        std::size_t              step  = 1;
        while (seen[power] == 0) {
          seen[power] = step++;
          power       = S(power, x);
        }
        std::size_t const index  = seen[power];
        std::size_t const period = step - seen[power];
        std::size_t right_fix = 0, left_fix = 0, right_image = 0,
                    left_image = 0;
        std::vector<bool> xs(n, false), sx(n, false);
        for (Element y = 0; y < n; ++y) {
          right_fix += S(x, y) == x;
          left_fix += S(y, x) == x;
          xs[S(x, y)] = true;
          sx[S(y, x)] = true;
        }
        right_image = static_cast<std::size_t>(
            std::count(xs.begin(), xs.end(), true));
        left_image = static_cast<std::size_t>(
            std::count(sx.begin(), sx.end(), true));
        out[x] = {S(x, x) == x, index,       period,
                  r_size[gc.r_class_of[x]], l_size[gc.l_class_of[x]],
                  right_fix,    left_fix,    right_image,
                  left_image};
      }
      return out;
    }

    class Search {
     public:
      Search(FiniteSemigroup const& S, FiniteSemigroup const& T,
             std::vector<Signature> const& sig_s,
             std::vector<Signature> const& sig_t)
          : _S(S), _T(T), _sig_s(sig_s), _sig_t(sig_t) {
        std::size_t const n = S.size();
        // Try elements with the rarest signature first.
        _order.resize(n);
        for (Element x = 0; x < n; ++x) {
          _order[x] = x;
        }
        auto rarity = [&](Element x) {
          return std::count(sig_s.begin(), sig_s.end(), sig_s[x]);
        };
        std::stable_sort(_order.begin(), _order.end(),
                         [&](Element a, Element b) {
                           return rarity(a) < rarity(b);
                         });
      }

      std::optional<IsoWitness> run() {
        std::size_t const n = _S.size();
        std::vector<Element> map(n, UNSET), inv(n, UNSET);
        if (solve(map, inv)) {
          return IsoWitness{map};
        }
        return std::nullopt;
      }

     private:
      static constexpr Element UNSET = static_cast<Element>(-1);

      // Assign x -> y and everything forced by products of assigned
      // elements. Returns false on a contradiction.
      bool assign(std::vector<Element>& map, std::vector<Element>& inv,
                  Element x, Element y) const {
        std::vector<std::pair<Element, Element>> queue{{x, y}};
        std::vector<Element> assigned;
        for (Element z = 0; z < map.size(); ++z) {
          if (map[z] != UNSET) {
            assigned.push_back(z);
          }
        }
        while (!queue.empty()) {
          auto const [a, fa] = queue.back();
          queue.pop_back();
          if (map[a] != UNSET) {
            if (map[a] != fa) {
              return false;
            }
            continue;
          }
          if (inv[fa] != UNSET || _sig_s[a] != _sig_t[fa]) {
            return false;
          }
          map[a]  = fa;
          inv[fa] = a;
          assigned.push_back(a);
          for (Element b : assigned) {
            queue.emplace_back(_S(a, b), _T(fa, map[b]));
            queue.emplace_back(_S(b, a), _T(map[b], fa));
          }
        }
        return true;
      }

      bool solve(std::vector<Element>& map, std::vector<Element>& inv) const {
        auto it = std::find_if(_order.begin(), _order.end(),
                               [&](Element x) { return map[x] == UNSET; });
        if (it == _order.end()) {
          return true;
        }
        Element const x = *it;
        for (Element y = 0; y < _T.size(); ++y) {
          if (inv[y] != UNSET || _sig_t[y] != _sig_s[x]) {
            continue;
          }
          auto map2 = map;
          auto inv2 = inv;
          if (assign(map2, inv2, x, y) && solve(map2, inv2)) {
            map = std::move(map2);
            inv = std::move(inv2);
            return true;
          }
        }
        return false;
      }

      FiniteSemigroup const&        _S;
      FiniteSemigroup const&        _T;
      std::vector<Signature> const& _sig_s;
      std::vector<Signature> const& _sig_t;
      std::vector<Element>          _order;
    };
  }  // namespace

  std::optional<IsoWitness> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    auto const sig_s = signatures(S);
    auto const sig_t = signatures(T);
    auto       sorted_s = sig_s;
    auto       sorted_t = sig_t;
    std::sort(sorted_s.begin(), sorted_s.end());
    std::sort(sorted_t.begin(), sorted_t.end());
    if (sorted_s != sorted_t) {
      return std::nullopt;
    }
    auto result = Search(S, T, sig_s, sig_t).run();
    if (result && !is_isomorphism(S, T, *result)) {
      throw TheoremViolation("isomorphism search produced an invalid map");
    }
    return result;
  }

  bool are_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    return find_isomorphism(S, T).has_value();
  }

}  // namespace semicomm
