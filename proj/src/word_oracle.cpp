#include "semicomm/word_oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace semicomm {

  namespace {
    using Tuple = std::vector<Element>;

    // Pairs (a, b) with a alpha b, in lexicographic order.
    std::vector<std::pair<Element, Element>> related_pairs(
        Congruence const& alpha) {
      std::vector<std::pair<Element, Element>> out;
      for (Element a = 0; a < alpha.size(); ++a) {
        for (Element b = 0; b < alpha.size(); ++b) {
          if (alpha.related(a, b)) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

    // Advance a nondecreasing sequence of indices below `bound`; false when
    // exhausted. Variables of one block are interchangeable, so only sorted
    // choices need visiting.
    bool next_sorted(std::vector<std::size_t>& idx, std::size_t bound) {
      for (std::size_t i = idx.size(); i-- > 0;) {
        if (idx[i] + 1 < bound) {
          ++idx[i];
          for (std::size_t j = i + 1; j < idx.size(); ++j) {
            idx[j] = idx[i];
          }
          return true;
        }
      }
      return false;
    }
  }  // namespace

  std::vector<std::vector<Element>>
  oracle_value_tuples(FiniteSemigroup const&      S,
                      std::span<Congruence const> alphas,
                      WordOracleLimits const&     limits) {
    std::size_t const n       = S.size();
    std::size_t const k       = alphas.size();
    std::size_t const corners = std::size_t(1) << k;
    std::size_t const arity   = limits.max_block_arity;
    if (k == 0) {
      throw InvalidArgument("oracle needs at least one congruence");
    }
    if (n > limits.max_order) {
      throw OracleBudgetExceeded("order " + std::to_string(n)
                                 + " exceeds the oracle guard");
    }

    std::vector<std::vector<std::pair<Element, Element>>> pairs;
    double assignments = 1;
    for (auto const& alpha : alphas) {
      pairs.push_back(related_pairs(alpha));
      double m = static_cast<double>(pairs.back().size());
      for (std::size_t u = 0; u < arity; ++u) {
        assignments *= m;
      }
    }
    double tuple_space = 1;
    for (std::size_t b = 0; b < corners; ++b) {
      tuple_space *= static_cast<double>(n);
    }
    double const alphabet = static_cast<double>(n + k * arity);
    double const work     = assignments * tuple_space * alphabet
                        * static_cast<double>(limits.max_word_len);
    if (work > static_cast<double>(limits.max_work)) {
      throw OracleBudgetExceeded("estimated oracle work too large");
    }

    std::set<Tuple> result;
    // Per-block sorted choices of pair indices, one per variable.
    std::vector<std::vector<std::size_t>> choice(
        k, std::vector<std::size_t>(arity, 0));
    while (true) {
      // Letter values at each corner: constants then variables.
      std::vector<Tuple> letters;
      for (Element c = 0; c < n; ++c) {
        letters.emplace_back(corners, c);
      }
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t u = 0; u < arity; ++u) {
          auto const [a, b] = pairs[j][choice[j][u]];
          Tuple value(corners);
          for (std::size_t corner = 0; corner < corners; ++corner) {
            value[corner] = ((corner >> j) & 1) ? b : a;
          }
          letters.push_back(std::move(value));
        }
      }
      // Words of length l + 1 are words of length l followed by a letter;
      // equal prefix values give equal extensions.
      std::set<Tuple> level(letters.begin(), letters.end());
      std::set<Tuple> seen = level;
      for (std::size_t len = 1; len < limits.max_word_len; ++len) {
        std::set<Tuple> next;
        for (auto const& prefix : level) {
          for (auto const& letter : letters) {
            Tuple value(corners);
            for (std::size_t corner = 0; corner < corners; ++corner) {
              value[corner] = S(prefix[corner], letter[corner]);
            }
            if (seen.insert(value).second) {
              next.insert(std::move(value));
            }
          }
        }
        if (next.empty()) {
          break;
        }
        level = std::move(next);
      }
      result.insert(seen.begin(), seen.end());

      std::size_t j = k;
      while (j-- > 0) {
        if (next_sorted(choice[j], pairs[j].size())) {
          break;
        }
        std::fill(choice[j].begin(), choice[j].end(), 0);
      }
      if (j == static_cast<std::size_t>(-1)) {
        break;
      }
    }
    return {result.begin(), result.end()};
  }

  bool oracle_condition_holds(std::vector<std::vector<Element>> const& tuples,
                              Congruence const& delta) {
    for (auto const& t : tuples) {
      std::size_t const top  = t.size() / 2;
      std::size_t const ones = top - 1;
      bool premises = true;
      for (std::size_t b = 0; b < top && premises; ++b) {
        if (b != ones) {
          premises = delta.related(t[b], t[b + top]);
        }
      }
      if (premises && !delta.related(t[ones], t[ones + top])) {
        return false;
      }
    }
    return true;
  }

  bool oracle_centralizes_by_words(FiniteSemigroup const&      S,
                                   std::span<Congruence const> alphas,
                                   Congruence const&           delta,
                                   WordOracleLimits const&     limits) {
    return oracle_condition_holds(oracle_value_tuples(S, alphas, limits),
                                  delta);
  }

}  // namespace semicomm
