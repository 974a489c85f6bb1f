#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

  namespace {
    void grow(Labels& cur, std::size_t pos, std::size_t blocks,
              std::vector<Labels>& out) {
      if (pos == cur.size()) {
        out.push_back(cur);
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        cur[pos] = b;
        grow(cur, pos + 1, std::max(blocks, b + 1), out);
      }
    }

    // Restricted growth string to least-member class ids.
    Labels least_member_labels(Labels const& rgs) {
      std::vector<std::size_t> first(rgs.size(), rgs.size());
      Labels                   out(rgs.size());
      for (std::size_t x = 0; x < rgs.size(); ++x) {
        if (first[rgs[x]] == rgs.size()) {
          first[rgs[x]] = x;
        }
        out[x] = first[rgs[x]];
      }
      return out;
    }
  }  // namespace

  std::vector<Labels> all_partitions(std::size_t n) {
    std::vector<Labels> out;
    if (n == 0) {
      return {Labels{}};
    }
    Labels cur(n, 0);
    grow(cur, 1, 1, out);
    return out;
  }

  std::size_t partition_count(std::size_t n) {
    return all_partitions(n).size();
  }

  std::vector<Labels> brute_force_congruences(FiniteSemigroup const& S) {
    std::size_t const   n = S.size();
    std::vector<Labels> out;
    for (auto const& p : all_partitions(n)) {
      bool ok = true;
      for (Element a = 0; a < n && ok; ++a) {
        for (Element b = 0; b < n && ok; ++b) {
          if (p[a] != p[b]) {
            continue;
          }
          for (Element c = 0; c < n && ok; ++c) {
            ok = p[S(a, c)] == p[S(b, c)] && p[S(c, a)] == p[S(c, b)];
          }
        }
      }
      if (ok) {
        out.push_back(least_member_labels(p));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {
    using Table = std::vector<Element>;

    bool associative(Table const& t, std::size_t n) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    Table least_relabeling(Table const& t, std::size_t n) {
      std::vector<Element> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      Table best = t;
      do {
        Table r(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            r[perm[a] * n + perm[b]] = perm[t[a * n + b]];
          }
        }
        best = std::min(best, r);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }

    std::set<Table> classes(std::size_t n) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < n * n; ++i) {
        total *= n;
      }
      std::set<Table> out;
      Table           t(n * n);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n * n; ++i) {
          t[i] = static_cast<Element>(c % n);
          c /= n;
        }
        if (associative(t, n)) {
          out.insert(least_relabeling(t, n));
        }
      }
      return out;
    }
  }  // namespace

  std::size_t brute_force_semigroup_classes(std::size_t n) {
    return classes(n).size();
  }

  std::vector<FiniteSemigroup> brute_force_semigroups(std::size_t n) {
    std::vector<FiniteSemigroup> out;
    for (auto const& t : classes(n)) {
      std::vector<std::vector<Element>> rows(n);
      for (std::size_t a = 0; a < n; ++a) {
        rows[a].assign(t.begin() + a * n, t.begin() + (a + 1) * n);
      }
      out.emplace_back(rows);
    }
    return out;
  }

  semicomm::ReesSpec random_rees_spec(std::mt19937_64& rng,
                                      std::size_t      max_group,
                                      std::size_t      max_i,
                                      std::size_t      max_lambda) {
    std::vector<semicomm::GroupSpec> groups;
    for (std::size_t k = 1; k <= max_group; ++k) {
      groups.push_back(semicomm::cyclic_group(k));
    }
    if (max_group >= 4) {
      groups.push_back(semicomm::builtin_group("C2xC2"));
    }
    auto pick = [&](std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    semicomm::GroupSpec G = groups[pick(0, groups.size() - 1)];
    std::size_t const   m = pick(1, max_i);
    std::size_t const   k = pick(1, max_lambda);
    std::vector<std::vector<Element>> P(k, std::vector<Element>(m));
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t i = 0; i < m; ++i) {
        P[l][i] = (l == 0 || i == 0)
                      ? G.identity()
                      : static_cast<Element>(pick(0, G.size() - 1));
      }
    }
    return semicomm::ReesSpec{G, m, k, P};
  }

  std::vector<Element> random_permutation(std::mt19937_64& rng,
                                          std::size_t      n) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

}  // namespace oracle
