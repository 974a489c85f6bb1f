#include "semicomm/series.hpp"

#include <algorithm>

namespace semicomm {

  std::string to_string(SeriesKind kind) {
    switch (kind) {
      case SeriesKind::lower_central:
        return "lower_central";
      case SeriesKind::derived:
        return "derived";
      case SeriesKind::supernilpotent_arity:
        return "supernilpotent_arity";
    }
    return "unknown";
  }

  namespace {
    template <typename Next>
    SeriesReport iterate(FiniteSemigroup const& S, SeriesKind kind,
                         std::size_t max_terms, Next next) {
      if (max_terms == 0) {
        throw InvalidArgument("max_terms must be positive");
      }
      SeriesReport report;
      report.kind    = kind;
      Congruence one = Partition::full(S.size());
      Congruence cur = next(one);
      while (true) {
        report.terms.push_back(cur);
        if (cur.is_identity()) {
          report.degree = report.terms.size();
          return report;
        }
        if (report.terms.size() >= 2
            && report.terms[report.terms.size() - 2] == cur) {
          report.stabilized = true;
          return report;
        }
        if (report.terms.size() >= max_terms) {
          report.budget_exhausted = true;
          return report;
        }
        cur = next(cur);
      }
    }
  }  // namespace

  SeriesReport lower_central_series(FiniteSemigroup const& S,
                                    std::size_t            max_terms,
                                    Budget const&          budget) {
    Congruence const one = Partition::full(S.size());
    return iterate(S, SeriesKind::lower_central, max_terms,
                   [&](Congruence const& prev) {
                     std::vector<Congruence> alphas{one, prev};
                     return commutator(S, alphas, budget);
                   });
  }

  SeriesReport derived_series(FiniteSemigroup const& S, std::size_t max_terms,
                              Budget const& budget) {
    return iterate(S, SeriesKind::derived, max_terms,
                   [&](Congruence const& prev) {
                     std::vector<Congruence> alphas{prev, prev};
                     return commutator(S, alphas, budget);
                   });
  }

  SeriesReport supernilpotency_report(FiniteSemigroup const& S,
                                      std::size_t            max_arity,
                                      Budget const&          budget) {
    if (max_arity < 2) {
      throw InvalidArgument("max_arity must be at least 2");
    }
    SeriesReport report;
    report.kind = SeriesKind::supernilpotent_arity;
    for (std::size_t arity = 2; arity <= max_arity; ++arity) {
      std::vector<Congruence> alphas(arity, Partition::full(S.size()));
      try {
        report.terms.push_back(commutator(S, alphas, budget));
      } catch (CubeSetTooLarge const&) {
        report.budget_exhausted = true;
        return report;
      }
      if (report.terms.back().is_identity()) {
        report.degree = arity - 1;
        return report;
      }
    }
    return report;
  }

  std::optional<std::size_t> supernilpotency_degree(FiniteSemigroup const& S,
                                                    std::size_t max_arity,
                                                    Budget const& budget) {
    return supernilpotency_report(S, max_arity, budget).degree;
  }

  bool is_abelian(FiniteSemigroup const& S, Budget const& budget) {
    std::vector<Congruence> alphas(2, Partition::full(S.size()));
    return commutator(S, alphas, budget).is_identity();
  }

}  // namespace semicomm
