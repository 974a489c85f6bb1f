// Executable checks of the structure theorems relating commutators,
// degrees and decompositions, run over a corpus of algebras.
//
// Each (algebra, theorem) pair gets one status: pass, fail (the computed
// predicates contradict the implication; the detail names the
// counterexample), vacuous (the hypothesis does not apply) or skipped (a
// budget ran out before the check could be decided).

#ifndef SEMICOMM_THEOREMS_HPP_
#define SEMICOMM_THEOREMS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "semicomm/commutator.hpp"
#include "semicomm/corpus.hpp"
#include "semicomm/series.hpp"

namespace semicomm {

  enum class TheoremStatus { pass, fail, vacuous, skipped };

  std::string to_string(TheoremStatus status);

  struct TheoremResult {
    std::string   algebra;
    std::string   theorem;
    TheoremStatus status = TheoremStatus::pass;
    std::string   detail;
  };

  struct SuiteOptions {
    Budget      budget;
    std::size_t max_arity = DEFAULT_MAX_ARITY;
    std::size_t max_terms = DEFAULT_MAX_TERMS;
    //! Algebras are checked concurrently by this many threads.
    std::size_t workers = 1;
    //! Theorem ids to run; empty means all.
    std::vector<std::string> only;
  };

  struct TheoremReport {
    //! Sorted by algebra id, then theorem id.
    std::vector<TheoremResult> results;

    std::map<std::string, std::size_t> counts() const;
    bool                                has_failures() const;
  };

  //! Ids of all checks, in report order.
  std::vector<std::string> const& theorem_ids();

  //! \throws InvalidArgument for an unknown theorem id in options.only.
  TheoremReport verify_theorem_suite(std::vector<CorpusAlgebra> const& corpus,
                                     SuiteOptions const& options = {});

  std::string theorem_report_to_json(TheoremReport const& report);

}  // namespace semicomm

#endif  // SEMICOMM_THEOREMS_HPP_
