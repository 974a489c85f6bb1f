#include "semicomm/theorems.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "semicomm/group_oracle.hpp"
#include "semicomm/structure.hpp"

namespace semicomm {

  std::string to_string(TheoremStatus status) {
    switch (status) {
      case TheoremStatus::pass:
        return "pass";
      case TheoremStatus::fail:
        return "fail";
      case TheoremStatus::vacuous:
        return "vacuous";
      case TheoremStatus::skipped:
        return "skipped";
    }
    return "unknown";
  }

  std::map<std::string, std::size_t> TheoremReport::counts() const {
    std::map<std::string, std::size_t> out{
        {"pass", 0}, {"fail", 0}, {"vacuous", 0}, {"skipped", 0}};
    for (auto const& r : results) {
      ++out[to_string(r.status)];
    }
    return out;
  }

  bool TheoremReport::has_failures() const {
    return std::any_of(results.begin(), results.end(), [](auto const& r) {
      return r.status == TheoremStatus::fail;
    });
  }

  namespace {

    // What a bounded probe tells us about a degree.
    struct Degree {
      enum State { exact, none, beyond, unknown } state = unknown;
      // The degree when exact; the largest excluded degree when beyond.
      std::size_t value = 0;

      std::string describe() const {
        switch (state) {
          case exact:
            return std::to_string(value);
          case none:
            return "none";
          case beyond:
            return "none up to " + std::to_string(value);
          case unknown:
            return "unknown";
        }
        return "unknown";
      }
    };

    Degree from_series(SeriesReport const& r) {
      if (r.degree) {
        return {Degree::exact, *r.degree};
      }
      if (r.stabilized) {
        return {Degree::none, 0};
      }
      return {};
    }

    Degree from_supernilpotency(SeriesReport const& r, std::size_t max_arity) {
      if (r.degree) {
        return {Degree::exact, *r.degree};
      }
      if (r.budget_exhausted) {
        return {};
      }
      return {Degree::beyond, max_arity - 1};
    }

    Degree from_oracle(std::optional<std::size_t> d) {
      return d ? Degree{Degree::exact, *d} : Degree{Degree::none, 0};
    }

    // Whether two descriptions of the same degree can both be right.
    TheoremStatus agree(Degree const& a, Degree const& b) {
      if (a.state == Degree::unknown || b.state == Degree::unknown) {
        return TheoremStatus::skipped;
      }
      if (a.state == Degree::exact && b.state == Degree::exact) {
        return a.value == b.value ? TheoremStatus::pass : TheoremStatus::fail;
      }
      if (a.state == Degree::exact || b.state == Degree::exact) {
        Degree const& e     = a.state == Degree::exact ? a : b;
        Degree const& other = a.state == Degree::exact ? b : a;
        if (other.state == Degree::none || e.value <= other.value) {
          return TheoremStatus::fail;
        }
        // An exact degree above what the other probe could reach.
        return TheoremStatus::skipped;
      }
      return TheoremStatus::pass;
    }

    // Combine independent sub-checks: any failure fails, then any skip
    // skips.
    TheoremStatus combine(std::initializer_list<TheoremStatus> parts) {
      TheoremStatus out = TheoremStatus::pass;
      for (auto p : parts) {
        if (p == TheoremStatus::fail) {
          return p;
        }
        if (p == TheoremStatus::skipped) {
          out = p;
        }
      }
      return out;
    }

    std::string show(Congruence const& c) {
      return to_string(c);
    }

    // Lazily computed facts about one algebra.
    class Profile {
     public:
      Profile(FiniteSemigroup const& S, SuiteOptions const& opt)
          : S(S), opt(opt) {}

      FiniteSemigroup const& S;
      SuiteOptions const&    opt;

      CongruenceLattice const& lattice() {
        if (!_lattice) {
          _lattice = all_congruences(S, opt.budget.lattice_cap);
        }
        return *_lattice;
      }

      Congruence const& binary(std::size_t i, std::size_t j) {
        auto const& L = lattice();
        std::size_t const m = L.size();
        if (_binary.empty()) {
          _binary.resize(m * m);
        }
        auto& slot = _binary[i * m + j];
        if (!slot) {
          std::vector<Congruence> alphas{L[i], L[j]};
          slot = commutator(S, alphas, opt.budget);
        }
        return *slot;
      }

      Congruence const& ternary(std::size_t i, std::size_t j, std::size_t l) {
        auto const& L = lattice();
        std::size_t const m = L.size();
        if (_ternary.empty()) {
          _ternary.resize(m * m * m);
        }
        auto& slot = _ternary[(i * m + j) * m + l];
        if (!slot) {
          std::vector<Congruence> alphas{L[i], L[j], L[l]};
          slot = commutator(S, alphas, opt.budget);
        }
        return *slot;
      }

      Degree const& nilpotency() {
        if (!_nil) {
          _nil = from_series(
              lower_central_series(S, opt.max_terms, opt.budget));
        }
        return *_nil;
      }

      Degree const& solvability() {
        if (!_solv) {
          _solv = from_series(derived_series(S, opt.max_terms, opt.budget));
        }
        return *_solv;
      }

      Degree const& supernilpotency() {
        if (!_sup) {
          _sup = from_supernilpotency(
              supernilpotency_report(S, opt.max_arity, opt.budget),
              opt.max_arity);
        }
        return *_sup;
      }

      bool abelian() {
        if (!_abelian) {
          _abelian = is_abelian(S, opt.budget);
        }
        return *_abelian;
      }

      std::optional<GroupSpec> const& as_group() {
        if (!_group_checked) {
          _group_checked = true;
          try {
            _group.emplace(S);
          } catch (InvalidGroup const&) {
          }
        }
        return _group;
      }

      bool regular() {
        return cached(_regular, [&] { return is_regular(S); });
      }
      bool orthodox() {
        return cached(_orthodox, [&] { return is_orthodox(S); });
      }
      bool completely_simple() {
        return cached(_cs, [&] { return is_completely_simple(S); });
      }

     private:
      template <typename F>
      static bool cached(std::optional<bool>& slot, F f) {
        if (!slot) {
          slot = f();
        }
        return *slot;
      }

      std::optional<CongruenceLattice>        _lattice;
      std::vector<std::optional<Congruence>>  _binary;
      std::vector<std::optional<Congruence>>  _ternary;
      std::optional<Degree>                   _nil, _solv, _sup;
      std::optional<bool>                     _abelian, _regular, _orthodox,
          _cs;
      std::optional<GroupSpec>                _group;
      bool                                    _group_checked = false;
    };

    struct Outcome {
      TheoremStatus status;
      std::string   detail;
    };

    using Check = std::function<Outcome(Profile&)>;

    Outcome commutator_below_meet(Profile& p) {
      auto const& L = p.lattice();
      for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = 0; j < L.size(); ++j) {
          auto const& c = p.binary(i, j);
          if (!c.is_contained_in(meet(L[i], L[j]))) {
            return {TheoremStatus::fail,
                    "[" + show(L[i]) + ", " + show(L[j]) + "] = " + show(c)
                        + " is not below the meet"};
          }
        }
      }
      return {TheoremStatus::pass, std::to_string(L.size() * L.size())
                                       + " pairs"};
    }

    Outcome commutator_monotone(Profile& p) {
      auto const& L = p.lattice();
      std::size_t const m = L.size();
      std::size_t checked = 0;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          auto const& big = p.binary(a, b);
          for (std::size_t g = 0; g < m; ++g) {
            if (!L.leq(g, a)) {
              continue;
            }
            for (std::size_t d = 0; d < m; ++d) {
              if (!L.leq(d, b)) {
                continue;
              }
              ++checked;
              if (!p.binary(g, d).is_contained_in(big)) {
                return {TheoremStatus::fail,
                        "[" + show(L[g]) + ", " + show(L[d])
                            + "] is not below [" + show(L[a]) + ", "
                            + show(L[b]) + "]"};
              }
            }
          }
        }
      }
      return {TheoremStatus::pass, std::to_string(checked) + " pairs"};
    }

    Outcome ternary_below_binary(Profile& p) {
      auto const& L = p.lattice();
      std::size_t const m = L.size();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t l = 0; l < m; ++l) {
            auto const& t = p.ternary(i, j, l);
            if (!t.is_contained_in(p.binary(j, l))) {
              return {TheoremStatus::fail,
                      "[" + show(L[i]) + ", " + show(L[j]) + ", " + show(L[l])
                          + "] = " + show(t) + " is not below ["
                          + show(L[j]) + ", " + show(L[l]) + "]"};
            }
          }
        }
      }
      return {TheoremStatus::pass, std::to_string(m * m * m) + " triples"};
    }

    Outcome idempotent_pairs_related(Profile& p) {
      auto const& S    = p.S;
      auto const  idem = idempotents(S);
      std::vector<std::pair<Element, Element>> pairs;
      for (Element e : idem) {
        for (Element f : idem) {
          if (e != f && natural_leq(S, e, f)) {
            pairs.emplace_back(e, f);
          }
        }
      }
      if (pairs.empty()) {
        return {TheoremStatus::vacuous, "no comparable idempotents"};
      }
      auto const& L = p.lattice();
      std::size_t const m = L.size();
      std::size_t checked = 0;
      for (auto [e, f] : pairs) {
        std::vector<std::size_t> holding;
        for (std::size_t i = 0; i < m; ++i) {
          if (L[i].related(e, f)) {
            holding.push_back(i);
          }
        }
        for (std::size_t i : holding) {
          for (std::size_t j : holding) {
            ++checked;
            if (!p.binary(i, j).related(e, f)) {
              return {TheoremStatus::fail,
                      S.name(e) + " <= " + S.name(f) + " but not related by ["
                          + show(L[i]) + ", " + show(L[j]) + "]"};
            }
            for (std::size_t l : holding) {
              ++checked;
              if (!p.ternary(i, j, l).related(e, f)) {
                return {TheoremStatus::fail,
                        S.name(e) + " <= " + S.name(f)
                            + " but not related by [" + show(L[i]) + ", "
                            + show(L[j]) + ", " + show(L[l]) + "]"};
              }
            }
          }
        }
      }
      return {TheoremStatus::pass, std::to_string(checked) + " commutators"};
    }

    // Whether one of the three degrees exists; nullopt when undecided.
    std::optional<bool> some_degree(Profile& p) {
      Degree const& nil  = p.nilpotency();
      Degree const& solv = p.solvability();
      Degree const& sup  = p.supernilpotency();
      if (nil.state == Degree::exact || solv.state == Degree::exact
          || sup.state == Degree::exact) {
        return true;
      }
      if (nil.state == Degree::unknown || solv.state == Degree::unknown
          || sup.state == Degree::unknown) {
        return std::nullopt;
      }
      return false;
    }

    std::string degrees_text(Profile& p) {
      return "nilpotent " + p.nilpotency().describe() + ", solvable "
             + p.solvability().describe() + ", supernilpotent "
             + p.supernilpotency().describe();
    }

    Outcome degrees_force_antichain(Profile& p) {
      auto const has = some_degree(p);
      if (!has) {
        return {TheoremStatus::skipped, degrees_text(p)};
      }
      if (!*has) {
        return {TheoremStatus::vacuous, degrees_text(p)};
      }
      if (!is_idempotent_antichain(p.S)) {
        return {TheoremStatus::fail,
                degrees_text(p) + " but the idempotents are not an antichain"};
      }
      return {TheoremStatus::pass, degrees_text(p)};
    }

    Outcome regular_degrees_completely_simple(Profile& p) {
      if (!p.regular()) {
        return {TheoremStatus::vacuous, "not regular"};
      }
      auto const has = some_degree(p);
      if (!has) {
        return {TheoremStatus::skipped, degrees_text(p)};
      }
      if (!*has) {
        return {TheoremStatus::vacuous, degrees_text(p)};
      }
      if (!p.completely_simple()) {
        return {TheoremStatus::fail,
                degrees_text(p) + " but not completely simple"};
      }
      return {TheoremStatus::pass, degrees_text(p)};
    }

    Outcome warne_abelian_regular(Profile& p) {
      if (!p.regular()) {
        return {TheoremStatus::vacuous, "not regular"};
      }
      bool const abelian = p.abelian();
      std::optional<Decomposition> d;
      try {
        d = warne_decomposition(p.S, p.opt.budget);
      } catch (TheoremViolation const& e) {
        return {TheoremStatus::fail, e.what()};
      }
      if (abelian != d.has_value()) {
        return {TheoremStatus::fail, abelian ? "abelian without decomposition"
                                             : "decomposition but not abelian"};
      }
      if (!d) {
        return {TheoremStatus::pass, "not abelian, no decomposition"};
      }
      return {TheoremStatus::pass,
              "abelian group of order " + std::to_string(d->group.size())
                  + " x left zero " + std::to_string(d->left_size)
                  + " x right zero " + std::to_string(d->right_size)};
    }

    Outcome left_right_zero_abelian(Profile& p) {
      if (!is_left_zero(p.S) && !is_right_zero(p.S)) {
        return {TheoremStatus::vacuous, "neither left nor right zero"};
      }
      if (!p.abelian()) {
        return {TheoremStatus::fail, "[1,1] is not 0"};
      }
      return {TheoremStatus::pass, "[1,1] = 0"};
    }

    // The decomposition G x left_zero x right_zero when S is orthodox and
    // completely simple.
    std::optional<Decomposition> orthodox_factor(Profile& p) {
      if (!p.orthodox() || !p.completely_simple()) {
        return std::nullopt;
      }
      return orthodox_cs_decomposition(p.S);
    }

    Outcome group_band_degrees_match_group(Profile& p) {
      auto const d = orthodox_factor(p);
      if (!d) {
        return {TheoremStatus::vacuous, "not a group times a rectangular band"};
      }
      Profile    g(d->group.underlying(), p.opt);
      auto const status = combine({agree(p.nilpotency(), g.nilpotency()),
                                   agree(p.solvability(), g.solvability()),
                                   agree(p.supernilpotency(),
                                         g.supernilpotency())});
      return {status, "semigroup: " + degrees_text(p)
                          + "; group: " + degrees_text(g)};
    }

    Outcome group_supernilpotent_iff_nilpotent(Profile& p) {
      auto const& G = p.as_group();
      if (!G) {
        return {TheoremStatus::vacuous, "not a group"};
      }
      Degree const cls = from_oracle(group_nilpotency_class(*G));
      Degree const len = from_oracle(group_derived_length(*G));
      auto const status = combine({agree(p.supernilpotency(), cls),
                                   agree(p.nilpotency(), cls),
                                   agree(p.solvability(), len)});
      return {status, degrees_text(p) + "; subgroup chains: class "
                          + cls.describe() + ", derived length "
                          + len.describe()};
    }

    Outcome orthodox_supernilpotent_decomposition(Profile& p) {
      if (!p.orthodox()) {
        return {TheoremStatus::vacuous, "not orthodox"};
      }
      auto const d = orthodox_factor(p);
      if (!d) {
        // No decomposition: S must not be supernilpotent.
        auto const status = agree(p.supernilpotency(), {Degree::none, 0});
        return {status, "not completely simple; supernilpotent "
                            + p.supernilpotency().describe()};
      }
      Degree const cls = from_oracle(group_nilpotency_class(d->group));
      return {agree(p.supernilpotency(), cls),
              "supernilpotent " + p.supernilpotency().describe()
                  + "; group factor class " + cls.describe()};
    }

    Outcome orthodox_nilpotent_solvable_decomposition(Profile& p) {
      if (!p.orthodox()) {
        return {TheoremStatus::vacuous, "not orthodox"};
      }
      auto const d = orthodox_factor(p);
      Degree const none{Degree::none, 0};
      if (!d) {
        auto const status = combine(
            {agree(p.nilpotency(), none), agree(p.solvability(), none)});
        return {status, "not completely simple; " + degrees_text(p)};
      }
      Degree const cls = from_oracle(group_nilpotency_class(d->group));
      Degree const len = from_oracle(group_derived_length(d->group));
      auto const status = combine(
          {agree(p.nilpotency(), cls), agree(p.solvability(), len)});
      return {status, degrees_text(p) + "; group factor class "
                          + cls.describe() + ", derived length "
                          + len.describe()};
    }

    Outcome orthodox_supernilpotent_iff_nilpotent(Profile& p) {
      if (!p.orthodox()) {
        return {TheoremStatus::vacuous, "not orthodox"};
      }
      return {agree(p.supernilpotency(), p.nilpotency()), degrees_text(p)};
    }

    Outcome inverse_supernilpotent_is_group(Profile& p) {
      if (!is_inverse_semigroup(p.S)) {
        return {TheoremStatus::vacuous, "not inverse"};
      }
      std::optional<GroupSpec> g;
      try {
        g = inverse_supernilpotent_decomposition(p.S, p.opt.max_arity,
                                                 p.opt.budget);
      } catch (TheoremViolation const& e) {
        return {TheoremStatus::fail, e.what()};
      }
      auto const& G = p.as_group();
      if (!G) {
        // Not a group, so no arity within the budget may vanish.
        return {agree(p.supernilpotency(), {Degree::none, 0}),
                "not a group; supernilpotent "
                    + p.supernilpotency().describe()};
      }
      Degree const cls = from_oracle(group_nilpotency_class(*G));
      return {agree(p.supernilpotency(), cls),
              "group; supernilpotent " + p.supernilpotency().describe()
                  + ", class " + cls.describe()};
    }

    std::vector<std::pair<std::string, Check>> const& checks() {
      static std::vector<std::pair<std::string, Check>> const list{
          {"T01_commutator_below_meet", commutator_below_meet},
          {"T02_commutator_monotone", commutator_monotone},
          {"T03_ternary_below_binary", ternary_below_binary},
          {"T04_idempotent_pairs_related", idempotent_pairs_related},
          {"T05_degrees_force_antichain", degrees_force_antichain},
          {"T06_regular_degrees_completely_simple",
           regular_degrees_completely_simple},
          {"T07_warne_abelian_regular", warne_abelian_regular},
          {"T08_left_right_zero_abelian", left_right_zero_abelian},
          {"T09_group_band_degrees_match_group",
           group_band_degrees_match_group},
          {"T10_group_supernilpotent_iff_nilpotent",
           group_supernilpotent_iff_nilpotent},
          {"T11_orthodox_supernilpotent_decomposition",
           orthodox_supernilpotent_decomposition},
          {"T12_orthodox_nilpotent_solvable_decomposition",
           orthodox_nilpotent_solvable_decomposition},
          {"T13_orthodox_supernilpotent_iff_nilpotent",
           orthodox_supernilpotent_iff_nilpotent},
          {"T14_inverse_supernilpotent_is_group",
           inverse_supernilpotent_is_group}};
      return list;
    }

    std::vector<TheoremResult> check_algebra(CorpusAlgebra const& a,
                                             SuiteOptions const&  opt) {
      Profile                    profile(a.semigroup, opt);
      std::vector<TheoremResult> out;
      for (auto const& [id, check] : checks()) {
        if (!opt.only.empty()
            && std::find(opt.only.begin(), opt.only.end(), id)
                   == opt.only.end()) {
          continue;
        }
        TheoremResult r{a.id, id, TheoremStatus::pass, ""};
        try {
          auto outcome = check(profile);
          r.status     = outcome.status;
          r.detail     = std::move(outcome.detail);
        } catch (BudgetExceeded const& e) {
          r.status = TheoremStatus::skipped;
          r.detail = e.kind() + ": " + e.what();
        } catch (TheoremViolation const& e) {
          r.status = TheoremStatus::fail;
          r.detail = e.what();
        }
        out.push_back(std::move(r));
      }
      return out;
    }
  }  // namespace

  std::vector<std::string> const& theorem_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> out;
      for (auto const& c : checks()) {
        out.push_back(c.first);
      }
      return out;
    }();
    return ids;
  }

  TheoremReport verify_theorem_suite(std::vector<CorpusAlgebra> const& corpus,
                                     SuiteOptions const& options) {
    for (auto const& id : options.only) {
      auto const& ids = theorem_ids();
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw InvalidArgument("unknown theorem id '" + id + "'");
      }
    }
    std::vector<std::vector<TheoremResult>> per(corpus.size());
    std::size_t const workers
        = std::max<std::size_t>(1, std::min(options.workers, corpus.size()));
    // Cube generation inside one algebra stays sequential.
    SuiteOptions inner = options;
    inner.budget.workers = 1;
    if (workers == 1) {
      inner.budget.workers = options.budget.workers;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        per[i] = check_algebra(corpus[i], inner);
      }
    } else {
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread>        threads;
      for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < corpus.size(); i += workers) {
              per[i] = check_algebra(corpus[i], inner);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : threads) {
        t.join();
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
    }
    TheoremReport report;
    for (auto& list : per) {
      for (auto& r : list) {
        report.results.push_back(std::move(r));
      }
    }
    std::stable_sort(report.results.begin(), report.results.end(),
                     [](TheoremResult const& x, TheoremResult const& y) {
                       return std::tie(x.algebra, x.theorem)
                              < std::tie(y.algebra, y.theorem);
                     });
    return report;
  }

  std::string theorem_report_to_json(TheoremReport const& report) {
    using nlohmann::ordered_json;
    ordered_json results = ordered_json::array();
    for (auto const& r : report.results) {
      results.push_back(ordered_json{{"algebra", r.algebra},
                                     {"theorem", r.theorem},
                                     {"status", to_string(r.status)},
                                     {"detail", r.detail}});
    }
    ordered_json counts = ordered_json::object();
    for (auto const& [k, v] : report.counts()) {
      counts[k] = v;
    }
    ordered_json doc{{"schema_version", 1},
                     {"kind", "theorem_report"},
                     {"counts", counts},
                     {"results", results}};
    return doc.dump(2) + "\n";
  }

}  // namespace semicomm
