// Exception types raised by the semicomm library.
//
// Every error derives from semicomm::Error. Budget violations derive from
// BudgetExceeded so that callers can tell "not computed" apart from a
// mathematical negative answer.

#ifndef SEMICOMM_ERROR_HPP_
#define SEMICOMM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace semicomm {

  class Error : public std::runtime_error {
   public:
    Error(std::string kind, std::string const& message)
        : std::runtime_error(message), _kind(std::move(kind)) {}

    //! Short machine-readable name, e.g. "NotAssociative".
    std::string const& kind() const noexcept {
      return _kind;
    }

   private:
    std::string _kind;
  };

  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

#define SEMICOMM_DEFINE_ERROR(Name, Base)                  \
  class Name : public Base {                               \
   public:                                                 \
    explicit Name(std::string const& message)              \
        : Base(#Name, message) {}                          \
  };

  SEMICOMM_DEFINE_ERROR(OutOfRangeEntry, Error)
  SEMICOMM_DEFINE_ERROR(NotIdempotent, Error)
  SEMICOMM_DEFINE_ERROR(NotNormalized, Error)
  SEMICOMM_DEFINE_ERROR(InvalidGroup, Error)
  SEMICOMM_DEFINE_ERROR(UnknownGroupName, Error)
  SEMICOMM_DEFINE_ERROR(UnknownAlgebra, Error)
  SEMICOMM_DEFINE_ERROR(MalformedPartition, Error)
  SEMICOMM_DEFINE_ERROR(AlgebraMismatch, Error)
  SEMICOMM_DEFINE_ERROR(NotACongruence, Error)
  SEMICOMM_DEFINE_ERROR(NotLinked, Error)
  SEMICOMM_DEFINE_ERROR(MalformedTriple, Error)
  SEMICOMM_DEFINE_ERROR(MissingProductMetadata, Error)
  SEMICOMM_DEFINE_ERROR(NotCompletelySimple, Error)
  SEMICOMM_DEFINE_ERROR(NotRegular, Error)
  SEMICOMM_DEFINE_ERROR(NotInverse, Error)
  SEMICOMM_DEFINE_ERROR(FormatError, Error)
  SEMICOMM_DEFINE_ERROR(InvalidArgument, Error)
  SEMICOMM_DEFINE_ERROR(TheoremViolation, Error)

  SEMICOMM_DEFINE_ERROR(CubeSetTooLarge, BudgetExceeded)
  SEMICOMM_DEFINE_ERROR(LatticeTooLarge, BudgetExceeded)
  SEMICOMM_DEFINE_ERROR(OracleBudgetExceeded, BudgetExceeded)
  SEMICOMM_DEFINE_ERROR(CapExceeded, BudgetExceeded)

#undef SEMICOMM_DEFINE_ERROR

}  // namespace semicomm

#endif  // SEMICOMM_ERROR_HPP_
