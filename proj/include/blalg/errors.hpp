#ifndef BLALG_ERRORS_HPP
#define BLALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blalg {

// Every domain failure raised by the library. kind() is the stable name
// printed by the CLI; witness() carries the offending tuple when the failure
// is an axiom violation.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message,
        std::vector<std::size_t> witness = {})
      : std::runtime_error(message),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::vector<std::size_t> witness_;
};

#define BLALG_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message,                          \
                  std::vector<std::size_t> witness = {})               \
        : Error(#Name, message, std::move(witness)) {}                 \
  };

// zp_poly
BLALG_DEFINE_ERROR(ModulusMismatch)
BLALG_DEFINE_ERROR(DivisionByZeroPoly)
BLALG_DEFINE_ERROR(DegreeTooLarge)
BLALG_DEFINE_ERROR(ParseError)

// quotient_ring
BLALG_DEFINE_ERROR(NotPrime)
BLALG_DEFINE_ERROR(NotMonic)
BLALG_DEFINE_ERROR(NotAUnit)
BLALG_DEFINE_ERROR(ZeroElement)
BLALG_DEFINE_ERROR(NotInIdeal)
BLALG_DEFINE_ERROR(RingMismatch)

// residuated_core
BLALG_DEFINE_ERROR(DimensionMismatch)
BLALG_DEFINE_ERROR(NotALattice)
BLALG_DEFINE_ERROR(NotAMonoid)
BLALG_DEFINE_ERROR(ResiduationFails)
BLALG_DEFINE_ERROR(SizeTooLarge)

// comet_analysis
BLALG_DEFINE_ERROR(NotBL)
BLALG_DEFINE_ERROR(NoGreatestElement)
BLALG_DEFINE_ERROR(ConsistencyViolation)

// constructors / enumeration
BLALG_DEFINE_ERROR(CapExceeded)
BLALG_DEFINE_ERROR(SizeOutOfRange)
BLALG_DEFINE_ERROR(ScanViolation)

// mv_crypt
BLALG_DEFINE_ERROR(UnknownSymbol)
BLALG_DEFINE_ERROR(LengthOverflow)
BLALG_DEFINE_ERROR(MessageTooLong)
BLALG_DEFINE_ERROR(SquarefreeViolation)
BLALG_DEFINE_ERROR(CandidateExplosion)
BLALG_DEFINE_ERROR(NoCandidates)

#undef BLALG_DEFINE_ERROR

}  // namespace blalg

#endif  // BLALG_ERRORS_HPP
