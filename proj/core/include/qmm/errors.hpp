#ifndef QMM_ERRORS_HPP
#define QMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmm
{

// Every failure raised by the library derives from Error, so callers that only
// care about "input was mathematically inadmissible" can catch one type.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define QMM_DECLARE_ERROR(Name)                                                                                        \
    class Name : public Error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}                                           \
    }

QMM_DECLARE_ERROR(DimensionMismatch);
QMM_DECLARE_ERROR(OrderMismatch);
QMM_DECLARE_ERROR(NotDivisible);
QMM_DECLARE_ERROR(DegreeTooHigh);
QMM_DECLARE_ERROR(InvariantViolation);
QMM_DECLARE_ERROR(NotACocycle);
QMM_DECLARE_ERROR(NonConstantDifference);
QMM_DECLARE_ERROR(NonConstant);
QMM_DECLARE_ERROR(NotClosed);
QMM_DECLARE_ERROR(NotInvariant);
QMM_DECLARE_ERROR(FormMismatch);
QMM_DECLARE_ERROR(InternalConsistency);
QMM_DECLARE_ERROR(CocycleMismatch);
QMM_DECLARE_ERROR(TruncationTooLow);
QMM_DECLARE_ERROR(FixedPointNotReached);
QMM_DECLARE_ERROR(ConfigViolation);
QMM_DECLARE_ERROR(ParseError);

#undef QMM_DECLARE_ERROR

} // namespace qmm

#endif
