#pragma once

#include <stdexcept>
#include <string>

namespace diffalg {

// Error taxonomy shared by all modules.  Each condition gets its own type so
// callers can catch precisely; `code()` gives a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define DIFFALG_ERROR(Name)                                                   \
    class Name : public Error {                                              \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    }

DIFFALG_ERROR(DivisionByZero);
DIFFALG_ERROR(DescriptorMismatch);
DIFFALG_ERROR(RingMismatch);
DIFFALG_ERROR(RankingMismatch);
DIFFALG_ERROR(ConstantPolynomial);
DIFFALG_ERROR(NotAutoreduced);
DIFFALG_ERROR(NotIrreducible);
DIFFALG_ERROR(NotMonic);
DIFFALG_ERROR(ZeroPolynomial);
DIFFALG_ERROR(NotAlgebraic);
DIFFALG_ERROR(OrderTooHigh);
DIFFALG_ERROR(MalformedPair);
DIFFALG_ERROR(SyntaxError);
DIFFALG_ERROR(UnknownName);
DIFFALG_ERROR(UsageError);
DIFFALG_ERROR(BudgetExceeded);
DIFFALG_ERROR(InvalidDescriptor);

#undef DIFFALG_ERROR

} // namespace diffalg
