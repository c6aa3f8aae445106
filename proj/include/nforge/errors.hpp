#pragma once

#include <stdexcept>
#include <string>

namespace nforge {

// Every library failure carries a short machine-readable kind next to the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define NFORGE_ERROR_KIND(Name)                                                   \
    struct Name : Error {                                                         \
        explicit Name(const std::string& what) : Error(#Name, what) {}            \
    };

NFORGE_ERROR_KIND(DivisionByZero)
NFORGE_ERROR_KIND(OrderCapExceeded)
NFORGE_ERROR_KIND(BadPrime)
NFORGE_ERROR_KIND(DenominatorCollision)
NFORGE_ERROR_KIND(SearchExhausted)
NFORGE_ERROR_KIND(BoundExceeded)
NFORGE_ERROR_KIND(BadIndex)
NFORGE_ERROR_KIND(NotClosed)
NFORGE_ERROR_KIND(GapFound)
NFORGE_ERROR_KIND(NotDiagonal)
NFORGE_ERROR_KIND(ZeroParameter)
NFORGE_ERROR_KIND(Disagreement)
NFORGE_ERROR_KIND(ParseError)

#undef NFORGE_ERROR_KIND

}  // namespace nforge
