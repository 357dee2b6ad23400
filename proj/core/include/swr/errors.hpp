#pragma once

#include <stdexcept>
#include <string>

namespace swr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct AlignmentError : Error {
    using Error::Error;
};
struct FlowError : Error {
    using Error::Error;
};
struct TransferError : Error {
    using Error::Error;
};
struct WeightError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct UnsupportedTailCombination : Error {
    using Error::Error;
};
struct NotRefutable : Error {
    using Error::Error;
};
struct UnknownReplay : Error {
    using Error::Error;
};

} // namespace swr
