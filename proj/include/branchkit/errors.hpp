#pragma once

#include <stdexcept>
#include <string>

namespace branchkit {

// Malformed input: bad dominance chain, bad family parameters, length mismatch.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation invoked for a family it does not support.
struct family_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A branching-term query outside the interlacing window.
struct not_in_support_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Highest-weight peeling produced a negative multiplicity.
struct not_a_character_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// twist_char called with a label that is not one-dimensional.
struct unsupported_operand_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap (generator count) would be exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace branchkit
