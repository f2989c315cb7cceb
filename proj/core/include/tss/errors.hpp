#pragma once

#include <stdexcept>

namespace tss {

// Malformed or out-of-range input (bad file, unknown edge, seed vertex out of range).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition was violated by the caller (non-unanimous instance
// handed to the VC translation, witness that does not verify, ...).
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// The embedding generator exhausted its attempt budget.
struct embed_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tss
