#pragma once

#include <stdexcept>

namespace spinsqueeze {

// Base class of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Chain construction violated an invariant (n < 2, non-finite coupling, ...).
class invalid_chain_error : public error {
public:
    using error::error;
};

// Bond probability outside [0, 1].
class invalid_probability_error : public error {
public:
    using error::error;
};

// A closed-form expression was requested outside its validity regime
// (the generic-chain formulas require N >= 5).
class unsupported_size_error : public error {
public:
    using error::error;
};

// Exact simulation requested beyond the resource guard (n > 14, or n > 10
// for general pair Hamiltonians).
class resource_error : public error {
public:
    using error::error;
};

// Mismatched sizes between a state and the operator acting on it.
class dimension_error : public error {
public:
    using error::error;
};

// A pair-coupling set violated an invariant (k == l, site out of range, ...).
class invalid_pairset_error : public error {
public:
    using error::error;
};

// Filesystem failure while writing results.
class io_error : public error {
public:
    using error::error;
};

} // namespace spinsqueeze
