#pragma once

#include <stdexcept>
#include <string>

namespace flagflow {

/// Malformed input: bad rank, index out of range, unparsable numbers.
class InvalidInput : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the mathematical domain of an operation
/// (non-ample divisor, time past the singular time, Borel-only bound, ...).
class DomainError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// The Gelfand-Tsetlin enumeration exceeded its pattern budget.
class BudgetExceeded : public DomainError {
public:
	using DomainError::DomainError;
};

/// An identity that must hold by construction did not.
class InternalError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace flagflow
