#pragma once

#include <stdexcept>
#include <string>

namespace domlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad construction input or a vertex index outside the graph.
class GraphError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Vertex caps, enumeration budgets, search budgets.
class SizeError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public SizeError {
public:
    using SizeError::SizeError;
};

// Input outside the class an operation is defined for (e.g. a graph with a claw).
class DomainError : public Error {
public:
    using Error::Error;
};

// A tripwire fired: some mathematical fact the code relies on did not hold.
class InternalError : public Error {
public:
    using Error::Error;
};

class StateError : public Error {
public:
    using Error::Error;
};

}  // namespace domlab
