#pragma once

#include <stdexcept>
#include <string>

namespace countdown {

// A subtraction that would leave the non-negative value domain.
class NegativeResult : public std::domain_error {
public:
    explicit NegativeResult(const std::string& what) : std::domain_error(what) {}
};

class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// An action whose operands are not present with the required multiplicity.
class InapplicableAction : public std::domain_error {
public:
    explicit InapplicableAction(const std::string& what) : std::domain_error(what) {}
};

// A generator gave up after its configured number of retries.
class RetriesExhausted : public std::runtime_error {
public:
    explicit RetriesExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Requested instance size exceeds the backward generator's size cap.
class SizeCapExceeded : public std::runtime_error {
public:
    explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or schema-violating input data (files, records).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace countdown
