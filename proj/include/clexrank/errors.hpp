#pragma once

#include <stdexcept>
#include <string>

namespace clexrank {

/// Input bytes could not be parsed (bad JSON, wrong column count, non-numeric field).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input parsed but violates a data invariant (duplicate id, dangling reference, negative idf).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace clexrank
