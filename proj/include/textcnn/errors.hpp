#pragma once

#include <stdexcept>
#include <string>

namespace textcnn {

// Error taxonomy used across the library. The CLI maps these onto exit
// codes: ParseError/DataError/IoError -> 3 (bad input data), everything
// else -> 4 (runtime failure). Flag-level problems are handled by the
// argument parser and exit with 2.

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace textcnn
