#pragma once

#include <stdexcept>

namespace grecon {

/// File or stream level failure while reading datasets or writing results.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The supplied concept stream cannot cover the requested fraction of ones.
struct IncompleteStreamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace grecon
