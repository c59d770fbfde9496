#pragma once

#include <doctest.h>

#include <functional>

#include "mdskit/error.hpp"

// Runs fn and returns the code of the mdskit::Error it throws.
inline mdskit::ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const mdskit::Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return mdskit::ErrorCode::InvalidArgument;
}
