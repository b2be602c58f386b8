//---------------------------------*-C++-*-----------------------------------//
//! \file error.cpp
//---------------------------------------------------------------------------//
#include "mobsense/error.hpp"

namespace mobsense
{
//---------------------------------------------------------------------------//
char const* to_cstring(ErrorCode code)
{
    switch (code)
    {
        case ErrorCode::invalid_spec:
            return "invalid specification";
        case ErrorCode::degenerate_field:
            return "degenerate field";
        case ErrorCode::runaway_path:
            return "runaway sampling path";
        case ErrorCode::empty_path:
            return "empty sampling path";
        case ErrorCode::no_samples:
            return "no samples";
        case ErrorCode::bandwidth_mismatch:
            return "bandwidth mismatch";
        case ErrorCode::io:
            return "i/o failure";
    }
    return "unknown error";
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
