//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/error.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace mobsense
{
//---------------------------------------------------------------------------//
//! Category of a library failure.
enum class ErrorCode
{
    invalid_spec,       //!< Bad configuration or parameter value
    degenerate_field,   //!< Normalizing an identically zero field
    runaway_path,       //!< Sampling path never crossed the unit interval
    empty_path,         //!< Statistic needs at least one sample location
    no_samples,         //!< Estimation from zero samples
    bandwidth_mismatch, //!< Comparing coefficient sets of different b
    io,                 //!< File read/write failure
};

char const* to_cstring(ErrorCode code);

//---------------------------------------------------------------------------//
/*!
 * Exception thrown by every mobsense module.
 *
 * The code lets callers (mainly the CLI) separate validation failures from
 * runtime failures without string matching.
 */
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

//! Throw an invalid_spec error unless the condition holds.
inline void validate(bool condition, std::string const& message)
{
    if (!condition)
    {
        throw Error(ErrorCode::invalid_spec, message);
    }
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
