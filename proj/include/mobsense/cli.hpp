//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/cli.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mobsense
{
//! Process exit codes
enum ExitCode : int
{
    exit_success = 0,
    exit_config_error = 2,
    exit_runtime_error = 3,
};

//! Environment variable naming the directory for relative output paths
inline constexpr char const output_dir_env[] = "MOBSENSE_OUTPUT_DIR";

/*!
 * Run the command-line interface.
 *
 * \param args full argument vector including the program name
 * \return process exit code
 */
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err);

}  // namespace mobsense
