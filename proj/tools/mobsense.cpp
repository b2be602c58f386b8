//---------------------------------*-C++-*-----------------------------------//
//! \file tools/mobsense.cpp
//---------------------------------------------------------------------------//
#include <iostream>
#include <string>
#include <vector>

#include "mobsense/cli.hpp"

int main(int argc, char* argv[])
{
    std::vector<std::string> args(argv, argv + argc);
    return mobsense::run_cli(args, std::cout, std::cerr);
}
