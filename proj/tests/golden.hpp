#pragma once

// Frozen expected outputs shared by the CLI tests and the acceptance run.

namespace golden {

// `table 10`: n, factorization in p-index notation, diagram rows with the
// longest row at the bottom.
inline constexpr const char* kTableTen =
    " 1  -\n"
    " 2  p1\n"
    "    #\n"
    " 3  p2\n"
    "    ##\n"
    " 4  p1^2\n"
    "    #\n"
    "    #\n"
    " 5  p3\n"
    "    ###\n"
    " 6  p1 p2\n"
    "    #\n"
    "    ##\n"
    " 7  p4\n"
    "    ####\n"
    " 8  p1^3\n"
    "    #\n"
    "    #\n"
    "    #\n"
    " 9  p2^2\n"
    "    ##\n"
    "    ##\n"
    "10  p1 p3\n"
    "    #\n"
    "    ###\n";

}  // namespace golden
