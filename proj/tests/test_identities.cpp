#include <doctest.h>

#include <fstream>
#include <string>

#include "qtorus/parser.hpp"
#include "qtorus/serialize.hpp"

#ifndef QTORUS_IDENTITIES_FILE
#error "QTORUS_IDENTITIES_FILE must point at the fixture file"
#endif

TEST_CASE("every fixture identity evaluates to zero") {
    std::ifstream in(QTORUS_IDENTITIES_FILE);
    REQUIRE(in.good());
    std::string line;
    int identities = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        CAPTURE(lineno);
        CAPTURE(line);
        const qtorus::TorusElem residual = qtorus::eval_string(line);
        CHECK_MESSAGE(residual.is_zero(), "residual: " << qtorus::to_text(residual));
        ++identities;
    }
    CHECK(identities >= 40);
}
