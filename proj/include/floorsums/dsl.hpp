#pragma once
#include <optional>
#include <string>
#include <vector>

#include "floorsums/coverage.hpp"

namespace fsum {

// Family grammar, one summand per top-level '+':
//   term  := [INT] atom                        bare term, denominator 1
//          | ROUND '(' [INT] atom '/' den ')'
//   atom  := VAR '^2' | VAR '^3' | VAR '(' VAR '+1' ')'
//          | 'T(' VAR ')' | 'p5(' VAR ')' | 'p7(' VAR ')' | 'p8(' VAR ')'
//   den   := INT | 'c'          'c' marks the free divisor slot (exceptional)
//   ROUND := 'floor' | 'ceil' | 'exact'
// Whitespace is free; variable letters must be distinct across terms. Cubes
// range over the naturals, everything else over all integers.
struct ParsedFamily {
    std::vector<TermSpec> terms;
    std::optional<size_t> free_term; // term whose denominator is the letter c
};

ParsedFamily parse_family(const std::string& text);

// "x%2=1" or "y%2=0,1": congruence constraint attached to the term owning the
// variable. Parsed by the CLI's --constraint flag.
CongruenceConstraint parse_constraint(const std::string& text);

} // namespace fsum
