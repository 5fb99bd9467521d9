#pragma once

#include <qciore/syntax.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qciore
{

/// Atoms over sig whose arguments are variables from vars or constants
/// (no function applications). Order: predicates by name, argument tuples
/// lexicographic over vars followed by constants, then equality atoms.
std::vector<Formula> enumerate_atoms( Signature const& sig, std::vector<std::string> const& vars );

/// Every formula built from enumerate_atoms with at most max_depth nested
/// connectives and quantifiers, quantifiers binding variables from vars only.
/// Each formula appears once. Order is by depth; within a depth: negations,
/// consistency, universal then existential quantifications (per variable),
/// then conjunctions, disjunctions and implications over operand pairs.
std::vector<Formula> enumerate_formulas( Signature const& sig, std::vector<std::string> const& vars,
                                         std::size_t max_depth );

/// Same sequence as enumerate_formulas. Only the formulas below max_depth are
/// kept in memory; the deepest level is streamed. The callback returns false to stop.
void for_each_formula( Signature const& sig, std::vector<std::string> const& vars, std::size_t max_depth,
                       std::function<bool( Formula const& )> const& visit );

/// Number of formulas enumerate_formulas would return, computed from the
/// level counts without building them.
std::size_t count_formulas( Signature const& sig, std::vector<std::string> const& vars, std::size_t max_depth );

} // namespace qciore
